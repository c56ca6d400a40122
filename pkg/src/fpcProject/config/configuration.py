from pathlib import Path

from box import ConfigBox

from fpcProject import logger
from fpcProject.constants import *
from fpcProject.utils.common import read_yaml, create_directories
from fpcProject.entity import (CorpusIngestionConfig,
                               OperationalAgreementConfig,
                               AdequacyConfig,
                               LogicalRelationConfig,
                               BisimulationConfig,
                               ExecutorConfig,
                               ContextEquivalenceConfig)


DEFAULT_PARAMS = {
    "fuel": DEFAULT_FUEL,
    "depth": DEFAULT_DEPTH,
    "bisim_depth": DEFAULT_BISIM_DEPTH,
    "exec_max": DEFAULT_EXEC_MAX,
    "zero_step_bound": DEFAULT_ZERO_STEP_BOUND,
    "seed": DEFAULT_SEED,
    "jobs": DEFAULT_JOBS,
    "homomorphism_instances": DEFAULT_HOMOMORPHISM_INSTANCES,
    "battery": {"size": DEFAULT_BATTERY_SIZE, "limit": DEFAULT_BATTERY_LIMIT},
}

DEFAULT_SCHEMA = {
    "GROUND_TYPES": {"unit": "1", "bool": "1 + 1"},
    "CONTEXT_SUITES": {"1": "unit.ctx", "1 + 1": "bool.ctx"},
    "EQUIVALENT_PAIRS": [],
}

STAGES = ("corpus_ingestion", "operational_agreement", "adequacy", "logical_relation",
          "bisimulation", "executor", "context_equivalence")


def _default_config() -> dict:
    config = {
        "artifacts_root": str(DEFAULT_ARTIFACTS_ROOT),
        "corpus_dir": str(DEFAULT_CORPUS_DIR),
        "context_dir": str(DEFAULT_CONTEXT_DIR),
    }
    for stage in STAGES:
        root = DEFAULT_ARTIFACTS_ROOT / stage
        report = "corpus.json" if stage == "corpus_ingestion" else "metrics.json"
        config[stage] = {"root_dir": str(root), "report_file": str(root / report)}
    return config


def read_yaml_or_default(path: Path, default: dict) -> ConfigBox:
    if Path(path).exists():
        return read_yaml(Path(path))
    logger.info(f"{path} not found, using built-in defaults")
    return ConfigBox(default)


class ConfigurationManager:

    def __init__(
        self,
        config_filepath = CONFIG_FILE_PATH,
        params_filepath = PARAMS_FILE_PATH,
        schema_filepath = SCHEMA_FILE_PATH,
        overrides: dict = None):

        self.config = read_yaml_or_default(config_filepath, _default_config())
        self.params = read_yaml_or_default(params_filepath, DEFAULT_PARAMS)
        self.schema = read_yaml_or_default(schema_filepath, DEFAULT_SCHEMA)

        # command-line flags win over params.yaml
        for key, value in (overrides or {}).items():
            if value is not None:
                self.params[key] = value

        create_directories([self.config.artifacts_root])


    def _param(self, key: str):
        return self.params.get(key, DEFAULT_PARAMS[key])

    def _battery(self) -> ConfigBox:
        return ConfigBox({**DEFAULT_PARAMS["battery"], **self.params.get("battery", {})})

    def _stage(self, name: str) -> ConfigBox:
        config = self.config[name]
        create_directories([config.root_dir])
        return config


    def get_corpus_ingestion_config(self) -> CorpusIngestionConfig:
        config = self._stage("corpus_ingestion")

        corpus_ingestion_config = CorpusIngestionConfig(
            root_dir=Path(config.root_dir),
            corpus_dir=Path(self.config.corpus_dir),
            report_file=Path(config.report_file),
        )

        return corpus_ingestion_config

    def get_operational_agreement_config(self) -> OperationalAgreementConfig:
        config = self._stage("operational_agreement")

        operational_agreement_config = OperationalAgreementConfig(
            root_dir=Path(config.root_dir),
            corpus_dir=Path(self.config.corpus_dir),
            report_file=Path(config.report_file),
            fuel=self._param("fuel"),
            jobs=self._param("jobs"),
        )

        return operational_agreement_config

    def get_adequacy_config(self) -> AdequacyConfig:
        config = self._stage("adequacy")

        adequacy_config = AdequacyConfig(
            root_dir=Path(config.root_dir),
            corpus_dir=Path(self.config.corpus_dir),
            report_file=Path(config.report_file),
            fuel=self._param("fuel"),
            homomorphism_instances=self._param("homomorphism_instances"),
            seed=self._param("seed"),
            jobs=self._param("jobs"),
        )

        return adequacy_config

    def get_logical_relation_config(self) -> LogicalRelationConfig:
        config = self._stage("logical_relation")
        battery = self._battery()

        logical_relation_config = LogicalRelationConfig(
            root_dir=Path(config.root_dir),
            corpus_dir=Path(self.config.corpus_dir),
            report_file=Path(config.report_file),
            depth=self._param("depth"),
            zero_step_bound=self._param("zero_step_bound"),
            battery_size=battery.size,
            battery_limit=battery.limit,
            jobs=self._param("jobs"),
        )

        return logical_relation_config

    def get_bisimulation_config(self) -> BisimulationConfig:
        config = self._stage("bisimulation")
        battery = self._battery()

        bisimulation_config = BisimulationConfig(
            root_dir=Path(config.root_dir),
            corpus_dir=Path(self.config.corpus_dir),
            report_file=Path(config.report_file),
            depth=self._param("bisim_depth"),
            battery_size=battery.size,
            battery_limit=battery.limit,
            jobs=self._param("jobs"),
        )

        return bisimulation_config

    def get_executor_config(self) -> ExecutorConfig:
        config = self._stage("executor")

        executor_config = ExecutorConfig(
            root_dir=Path(config.root_dir),
            corpus_dir=Path(self.config.corpus_dir),
            report_file=Path(config.report_file),
            exec_max=self._param("exec_max"),
            fuel=self._param("fuel"),
            jobs=self._param("jobs"),
        )

        return executor_config

    def get_context_equivalence_config(self) -> ContextEquivalenceConfig:
        config = self._stage("context_equivalence")
        schema = self.schema

        context_equivalence_config = ContextEquivalenceConfig(
            root_dir=Path(config.root_dir),
            context_dir=Path(self.config.context_dir),
            report_file=Path(config.report_file),
            fuel=self._param("fuel"),
            depth=self._param("bisim_depth"),
            suites=dict(schema.get("CONTEXT_SUITES", {})),
            pairs=[dict(p) for p in schema.get("EQUIVALENT_PAIRS", [])],
        )

        return context_equivalence_config
