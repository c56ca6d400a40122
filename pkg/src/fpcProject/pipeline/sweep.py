from fpcProject import logger
from fpcProject.pipeline import (stage_01_corpus_ingestion,
                                 stage_02_operational_agreement,
                                 stage_03_adequacy,
                                 stage_04_logical_relation,
                                 stage_05_bisimulation,
                                 stage_06_executor,
                                 stage_07_context_equivalence)


STAGES = [
    (stage_01_corpus_ingestion.STAGE_NAME, stage_01_corpus_ingestion.CorpusIngestionPipeline),
    (stage_02_operational_agreement.STAGE_NAME, stage_02_operational_agreement.OperationalAgreementPipeline),
    (stage_03_adequacy.STAGE_NAME, stage_03_adequacy.AdequacyPipeline),
    (stage_04_logical_relation.STAGE_NAME, stage_04_logical_relation.LogicalRelationPipeline),
    (stage_05_bisimulation.STAGE_NAME, stage_05_bisimulation.BisimulationPipeline),
    (stage_06_executor.STAGE_NAME, stage_06_executor.ExecutorPipeline),
    (stage_07_context_equivalence.STAGE_NAME, stage_07_context_equivalence.ContextEquivalencePipeline),
]


def run_sweep(overrides: dict = None) -> list:
    """Run every harness stage in order; returns the stage summaries."""
    summaries = []
    for stage_name, pipeline in STAGES:
        try:
            logger.info(f">>>>>> stage {stage_name} started <<<<<<")
            summaries.append(pipeline(overrides).main())
            logger.info(f">>>>>> stage {stage_name} completed <<<<<<\n\nx==========x")
        except Exception as e:
            logger.exception(e)
            raise e
    return summaries
