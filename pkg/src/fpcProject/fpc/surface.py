"""Parser and pretty-printer for the concrete FPC syntax (``.fpc`` / ``.ctx`` files)."""

from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Optional

from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedInput, VisitError

from fpcProject.fpc.errors import FPCError, NestingTooDeep, ParseError
from fpcProject.fpc.syntax import (
    HOLE,
    UNIT,
    UNIT_VAL,
    App,
    Ascribe,
    Case,
    Fold,
    Fst,
    Hole,
    Inl,
    Inr,
    Lam,
    Pair,
    Snd,
    TArrow,
    Term,
    TMu,
    TProd,
    TSum,
    TUnit,
    TVar,
    Type,
    Unfold,
    UnitVal,
    Var,
    count_holes,
    subst_term,
    subst_type,
    subst_type_in_term,
)
from fpcProject.utils.common import read_source


@dataclass(frozen=True)
class LetDecl:
    name: str
    body: Term


@dataclass(frozen=True)
class TypeDecl:
    name: str
    body: Type


@dataclass(frozen=True)
class ContextItem:
    line: int
    column: int
    term: Term


@dataclass
class SourceFile:
    """A parsed ``.fpc`` file with its abbreviations already expanded."""

    path: Optional[Path]
    text: str
    definitions: dict = field(default_factory=dict)
    type_definitions: dict = field(default_factory=dict)
    main: Optional[Term] = None


@dataclass
class ContextSuite:
    path: Optional[Path]
    text: str
    contexts: list = field(default_factory=list)
    definitions: dict = field(default_factory=dict)
    type_definitions: dict = field(default_factory=dict)


@v_args(inline=True)
class _ToAst(Transformer):
    def NAME(self, token):
        return str(token)

    def term_only(self, term):
        return term

    def type_only(self, ty):
        return ty

    # terms
    def unit(self):
        return UNIT_VAL

    def var(self, name):
        return Var(name)

    def hole(self):
        return HOLE

    def lam(self, name, ty, body):
        return Lam(name, ty, body)

    def app(self, fn, arg):
        return App(fn, arg)

    def inl(self, arg):
        return Inl(arg)

    def inr(self, arg):
        return Inr(arg)

    def fst(self, arg):
        return Fst(arg)

    def snd(self, arg):
        return Snd(arg)

    def fold(self, arg):
        return Fold(arg)

    def unfold(self, arg):
        return Unfold(arg)

    def ascribe(self, term, ty):
        return Ascribe(term, ty)

    def pair(self, first, second):
        return Pair(first, second)

    def case(self, scrutinee, x1, left, x2, right):
        return Case(scrutinee, x1, left, x2, right)

    # types
    def tunit(self):
        return UNIT

    def tvar(self, name):
        return TVar(name)

    def tmu(self, name, body):
        return TMu(name, body)

    def tarrow(self, dom, cod):
        return TArrow(dom, cod)

    def tsum(self, left, right):
        return TSum(left, right)

    def tprod(self, left, right):
        return TProd(left, right)

    # declarations
    def let_decl(self, name, body):
        return LetDecl(name, body)

    def type_decl(self, name, body):
        return TypeDecl(name, body)

    @v_args(meta=True)
    def context(self, meta, children):
        return ContextItem(meta.line, meta.column, children[0])

    def program(self, *items):
        return list(items)

    def suite(self, *items):
        return list(items)


@lru_cache(maxsize=1)
def _parser() -> Lark:
    return Lark.open(
        "grammar.lark",
        rel_to=__file__,
        parser="lalr",
        start=["term_only", "type_only", "program", "suite"],
        propagate_positions=True,
    )


def _parse(text: str, start: str):
    try:
        tree = _parser().parse(text, start=start)
        return _ToAst().transform(tree)
    except UnexpectedInput as e:
        line = getattr(e, "line", -1)
        column = getattr(e, "column", -1)
        if line is None or line < 0:
            line, column = _end_position(text)
        raise ParseError(line, column, _describe(e)) from e
    except VisitError as e:
        if isinstance(e.orig_exc, FPCError):
            raise e.orig_exc from e
        if isinstance(e.orig_exc, RecursionError):
            raise NestingTooDeep() from None
        raise
    except RecursionError:
        raise NestingTooDeep() from None


def _end_position(text: str) -> tuple[int, int]:
    lines = text.split("\n")
    return len(lines), len(lines[-1]) + 1


def _describe(error: UnexpectedInput) -> str:
    token = getattr(error, "token", None)
    if token is not None:
        if token.type == "$END":
            return "unexpected end of input"
        return f"unexpected {token.value!r}"
    char = getattr(error, "char", None)
    if char is not None:
        return f"unexpected character {char!r}"
    return "syntax error"


def parse_term(text: str) -> Term:
    return _parse(text, "term_only")


def parse_type(text: str) -> Type:
    return _parse(text, "type_only")


class _Abbreviations:
    """Expands top-level ``let`` and ``type`` declarations in order."""

    def __init__(self):
        self.terms: dict = {}
        self.types: dict = {}

    def expand_type(self, ty: Type) -> Type:
        for name, body in self.types.items():
            ty = subst_type(ty, body, name)
        return ty

    def expand_term(self, term: Term) -> Term:
        for name, body in self.types.items():
            term = subst_type_in_term(term, body, name)
        for name, body in self.terms.items():
            term = subst_term(term, body, name)
        return term

    def add(self, decl) -> None:
        if isinstance(decl, LetDecl):
            self.terms[decl.name] = self.expand_term(decl.body)
        else:
            self.types[decl.name] = self.expand_type(decl.body)


def parse_program(text: str, path: Optional[Path] = None) -> SourceFile:
    items = _parse(text, "program")
    env = _Abbreviations()
    main = None
    for item in items:
        if isinstance(item, (LetDecl, TypeDecl)):
            env.add(item)
        else:
            main = env.expand_term(item)
    if main is None:
        main = env.terms.get("main")
    return SourceFile(path, text, dict(env.terms), dict(env.types), main)


def parse_context_suite(text: str, path: Optional[Path] = None) -> ContextSuite:
    items = _parse(text, "suite")
    env = _Abbreviations()
    contexts = []
    for item in items:
        if isinstance(item, ContextItem):
            holes = count_holes(item.term)
            if holes != 1:
                raise ParseError(item.line, item.column, f"a context needs exactly one hole, found {holes}")
            contexts.append(env.expand_term(item.term))
        else:
            env.add(item)
    return ContextSuite(path, text, contexts, dict(env.terms), dict(env.types))


def load_program(path: Path) -> SourceFile:
    return parse_program(read_source(Path(path)), Path(path))


def load_context_suite(path: Path) -> ContextSuite:
    return parse_context_suite(read_source(Path(path)), Path(path))


# ---------------------------------------------------------------- printing

_T_MU, _T_ARROW, _T_SUM, _T_PROD, _T_ATOM = range(5)


def _type(ty: Type, level: int) -> str:
    match ty:
        case TVar(name):
            return name
        case TUnit():
            return "1"
        case TMu(binder, body):
            text, own = f"mu {binder}. {_type(body, _T_MU)}", _T_MU
        case TArrow(dom, cod):
            text, own = f"{_type(dom, _T_SUM)} -> {_type(cod, _T_MU)}", _T_ARROW
        case TSum(left, right):
            text, own = f"{_type(left, _T_SUM)} + {_type(right, _T_PROD)}", _T_SUM
        case TProd(left, right):
            text, own = f"{_type(left, _T_PROD)} * {_type(right, _T_ATOM)}", _T_PROD
        case _:
            raise TypeError(f"Unexpected type: {ty!r}")
    return f"({text})" if level > own else text


def print_type(ty: Type) -> str:
    return _type(ty, _T_MU)


_TERM, _APP, _PREFIX, _ATOM = range(4)

_PREFIX_WORDS = {Inl: "inl", Inr: "inr", Fst: "fst", Snd: "snd", Fold: "fold", Unfold: "unfold"}


def _term(term: Term, level: int) -> str:
    match term:
        case Var(name):
            return name
        case UnitVal():
            return "()"
        case Hole():
            return "[-]"
        case Pair(first, second):
            return f"<{_term(first, _TERM)}, {_term(second, _TERM)}>"
        case Ascribe(inner, ty):
            return f"({_term(inner, _TERM)} : {print_type(ty)})"
        case Case(scrutinee, x1, left, x2, right):
            return (
                f"case {_term(scrutinee, _TERM)} of "
                f"{{ inl {x1} => {_term(left, _TERM)} | inr {x2} => {_term(right, _TERM)} }}"
            )
        case Lam(var, ty, body):
            text, own = f"fn {var} : {print_type(ty)} => {_term(body, _TERM)}", _TERM
        case App(fn, arg):
            text, own = f"{_term(fn, _APP)} {_term(arg, _ATOM)}", _APP
        case Inl(arg) | Inr(arg) | Fst(arg) | Snd(arg) | Fold(arg) | Unfold(arg):
            text, own = f"{_PREFIX_WORDS[type(term)]} {_term(arg, _ATOM)}", _PREFIX
        case _:
            raise TypeError(f"Unexpected term: {term!r}")
    return f"({text})" if level > own else text


def print_term(term: Term) -> str:
    return _term(term, _TERM)
