import sys


class FPCError(Exception):
    """Base class for every error raised by the FPC toolchain."""


class ParseError(FPCError):
    def __init__(self, line: int, column: int, message: str):
        self.line = line
        self.column = column
        self.message = message
        super().__init__(f"{line}:{column}: {message}")


class TypeCheckError(FPCError):
    """Raised at the first node that fails to type check."""

    def __init__(self, node, expected=None, found=None, message: str = ""):
        self.node = node
        self.expected = expected
        self.found = found
        self.message = message
        super().__init__(self._render())

    def _render(self) -> str:
        # imported lazily: surface imports this module
        from fpcProject.fpc.surface import print_term, print_type

        parts = [self.message or "type error"]
        if self.expected is not None:
            expected = self.expected if isinstance(self.expected, str) else print_type(self.expected)
            parts.append(f"expected {expected}")
        if self.found is not None:
            found = self.found if isinstance(self.found, str) else print_type(self.found)
            parts.append(f"found {found}")
        if self.node is not None:
            parts.append(f"in `{print_term(self.node)}`")
        return ", ".join(parts)


class UnboundNameError(TypeCheckError):
    pass


class StuckError(FPCError):
    def __init__(self, term, description: str):
        self.term = term
        self.description = description
        super().__init__(description)


class NonProductiveError(FPCError):
    """A guarded fixpoint demanded its own suspension before it was tied."""


class FuelExhausted(FPCError):
    def __init__(self, bound: int, message: str = ""):
        self.bound = bound
        super().__init__(message or f"internal bound of {bound} reductions exhausted")


class UsageError(FPCError):
    pass


class NestingTooDeep(FPCError):
    """Term nesting exceeded the interpreter's recursion limit (``FPC_RECURSION_LIMIT``)."""

    def __init__(self, where: str = ""):
        prefix = f"{where}: " if where else ""
        super().__init__(f"{prefix}term nested too deeply for the recursion limit {sys.getrecursionlimit()} (set FPC_RECURSION_LIMIT)")
