"""Exception hierarchy shared by every module of the package."""


class HypergraphError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class EmptyTail(HypergraphError):
    pass


class EmptyHead(HypergraphError):
    pass


class VertexOutOfRange(HypergraphError, IndexError):
    pass


class FrozenHypergraph(HypergraphError):
    """Raised when mutating a hypergraph after :meth:`Hypergraph.freeze`."""


class DoubleInit(HypergraphError):
    pass


class MergeSameClass(HypergraphError):
    pass


class NotRepresentative(HypergraphError):
    pass


class EmptyHypergraph(HypergraphError):
    pass


class TooManyVariables(HypergraphError):
    pass


class BadN(HypergraphError):
    pass


class CyclicHypergraph(HypergraphError):
    pass


class NotTransitive(HypergraphError):
    pass


class InvalidFormula(HypergraphError):
    pass


class InvalidSetFamily(HypergraphError):
    pass


class ParseError(Exception):
    """Malformed input file (CLI exit code 2)."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
