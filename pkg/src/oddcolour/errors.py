"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class OddColourError(Exception):
    """Base class for every error raised by this package."""


class InvalidVertex(OddColourError, ValueError):
    pass


class EmptySet(OddColourError, ValueError):
    pass


class InvalidGraph(OddColourError, ValueError):
    """Raised when adjacency data violates the simple-graph invariants."""


class EmptyGraph(OddColourError, ValueError):
    pass


class DisconnectedInput(OddColourError, ValueError):
    pass


class Disconnected(OddColourError):
    """No path joins the two vertex sets."""


class InvalidFamily(OddColourError, ValueError):
    pass


class InvalidB(OddColourError, ValueError):
    pass


class InvalidStart(OddColourError, ValueError):
    pass


class WholeCycleBipartite(OddColourError):
    pass


class TooClose(OddColourError):
    pass


class HypothesisFailed(OddColourError):
    """A premise that an operation relies on does not hold for the input."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class ResultNotBipartite(OddColourError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class SpanningCycle(OddColourError, ValueError):
    pass


class PreconditionFailed(OddColourError):
    def __init__(self, clause: str):
        super().__init__(clause)
        self.clause = clause


class NotInFamily(OddColourError):
    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class ColouringFailure(OddColourError):
    """Structured pipeline failure; ``diagnostics`` carries stage data."""

    def __init__(self, message: str, diagnostics: dict | None = None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class OddGirthTooSmall(ColouringFailure):
    def __init__(self, message: str, witness=None, diagnostics: dict | None = None):
        super().__init__(message, diagnostics)
        self.witness = witness


class DecompositionFailed(ColouringFailure):
    pass


class LiftFailed(ColouringFailure):
    pass


class UncolouredVertex(OddColourError, ValueError):
    pass


class TooLarge(OddColourError, ValueError):
    pass


class TooSmall(OddColourError, ValueError):
    pass


class ZeroSize(OddColourError, ValueError):
    pass


class EvenBase(OddColourError, ValueError):
    pass


class ParseError(OddColourError, ValueError):
    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class BadWeight(ParseError):
    pass


class DuplicateEdge(ParseError):
    pass


class SelfLoop(ParseError):
    pass
