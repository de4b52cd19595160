"""Exception hierarchy.

Every error is a ``ValueError`` subclass so callers that only care about
bad input can catch one type.
"""


class SalphaError(ValueError):
    pass


# graph construction and IO

class GraphError(SalphaError):
    pass


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class TooFewVertices(GraphError):
    pass


class SizeTooSmall(GraphError):
    pass


class NotConnected(GraphError):
    pass


class RetriesExhausted(GraphError):
    def __init__(self, attempts: int, message: str | None = None):
        self.attempts = attempts
        super().__init__(message or f"no connected graph after {attempts} attempts")


class ParseError(GraphError):
    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


# spectra

class SpectralError(SalphaError):
    pass


class ZeroDegreeVertex(SpectralError):
    pass


class ConvergenceFailure(SpectralError):
    pass


class UnexpectedZeroEigenvalue(SpectralError):
    pass


class InvalidAlpha(SalphaError):
    pass


# majorization problem

class MajorizationError(SalphaError):
    pass


class DegenerateB(MajorizationError):
    pass


class InfeasibleB(MajorizationError):
    pass


# Infeasible instances other than a bad b (h or p out of range).
class Infeasible(MajorizationError):
    pass


class NoSignChange(MajorizationError):
    pass


# bounds

class BoundError(SalphaError):
    pass


class NTooSmall(BoundError):
    pass


class ThetaOutOfRange(BoundError):
    pass


class BetaExceedsTheta(BoundError):
    pass


class ThetaBetaTooLarge(BoundError):
    pass


class InfeasibleT(BoundError):
    pass
