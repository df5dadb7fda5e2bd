"""Exception types shared across the package."""


class SpexcessError(Exception):
    """Base class for all errors raised by spexcess."""


class ParseError(SpexcessError):
    """Malformed graph input (bad edge list or graph6 data)."""


class DisconnectedError(SpexcessError):
    """Input graph is not connected; the whole analysis assumes one component."""


class LoopOrMultiEdgeError(SpexcessError):
    """Input contains a self-loop or a repeated edge."""


class ConvergenceError(SpexcessError):
    """The Jacobi eigensolver did not reach its tolerance within the sweep cap."""


class NonPositiveEigenvectorError(SpexcessError):
    """The computed Perron vector has a non-positive entry (numerical failure)."""


class DegreeError(SpexcessError):
    """Polynomial degree exceeds the dimension of the inner-product space."""


class DegenerateMeasureError(SpexcessError):
    """The discrete measure is numerically singular (wrongly grouped eigenvalues)."""


class HypothesisError(SpexcessError):
    """A theorem was invoked with a parameter outside its hypothesis range."""


class MissingParamError(SpexcessError):
    """A required command-line parameter for the selected check is missing."""
