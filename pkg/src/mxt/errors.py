"""Exception types raised by the library.

Every failure mode a caller can trigger has its own class so the CLI (and
user code) can map errors to exit codes without string matching.
"""


class MatroidError(Exception):
    """Base class for all library errors."""


class InvalidSubsetError(MatroidError):
    """A subset mask contains elements outside the ground set."""


class CapExceededError(MatroidError):
    """An enumerative routine was asked to run above its hard size cap."""


class OverlappingSetsError(MatroidError):
    """Delete and contract sets of a minor are not disjoint."""


class EmptyGroundSetError(MatroidError):
    """The operation is undefined on an empty ground set."""


class EmptySubsetError(MatroidError):
    """The operation is undefined on an empty subset."""


class GroundSetSizeError(MatroidError):
    """The ground set is too small for the requested operation."""


class NotTwoConnectedError(MatroidError):
    """The operation requires a 2-connected matroid."""


class BasepointError(MatroidError):
    """A sum or extension basepoint is degenerate."""


class LoopBasepointError(BasepointError):
    """The designated element is a loop."""


class ColoopBasepointError(BasepointError):
    """The designated element is a coloop."""


class NotCircuitHyperplaneError(MatroidError):
    """The designated set is not both a circuit and a hyperplane."""


class UnknownCatalogNameError(MatroidError):
    """No catalog matroid has the requested name."""


class LoopPresentError(MatroidError):
    """The operation requires a loopless matroid."""


class ColoopPresentError(MatroidError):
    """The operation requires a coloop-free matroid."""


class DimensionMismatchError(MatroidError):
    """A point or weight vector does not match the ambient dimension."""


class UnboundedSystemError(MatroidError):
    """Vertex enumeration was asked for on an unbounded system."""


class InvalidConstraintError(MatroidError):
    """A constraint handed to a facet routine is violated by some basis."""


class ValidationError(MatroidError):
    """Explicit input data fails a matroid axiom check."""


class ParseError(MatroidError):
    """A matroid document is malformed.

    ``path`` locates the offending field, e.g. ``$.left.edges[2]``.
    """

    def __init__(self, path, message):
        super().__init__(f"{path}: {message}")
        self.path = path
