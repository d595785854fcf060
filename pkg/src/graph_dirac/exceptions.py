"""Custom exceptions for graph-dirac."""


class GraphDiracError(Exception):
    """Base exception for all graph-dirac errors."""

    def __init__(self, message: str, *args, **kwargs):
        self.message = message
        super().__init__(message, *args, **kwargs)


class GraphDocumentError(GraphDiracError):
    """Raised when a graph document is not valid JSON or fails schema validation."""

    def __init__(self, message: str, errors: list | None = None, *args, **kwargs):
        self.errors = errors or []
        super().__init__(message, *args, **kwargs)


class InvalidGraphError(GraphDiracError):
    """Raised when an edge list violates the simple-graph rules."""

    def __init__(self, message: str, edge_position: int | None = None, *args, **kwargs):
        self.edge_position = edge_position
        super().__init__(message, *args, **kwargs)


class GluingError(GraphDiracError):
    """Raised when a gluing request is inconsistent with its graphs."""

    pass


class DimensionMismatchError(GraphDiracError):
    """Raised when a state and an operator disagree on dimension."""

    def __init__(self, message: str, expected: int, actual: int, *args, **kwargs):
        self.expected = expected
        self.actual = actual
        super().__init__(message, *args, **kwargs)


class NotSymmetricError(GraphDiracError):
    """Raised when a matrix claimed symmetric (or Hermitian) is not."""

    def __init__(self, message: str, asymmetry: float = 0.0, *args, **kwargs):
        self.asymmetry = asymmetry
        super().__init__(message, *args, **kwargs)


class ConvergenceError(GraphDiracError):
    """Raised when the Jacobi eigensolver exhausts its sweep limit."""

    def __init__(self, message: str, sweeps: int, *args, **kwargs):
        self.sweeps = sweeps
        super().__init__(message, *args, **kwargs)


class StateKindError(GraphDiracError):
    """Raised when a state has the wrong kind, or no components at all."""

    pass


class WalkError(GraphDiracError):
    """Raised for walk steps between elements that are not incident."""

    pass


class UnsupportedCaseError(GraphDiracError):
    """Raised when a request falls outside the cases a formula covers."""

    pass


class IdentityViolationError(GraphDiracError):
    """Raised when two sides of an exact identity disagree.

    This always signals an implementation bug, never bad input.
    """

    def __init__(self, message: str, lhs: object = None, rhs: object = None, *args, **kwargs):
        self.lhs = lhs
        self.rhs = rhs
        super().__init__(message, *args, **kwargs)


class SizeBoundError(GraphDiracError):
    """Raised when an exhaustive enumeration would exceed its vertex bound."""

    def __init__(self, message: str, limit: int, *args, **kwargs):
        self.limit = limit
        super().__init__(message, *args, **kwargs)


class NotATreeError(GraphDiracError):
    """Raised when a tree-only check receives a graph with a cycle."""

    pass


class SupportError(GraphDiracError):
    """Raised when a support names a vertex outside the graph."""

    pass


class SettingsError(GraphDiracError):
    """Raised when a settings file cannot be read or validated."""

    def __init__(self, message: str, errors: list | None = None, *args, **kwargs):
        self.errors = errors or []
        super().__init__(message, *args, **kwargs)
