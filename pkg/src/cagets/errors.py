"""Exception hierarchy shared by the library and the CLI."""


class CagetsError(Exception):
    """Base class for all package errors."""


class NotAvailableError(CagetsError):
    """A cage or good-graph is needed but cannot be materialized."""


class PreconditionError(CagetsError, ValueError):
    """Arguments violate a construction's stated preconditions."""


class ParityError(PreconditionError):
    """The requested (dv, b) class cannot exist in a variable-regular graph."""


class MalformedInputError(CagetsError, ValueError):
    """Input graph or file does not satisfy the expected structure."""


class InternalInconsistencyError(CagetsError, AssertionError):
    """A construction produced a graph that failed its own certificate."""
