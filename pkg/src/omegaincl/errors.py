class InputError(ValueError):
    """Raised for malformed inputs: unknown symbols, bad indices, wrong kinds."""


class PreconditionError(RuntimeError):
    """Raised when a caller breaks a documented precondition of an internal routine."""
