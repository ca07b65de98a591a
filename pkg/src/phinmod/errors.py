"""Exception types shared across the package.

``ValidationError`` marks bad *input data* (malformed graphs, matrices that
fail the Weil conditions, indefinite Gram matrices, schema problems).  The
CLI maps it to exit code 2, keeping it distinct from a failed mathematical
check on well-formed input (exit code 1).
"""


class ValidationError(ValueError):
    """Input data fails a documented validity check."""


class GraphError(ValidationError):
    """Malformed or disconnected dual graph."""


class WeilValidationError(ValidationError):
    """An integer matrix fails one of the Weil-q conditions."""


class SchemaError(ValidationError):
    """An instance or report file does not match the documented schema."""
