"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input outside the validity domain of the requested operation.

    Raised for sector violations, turning-point proximity, z = 0 where a
    formula has an essential singularity, and similar hard preconditions.
    Maps to exit code 2 in the CLI and HTTP 400 in the service.
    """


class ConvergenceError(RuntimeError):
    """An iterative evaluation exceeded its iteration cap."""
