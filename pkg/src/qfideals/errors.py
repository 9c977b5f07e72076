"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input violates a documented precondition (bad D, wrong prime, ...)."""


class InvariantError(RuntimeError):
    """An internal postcondition failed; results must never be returned past this."""
