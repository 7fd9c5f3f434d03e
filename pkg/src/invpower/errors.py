"""Exception types shared across the toolkit."""


class DomainError(ValueError):
    """An input violates a documented precondition (e.g. r <= 0, beta <= 2)."""


class ConfigurationError(ValueError):
    """A configuration is structurally unusable (e.g. odd beta series request)."""


class ConsistencyViolation(RuntimeError):
    """A consistency constraint that should hold by construction failed."""


class NoConvergence(RuntimeError):
    """An iterative or least-squares procedure did not reach its tolerance."""


class DegenerateC(ValueError):
    """Ground-state system degenerates: mu = -1 makes the log-power c vanish."""


class NotNormalizable(ValueError):
    """Requested ground state would not be square integrable (b >= 0)."""


class BracketError(ValueError):
    """An eigenvalue bracket does not contain a sign change of the defect."""


class IntegrationDiverged(RuntimeError):
    """Numerical integration overflowed; carries the last valid node index."""

    def __init__(self, message: str, last_index: int, last_r: float):
        super().__init__(message)
        self.last_index = last_index
        self.last_r = last_r
