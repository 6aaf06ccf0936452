"""Exception types shared across the package."""


class DomainError(ValueError):
    """Argument outside the mathematical or physical domain of an operation."""


class PoleError(ValueError):
    """A parameter sits on a pole or makes a recurrence denominator vanish."""


class ConvergenceError(RuntimeError):
    """A series or integration failed to reach the requested accuracy."""


class SingularEnergyError(ValueError):
    """Closed-form coefficient diverges at this energy (mu = -nu)."""


class MatchingError(RuntimeError):
    """Plane-wave decomposition is degenerate (vanishing wave number)."""
