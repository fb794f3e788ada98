"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


class GridCapError(RuntimeError):
    """The boundary grid needed for the requested accuracy exceeds the cap.

    Usually means some zero or pole sits too close to the unit circle.
    """


class NumericalError(RuntimeError):
    """An internal consistency check failed (e.g. a degree certificate)."""
