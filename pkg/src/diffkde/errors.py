"""Exception types shared across the package."""


class NumericalError(RuntimeError):
    """A linear solve could not be completed."""


class SingularPivotError(NumericalError):
    """Tridiagonal elimination hit a vanishing pivot."""


class RankOneBreakdownError(NumericalError):
    """The rank-one update denominator vanished; the corrected matrix is singular."""


class SampleFormatError(ValueError):
    """A sample file could not be parsed."""


class OutOfDomainError(ValueError):
    """Sample values fall outside the configured domain."""
