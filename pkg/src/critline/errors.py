"""Exception types shared by all evaluator modules."""


class CritlineError(Exception):
    """Base class for all package-specific errors."""


class DomainTooSmall(CritlineError):
    """Abscissa below the certified domain of an asymptotic evaluator."""


class DomainExceeded(CritlineError):
    """Abscissa above the certified domain of the active configuration."""


class PrecisionUnreachable(CritlineError):
    """Requested accuracy cannot be met at this abscissa / truncation order."""


class NoConvergence(CritlineError):
    """Iterative solve exhausted its iteration budget."""


class RangeViolation(CritlineError):
    """Summation range violates the dyadic constraint 0 < a <= n < b <= 2a."""


class DegenerateFit(CritlineError):
    """Exponent fit attempted on a grid with insufficient spread."""


class OutOfWindow(CritlineError):
    """Evaluation point lies outside the fixed-truncation window."""


class WindowTooLong(CritlineError):
    """Window length exceeds the fixed-truncation hypothesis H <= T^(1/4)."""


class StepTooSmall(CritlineError):
    """Finite-difference step is in the cancellation-dominated regime."""


class GridTooCoarse(CritlineError):
    """Scan grid cannot resolve the dominant oscillation of Z'."""


class AmbiguousFlank(CritlineError):
    """|Z'| on a flank is below the evaluator noise floor; kind undecidable."""


class QuadratureFail(CritlineError):
    """Adaptive quadrature could not reach its error target."""


class NoBracket(CritlineError):
    """Integral-equation defect has no sign change in the scanned range."""


class ConfigInvalid(CritlineError):
    """Run configuration failed validation."""
