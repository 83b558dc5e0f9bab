"""Shared evaluator configuration."""

from dataclasses import dataclass


@dataclass(frozen=True)
class EvalConfig:
    """Precision, truncation and domain knobs shared by all evaluators.

    phase_precision: target absolute phase error in radians.  The default
        1e-8 is what the shifted-Gram solving and the (-1)^nu sign tests
        need; do not loosen it casually.
    series_terms: number of tail correction terms kept in the asymptotic
        expansion of the phase function (4..8 supported; 7 is full double
        accuracy for t >= 10).
    max_t: largest abscissa this configuration certifies.  Above it the
        two-part phase pipeline still runs but accuracy claims lapse.
    """

    phase_precision: float = 1e-8
    series_terms: int = 7
    max_t: float = 1.0e7

    def __post_init__(self):
        if not 4 <= self.series_terms <= 8:
            raise ValueError("series_terms must be in 4..8")
        if self.phase_precision <= 0:
            raise ValueError("phase_precision must be positive")


DEFAULT = EvalConfig()
