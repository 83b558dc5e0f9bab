"""Phase function theta(t) of the critical-line Z function.

    theta(t) = -t/2 * ln(pi) + Im ln Gamma(1/4 + i t/2)
             = t/2 * ln(t/2pi) - t/2 - pi/8
               + 1/(48 t) + 7/(5760 t^3) + 31/(80640 t^5) + ...

The tail is the Stirling expansion of the log-gamma term; with seven
correction terms the truncation floor is ~1e-14 radians already at t = 10,
far below the per-term size 1/t suggested by the leading-order statement.
The dominant error is instead the rounding of (t/2)*ln(t/2pi), which is why
the main terms are evaluated in two-part arithmetic: theta comes back as an
unreduced (hi, lo) pair accurate to ~2e-16 * t absolute, and callers control
any mod-2pi reduction (ddmath.wrap_phase) so nothing is lost at t ~ 1e7.

Below t = 10 the asymptotic series degrades and evaluation is refused.
"""

from dataclasses import dataclass

import numpy as np

from . import ddmath
from .config import DEFAULT, EvalConfig
from .errors import DomainExceeded, DomainTooSmall, PrecisionUnreachable

T_MIN = 10.0

# Tail coefficients c_k = (1 - 2^(1-2k)) |B_2k| / (4k(2k-1)), k = 1..8;
# theta tail = sum c_k t^(1-2k).  Verified against the arbitrary-precision
# log-gamma oracle to 1e-14 at t = 10.
TAIL = (
    1.0 / 48.0,
    7.0 / 5760.0,
    31.0 / 80640.0,
    127.0 / 430080.0,
    511.0 / 1216512.0,
    1414477.0 / 1476034560.0,
    8191.0 / 2555904.0,
    118518239.0 / 8021606400.0,
)

_PI8_HI = 3.141592653589793 / 8.0
_PI8_LO = 1.2246467991473532e-16 / 8.0


@dataclass(frozen=True)
class ThetaValue:
    """theta and its first two derivatives at one abscissa (radians)."""

    t: float
    theta: float
    dtheta: float
    d2theta: float


def _check_domain(t, cfg):
    t = np.asarray(t, dtype=np.float64)
    if t.size == 0:
        return t
    tmin = float(t.min())
    if tmin < T_MIN:
        raise DomainTooSmall(f"theta needs t >= {T_MIN}, got {tmin}")
    tmax = float(t.max())
    if tmax > cfg.max_t:
        raise DomainExceeded(f"config certifies t <= {cfg.max_t:g}, got {tmax:g}")
    est = tail_truncation(tmin, cfg.series_terms) + 1.6e-16 * max(1.0, 0.5 * tmax)
    if est > cfg.phase_precision:
        raise PrecisionUnreachable(
            f"phase error ~{est:.2e} at t={tmin:g} with {cfg.series_terms} "
            f"tail terms exceeds target {cfg.phase_precision:g}"
        )
    return t


def tail_truncation(t, k):
    """Size of the first dropped tail term (truncation estimate)."""
    if k >= len(TAIL):
        return 0.0
    return TAIL[k] * t ** (1 - 2 * (k + 1))


def theta_dd(t, cfg: EvalConfig = DEFAULT):
    """Unreduced theta as a two-part (hi, lo) pair; vectorized.

    Returns arrays shaped like t.  hi + lo carries ~2e-16 * t absolute
    error, dominated by the two-part log.
    """
    t = _check_domain(t, cfg)
    lt_hi, lt_lo = ddmath.dd_log(t)
    u_hi, u_e = ddmath.two_sum(lt_hi, -ddmath.LN_TWOPI_HI)
    u_lo = u_e + (lt_lo - ddmath.LN_TWOPI_LO)
    h = 0.5 * t
    m_hi, m_e = ddmath.two_prod(h, u_hi)
    m_lo = m_e + h * u_lo
    s_hi, s_e = ddmath.two_sum(m_hi, -h)
    s_lo = s_e + m_lo

    inv_t2 = 1.0 / (t * t)
    tail = np.zeros_like(t)
    for c in reversed(TAIL[: cfg.series_terms]):
        tail = (tail + c) * inv_t2
    tail = tail * t  # sum c_k t^(1-2k)

    r_hi, r_e = ddmath.two_sum(s_hi, -_PI8_HI)
    r_lo = r_e + (s_lo - _PI8_LO) + tail
    hi, lo = ddmath.two_sum(r_hi, r_lo)
    return hi, lo


def dtheta_array(t, cfg: EvalConfig = DEFAULT):
    """theta'(t) = 1/2 ln(t/2pi) - sum (2k-1) c_k t^(-2k); vectorized."""
    t = _check_domain(t, cfg)
    main = 0.5 * (np.log(t) - ddmath.LN_TWOPI_HI)
    inv_t2 = 1.0 / (t * t)
    tail = np.zeros_like(t)
    for k in reversed(range(cfg.series_terms)):
        tail = (tail + (2 * k + 1) * TAIL[k]) * inv_t2
    return main - tail


def d2theta_array(t, cfg: EvalConfig = DEFAULT):
    """theta''(t) = 1/(2t) + sum (2k-1)(2k) c_k t^(-2k-1); vectorized."""
    t = _check_domain(t, cfg)
    inv_t2 = 1.0 / (t * t)
    tail = np.zeros_like(t)
    for k in reversed(range(cfg.series_terms)):
        tail = (tail + (2 * k + 1) * (2 * k + 2) * TAIL[k]) * inv_t2
    return (0.5 + tail) / t


def theta(t, cfg: EvalConfig = DEFAULT) -> ThetaValue:
    """Evaluate theta, theta', theta'' at a single abscissa t >= 10."""
    arr = np.asarray([t], dtype=np.float64)
    hi, lo = theta_dd(arr, cfg)
    return ThetaValue(
        t=float(t),
        theta=float(hi[0] + lo[0]),
        dtheta=float(dtheta_array(arr, cfg)[0]),
        d2theta=float(d2theta_array(arr, cfg)[0]),
    )


def theta_main(t):
    """Three-term asymptotic main value t/2 ln(t/2pi) - t/2 - pi/8.

    Newton initializer and cross-check only; no tail, plain doubles.
    """
    t = np.asarray(t, dtype=np.float64)
    if np.any(t <= 0):
        raise ValueError("theta_main needs t > 0")
    out = 0.5 * t * (np.log(t) - ddmath.LN_TWOPI_HI) - 0.5 * t - _PI8_HI
    return float(out) if out.ndim == 0 else out
