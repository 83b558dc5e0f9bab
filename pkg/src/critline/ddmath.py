"""Error-free transformations and two-part (hi + lo) arithmetic.

Phases of the form theta(t) - t*ln n reach ~1e8 radians near the top of the
certified domain, where a naive double-precision product t*ln n already
carries ~1e-8 of absolute error and a naive mod-2pi loses several more
digits.  Everything phase-critical therefore runs on unevaluated double
pairs: products via Dekker's twoprod, sums via Knuth's twosum, and the
final reduction against a two-part representation of 2*pi.  All helpers
are branch-free and vectorize over numpy arrays.
"""

import math

import numpy as np

# 2*pi = TWOPI_HI + TWOPI_LO to ~2^-105
TWOPI_HI = 6.283185307179586
TWOPI_LO = 2.4492935982947064e-16
INV_TWOPI = 0.15915494309189535
# ln(2*pi), same layout
LN_TWOPI_HI = 1.8378770664093453
LN_TWOPI_LO = 1.4436087533992372e-17
# Veltkamp splitter for 53-bit doubles
_SPLIT = 134217729.0  # 2**27 + 1


def two_sum(a, b):
    """a + b = s + e exactly, s = fl(a + b)."""
    s = a + b
    bb = s - a
    e = (a - (s - bb)) + (b - bb)
    return s, e


def two_prod(a, b):
    """a * b = p + e exactly, p = fl(a * b).  Dekker/Veltkamp, no fma."""
    p = a * b
    ca = _SPLIT * a
    ahi = ca - (ca - a)
    alo = a - ahi
    cb = _SPLIT * b
    bhi = cb - (cb - b)
    blo = b - bhi
    e = ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo
    return p, e


def dd_log(n):
    """ln(n) as (hi, lo) with ~2.5e-16 absolute error.

    hi is the rounded double log; the residual ln(n) - hi = ln(n*exp(-hi))
    is ~1 ulp, so one Newton correction n*exp(-hi) - 1 recovers it to
    second order.  n must be exactly representable (integers, doubles).
    """
    n = np.asarray(n, dtype=np.float64)
    hi = np.log(n)
    lo = n * np.exp(-hi) - 1.0
    return hi, lo


_log_hi = np.zeros(1)
_log_lo = np.zeros(1)
_rsqrt = np.zeros(1)


def log_table(nmax):
    """Two-part ln n for n = 1..nmax (index n), grown on demand.

    Tables are immutable once published; growth swaps in a new array, so
    concurrent readers are safe.
    """
    global _log_hi, _log_lo, _rsqrt
    if nmax >= len(_log_hi):
        size = int(nmax * 1.3) + 16
        n = np.arange(size, dtype=np.float64)
        n[0] = 1.0  # index 0 unused; avoid log(0)
        hi, lo = dd_log(n)
        hi[0] = lo[0] = 0.0
        _rsqrt = 1.0 / np.sqrt(n)
        _rsqrt[0] = 0.0
        _log_hi, _log_lo = hi, lo
    return _log_hi, _log_lo


def rsqrt_table(nmax):
    """1/sqrt(n) for n = 0..nmax (index n, entry 0 is 0)."""
    log_table(nmax)
    return _rsqrt


def wrap_phase(s_hi, s_lo):
    """Reduce the two-part angle s into [-pi, pi] (approximately).

    The multiple k of 2*pi is removed with an exact twoprod against the
    two-part 2*pi, so no digits are lost at |s| ~ 1e8.
    """
    k = np.round(s_hi * INV_TWOPI)
    q_hi, q_e = two_prod(k, TWOPI_HI)
    r_hi, r_e = two_sum(s_hi, -q_hi)
    r_lo = r_e + (s_lo - (q_e + k * TWOPI_LO))
    return r_hi + r_lo


def phase_mod_2pi(theta_hi, theta_lo, t, ln_hi, ln_lo):
    """(theta - t*ln n) mod 2pi, all phase-critical steps in two parts."""
    p_hi, p_e = two_prod(t, ln_hi)
    p_lo = p_e + t * ln_lo
    s_hi, s_e = two_sum(theta_hi, -p_hi)
    s_lo = s_e + (theta_lo - p_lo)
    return wrap_phase(s_hi, s_lo)


class ExactSum:
    """Exact accumulator (Shewchuk expansion), rounded only on read.

    Sums held here are exact reals; adding two accumulators and halving one
    are also exact, which is what makes the even/odd partition identities
    of the parity sums hold to machine exactness rather than to a tolerance.
    """

    def __init__(self, values=()):
        self.partials = []
        for v in values:
            self.add(v)

    def add(self, x):
        x = float(x)
        partials = self.partials
        i = 0
        for y in partials:
            if abs(x) < abs(y):
                x, y = y, x
            hi = x + y
            lo = y - (hi - x)
            if lo:
                partials[i] = lo
                i += 1
            x = hi
        partials[i:] = [x]
        return self

    def add_exact(self, other):
        for p in other.partials:
            self.add(p)
        return self

    def scaled(self, factor):
        """Exact for factors that are powers of two (e.g. 0.5)."""
        out = ExactSum()
        out.partials = [factor * p for p in self.partials]
        return out

    @property
    def value(self):
        return math.fsum(self.partials)
