"""Pure-numpy implementations of the hot sum kernels.

Selected at import time by critline.backend when the compiled extension is
unavailable (or when CRITLINE_BACKEND=python).  Semantics must match
critline._kernels exactly; both run the same two-part phase pipeline, so
they agree to ~1e-13 (library sin/cos is the only divergence source).

Main-sum kernels group the evaluation points by their truncation length
m = floor(sqrt(t/2pi)) and process each group as one (points x terms)
matrix, chunked to bound peak memory.
"""

import numpy as np

from . import ddmath

BACKEND_NAME = "python"

_CHUNK_AREA = 2_000_000  # max elements per (points x terms) block


def _phase_matrix(t, th_hi, th_lo, ln_hi, ln_lo):
    """wrap(theta - t*ln n) for a block of points x terms."""
    return ddmath.phase_mod_2pi(
        th_hi[:, None], th_lo[:, None], t[:, None], ln_hi[None, :], ln_lo[None, :]
    )


def _grouped(t, m):
    """Yield slices of equal truncation length, chunked by area."""
    order = np.argsort(m, kind="stable")
    m_sorted = m[order]
    starts = np.flatnonzero(np.r_[True, m_sorted[1:] != m_sorted[:-1]])
    bounds = np.r_[starts, len(m_sorted)]
    for i in range(len(starts)):
        lo, hi = bounds[i], bounds[i + 1]
        mi = int(m_sorted[lo])
        step = max(1, _CHUNK_AREA // max(mi, 1))
        for j in range(lo, hi, step):
            yield order[j : min(j + step, hi)], mi


def z_main_batch(t, th_hi, th_lo, ln_hi, ln_lo, rsq):
    """2 sum_{n <= sqrt(t/2pi)} n^(-1/2) cos(theta - t ln n), per point."""
    t = np.ascontiguousarray(t, dtype=np.float64)
    m = np.floor(np.sqrt(t * ddmath.INV_TWOPI)).astype(np.int64)
    out = np.zeros_like(t)
    for idx, mi in _grouped(t, m):
        if mi < 1:
            continue
        ph = _phase_matrix(t[idx], th_hi[idx], th_lo[idx], ln_hi[1 : mi + 1], ln_lo[1 : mi + 1])
        out[idx] = 2.0 * (np.cos(ph) @ rsq[1 : mi + 1])
    return out


def zprime1_batch(t, th_hi, th_lo, dth, ln_hi, ln_lo, rsq):
    """-2 sum_{n <= sqrt(t/2pi)} n^(-1/2) (theta' - ln n) sin(theta - t ln n)."""
    t = np.ascontiguousarray(t, dtype=np.float64)
    m = np.floor(np.sqrt(t * ddmath.INV_TWOPI)).astype(np.int64)
    out = np.zeros_like(t)
    for idx, mi in _grouped(t, m):
        if mi < 1:
            continue
        ln_n = ln_hi[1 : mi + 1]
        ph = _phase_matrix(t[idx], th_hi[idx], th_lo[idx], ln_n, ln_lo[1 : mi + 1])
        w = (dth[idx, None] - ln_n[None, :]) * rsq[None, 1 : mi + 1]
        out[idx] = -2.0 * np.einsum("ij,ij->i", np.sin(ph), w)
    return out


def zprime2_batch(t, th_hi, th_lo, p0, ln_hi, ln_lo, rsq):
    """-2 sum_{n < P0} n^(-1/2) ln(P0/n) sin(theta - t ln n), fixed P0."""
    t = np.ascontiguousarray(t, dtype=np.float64)
    mi = int(np.ceil(p0)) - 1
    out = np.zeros_like(t)
    if mi < 1:
        return out
    ln_n = ln_hi[1 : mi + 1]
    w = (np.log(p0) - ln_n) * rsq[1 : mi + 1]
    step = max(1, _CHUNK_AREA // mi)
    for j in range(0, len(t), step):
        s = slice(j, j + step)
        ph = _phase_matrix(t[s], th_hi[s], th_lo[s], ln_n, ln_lo[1 : mi + 1])
        out[s] = -2.0 * (np.sin(ph) @ w)
    return out


def gram_cos_batch(t, p0, ln_hi, ln_lo, rsq):
    """sum_{n < P0} n^(-1/2) ln(P0/n) cos(t ln n); no phase-function term."""
    t = np.ascontiguousarray(t, dtype=np.float64)
    mi = int(np.ceil(p0)) - 1
    out = np.zeros_like(t)
    if mi < 1:
        return out
    ln_n = ln_hi[1 : mi + 1]
    w = (np.log(p0) - ln_n) * rsq[1 : mi + 1]
    zero = np.zeros_like(t)
    step = max(1, _CHUNK_AREA // mi)
    for j in range(0, len(t), step):
        s = slice(j, j + step)
        ph = _phase_matrix(t[s], zero[s], zero[s], ln_n, ln_lo[1 : mi + 1])
        out[s] = np.cos(ph) @ w  # cos is even: wrap(-t ln n) is fine
    return out


def power_sum(sigma, t, n_terms, ln_hi, ln_lo, rsq):
    """sum_{n=1}^{N} n^(-sigma) e^(-i t ln n) as (re, im)."""
    ln_n = ln_hi[1 : n_terms + 1]
    ln_n_lo = ln_lo[1 : n_terms + 1]
    ph = ddmath.phase_mod_2pi(0.0, 0.0, -t, ln_n, ln_n_lo)  # wrap(-t ln n)
    if sigma == 0.5:
        mag = rsq[1 : n_terms + 1]
    else:
        mag = np.exp(-sigma * ln_n)
    return float(np.cos(ph) @ mag), float(np.sin(ph) @ mag)


def rs_correction_batch(t, cheb, order):
    """Riemann-Siegel remainder through the given correction order.

    (-1)^(N+1) (t/2pi)^(-1/4) sum_{k<=order} C_k(p) (t/2pi)^(-k/2) with
    C_k as Chebyshev series on p in [0,1], rows of `cheb`.
    """
    t = np.ascontiguousarray(t, dtype=np.float64)
    tau = t * ddmath.INV_TWOPI
    alpha = np.sqrt(tau)
    n_int = np.floor(alpha)
    p = alpha - n_int
    x = 2.0 * p - 1.0
    sign = np.where(np.mod(n_int, 2.0) == 0.0, -1.0, 1.0)

    x2 = 2.0 * x
    rt = tau**-0.25
    fk = np.ones_like(t)
    total = np.zeros_like(t)
    for k in range(order + 1):
        c = cheb[k]
        b1 = np.zeros_like(t)
        b2 = np.zeros_like(t)
        for j in range(len(c) - 1, 0, -1):
            b1, b2 = x2 * b1 - b2 + c[j], b1
        ck = x * b1 - b2 + c[0]
        total += ck * fk
        fk = fk / np.sqrt(tau)
    return sign * rt * total
