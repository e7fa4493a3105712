"""Derivative-free search helpers shared by the bound optimizers.

The bound objectives are max-min problems whose arguments are concave in
each scalar variable (perspectives of logs), so a vectorized coarse grid
followed by coordinate-wise golden-section refinement is reliable and
keeps results reproducible without a solver dependency.
"""

from __future__ import annotations

import math
from typing import Callable, Sequence

import numpy as np

LN2 = math.log(2.0)

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
_INV_PHI_SQ = (3.0 - math.sqrt(5.0)) / 2.0


def xlog1p_scaled(t, u):
    """Elementwise t * log2(1 + u/t) with the removable limit 0 at t == 0.

    This is the perspective form gamma * log2(1 + power/gamma) used by every
    per-state rate term; evaluating the limit explicitly avoids epsilon
    nudging at schedule boundaries.
    """
    t_arr = np.asarray(t, dtype=float)
    u_arr = np.asarray(u, dtype=float)
    t_b, u_b = np.broadcast_arrays(t_arr, u_arr)
    out = np.zeros(t_b.shape, dtype=float)
    pos = t_b > 0.0
    if np.any(pos):
        out[pos] = t_b[pos] * np.log1p(u_b[pos] / t_b[pos]) / LN2
    if out.ndim == 0 or (np.isscalar(t) and np.isscalar(u)):
        return float(out)
    return out


def binary_entropy(p):
    """Binary entropy in bits, elementwise, with 0 log 0 = 0."""
    p_arr = np.asarray(p, dtype=float)
    scalar = p_arr.ndim == 0
    p_b = np.atleast_1d(p_arr)
    out = np.zeros(p_b.shape, dtype=float)
    interior = (p_b > 0.0) & (p_b < 1.0)
    q = p_b[interior]
    out[interior] = -(q * np.log(q) + (1.0 - q) * np.log(1.0 - q)) / LN2
    return float(out[0]) if scalar else out


def golden_max(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = 1e-9,
    max_iter: int = 200,
) -> tuple:
    """Maximize a unimodal scalar function on [lo, hi]; returns (x, f(x)).

    Endpoints are always evaluated so boundary maxima are not missed.
    """
    a, b = float(lo), float(hi)
    best_x, best_f = a, f(a)
    fb_hi = f(b)
    if fb_hi > best_f:
        best_x, best_f = b, fb_hi
    if b - a <= tol:
        return best_x, best_f
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(max_iter):
        if b - a <= tol:
            break
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = f(d)
    for x, fx in ((c, fc), (d, fd)):
        if fx > best_f:
            best_x, best_f = x, fx
    return best_x, best_f


def refine_coordinates(
    f: Callable[[Sequence[float]], float],
    x0: Sequence[float],
    bounds: Sequence[tuple],
    tol: float = 1e-7,
    rounds: int = 4,
    shrink: float = 0.35,
) -> tuple:
    """Cyclic per-coordinate golden-section ascent from a grid candidate.

    Returns (x, f(x)).  Each pass shrinks the search window around the
    incumbent, which keeps the per-coordinate sections unimodal in practice
    even for the max-min objectives.
    """
    x = [float(v) for v in x0]
    best = f(x)
    window = 1.0
    for _ in range(rounds):
        improved = False
        for i, (lo, hi) in enumerate(bounds):
            span = (hi - lo) * window
            a = max(lo, x[i] - span)
            b = min(hi, x[i] + span)

            def per_coord(v, i=i):
                trial = list(x)
                trial[i] = v
                return f(trial)

            xi, fi = golden_max(per_coord, a, b, tol=tol)
            if fi > best + 1e-15:
                x[i] = xi
                best = fi
                improved = True
        window *= shrink
        if not improved:
            break
    return x, best


def bisect_root_increasing(h: Callable, lo, hi, iters: int = 60):
    """Vectorized bisection for a root of an elementwise increasing function.

    lo/hi may be arrays bracketing the root; where no sign change exists the
    result clips to the nearer endpoint.
    """
    lo_arr = np.broadcast_arrays(np.asarray(lo, dtype=float), np.asarray(hi, dtype=float))[0].copy()
    hi_arr = np.broadcast_to(np.asarray(hi, dtype=float), lo_arr.shape).astype(float).copy()
    for _ in range(iters):
        mid = 0.5 * (lo_arr + hi_arr)
        above = h(mid) > 0.0
        hi_arr = np.where(above, mid, hi_arr)
        lo_arr = np.where(above, lo_arr, mid)
    return 0.5 * (lo_arr + hi_arr)


def argmax_first(values: np.ndarray) -> int:
    """Index of the maximum, first occurrence (ties break toward the
    smallest grid coordinates when the grid is laid out in ascending order)."""
    return int(np.argmax(values))
