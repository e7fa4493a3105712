"""Grid sweeps: bound gaps over SNR and link exponents, and schedule curves.

Every sweep point is an independent pure computation, so points fan out
over a process pool; results are gathered back in grid order, making the
output bitwise independent of the worker count.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .channel import BoundKind, ChannelGains, ExponentTriple, exponents_to_gains
from .single_relay import (
    cutset_upper,
    fd_cutset_s0,
    lda_rate,
    nnc_lower_det,
    pdf_lower,
)

GAP_SCHEMES = ("pdf-det", "pdf-rand", "nnc-det", "lda")


@dataclass(frozen=True)
class SweepGrid:
    """Axis definitions plus a dense result table, one row per grid point."""

    axes: dict
    columns: tuple
    rows: np.ndarray

    def column(self, name: str) -> np.ndarray:
        return self.rows[:, self.columns.index(name)]


def resolve_jobs(jobs: Optional[int] = None) -> int:
    """Worker count: explicit argument, else RELAYBOUNDS_JOBS, else 1."""
    if jobs is not None:
        return max(int(jobs), 1)
    env = os.environ.get("RELAYBOUNDS_JOBS", "")
    try:
        return max(int(env), 1)
    except ValueError:
        return 1


def _run_points(worker, points, jobs: int):
    if jobs <= 1 or len(points) < 4:
        return [worker(p) for p in points]
    chunk = max(len(points) // (jobs * 8), 1)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(worker, points, chunksize=chunk))


def _lower_value(g: ChannelGains, scheme: str) -> float:
    if scheme == "pdf-det":
        return pdf_lower(g, "deterministic", exact=False).value
    if scheme == "pdf-rand":
        return pdf_lower(g, "random", exact=False).value
    if scheme == "nnc-det":
        return nnc_lower_det(g).value
    if scheme == "lda":
        return lda_rate(g).value
    raise ValueError(f"unknown scheme {scheme!r}; pick from {GAP_SCHEMES}")


def _gap_point(args):
    snr_db, beta_sd, beta_rd, beta_sr, schemes = args
    snr = 10.0 ** (snr_db / 10.0)
    g = exponents_to_gains(ExponentTriple(beta_sd, beta_rd, beta_sr), snr)
    upper = cutset_upper(g, exact=False).value
    return tuple(upper - _lower_value(g, s) for s in schemes)


def gap_sweep(
    snr_db_list: Sequence[float],
    beta_grid: Sequence[float],
    schemes=("pdf-det",),
    beta_sd: float = 1.0,
    jobs: Optional[int] = None,
) -> SweepGrid:
    """Worst-case bound gap over an exponent grid, per SNR and scheme.

    For each SNR the gap cutset - lower(scheme) is maximized over all
    (beta_rd, beta_sr) pairs from beta_grid; rows hold snr_db, one max-gap
    column per scheme, and the exponent pair attaining the first scheme's
    maximum.
    """
    if isinstance(schemes, str):
        schemes = (schemes,)
    schemes = tuple(schemes)
    for s in schemes:
        if s not in GAP_SCHEMES:
            raise ValueError(f"unknown scheme {s!r}; pick from {GAP_SCHEMES}")
    beta_grid = np.asarray(list(beta_grid), dtype=float)
    snr_db_list = list(snr_db_list)
    jobs = resolve_jobs(jobs)

    pairs = [(brd, bsr) for brd in beta_grid for bsr in beta_grid]
    rows = []
    for snr_db in snr_db_list:
        points = [(snr_db, beta_sd, brd, bsr, schemes) for brd, bsr in pairs]
        gaps = np.array(_run_points(_gap_point, points, jobs))
        max_gaps = gaps.max(axis=0)
        k = int(np.argmax(gaps[:, 0]))
        rows.append((snr_db, *max_gaps, pairs[k][0], pairs[k][1]))
    columns = ("snr_db", *(f"max_gap_{s}" for s in schemes), "argmax_beta_rd", "argmax_beta_sr")
    return SweepGrid(
        axes={"snr_db": np.asarray(snr_db_list, dtype=float), "beta": beta_grid},
        columns=columns,
        rows=np.asarray(rows, dtype=float),
    )


def _delta_point(args):
    snr_db, beta_sd, beta_rd, beta_sr = args
    snr = 10.0 ** (snr_db / 10.0)
    g = exponents_to_gains(ExponentTriple(beta_sd, beta_rd, beta_sr), snr)
    rand = pdf_lower(g, "random", exact=False).value
    det = pdf_lower(g, "deterministic", exact=False).value
    return max(rand - det, 0.0)


def delta_map(
    snr_db: float,
    beta_grid: Sequence[float],
    beta_sd: float = 1.0,
    jobs: Optional[int] = None,
) -> SweepGrid:
    """Random-switch rate advantage over the exponent grid at one SNR.

    Emits one row per (beta_rd, beta_sr) with the extra bits the random
    switch buys over a fixed schedule; zero whenever routing through the
    relay is no better than the direct link.
    """
    beta_grid = np.asarray(list(beta_grid), dtype=float)
    jobs = resolve_jobs(jobs)
    points = [(snr_db, beta_sd, brd, bsr) for brd in beta_grid for bsr in beta_grid]
    deltas = _run_points(_delta_point, points, jobs)
    rows = [(p[2], p[3], d) for p, d in zip(points, deltas)]
    return SweepGrid(
        axes={"beta": beta_grid},
        columns=("beta_rd", "beta_sr", "delta_bits"),
        rows=np.asarray(rows, dtype=float),
    )


def _s0_point(args):
    c_db, i_db, schemes = args
    g = ChannelGains(S=0.0, I=10.0 ** (i_db / 10.0), C=10.0 ** (c_db / 10.0))
    upper = min(cutset_upper(g, exact=False).value, fd_cutset_s0(g).value)
    return tuple(upper - _lower_value(g, s) for s in schemes)


def s0_gap_scan(
    c_db_grid: Sequence[float],
    i_db_grid: Sequence[float],
    schemes=("lda", "pdf-det", "nnc-det"),
    jobs: Optional[int] = None,
) -> SweepGrid:
    """No-direct-link gap scan against the improved upper bound.

    The upper bound is the smaller of the half-duplex cut-set value and the
    exact full-duplex capacity, which is tighter than either alone when
    S = 0.
    """
    if isinstance(schemes, str):
        schemes = (schemes,)
    schemes = tuple(schemes)
    jobs = resolve_jobs(jobs)
    points = [(c_db, i_db, schemes) for c_db in c_db_grid for i_db in i_db_grid]
    gaps = _run_points(_s0_point, points, jobs)
    rows = [(p[0], p[1], *gvals) for p, gvals in zip(points, gaps)]
    return SweepGrid(
        axes={
            "c_db": np.asarray(list(c_db_grid), dtype=float),
            "i_db": np.asarray(list(i_db_grid), dtype=float),
        },
        columns=("c_db", "i_db", *(f"gap_{s}" for s in schemes)),
        rows=np.asarray(rows, dtype=float),
    )


def rate_curves_vs_gamma(
    g: ChannelGains,
    kinds: Iterable[BoundKind],
    gamma_step: float = 0.01,
    jobs: Optional[int] = None,
) -> SweepGrid:
    """Per-bound best rate at each pinned listen fraction."""
    from .single_relay import rate_at_gamma

    kinds = list(kinds)
    gammas = np.arange(0.0, 1.0 + 1e-12, gamma_step)
    jobs = resolve_jobs(jobs)
    points = [(g, kind, float(gm)) for gm in gammas for kind in kinds]
    values = _run_points(_curve_point, points, jobs)
    rows = []
    it = iter(values)
    for gm in gammas:
        rows.append((gm, *(next(it) for _ in kinds)))
    return SweepGrid(
        axes={"gamma": gammas},
        columns=("gamma", *(k.value for k in kinds)),
        rows=np.asarray(rows, dtype=float),
    )


def _curve_point(args):
    from .single_relay import rate_at_gamma

    g, kind, gamma = args
    return rate_at_gamma(g, kind, gamma)
