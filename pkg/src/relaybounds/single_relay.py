"""Finite-SNR bounds and gDoF formulas for the single-relay Gaussian HD channel.

Upper bounds evaluate the max-flow min-cut argument over jointly Gaussian
inputs parameterized by the relay listen fraction gamma, the source power
fraction beta spent while the relay listens, and the transmit-state input
correlation alpha1.  Lower bounds cover partial decode-and-forward with a
deterministic or random listen/transmit switch, a two-phase superposition
scheme that needs no power allocation, and quantize-and-forward variants.

All rates are bits per channel use.  The deterministic-switch objectives
are jointly concave in (gamma, beta, alpha1) -- every term is a perspective
of a concave log -- so nested golden-section search finds their global
maximum; the random-switch variants add a small smooth mixture-information
term and are handled by a vectorized grid plus local refinement.  Schedule
boundaries (gamma in {0, 1}) are removable limits and are evaluated
exactly, never nudged.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .channel import BoundKind, ChannelGains, ExponentTriple, RateBound
from .mixture import switch_info
from .optimize import (
    binary_entropy,
    bisect_root_increasing,
    golden_max,
    refine_coordinates,
    xlog1p_scaled,
)

LOG2 = math.log2


def _log2_1p(x):
    return np.log1p(x) / math.log(2.0)


@dataclass(frozen=True)
class PowerSplit:
    """Listen fraction, source power fraction and input correlation.

    Induces the per-state transmit powers P_s0 = beta/gamma while the relay
    listens, P_s1 = (1-beta)/(1-gamma) and P_r1 = 1/(1-gamma) while it
    transmits; the relay is silent while listening, so the unit average
    power constraints hold with equality by construction.
    """

    gamma: float
    beta: float
    alpha1: float

    def __post_init__(self):
        for name in ("gamma", "beta", "alpha1"):
            v = getattr(self, name)
            if not (0.0 <= v <= 1.0):
                raise ValueError(f"{name} must lie in [0, 1], got {v!r}")

    @property
    def source_power_listen(self) -> float:
        return self.beta / self.gamma if self.gamma > 0 else math.inf if self.beta > 0 else 0.0

    @property
    def source_power_transmit(self) -> float:
        g = 1.0 - self.gamma
        return (1.0 - self.beta) / g if g > 0 else math.inf if self.beta < 1 else 0.0

    @property
    def relay_power_transmit(self) -> float:
        g = 1.0 - self.gamma
        return 1.0 / g if g > 0 else math.inf


# ---------------------------------------------------------------------------
# gDoF closed forms
# ---------------------------------------------------------------------------


def gdof_hd(e: ExponentTriple) -> float:
    """High-SNR capacity slope of the half-duplex relay channel."""
    d_rd = e.beta_rd - e.beta_sd
    d_sr = e.beta_sr - e.beta_sd
    if d_rd > 0 and d_sr > 0:
        return e.beta_sd + d_rd * d_sr / (d_rd + d_sr)
    return e.beta_sd


def gdof_fd(e: ExponentTriple) -> float:
    """High-SNR capacity slope of the full-duplex relay channel."""
    return e.beta_sd + min(max(e.beta_sr - e.beta_sd, 0.0), max(e.beta_rd - e.beta_sd, 0.0))


# ---------------------------------------------------------------------------
# Shared two-cut machinery
# ---------------------------------------------------------------------------


def _cut_rates(s, i, gamma, beta, a, relay_cut_gain, i0):
    """The two cut rates of the max-min objective, vectorized.

    The first is the flow into the destination (switch information i0 plus
    the per-state destination rates); the second the flow out of the
    source, where relay_cut_gain is C+S for the cut-set bound and
    max(C, S) for the decode-and-forward lower bound.
    """
    sp1 = s * (1.0 - beta)
    cross = 2.0 * a * np.sqrt(sp1 * i)
    dest = i0 + xlog1p_scaled(gamma, s * beta) + xlog1p_scaled(1.0 - gamma, sp1 + i + cross)
    src = xlog1p_scaled(gamma, relay_cut_gain * beta) + xlog1p_scaled(
        1.0 - gamma, (1.0 - a * a) * sp1
    )
    return dest, src


def _best_alpha(s, i, gamma, beta, relay_cut_gain, i0, iters=44):
    """Optimal correlation for fixed (gamma, beta), vectorized.

    The destination cut rises and the source cut falls with the correlation
    a, so the max-min sits at their crossing, clipped to [0, 1].
    """

    def diff(a):
        dest, src = _cut_rates(s, i, gamma, beta, a, relay_cut_gain, i0)
        return dest - src

    zero = np.zeros_like(np.asarray(gamma, dtype=float))
    one = np.ones_like(zero)
    d0 = diff(zero)
    d1 = diff(one)
    a_star = np.where(d0 >= 0.0, 0.0, np.where(d1 <= 0.0, 1.0, np.nan))
    need = np.isnan(a_star)
    if np.any(need):
        root = bisect_root_increasing(diff, zero, one, iters=iters)
        a_star = np.where(need, root, a_star)
    dest, src = _cut_rates(s, i, gamma, beta, a_star, relay_cut_gain, i0)
    return a_star, np.minimum(dest, src)


def _pdf_switch_info(s, i, gamma, beta, a, fast=False):
    """Switch information of the destination output under the power split."""
    gamma = np.asarray(gamma, dtype=float)
    beta = np.asarray(beta, dtype=float)
    a = np.asarray(a, dtype=float)
    v0 = 1.0 + np.where(gamma > 0, s * beta / np.where(gamma > 0, gamma, 1.0), 0.0)
    g1 = 1.0 - gamma
    sp1 = s * (1.0 - beta)
    load = sp1 + i + 2.0 * a * np.sqrt(sp1 * i)
    v1 = 1.0 + np.where(g1 > 0, load / np.where(g1 > 0, g1, 1.0), 0.0)
    return switch_info(gamma, v0, v1, fast=fast)


def _xlog_scalar(t: float, u: float) -> float:
    return t * math.log1p(u / t) / math.log(2.0) if t > 0.0 else 0.0


def _entropy_scalar(p: float) -> float:
    if p <= 0.0 or p >= 1.0:
        return 0.0
    return -(p * math.log(p) + (1.0 - p) * math.log(1.0 - p)) / math.log(2.0)


def _det_objective(s, i, relay_cut_gain, entropy_i0):
    """Scalar objective value(gamma, beta) with the correlation optimized.

    Pure-float math: this sits in the innermost loop of the nested search
    and of the gap sweeps, where numpy dispatch overhead dominates.
    """

    def value(gamma, beta):
        i0 = _entropy_scalar(gamma) if entropy_i0 else 0.0
        sp1 = s * (1.0 - beta)
        root = math.sqrt(sp1 * i)
        g1 = 1.0 - gamma
        head = i0 + _xlog_scalar(gamma, s * beta)
        src_head = _xlog_scalar(gamma, relay_cut_gain * beta)

        def diff(a):
            dest = head + _xlog_scalar(g1, sp1 + i + 2.0 * a * root)
            src = src_head + _xlog_scalar(g1, (1.0 - a * a) * sp1)
            return dest - src

        if diff(0.0) >= 0.0:
            a = 0.0
        elif diff(1.0) <= 0.0:
            a = 1.0
        else:
            lo, hi = 0.0, 1.0
            for _ in range(44):
                mid = 0.5 * (lo + hi)
                if diff(mid) > 0.0:
                    hi = mid
                else:
                    lo = mid
            a = 0.5 * (lo + hi)
        dest = head + _xlog_scalar(g1, sp1 + i + 2.0 * a * root)
        src = src_head + _xlog_scalar(g1, (1.0 - a * a) * sp1)
        return min(dest, src)

    return value


def _det_inner_max(s, i, relay_cut_gain, entropy_i0, gamma, n_scan=61):
    """Max over beta at fixed gamma (concave in beta): scan plus polish."""
    value = _det_objective(s, i, relay_cut_gain, entropy_i0)
    beta_vec = np.linspace(0.0, 1.0, n_scan)
    i0 = binary_entropy(gamma) if entropy_i0 else 0.0
    _, vals = _best_alpha(s, i, np.full(n_scan, gamma), beta_vec, relay_cut_gain, i0)
    k = int(np.argmax(vals))
    lo = beta_vec[max(k - 1, 0)]
    hi = beta_vec[min(k + 1, n_scan - 1)]
    beta, best = golden_max(lambda b: value(gamma, b), lo, hi, tol=1e-10)
    return best, beta


def _maxmin_two_cut_det(
    g: ChannelGains,
    relay_cut_gain: float,
    entropy_i0: bool,
    kind: BoundKind,
    exact: bool = True,
    seeds: Iterable[tuple] = (),
) -> RateBound:
    """Maximize min(cut rates) over (gamma, beta, alpha1), deterministic switch.

    The objective is jointly concave, so with exact=True nested
    golden-section search returns the global optimum; exact=False keeps the
    cheaper coarse grid plus coordinate refinement used inside sweeps.
    """
    s, i = g.S, g.I
    value = _det_objective(s, i, relay_cut_gain, entropy_i0)

    if exact:
        gamma, best = golden_max(
            lambda gm: _det_inner_max(s, i, relay_cut_gain, entropy_i0, gm)[0],
            0.0,
            1.0,
            tol=3e-10,
        )
        _, beta = _det_inner_max(s, i, relay_cut_gain, entropy_i0, gamma)
    else:
        axis = np.linspace(0.0, 1.0, 51)
        gg, bb = np.meshgrid(axis, axis, indexing="ij")
        i0 = binary_entropy(gg.ravel()) if entropy_i0 else 0.0
        _, vals = _best_alpha(s, i, gg.ravel(), bb.ravel(), relay_cut_gain, i0)
        k = int(np.argmax(vals))
        (gamma, beta), best = refine_coordinates(
            lambda x: value(min(max(x[0], 0.0), 1.0), min(max(x[1], 0.0), 1.0)),
            (gg.ravel()[k], bb.ravel()[k]),
            [(0, 1), (0, 1)],
            rounds=4,
        )
    for gs, bs in seeds:
        vs = value(gs, bs)
        if vs > best:
            (gamma, beta), best = refine_coordinates(
                lambda x: value(min(max(x[0], 0.0), 1.0), min(max(x[1], 0.0), 1.0)),
                (gs, bs),
                [(0, 1), (0, 1)],
                rounds=4,
            )
    i0 = binary_entropy(gamma) if entropy_i0 else 0.0
    a_star, _ = _best_alpha(s, i, gamma, beta, relay_cut_gain, i0)
    return RateBound(
        value=max(best, 0.0),
        kind=kind,
        gamma=min(max(gamma, 0.0), 1.0),
        beta=min(max(beta, 0.0), 1.0),
        alpha1=float(np.clip(a_star, 0.0, 1.0)),
    )


# ---------------------------------------------------------------------------
# Cut-set upper bounds
# ---------------------------------------------------------------------------


def cutset_upper(g: ChannelGains, exact: bool = True) -> RateBound:
    """Max-min cut-set upper bound with the switch entropy term H(gamma)."""
    return _maxmin_two_cut_det(g, g.C + g.S, True, BoundKind.CUTSET_NUMERIC, exact=exact)


def _capped_ratio_bound(s, x, y, base_offset_bits):
    """offset + D + (X-D)(Y-D)/((X-D)+(Y-D)) with D = log2(1+S).

    Pre-ratio form of the closed-form bounds: it is the max over gamma of
    min(gamma*Y + (1-gamma)*D, gamma*D + (1-gamma)*X), so S = 0 (D = 0) is
    exact rather than a division by zero.
    """
    d = _log2_1p(s)
    dx = max(x - d, 0.0)
    dy = max(y - d, 0.0)
    if dx <= 0.0 or dy <= 0.0:
        return base_offset_bits + d, (1.0 if dx > 0.0 else 0.0)
    return base_offset_bits + d + dx * dy / (dx + dy), dx / (dx + dy)


def cutset_upper_analytic(g: ChannelGains) -> RateBound:
    """Closed-form relaxation of the cut-set bound (adds 2 bits of slack)."""
    s, i, c = g.S, g.I, g.C
    x = _log2_1p((math.sqrt(i) + math.sqrt(s)) ** 2)
    y = _log2_1p(c + s)
    value, gamma = _capped_ratio_bound(s, x, y, 2.0)
    return RateBound(value=float(value), kind=BoundKind.CUTSET_ANALYTIC, gamma=gamma)


def fd_cutset_s0(g: ChannelGains) -> RateBound:
    """Exact full-duplex capacity when there is no direct link (S = 0)."""
    if g.S != 0.0:
        raise ValueError(f"full-duplex specialization needs S = 0, got S = {g.S!r}")
    return RateBound(value=float(_log2_1p(min(g.C, g.I))), kind=BoundKind.FD_CUTSET)


# ---------------------------------------------------------------------------
# Partial decode-and-forward lower bounds
# ---------------------------------------------------------------------------


def pdf_lower(
    g: ChannelGains,
    switch: str = "random",
    exact: bool = True,
    extra_seeds: Iterable[tuple] = (),
) -> RateBound:
    """Decode-and-forward lower bound with a random or deterministic switch.

    The random switch adds the exact mixture information I(state; Y_dest)
    to the destination cut; the deterministic variant drops that term.
    Extra (gamma, beta, alpha1) seed points join the candidate set; the
    returned value never falls below the rate at any seed.
    """
    if switch not in ("random", "deterministic"):
        raise ValueError(f'switch must be "random" or "deterministic", got {switch!r}')
    relay_cut_gain = max(g.C, g.S)
    det = _maxmin_two_cut_det(
        g, relay_cut_gain, False, BoundKind.PDF_DETERMINISTIC, exact=exact
    )
    if switch == "deterministic":
        return det

    s, i = g.S, g.I

    def objective(x, fast=False):
        gamma, beta, a = (min(max(v, 0.0), 1.0) for v in x)
        i0 = _pdf_switch_info(s, i, gamma, beta, a, fast=fast)
        dest, src = _cut_rates(
            s, i, np.asarray(gamma), np.asarray(beta), np.asarray(a), relay_cut_gain, i0
        )
        return float(np.minimum(dest, src))

    # Vectorized coarse stage over the full box.
    gam = np.linspace(0.0, 1.0, 51 if exact else 26)
    bet = np.linspace(0.0, 1.0, 21 if exact else 11)
    alp = np.linspace(0.0, 1.0, 6)
    gg, bb, aa = (v.ravel() for v in np.meshgrid(gam, bet, alp, indexing="ij"))
    i0 = _pdf_switch_info(s, i, gg, bb, aa, fast=True)
    dest, src = _cut_rates(s, i, gg, bb, aa, relay_cut_gain, i0)
    vals = np.minimum(dest, src)
    k = int(np.argmax(vals))

    candidates = [
        (gg[k], bb[k], aa[k]),
        (det.gamma, det.beta, det.alpha1),
    ]
    candidates.extend(extra_seeds)
    if exact:
        cs = cutset_upper(g, exact=exact)
        candidates.append((cs.gamma, cs.beta, cs.alpha1))
    best_x, best_f = None, -math.inf
    gamma_scan = np.linspace(0.0, 1.0, 201 if exact else 101)
    rounds = 3 if exact else 2
    for cand in candidates:
        x = [float(v) for v in cand]
        cand_x, cand_f = list(x), objective(x)
        for _ in range(rounds):
            # gamma axis: one batched quadrature over a dense scan
            i0_scan = _pdf_switch_info(
                s, i, gamma_scan, np.full_like(gamma_scan, x[1]),
                np.full_like(gamma_scan, x[2]), fast=True,
            )
            dest, src = _cut_rates(
                s, i, gamma_scan, np.full_like(gamma_scan, x[1]),
                np.full_like(gamma_scan, x[2]), relay_cut_gain, i0_scan,
            )
            scan_vals = np.minimum(dest, src)
            kk = int(np.argmax(scan_vals))
            lo, hi = gamma_scan[max(kk - 1, 0)], gamma_scan[min(kk + 1, len(gamma_scan) - 1)]
            x[0], _ = golden_max(lambda v: objective((v, x[1], x[2]), fast=True), lo, hi, tol=1e-8)
            x[1], _ = golden_max(lambda v: objective((x[0], v, x[2]), fast=True), 0.0, 1.0, tol=1e-8)
            x[2], f = golden_max(lambda v: objective((x[0], x[1], v), fast=True), 0.0, 1.0, tol=1e-8)
            if f > cand_f:
                cand_x, cand_f = list(x), f
        f = objective(cand_x)  # settle the best point at full quadrature depth
        if f > best_f:
            best_x, best_f = cand_x, f

    if best_f < det.value:  # the random switch can only help
        return RateBound(value=det.value, kind=BoundKind.PDF_RANDOM,
                         gamma=det.gamma, beta=det.beta, alpha1=det.alpha1)
    return RateBound(value=best_f, kind=BoundKind.PDF_RANDOM,
                     gamma=best_x[0], beta=best_x[1], alpha1=best_x[2])


def pdf_lower_analytic(g: ChannelGains) -> RateBound:
    """Closed-form decode-and-forward rate (no switch information)."""
    s, i, c = g.S, g.I, g.C
    x = _log2_1p(i + s)
    y = _log2_1p(max(c, s))
    value, gamma = _capped_ratio_bound(s, x, y, 0.0)
    return RateBound(value=float(value), kind=BoundKind.PDF_ANALYTIC, gamma=gamma)


# ---------------------------------------------------------------------------
# Two-phase superposition scheme (no power allocation, successive decoding)
# ---------------------------------------------------------------------------


def lda_rate(g: ChannelGains) -> RateBound:
    """Rate of the two-phase superposition scheme with its closed-form gamma.

    For C <= S the scheme degenerates to direct transmission at log2(1+S).
    """
    s, i, c = g.S, g.I, g.C
    x = _log2_1p(i / (1.0 + s))
    y = _log2_1p(c / (1.0 + s)) - _log2_1p(s / (1.0 + s))
    direct = float(_log2_1p(s))
    if y <= 0.0 or x <= 0.0:
        return RateBound(value=direct, kind=BoundKind.LDA)
    gamma = x / (x + y)
    return RateBound(value=direct + x * y / (x + y), kind=BoundKind.LDA, gamma=gamma)


def lda_rate_at(g: ChannelGains, gamma: float) -> float:
    """Two-phase scheme rate at a fixed listen fraction gamma."""
    s, i, c = g.S, g.I, g.C
    if c <= s:
        return float(_log2_1p(s))
    phase1_relayed = gamma * _log2_1p(c / (1.0 + s))
    phase2_relayed = (1.0 - gamma) * _log2_1p(i / (1.0 + s)) + gamma * _log2_1p(s / (1.0 + s))
    direct = _log2_1p(s) - gamma * _log2_1p(s / (1.0 + s))
    return float(direct + min(phase1_relayed, phase2_relayed))


# ---------------------------------------------------------------------------
# Quantize-and-forward (noisy network coding) lower bounds
# ---------------------------------------------------------------------------


def _nnc_det_value(s, i, c, gamma, beta):
    """Deterministic-switch quantize-and-forward rate at (gamma, beta).

    The quantization noise equalizes the two cut rates in closed form; at
    the schedule boundaries the rate degenerates to direct transmission.
    """
    gamma = np.asarray(gamma, dtype=float)
    beta = np.asarray(beta, dtype=float)
    g1 = 1.0 - gamma
    sp1 = s * (1.0 - beta)
    # relay->destination and source->relay loads per unit average power
    a_load = np.where(g1 > 0, i / np.where(g1 > 0, g1 + sp1, 1.0), 0.0)
    b_load = np.where(gamma > 0, c * beta / np.where(gamma > 0, gamma + s * beta, 1.0), 0.0)
    with np.errstate(over="ignore", invalid="ignore"):
        log_t = np.where(
            gamma > 0, (g1 / np.where(gamma > 0, gamma, 1.0)) * np.log1p(a_load), np.inf
        )
        t_m1 = np.expm1(np.minimum(log_t, 700.0))
        # 1/(1 + sigma0^2) = (T-1)/(B+T), stable in both limits
        w = np.where(log_t >= 700.0, 1.0, t_m1 / (b_load + 1.0 + t_m1))
    rate = xlog1p_scaled(gamma, beta * (s + c * w)) + xlog1p_scaled(g1, sp1)
    with np.errstate(divide="ignore"):
        sigma2 = np.where(w > 0, (1.0 - w) / np.where(w > 0, w, 1.0), np.inf)
    return rate, sigma2


def nnc_lower_det(g: ChannelGains, seeds: Iterable[tuple] = ()) -> RateBound:
    """Quantize-and-forward with the time-share variable tied to the switch."""
    s, i, c = g.S, g.I, g.C
    axis = np.linspace(0.0, 1.0, 51)
    gg, bb = np.meshgrid(axis, axis, indexing="ij")
    rate, _ = _nnc_det_value(s, i, c, gg.ravel(), bb.ravel())
    k = int(np.argmax(rate))

    def objective(x):
        gamma, beta = (min(max(v, 0.0), 1.0) for v in x)
        val, _ = _nnc_det_value(s, i, c, gamma, beta)
        return float(val)

    candidates = [(gg.ravel()[k], bb.ravel()[k])]
    candidates.extend(seeds)
    best_x, best_f = None, -math.inf
    for cand in candidates:
        x, f = refine_coordinates(objective, cand, [(0, 1), (0, 1)], rounds=5)
        if f > best_f + 1e-12:
            best_x, best_f = x, f
    _, sigma2 = _nnc_det_value(s, i, c, best_x[0], best_x[1])
    return RateBound(
        value=max(best_f, 0.0),
        kind=BoundKind.NNC_DETERMINISTIC,
        gamma=min(max(best_x[0], 0.0), 1.0),
        beta=min(max(best_x[1], 0.0), 1.0),
        sigma2=float(sigma2) if np.isfinite(sigma2) else None,
    )


def nnc_random_rate(s, i, c, g00, g01, g10, g11, beta, rho,
                    force_zero_switch_info=False, fast=False):
    """Quantize-and-forward rate for a four-state schedule, vectorized.

    The schedule weights g_qj are joint probabilities of (time-share state
    q, relay state j:0=listen,1=transmit); beta splits the unit source
    power between the time-share states and rho splits the unit relay
    power between the two transmit states.  The two quantization noises
    follow x_q = [eta*C_q - 1]^+ / ((1-eta)*C_q) with eta chosen by
    bisection so the quantized relay cut meets the destination cut.

    Returns (rate_bits, (sigma2_listen_q0, sigma2_listen_q1)); the sigma
    pair is only meaningful for scalar inputs.
    """
    g00, g01, g10, g11, beta, rho = np.broadcast_arrays(
        *(np.asarray(v, dtype=float) for v in (g00, g01, g10, g11, beta, rho))
    )
    scalar = g00.ndim == 0
    g00, g01, g10, g11, beta, rho = (np.atleast_1d(v) for v in (g00, g01, g10, g11, beta, rho))

    q0 = g00 + g01
    q1 = g10 + g11
    ps0 = np.where(q0 > 0, beta / np.where(q0 > 0, q0, 1.0), 0.0)
    ps1 = np.where(q1 > 0, (1.0 - beta) / np.where(q1 > 0, q1, 1.0), 0.0)
    pr01 = np.where(g01 > 0, rho / np.where(g01 > 0, g01, 1.0), 0.0)
    pr11 = np.where(g11 > 0, (1.0 - rho) / np.where(g11 > 0, g11, 1.0), 0.0)

    base = xlog1p_scaled(q0, s * beta) + xlog1p_scaled(q1, s * (1.0 - beta))
    base = np.atleast_1d(base)

    # I(relay state; Y | time share) from the two conditional mixtures,
    # batched into a single quadrature call.
    info_switch = np.zeros_like(base)
    if not force_zero_switch_info:
        frac0 = np.where(q0 > 0, g00 / np.where(q0 > 0, q0, 1.0), 0.0)
        frac1 = np.where(q1 > 0, g10 / np.where(q1 > 0, q1, 1.0), 0.0)
        infos = switch_info(
            np.concatenate([frac0, frac1]),
            np.concatenate([1.0 + s * ps0, 1.0 + s * ps1]),
            np.concatenate([1.0 + s * ps0 + i * pr01, 1.0 + s * ps1 + i * pr11]),
            fast=fast,
        )
        n = base.shape[0]
        info_switch += q0 * infos[:n] + q1 * infos[n:]

    # I(relay state, relay input; Y | time share)
    info_relay = info_switch.copy()
    info_relay += np.where(g01 > 0, g01 * (_log2_1p(s * ps0 + i * pr01) - _log2_1p(s * ps0)), 0.0)
    info_relay += np.where(g11 > 0, g11 * (_log2_1p(s * ps1 + i * pr11) - _log2_1p(s * ps1)), 0.0)

    cq0 = 1.0 + c * ps0 / (1.0 + s * ps0)
    cq1 = 1.0 + c * ps1 / (1.0 + s * ps1)
    w0 = np.where(cq0 > 1.0, g00, 0.0)
    w1 = np.where(cq1 > 1.0, g10, 0.0)
    solvable = ((w0 > 0) | (w1 > 0)) & (info_relay > 0)

    def listen_gain(eta, xq=False):
        x0 = np.maximum(eta * cq0 - 1.0, 0.0) / ((1.0 - eta) * cq0)
        x1 = np.maximum(eta * cq1 - 1.0, 0.0) / ((1.0 - eta) * cq1)
        gain = w0 * _log2_1p(x0 * cq0) + w1 * _log2_1p(x1 * cq1)
        if xq:
            return gain, x0, x1
        return gain

    eta_hi = 1.0 - 1e-13
    with np.errstate(divide="ignore"):
        inv0 = np.where(w0 > 0, 1.0 / cq0, np.inf)
        inv1 = np.where(w1 > 0, 1.0 / cq1, np.inf)
    eta_lo = np.minimum(np.minimum(inv0, inv1), eta_hi)
    eta = bisect_root_increasing(
        lambda e: listen_gain(e) - info_relay, eta_lo, np.full_like(eta_lo, eta_hi), iters=72
    )
    gain, x0, x1 = listen_gain(eta, xq=True)
    penalty = w0 * _log2_1p(x0) + w1 * _log2_1p(x1)
    rate = np.where(solvable, base + np.minimum(info_relay, gain) - penalty, base)

    with np.errstate(divide="ignore"):
        sigma2 = (
            np.where(x0 > 0, 1.0 / np.where(x0 > 0, x0, 1.0), np.inf),
            np.where(x1 > 0, 1.0 / np.where(x1 > 0, x1, 1.0), np.inf),
        )
    if scalar:
        return float(rate[0]), (float(sigma2[0][0]), float(sigma2[1][0]))
    return rate, sigma2


def _simplex_from_sticks(u1, u2, u3):
    g00 = u1
    g01 = (1.0 - u1) * u2
    g10 = (1.0 - u1) * (1.0 - u2) * u3
    g11 = max(1.0 - g00 - g01 - g10, 0.0)
    return g00, g01, g10, g11


def _tied_rho(g01, g11):
    """Relay power split that gives equal transmit power in both talk states.

    Matches the convention used by every other bound here: the relay spends
    its whole power budget uniformly over the time it transmits.
    """
    talk = np.asarray(g01, dtype=float) + np.asarray(g11, dtype=float)
    out = np.divide(g01, talk, out=np.zeros_like(talk), where=talk > 0)
    return float(out) if out.ndim == 0 else out


def nnc_lower_random(g: ChannelGains, restarts: int = 8) -> RateBound:
    """Quantize-and-forward with a free four-state time-share schedule.

    The schedule simplex and the source power split are swept with a
    vectorized coarse grid and the most promising distinct candidates are
    refined by coordinate descent; the relay transmits at full budget
    power whenever it talks.  The deterministic-switch solution is always
    a candidate, so the random-switch bound never falls below it.  The
    returned schedule is canonicalized so the source is the quieter in
    time-share state 0.
    """
    s, i, c = g.S, g.I, g.C

    # Coarse stage: schedule simplex at step 0.1, source split at step 0.1.
    steps = np.linspace(0.0, 1.0, 11)
    simplex = np.array(
        [
            (a, b, d, max(1.0 - a - b - d, 0.0))
            for a in steps
            for b in steps
            for d in steps
            if a + b + d <= 1.0 + 1e-12
        ]
    )
    betas = np.linspace(0.0, 1.0, 11)
    n_s, n_p = len(simplex), len(betas)
    cols = np.repeat(simplex, n_p, axis=0)
    beta_all = np.tile(betas, n_s)
    rho_all = _tied_rho(cols[:, 1], cols[:, 3])
    rates, _ = nnc_random_rate(
        s, i, c, cols[:, 0], cols[:, 1], cols[:, 2], cols[:, 3], beta_all, rho_all, fast=True
    )

    order = np.argsort(-rates, kind="stable")
    candidates = []
    for idx in order:
        pt = (*cols[idx], beta_all[idx])
        if all(sum(abs(a - b) for a, b in zip(pt, q)) > 0.15 for q in candidates):
            candidates.append(pt)
        if len(candidates) >= restarts:
            break

    det = nnc_lower_det(g)
    candidates.append((det.gamma, 0.0, (1.0 - det.gamma), 0.0, det.beta))
    noq = nnc_lower_noQ(g)
    candidates.append((noq.gamma, 1.0 - noq.gamma, 0.0, 0.0, 1.0))

    def objective(x):
        u1, u2, u3, beta = (min(max(v, 0.0), 1.0) for v in x)
        g00, g01, g10, g11 = _simplex_from_sticks(u1, u2, u3)
        rate, _ = nnc_random_rate(
            s, i, c, g00, g01, g10, g11, beta, _tied_rho(g01, g11), fast=True
        )
        return rate

    best_x, best_f = None, -math.inf
    for g00, g01, g10, g11, beta in candidates:
        u1 = g00
        rest = 1.0 - g00
        u2 = g01 / rest if rest > 0 else 0.0
        rest2 = rest * (1.0 - u2)
        u3 = g10 / rest2 if rest2 > 0 else 0.0
        x, f = refine_coordinates(
            objective, (u1, u2, u3, beta), [(0, 1)] * 4, tol=1e-5, rounds=3
        )
        if f > best_f + 1e-12:
            best_x, best_f = x, f

    converged = True
    g00, g01, g10, g11 = _simplex_from_sticks(*(min(max(v, 0.0), 1.0) for v in best_x[:3]))
    beta = min(max(best_x[3], 0.0), 1.0)
    rho = _tied_rho(g01, g11)
    best_f, _ = nnc_random_rate(s, i, c, g00, g01, g10, g11, beta, rho)
    if best_f < det.value - 1e-9:
        best_f = det.value
        g00, g01, g10, g11 = det.gamma, 0.0, 1.0 - det.gamma, 0.0
        beta, rho = det.beta, 0.0
        converged = False

    # Canonical labels: time-share state 0 is the quieter source state.
    q0, q1 = g00 + g01, g10 + g11
    ps0 = beta / q0 if q0 > 0 else 0.0
    ps1 = (1.0 - beta) / q1 if q1 > 0 else 0.0
    if ps0 > ps1:
        g00, g01, g10, g11 = g10, g11, g00, g01
        beta, rho = 1.0 - beta, 1.0 - rho
    _, sigma2 = nnc_random_rate(s, i, c, g00, g01, g10, g11, beta, rho)
    finite_sigma = [v for v in sigma2 if math.isfinite(v)]
    return RateBound(
        value=max(best_f, 0.0),
        kind=BoundKind.NNC_RANDOM,
        gamma=g00 + g10,
        beta=beta,
        sigma2=finite_sigma[0] if finite_sigma else None,
        g00=g00,
        g01=g01,
        g10=g10,
        g11=g11,
        converged=converged,
    )


def _nnc_noq_value(s, i, c, gamma):
    """No-time-share quantize-and-forward rate at a fixed listen fraction.

    The source transmits at unit power throughout; the relay quantization
    noise balances the two cuts (bisection in log-sigma^2).
    """
    if gamma <= 0.0:
        return float(_log2_1p(s)), math.inf
    g1 = 1.0 - gamma
    v1 = 1.0 + s + (i / g1 if g1 > 0 else 0.0)
    info = switch_info(gamma, 1.0 + s, v1) if 0.0 < gamma < 1.0 else 0.0
    dest_cut_tail = gamma * _log2_1p(s) + float(xlog1p_scaled(g1, g1 * s + i))

    def cuts(log_sigma2):
        sig2 = math.exp(log_sigma2)
        relay_cut = gamma * _log2_1p(s + c / (1.0 + sig2)) + g1 * _log2_1p(s)
        dest_cut = info + dest_cut_tail - gamma * _log2_1p(1.0 / sig2)
        return relay_cut, dest_cut

    lo, hi = -90.0, 90.0
    r_lo, d_lo = cuts(lo)
    if d_lo >= r_lo:
        return float(min(r_lo, d_lo)), math.exp(lo)
    r_hi, d_hi = cuts(hi)
    if d_hi <= r_hi:
        return float(min(r_hi, d_hi)), math.exp(hi)
    for _ in range(100):
        mid = 0.5 * (lo + hi)
        r, d = cuts(mid)
        if d > r:
            hi = mid
        else:
            lo = mid
    r, d = cuts(0.5 * (lo + hi))
    return float(min(r, d)), math.exp(0.5 * (lo + hi))


def nnc_lower_noQ(g: ChannelGains) -> RateBound:
    """Quantize-and-forward with constant source power and no time share."""
    s, i, c = g.S, g.I, g.C
    axis = np.linspace(0.0, 1.0, 101)
    vals = np.array([_nnc_noq_value(s, i, c, float(x))[0] for x in axis])
    k = int(np.argmax(vals))
    lo = axis[max(k - 1, 0)]
    hi = axis[min(k + 1, len(axis) - 1)]
    gamma, value = golden_max(lambda x: _nnc_noq_value(s, i, c, x)[0], lo, hi, tol=1e-9)
    _, sigma2 = _nnc_noq_value(s, i, c, gamma)
    return RateBound(
        value=max(value, 0.0),
        kind=BoundKind.NNC_NO_Q,
        gamma=gamma,
        sigma2=sigma2 if math.isfinite(sigma2) else None,
    )


def nnc_lower_analytic(g: ChannelGains) -> RateBound:
    """Closed-form quantize-and-forward rate with unit quantization noise."""
    s, i, c = g.S, g.I, g.C
    x = _log2_1p(i + s)
    y = _log2_1p(c / 2.0 + s)
    value, gamma = _capped_ratio_bound(s, x, y, -1.0)
    return RateBound(
        value=max(float(value), 0.0), kind=BoundKind.NNC_ANALYTIC, gamma=gamma, sigma2=1.0
    )


# ---------------------------------------------------------------------------
# Analytic gap constants
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AnalyticGapConstants:
    """The three scalar maximizations behind the constant-gap results."""

    lda_s0_gap: float
    nnc_gap: float
    nnc_gap_gamma: float
    lda_gap_sup: float


def analytic_gap_constants() -> AnalyticGapConstants:
    """Numerically maximize the three worst-case gap expressions.

    lda_s0_gap: max_g H(g) + (1-g) log2(1/(1-g)) (no-direct-link two-phase
    gap); nnc_gap: the quantize-and-forward gap with the entropy-matched
    quantization noise; lda_gap_sup: sup over nonnegative (x, y) of
    2 + (x^2+y^2+xy+x)/(x^2+y^2+2xy+x+y), which approaches 3.
    """

    def lda_s0(gamma):
        if gamma <= 0.0 or gamma >= 1.0:
            return 0.0
        return float(binary_entropy(gamma)) - (1.0 - gamma) * LOG2(1.0 - gamma)

    _, lda_s0_gap = golden_max(lda_s0, 0.0, 1.0, tol=1e-12)

    def nnc_gap_fn(gamma):
        if gamma <= 0.0 or gamma >= 1.0:
            return 1.0
        h = float(binary_entropy(gamma))
        # gamma * log2(1 + sigma0^2) with log2(sigma0^2) = (h + 1 - gamma)/gamma,
        # expanded so tiny gamma cannot overflow the power.
        log2_sigma2 = (h + (1.0 - gamma)) / gamma
        correction = 2.0 ** (-log2_sigma2) if log2_sigma2 < 500 else 0.0
        return h + (1.0 - gamma) + gamma * _log2_1p(correction)

    nnc_gamma, nnc_gap = golden_max(nnc_gap_fn, 1e-9, 1.0 - 1e-9, tol=1e-12)

    grid = np.concatenate([np.array([0.0]), np.logspace(-3, 3, 601)])
    x, y = np.meshgrid(grid, grid, indexing="ij")
    num = x * x + y * y + x * y + x
    den = x * x + y * y + 2.0 * x * y + x + y
    ratio = np.divide(num, den, out=np.zeros_like(num), where=den > 0)
    lda_sup = 2.0 + float(ratio.max())

    return AnalyticGapConstants(
        lda_s0_gap=lda_s0_gap,
        nnc_gap=nnc_gap,
        nnc_gap_gamma=nnc_gamma,
        lda_gap_sup=lda_sup,
    )


# ---------------------------------------------------------------------------
# Rate-vs-gamma curves (figure support)
# ---------------------------------------------------------------------------


def rate_at_gamma(g: ChannelGains, kind: BoundKind, gamma: float) -> float:
    """Best rate of a bound at a pinned listen fraction gamma."""
    s, i, c = g.S, g.I, g.C
    if kind == BoundKind.LDA:
        return lda_rate_at(g, gamma)
    if kind == BoundKind.NNC_DETERMINISTIC:
        _, val = golden_max(
            lambda beta: float(_nnc_det_value(s, i, c, gamma, beta)[0]), 0.0, 1.0, tol=1e-9
        )
        return val
    if kind == BoundKind.NNC_NO_Q:
        return _nnc_noq_value(s, i, c, gamma)[0]
    if kind == BoundKind.NNC_RANDOM:
        return _nnc_random_at_gamma(g, gamma)
    if kind in (BoundKind.CUTSET_NUMERIC, BoundKind.PDF_RANDOM, BoundKind.PDF_DETERMINISTIC):
        relay_cut_gain = c + s if kind == BoundKind.CUTSET_NUMERIC else max(c, s)

        if kind != BoundKind.PDF_RANDOM:
            entropy = kind == BoundKind.CUTSET_NUMERIC
            val, _ = _det_inner_max(s, i, relay_cut_gain, entropy, gamma)
            return val

        def objective(x):
            beta, a = (min(max(v, 0.0), 1.0) for v in x)
            i0 = _pdf_switch_info(s, i, gamma, beta, a)
            dest, src = _cut_rates(
                s, i, np.asarray(gamma), np.asarray(beta), np.asarray(a), relay_cut_gain, i0
            )
            return float(np.minimum(dest, src))

        best = -math.inf
        for beta0 in (0.5, 1.0):
            _, f = refine_coordinates(objective, (beta0, 0.0), [(0, 1), (0, 1)], rounds=3)
            best = max(best, f)
        return best
    raise ValueError(f"no gamma-parameterized curve for bound kind {kind!r}")


def _nnc_random_at_gamma(g: ChannelGains, gamma: float) -> float:
    """Four-state schedule rate with the total listen fraction pinned."""
    s, i, c = g.S, g.I, g.C

    def objective(x):
        talk_split, listen_split, beta = (min(max(v, 0.0), 1.0) for v in x)
        g00 = gamma * listen_split
        g10 = gamma - g00
        g01 = (1.0 - gamma) * talk_split
        g11 = 1.0 - gamma - g01
        rate, _ = nnc_random_rate(
            s, i, c, g00, g01, g10, g11, beta, _tied_rho(g01, g11), fast=True
        )
        return rate

    best = -math.inf
    for seed in ((0.5, 0.0, 0.5), (0.5, 1.0, 0.5), (0.0, 1.0, 1.0)):
        _, f = refine_coordinates(objective, seed, [(0, 1)] * 3, rounds=3)
        best = max(best, f)
    return best
