"""Acceptance criteria, one test per criterion, each printing a PASS/FAIL line.

Run with `pytest -v -s tests/test_acceptance.py` to see the per-criterion
lines as they complete.  The heavyweight sweeps fan out over four workers.
"""

import math
import time
from multiprocessing import get_context

import numpy as np
import pytest

from relaybounds import (
    ChannelGains,
    ExponentTriple,
    NetworkExponents,
    analytic_gap_constants,
    best_relay_gdof,
    cut_exponent,
    cutset_upper,
    cutset_upper_analytic,
    exponents_to_gains,
    gap_asymptotic,
    gap_bound,
    gdof_hd,
    gdof_lp,
    lda_achievable_variants,
    lda_capacity_hd,
    lda_rate,
    nnc_lower_det,
    nnc_lower_random,
    pdf_lower,
    s0_gap_scan,
    simulate_lda_scheme,
)
from relaybounds.lda import LdaChannel, optimal_listen_fraction
from relaybounds.sweeps import gap_sweep

JOBS = 4


def report(name: str, ok: bool, detail: str) -> None:
    print(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
    assert ok, f"{name}: {detail}"


def two_relay_net(a_s1, a_s2, a_1d, a_2d, b1, b2):
    a = np.zeros((4, 4))
    a[1, 0], a[2, 0], a[3, 0] = a_s1, a_s2, 1.0
    a[3, 1], a[3, 2] = a_1d, a_2d
    a[1, 2], a[2, 1] = b1, b2
    return NetworkExponents(K=4, alpha=a)


def test_two_relay_table_reproduction():
    """All 16 tabulated slopes (HD/FD x best/both x 4 networks) to 1e-3, < 5 s."""
    rows = [
        ((2.5, 1.4, 0.5, 1.8, 0.6, 0.8), (1.4, 1.8, 1.267, 1.4235)),
        ((2.5, 0.3, 0.7, 1.3, 0.4, 0.8), (1.0, 1.3, 1.000, 1.2182)),
        ((1.8, 1.2, 1.3, 2.0, 0.7, 1.2), (1.3, 1.8, 1.218, 1.5808)),
        ((1.7, 1.1, 1.2, 1.4, 0.4, 1.5), (1.2, 1.4, 1.156, 1.3604)),
    ]
    t0 = time.perf_counter()
    worst = 0.0
    from relaybounds import gdof_fd_network

    for params, (fd_best, fd_both, hd_best, hd_both) in rows:
        net = two_relay_net(*params)
        worst = max(
            worst,
            abs(best_relay_gdof(net, "FD") - fd_best),
            abs(gdof_fd_network(net) - fd_both),
            abs(best_relay_gdof(net, "HD") - hd_best),
            abs(gdof_lp(net).gdof - hd_both),
        )
    dt = time.perf_counter() - t0
    report(
        "two-relay table (16 values)",
        worst <= 1e-3 and dt < 5.0,
        f"worst |err| {worst:.2e} (tol 1e-3), runtime {dt:.2f}s (< 5s)",
    )


def test_reference_rates_without_direct_link():
    """Five scheme rates at S=0, C=15, I=3 within 0.02 bits; schedule within 0.05; < 60 s."""
    g = ChannelGains(S=0.0, I=3.0, C=15.0)
    t0 = time.perf_counter()
    got = {
        "pdf-rand": pdf_lower(g, "random").value,
        "pdf-det": pdf_lower(g, "deterministic").value,
        "nnc-det": nnc_lower_det(g).value,
        "lda": lda_rate(g).value,
    }
    nnc_rand = nnc_lower_random(g)
    got["nnc-rand"] = nnc_rand.value
    dt = time.perf_counter() - t0
    want = {"pdf-rand": 1.913, "pdf-det": 1.702, "nnc-rand": 1.446, "nnc-det": 1.402, "lda": 1.333}
    errs = {k: got[k] - want[k] for k in want}
    rate_ok = all(abs(v) <= 0.02 for v in errs.values())
    weights = (nnc_rand.g00, nnc_rand.g01, nnc_rand.g10, nnc_rand.g11)
    weight_err = max(abs(a - b) for a, b in zip(weights, (0.0, 0.33, 0.45, 0.22)))
    report(
        "rates at (S,C,I)=(0,15,3)",
        rate_ok and weight_err <= 0.05 and dt < 60.0,
        "errs "
        + " ".join(f"{k}={v:+.4f}" for k, v in errs.items())
        + f" (tol 0.02); schedule err {weight_err:.3f} (tol 0.05); runtime {dt:.1f}s (< 60s)",
    )


def test_reference_rates_at_30db():
    """Rates at (30, 37.63, 34.77) dB: 11.66 / 11.4 / 11.11 / 10.94 within 0.05 bits."""
    g = ChannelGains.from_db(30.0, 34.77, 37.63)
    errs = {
        "pdf-rand": pdf_lower(g, "random").value - 11.66,
        "pdf-det": pdf_lower(g, "deterministic").value - 11.4,
        "nnc-rand": nnc_lower_random(g).value - 11.11,
        "nnc-det": nnc_lower_det(g).value - 10.94,
    }
    ok = all(abs(v) <= 0.05 for v in errs.values())
    report(
        "rates at 30 dB operating point",
        ok,
        "errs " + " ".join(f"{k}={v:+.4f}" for k, v in errs.items()) + " (tol 0.05)",
    )


def test_analytic_gap_constants():
    """Scalar maximizations: 1.5112 +- 1e-3, 1.6081 +- 1e-3 at 0.3855 +- 1e-2, sup in [2.99, 3]."""
    gc = analytic_gap_constants()
    ok = (
        abs(gc.lda_s0_gap - 1.5112) <= 1e-3
        and abs(gc.nnc_gap - 1.6081) <= 1e-3
        and abs(gc.nnc_gap_gamma - 0.3855) <= 1e-2
        and 2.99 <= gc.lda_gap_sup <= 3.0 + 1e-9
    )
    report(
        "analytic gap constants",
        ok,
        f"two-phase@S=0 {gc.lda_s0_gap:.5f}, quantize {gc.nnc_gap:.5f} at "
        f"gamma {gc.nnc_gap_gamma:.4f}, two-phase sup {gc.lda_gap_sup:.4f}",
    )


def test_gap_sweep_plateaus():
    """Exponent-grid gap curves up to 60 dB: 1.00 / 1.52 / 1.59 within 0.05 at
    the sweep's end; < 10 min at 4 workers.

    The quoted plateaus describe the curves where the sweep ends (60 dB):
    the per-SNR maximum is compared there.  The quantize-forward curve is
    not monotone; it crests near 40 dB (~1.58, reported below) before
    settling onto its plateau.
    """
    t0 = time.perf_counter()
    grid = gap_sweep(
        np.arange(0.0, 60.1, 5.0),
        np.arange(0.0, 2.4001, 0.1),
        schemes=("pdf-det", "nnc-det", "lda"),
        jobs=JOBS,
    )
    dt = time.perf_counter() - t0
    got = {
        "pdf-det": grid.column("max_gap_pdf-det")[-1],
        "nnc-det": grid.column("max_gap_nnc-det")[-1],
        "lda": grid.column("max_gap_lda")[-1],
    }
    peak = {k: grid.column(f"max_gap_{k}").max() for k in got}
    want = {"pdf-det": 1.00, "nnc-det": 1.52, "lda": 1.59}
    ok = all(abs(got[k] - want[k]) <= 0.05 for k in want) and dt < 600.0
    report(
        "gap sweep plateaus",
        ok,
        " ".join(f"{k}={got[k]:.4f}(want~{want[k]},peak {peak[k]:.3f})" for k in want)
        + f"; runtime {dt:.0f}s (< 600s at {JOBS} workers)",
    )


def test_no_direct_link_specialization():
    """S=0 gap scan vs min(full-duplex capacity, cut-set): <= 1.12 / 0.85 / 1.06 bits."""
    axis = np.arange(-10.0, 60.1, 2.5)
    t0 = time.perf_counter()
    grid = s0_gap_scan(axis, axis, schemes=("lda", "pdf-det", "nnc-det"), jobs=JOBS)
    dt = time.perf_counter() - t0
    lda_max = grid.column("gap_lda").max()
    pdf_max = grid.column("gap_pdf-det").max()
    nnc_max = grid.column("gap_nnc-det").max()
    ok = lda_max <= 1.12 and pdf_max <= 0.85 and nnc_max <= 1.06
    report(
        "no-direct-link gap scan",
        ok,
        f"two-phase {lda_max:.4f} (<=1.12), decode-forward {pdf_max:.4f} (<=0.85), "
        f"quantize {nnc_max:.4f} (<=1.06); runtime {dt:.0f}s",
    )


def _gap_property_point(seed):
    rng = np.random.default_rng(seed)
    s_db, i_db, c_db = rng.uniform(-10.0, 60.0, 3)
    g = ChannelGains(S=10 ** (s_db / 10), I=10 ** (i_db / 10), C=10 ** (c_db / 10))
    cs = cutset_upper(g)
    rand = pdf_lower(
        g, "random", exact=False, extra_seeds=[(cs.gamma, cs.beta, cs.alpha1)]
    ).value
    nnc = nnc_lower_det(g, seeds=[(cs.gamma, cs.beta)]).value
    return (
        cs.value - rand,
        cutset_upper_analytic(g).value - lda_rate(g).value,
        cs.value - nnc,
    )


def test_gap_theorem_property_suite():
    """500 random gain triples: gaps <= 1 + 1e-6 / 3 + 1e-6 / 1.62."""
    t0 = time.perf_counter()
    with get_context("fork").Pool(JOBS) as pool:
        gaps = np.array(pool.map(_gap_property_point, range(500), chunksize=16))
    dt = time.perf_counter() - t0
    pdf_max, lda_max, nnc_max = gaps.max(axis=0)
    ok = pdf_max <= 1.0 + 1e-6 and lda_max <= 3.0 + 1e-6 and nnc_max <= 1.62
    report(
        "gap theorems on 500 random channels",
        ok,
        f"decode-forward {pdf_max:.6f} (<=1+1e-6), two-phase {lda_max:.6f} (<=3+1e-6), "
        f"quantize {nnc_max:.6f} (<=1.62); runtime {dt:.0f}s",
    )


def test_gdof_limit_checks():
    """High-SNR slope of the closed-form bounds vs the capacity slope, and the
    K=3 schedule LP vs the closed form.

    The closed-form upper bound carries a constant 2-bit offset, so its
    plain ratio to log2(1+SNR) sits 2/log2(SNR) ~ 0.05 above the slope at
    SNR=1e12 for every input; the limit statement is therefore checked on
    the two-point slope across the decade around 1e12, which removes the
    offset and converges at the stated 0.02.
    """
    from relaybounds import pdf_lower_analytic

    rng = np.random.default_rng(20240801)
    lo, hi = 1e11, 1e13
    den = math.log2(1 + hi) - math.log2(1 + lo)
    worst_upper = worst_lower = 0.0
    for _ in range(50):
        e = ExponentTriple(rng.uniform(0.2, 2.0), rng.uniform(0, 2.4), rng.uniform(0, 2.4))
        d = gdof_hd(e)
        upper = (
            cutset_upper_analytic(exponents_to_gains(e, hi)).value
            - cutset_upper_analytic(exponents_to_gains(e, lo)).value
        ) / den
        lower = (
            pdf_lower_analytic(exponents_to_gains(e, hi)).value
            - pdf_lower_analytic(exponents_to_gains(e, lo)).value
        ) / den
        worst_upper = max(worst_upper, abs(upper - d))
        worst_lower = max(worst_lower, abs(lower - d))

    rng = np.random.default_rng(7)
    worst_lp = 0.0
    for _ in range(100):
        e = ExponentTriple(*rng.uniform(0.0, 2.4, 3))
        worst_lp = max(worst_lp, abs(gdof_lp(NetworkExponents.from_triple(e)).gdof - gdof_hd(e)))
    ok = worst_upper <= 0.02 and worst_lower <= 0.02 and worst_lp <= 1e-9
    report(
        "high-SNR slope checks",
        ok,
        f"upper-slope err {worst_upper:.4f}, lower-slope err {worst_lower:.4f} (tol 0.02); "
        f"K=3 LP vs closed form {worst_lp:.2e} (tol 1e-9)",
    )


def test_bit_pipe_capacities_and_simulator():
    """Two-hop fixed point to 1e-3 vs the grid oracle; curve ordering on the
    0.01 grid; 100 seeded simulator runs decode exactly at the balanced rate."""
    from test_lda import grid_capacity_oracle

    got = lda_capacity_hd(LdaChannel(0, 1, 1))
    oracle = grid_capacity_oracle(LdaChannel(0, 1, 1))
    fixed_point_ok = abs(got - 0.7729) <= 1e-3 and abs(got - oracle) <= 1e-3

    ordering_ok = True
    for dims in ((1, 2, 2), (1, 3, 2), (2, 4, 5)):
        cv = lda_achievable_variants(LdaChannel(*dims))
        ordering_ok = ordering_ok and bool(
            np.all(cv.iid_det <= cv.iid_rand + 1e-9)
            and np.all(cv.iid_rand <= cv.iidq_rand + 1e-9)
            and np.all(cv.iidq_rand <= cv.optimal + 1e-9)
        )

    rng = np.random.default_rng(4)
    failures = 0
    rate_ok = True
    for k in range(100):
        dims = sorted(rng.integers(1, 6, 3))
        ch = LdaChannel(int(dims[0]), int(dims[1] + 1), int(dims[2] + 1))
        n_slots = int(rng.integers(64, 512))
        try:
            rep = simulate_lda_scheme(ch, n_slots=n_slots, seed=k)
        except Exception:
            failures += 1
            continue
        if not rep.decoded_ok:
            failures += 1
        target = ch.beta_sd + optimal_listen_fraction(ch) * ch.relay_bonus
        slack = (ch.relay_bonus + ch.upper_width) / n_slots
        rate_ok = rate_ok and (target - slack - 1e-12 <= rep.achieved_rate <= target + 1e-12)
    ok = fixed_point_ok and ordering_ok and failures == 0 and rate_ok
    report(
        "bit-pipe capacity and simulator",
        ok,
        f"fixed point {got:.5f} (oracle {oracle:.5f}); ordering {ordering_ok}; "
        f"decode failures {failures}/100; balanced-rate check {rate_ok}",
    )


def test_gap_formula_values():
    """gap(3) = 4 exactly; gap(4) matches the enumeration; K=200 ratio -> 1 +- 0.1."""
    enum4 = max(
        min(1 + l, 3 - l) * math.log2(1 + l) + min(1 + 3 * l, l + 3) for l in range(0, 3)
    )
    ratio = gap_bound(200) / gap_asymptotic(200)
    ok = (
        gap_bound(3) == 4.0
        and abs(gap_bound(4) - 6.585) <= 1e-3
        and abs(gap_bound(4) - enum4) <= 1e-12
        and abs(ratio - 1.0) <= 0.1
    )
    report(
        "constant-gap formulas",
        ok,
        f"gap(3)={gap_bound(3)}, gap(4)={gap_bound(4):.4f} (enum {enum4:.4f}), "
        f"K=200 ratio {ratio:.4f}",
    )


def test_matching_against_log_det_slope():
    """Cut exponents match the numeric log-det slope within 0.05 on 50 networks."""
    rng = np.random.default_rng(123)
    worst = 0.0
    for _ in range(50):
        a = np.zeros((4, 4))
        for i in range(1, 4):
            for j in range(3):
                if i != j:
                    a[i, j] = rng.uniform(0.1, 2.4)
        net = NetworkExponents(K=4, alpha=a)
        phases = np.exp(2j * np.pi * rng.random((4, 4)))
        for cut in (frozenset(), frozenset({1}), frozenset({2}), frozenset({1, 2})):
            for state in range(4):
                want = cut_exponent(net, cut, state)
                vals = []
                for snr in (1e10, 1e12):
                    tx = [0] + [r for r in (1, 2) if r in cut and (state >> (2 - r)) & 1]
                    rx = [3] + [
                        r for r in (1, 2) if r not in cut and not (state >> (2 - r)) & 1
                    ]
                    h = np.array(
                        [[math.sqrt(snr ** a[i, j]) * phases[i, j] for j in tx] for i in rx]
                    )
                    sv = np.linalg.svd(h, compute_uv=False)
                    vals.append(float(np.sum(np.log1p(sv**2)) / math.log(2.0)))
                slope = (vals[1] - vals[0]) / (math.log2(1e12) - math.log2(1e10))
                worst = max(worst, abs(slope - want))
    report(
        "matching vs log-det slope",
        worst <= 0.05,
        f"worst |err| {worst:.4f} over 50 networks x 16 cut/state pairs (tol 0.05)",
    )
