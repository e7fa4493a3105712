import math

import numpy as np
import pytest

from relaybounds import (
    ChannelGains,
    ExponentTriple,
    analytic_gap_constants,
    cutset_upper,
    cutset_upper_analytic,
    exponents_to_gains,
    fd_cutset_s0,
    gdof_fd,
    gdof_hd,
    lda_rate,
    nnc_lower_analytic,
    nnc_lower_det,
    nnc_lower_noQ,
    nnc_lower_random,
    pdf_lower,
    pdf_lower_analytic,
)
from relaybounds.optimize import binary_entropy, xlog1p_scaled
from relaybounds.single_relay import lda_rate_at, nnc_random_rate

from conftest import random_gains

NO_DIRECT = ChannelGains(S=0.0, I=3.0, C=15.0)
SYMMETRIC = ChannelGains(S=1.0, I=8.0, C=8.0)
HIGH_SNR = ChannelGains(S=10**3.0, I=10**3.477, C=10**3.763)


# ---------------------------------------------------------------------------
# gDoF closed forms
# ---------------------------------------------------------------------------


def test_gdof_hd_weak_relay_degenerates():
    assert gdof_hd(ExponentTriple(1, 0.5, 2)) == 1.0
    assert gdof_hd(ExponentTriple(1, 1.0, 2)) == 1.0  # equality falls through


def test_gdof_hd_table_value():
    assert gdof_hd(ExponentTriple(1, 1.8, 1.4)) == pytest.approx(1.2667, abs=5e-4)


def test_gdof_hd_symmetric_case_matches_high_snr_slope():
    e = ExponentTriple(1, 2, 2)
    assert gdof_hd(e) == pytest.approx(1.5)
    ratio = cutset_upper_analytic(exponents_to_gains(e, 1e12)).value / math.log2(1 + 1e12)
    # the closed-form upper bound carries a 2-bit offset, so the plain ratio
    # sits ~2/log2(SNR) above the slope; the slope itself is checked below
    assert ratio == pytest.approx(1.5, abs=0.06)
    lo, hi = 1e11, 1e13
    slope = (
        cutset_upper_analytic(exponents_to_gains(e, hi)).value
        - cutset_upper_analytic(exponents_to_gains(e, lo)).value
    ) / (math.log2(1 + hi) - math.log2(1 + lo))
    assert slope == pytest.approx(1.5, abs=0.02)


def test_gdof_fd_examples():
    assert gdof_fd(ExponentTriple(1, 0.5, 2)) == 1.0
    assert gdof_fd(ExponentTriple(1, 1.8, 1.4)) == pytest.approx(1.4)
    assert gdof_fd(ExponentTriple(1, 2, 2)) == 2.0


def test_gdof_fd_formula_on_random_triples(rng):
    for _ in range(20):
        b = rng.uniform(0, 3, 3)
        e = ExponentTriple(*b)
        want = b[0] + min(max(b[2] - b[0], 0), max(b[1] - b[0], 0))
        assert gdof_fd(e) == pytest.approx(want)


# ---------------------------------------------------------------------------
# Cut-set upper bounds
# ---------------------------------------------------------------------------


def _cutset_grid_oracle_s0(i_gain, c_gain, step=1e-3):
    # at S=0 the correlation and source split drop out of the objective
    gam = np.arange(0.0, 1.0 + 1e-12, step)
    dest = binary_entropy(gam) + xlog1p_scaled(1 - gam, i_gain)
    src = xlog1p_scaled(gam, c_gain)
    return float(np.minimum(dest, src).max())


def test_cutset_exceeds_fd_capacity_without_direct_link():
    g = ChannelGains(S=0.0, I=1.5, C=7.5)
    assert cutset_upper(g).value >= 2.0 - 1e-9  # = log2(4)
    assert fd_cutset_s0(g).value == pytest.approx(math.log2(2.5))


def test_cutset_against_dense_grid_oracle():
    oracle = _cutset_grid_oracle_s0(3.0, 15.0)
    assert oracle == pytest.approx(2.424897, abs=1e-5)  # frozen from the oracle
    assert cutset_upper(NO_DIRECT).value == pytest.approx(oracle, abs=1e-3)


def test_cutset_against_3d_grid_oracle():
    def oracle(g, coarse=0.01):
        ax = np.arange(0, 1 + 1e-12, coarse)
        G, B, A = np.meshgrid(ax, ax, np.arange(0, 1 + 1e-12, 0.05), indexing="ij")

        def val(G, B, A):
            sp1 = g.S * (1 - B)
            dest = (
                binary_entropy(G)
                + xlog1p_scaled(G, g.S * B)
                + xlog1p_scaled(1 - G, sp1 + g.I + 2 * A * np.sqrt(sp1 * g.I))
            )
            src = xlog1p_scaled(G, (g.C + g.S) * B) + xlog1p_scaled(1 - G, (1 - A * A) * sp1)
            return np.minimum(dest, src)

        v = val(G, B, A)
        k = np.unravel_index(np.argmax(v), v.shape)
        axg = np.clip(np.arange(G[k] - coarse, G[k] + coarse + 1e-12, 1e-3), 0, 1)
        axb = np.clip(np.arange(B[k] - coarse, B[k] + coarse + 1e-12, 1e-3), 0, 1)
        axa = np.clip(np.arange(A[k] - 0.05, A[k] + 0.05 + 1e-12, 2e-3), 0, 1)
        G2, B2, A2 = np.meshgrid(axg, axb, axa, indexing="ij")
        return max(float(v.max()), float(val(G2, B2, A2).max()))

    got = cutset_upper(SYMMETRIC).value
    assert got == pytest.approx(oracle(SYMMETRIC), abs=1e-3)
    assert got == pytest.approx(2.845526, abs=1e-5)  # frozen


def test_cutset_direct_transmission_floor():
    g = ChannelGains(S=3.0, I=1e-6, C=1e-6)
    assert cutset_upper(g).value >= math.log2(4.0) - 1e-9


def test_cutset_analytic_product_term_vanishes():
    # b1 -> 1 kills the product term and leaves 2 bits + direct rate
    # (the cross term sqrt(I*S) keeps the approach O(sqrt(I)))
    g = ChannelGains(S=1.0, I=1e-12, C=1.0 + 1e-9)
    assert cutset_upper_analytic(g).value == pytest.approx(3.0, abs=1e-5)


def test_cutset_analytic_no_direct_link_limit_form():
    rb = cutset_upper_analytic(NO_DIRECT)
    x, y = math.log2(4.0), math.log2(16.0)
    assert rb.value == pytest.approx(2.0 + x * y / (x + y))
    assert rb.gamma == pytest.approx(x / (x + y))


def test_cutset_analytic_dominates_numeric(rng):
    for g in random_gains(rng, 30):
        assert cutset_upper_analytic(g).value >= cutset_upper(g).value - 1e-9


def test_fd_cutset_requires_no_direct_link():
    with pytest.raises(ValueError):
        fd_cutset_s0(ChannelGains(S=0.5, I=1.0, C=1.0))
    assert fd_cutset_s0(ChannelGains(S=0.0, I=2.0, C=2.0)).value == pytest.approx(math.log2(3.0))
    assert fd_cutset_s0(NO_DIRECT).value == pytest.approx(2.0)


# ---------------------------------------------------------------------------
# Decode-and-forward lower bounds
# ---------------------------------------------------------------------------


def test_pdf_reference_rates_without_direct_link():
    assert pdf_lower(NO_DIRECT, "random").value == pytest.approx(1.913, abs=0.02)
    assert pdf_lower(NO_DIRECT, "deterministic").value == pytest.approx(1.702, abs=0.02)


def test_pdf_reference_rate_at_30db():
    assert pdf_lower(HIGH_SNR, "random").value == pytest.approx(11.66, abs=0.05)


def test_pdf_forced_always_listen_is_direct_rate():
    # gamma=1, beta=1: the relay always listens, so only the direct link works
    from relaybounds.single_relay import _cut_rates

    for g in (NO_DIRECT, SYMMETRIC, HIGH_SNR):
        dest, src = _cut_rates(
            g.S, g.I, np.asarray(1.0), np.asarray(1.0), np.asarray(0.0), max(g.C, g.S), 0.0
        )
        assert float(np.minimum(dest, src)) == pytest.approx(math.log2(1 + g.S), abs=1e-12)


def test_pdf_switch_validation():
    with pytest.raises(ValueError):
        pdf_lower(NO_DIRECT, "sometimes")


def test_pdf_analytic_examples():
    assert pdf_lower_analytic(ChannelGains(S=5.0, I=2.0, C=4.0)).value == pytest.approx(
        math.log2(6.0)
    )  # C <= S: direct transmission
    rb = pdf_lower_analytic(NO_DIRECT)
    assert rb.value == pytest.approx(8.0 / 6.0)
    assert rb.value <= 1.702 + 1e-9
    assert pdf_lower_analytic(SYMMETRIC).value <= pdf_lower(SYMMETRIC, "deterministic").value + 1e-9


def test_pdf_random_dominates_deterministic(rng):
    for g in random_gains(rng, 10):
        det = pdf_lower(g, "deterministic").value
        rand = pdf_lower(g, "random").value
        assert rand >= det - 1e-9


# ---------------------------------------------------------------------------
# Two-phase superposition scheme
# ---------------------------------------------------------------------------


def test_lda_direct_transmission_for_weak_source_relay_link():
    rb = lda_rate(ChannelGains(S=3.0, I=100.0, C=2.0))
    assert rb.value == pytest.approx(2.0)
    assert rb.gamma is None


def test_lda_reference_rate_without_direct_link():
    assert lda_rate(NO_DIRECT).value == pytest.approx(1.333, abs=0.01)


def test_lda_matches_phase_accounting_oracle():
    # oracle: the two per-phase constraints maximized over a fine gamma grid
    gam = np.arange(0.0, 1.0 + 1e-12, 1e-4)
    g = SYMMETRIC
    relayed = np.minimum(
        gam * np.log2(1 + g.C / (1 + g.S)),
        (1 - gam) * np.log2(1 + g.I / (1 + g.S)) + gam * np.log2(1 + g.S / (1 + g.S)),
    )
    direct = np.log2(1 + g.S) - gam * np.log2(1 + g.S / (1 + g.S))
    oracle = float((direct + relayed).max())
    assert oracle == pytest.approx(1.993553, abs=1e-5)  # frozen
    assert lda_rate(g).value == pytest.approx(oracle, abs=5e-4)
    k = int(np.argmax(direct + relayed))
    assert lda_rate(g).gamma == pytest.approx(gam[k], abs=1e-3)


def test_lda_rate_at_gamma_peaks_at_closed_form():
    rb = lda_rate(SYMMETRIC)
    assert lda_rate_at(SYMMETRIC, rb.gamma) == pytest.approx(rb.value, abs=1e-12)
    assert lda_rate_at(SYMMETRIC, 0.3) <= rb.value + 1e-12


# ---------------------------------------------------------------------------
# Quantize-and-forward lower bounds
# ---------------------------------------------------------------------------


def test_nnc_det_reference_rates():
    assert nnc_lower_det(NO_DIRECT).value == pytest.approx(1.402, abs=0.02)
    assert nnc_lower_det(HIGH_SNR).value == pytest.approx(10.94, abs=0.05)


def test_nnc_det_relay_off_limit():
    from relaybounds.single_relay import _nnc_det_value

    for g in (NO_DIRECT, SYMMETRIC):
        rate, sigma2 = _nnc_det_value(g.S, g.I, g.C, 1.0, 1.0)
        assert float(rate) == pytest.approx(math.log2(1 + g.S), abs=1e-12)
        assert not np.isfinite(sigma2)  # quantization disabled in the limit


def test_nnc_random_reference_rate_and_schedule():
    rb = nnc_lower_random(NO_DIRECT)
    assert rb.value == pytest.approx(1.446, abs=0.02)
    want = (0.0, 0.33, 0.45, 0.22)
    for got, expect in zip((rb.g00, rb.g01, rb.g10, rb.g11), want):
        assert got == pytest.approx(expect, abs=0.05)


def test_nnc_random_reference_rate_at_30db():
    assert nnc_lower_random(HIGH_SNR).value == pytest.approx(11.11, abs=0.05)


def test_nnc_random_degenerates_to_deterministic():
    # schedule tied to the relay switch with no switch information recovers
    # the deterministic-switch rate at the same operating point
    g = SYMMETRIC
    det = nnc_lower_det(g)
    rate, _ = nnc_random_rate(
        g.S, g.I, g.C,
        det.gamma, 0.0, 0.0, 1.0 - det.gamma,
        det.beta, 0.0,
        force_zero_switch_info=True,
    )
    assert rate == pytest.approx(det.value, abs=1e-6)
    for gamma, beta in ((0.3, 0.5), (0.62, 0.8), (0.5, 1.0)):
        from relaybounds.single_relay import _nnc_det_value

        want, _ = _nnc_det_value(g.S, g.I, g.C, gamma, beta)
        got, _ = nnc_random_rate(
            g.S, g.I, g.C, gamma, 0.0, 0.0, 1.0 - gamma, beta, 0.0,
            force_zero_switch_info=True,
        )
        assert got == pytest.approx(float(want), abs=1e-6)


def test_nnc_noq_is_dominated_by_full_schedule():
    for g in (NO_DIRECT, HIGH_SNR):
        assert nnc_lower_noQ(g).value <= nnc_lower_random(g).value + 1e-6


def test_nnc_noq_against_grid_oracle():
    from relaybounds.mixture import switch_info

    g = HIGH_SNR
    best = -1.0
    for gamma in np.linspace(0.0, 1.0, 301):
        if gamma <= 0:
            best = max(best, math.log2(1 + g.S))
            continue
        g1 = 1 - gamma
        info = switch_info(gamma, 1 + g.S, 1 + g.S + (g.I / g1 if g1 > 0 else 0.0)) if g1 > 0 else 0.0
        sig = np.logspace(-9, 9, 801)
        relay_cut = gamma * np.log2(1 + g.S + g.C / (1 + sig)) + g1 * np.log2(1 + g.S)
        tail = gamma * np.log2(1 + g.S) + (g1 * np.log2(1 + g.S + g.I / g1) if g1 > 0 else 0.0)
        dest_cut = info + tail - gamma * np.log2(1 + 1 / sig)
        best = max(best, float(np.minimum(relay_cut, dest_cut).max()))
    assert nnc_lower_noQ(g).value == pytest.approx(best, abs=2e-3)
    assert nnc_lower_noQ(g).value >= best - 1e-9


def test_nnc_noq_never_beats_cutset(rng):
    for g in random_gains(rng, 8):
        assert nnc_lower_noQ(g).value <= cutset_upper(g).value + 1e-9


def test_nnc_analytic_examples():
    g = ChannelGains(S=3.0, I=2.0, C=0.5)
    assert nnc_lower_analytic(g).value <= math.log2(4.0)
    assert nnc_lower_analytic(g).value >= 0.0
    assert nnc_lower_analytic(SYMMETRIC).value <= nnc_lower_det(SYMMETRIC).value + 1e-9


def test_nnc_analytic_tracks_gdof_slope():
    e = ExponentTriple(1.0, 1.8, 1.4)
    lo, hi = 1e11, 1e13
    slope = (
        nnc_lower_analytic(exponents_to_gains(e, hi)).value
        - nnc_lower_analytic(exponents_to_gains(e, lo)).value
    ) / (math.log2(1 + hi) - math.log2(1 + lo))
    assert slope == pytest.approx(gdof_hd(e), abs=0.02)


# ---------------------------------------------------------------------------
# Ordering and gap properties
# ---------------------------------------------------------------------------


def test_bound_ordering_chain(rng):
    for g in random_gains(rng, 12):
        det = pdf_lower(g, "deterministic").value
        rand = pdf_lower(g, "random").value
        cs = cutset_upper(g).value
        assert pdf_lower_analytic(g).value <= det + 1e-9
        assert det <= rand + 1e-9
        assert rand <= cs + 1e-9
        assert cs <= cutset_upper_analytic(g).value + 1e-9
        assert lda_rate(g).value <= cs + 1e-9
        assert nnc_lower_analytic(g).value <= nnc_lower_det(g).value + 1e-9
        assert nnc_lower_det(g).value <= nnc_lower_random(g).value + 1e-6


def test_gap_theorems_sample(rng):
    # the full 500-triple suite runs in the acceptance tests
    for g in random_gains(rng, 25):
        cs = cutset_upper(g).value
        assert cs - pdf_lower(g, "random").value <= 1.0 + 1e-6
        assert cutset_upper_analytic(g).value - lda_rate(g).value <= 3.0 + 1e-6
        assert cs - nnc_lower_det(g).value <= 1.62


def test_no_direct_link_random_switch_below_both_uppers():
    rand = pdf_lower(NO_DIRECT, "random").value
    assert rand <= min(fd_cutset_s0(NO_DIRECT).value, cutset_upper(NO_DIRECT).value) + 1e-9


def test_analytic_gap_constants():
    gc = analytic_gap_constants()
    assert gc.lda_s0_gap == pytest.approx(1.5112, abs=1e-3)
    assert gc.nnc_gap == pytest.approx(1.6081, abs=1e-3)
    assert gc.nnc_gap_gamma == pytest.approx(0.3855, abs=1e-2)
    assert 2.99 <= gc.lda_gap_sup <= 3.0 + 1e-9
