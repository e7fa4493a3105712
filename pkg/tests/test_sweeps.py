import numpy as np
import pytest

from relaybounds import BoundKind, ChannelGains, delta_map, gap_sweep, rate_curves_vs_gamma, s0_gap_scan
from relaybounds.sweeps import resolve_jobs


def test_gap_sweep_columns_and_growth():
    grid = gap_sweep([10.0, 40.0], [0.0, 1.2, 2.4], schemes=("pdf-det", "lda"), jobs=2)
    assert grid.columns == (
        "snr_db",
        "max_gap_pdf-det",
        "max_gap_lda",
        "argmax_beta_rd",
        "argmax_beta_sr",
    )
    assert grid.rows.shape == (2, 5)
    assert np.all(grid.column("max_gap_pdf-det") > 0)
    assert np.all(grid.column("max_gap_pdf-det") <= 1.0 + 1e-6)


def test_gap_sweep_rejects_unknown_scheme():
    with pytest.raises(ValueError):
        gap_sweep([10.0], [1.0], schemes=("magic",))


def test_gap_sweep_deterministic_across_workers():
    a = gap_sweep([20.0], np.arange(0.5, 2.1, 0.5), schemes=("pdf-det",), jobs=1)
    b = gap_sweep([20.0], np.arange(0.5, 2.1, 0.5), schemes=("pdf-det",), jobs=3)
    assert np.array_equal(a.rows, b.rows)


def test_delta_map_zero_where_relay_cannot_decode_more():
    # with beta_sr <= beta_sd the decode cut carries no switch information,
    # so the random switch buys exactly nothing
    grid = delta_map(20.0, [0.4, 0.8, 1.6], jobs=2)
    brd = grid.column("beta_rd")
    bsr = grid.column("beta_sr")
    d = grid.column("delta_bits")
    assert np.all(d >= 0.0)
    assert np.all(d[bsr <= 1.0] <= 1e-9)
    # a strong relay at finite SNR gains a strictly positive advantage
    assert d[(brd == 1.6) & (bsr == 1.6)] > 0.05


def test_s0_scan_upper_bound_uses_both_bounds():
    grid = s0_gap_scan([8.0, 12.0], [3.0, 6.0], schemes=("lda",), jobs=1)
    assert grid.columns == ("c_db", "i_db", "gap_lda")
    assert np.all(grid.column("gap_lda") >= -1e-9)
    assert np.all(grid.column("gap_lda") <= 1.12)


def test_rate_curves_vs_gamma_shape():
    g = ChannelGains(S=0.0, I=3.0, C=15.0)
    grid = rate_curves_vs_gamma(
        g, [BoundKind.PDF_DETERMINISTIC, BoundKind.LDA], gamma_step=0.25, jobs=1
    )
    assert grid.columns == ("gamma", "PdfDeterministic", "Lda")
    assert grid.rows.shape == (5, 3)
    det = grid.column("PdfDeterministic")
    lda = grid.column("Lda")
    assert np.all(lda <= det + 1e-6)


def test_resolve_jobs(monkeypatch):
    assert resolve_jobs(3) == 3
    monkeypatch.setenv("RELAYBOUNDS_JOBS", "5")
    assert resolve_jobs() == 5
    monkeypatch.setenv("RELAYBOUNDS_JOBS", "junk")
    assert resolve_jobs() == 1
    monkeypatch.delenv("RELAYBOUNDS_JOBS")
    assert resolve_jobs() == 1
