import json
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from relaybounds import (
    BoundKind,
    ChannelGains,
    ExponentTriple,
    NetworkExponents,
    RateBound,
    db_to_linear,
    exponents_to_gains,
    linear_to_db,
)


def test_db_to_linear_basics():
    assert db_to_linear(0.0) == 1.0
    assert db_to_linear(30.0) == pytest.approx(1000.0, rel=1e-15)
    # used for the 30 dB figure inputs: 37.63 dB ~ 5794.3 linear
    assert db_to_linear(37.63) == pytest.approx(10 ** 3.763, rel=1e-14)
    assert db_to_linear(37.63) == pytest.approx(5794.2870, abs=1e-3)


@given(st.floats(min_value=-100.0, max_value=200.0))
@settings(max_examples=200, deadline=None)
def test_db_round_trip(x):
    assert linear_to_db(db_to_linear(x)) == pytest.approx(x, abs=1e-12)


def test_db_rejects_nonfinite():
    with pytest.raises(ValueError):
        db_to_linear(float("nan"))
    with pytest.raises(ValueError):
        linear_to_db(0.0)
    with pytest.raises(ValueError):
        linear_to_db(-3.0)


def test_exponents_to_gains_identity():
    g = exponents_to_gains(ExponentTriple(1, 1, 1), snr=100.0)
    assert (g.S, g.I, g.C) == (100.0, 100.0, 100.0)


def test_exponents_to_gains_power_law():
    g = exponents_to_gains(ExponentTriple(1, 2, 2), snr=10.0)
    assert g.S == pytest.approx(10.0)
    assert g.I == pytest.approx(100.0)
    assert g.C == pytest.approx(100.0)


def test_exponents_to_gains_log_consistency():
    g = exponents_to_gains(ExponentTriple(1, 1.8, 1.4), snr=1e6)
    assert math.log10(g.S) == pytest.approx(6.0, abs=1e-9)
    assert math.log10(g.I) == pytest.approx(10.8, abs=1e-9)
    assert math.log10(g.C) == pytest.approx(8.4, abs=1e-9)


def test_exponents_to_gains_monotone_in_snr():
    e = ExponentTriple(0.5, 1.3, 2.0)
    prev = exponents_to_gains(e, 1.0)
    for snr in (2.0, 10.0, 1e4):
        cur = exponents_to_gains(e, snr)
        assert cur.S >= prev.S and cur.I > prev.I and cur.C > prev.C
        prev = cur


def test_exponents_to_gains_overflow():
    with pytest.raises(OverflowError):
        exponents_to_gains(ExponentTriple(1, 200, 1), snr=1e100)
    with pytest.raises(ValueError):
        exponents_to_gains(ExponentTriple(1, 1, 1), snr=0.0)


def test_gains_validation():
    with pytest.raises(ValueError):
        ChannelGains(S=1.0, I=0.0, C=1.0)  # relay disconnected
    with pytest.raises(ValueError):
        ChannelGains(S=1.0, I=1.0, C=0.0)
    with pytest.raises(ValueError):
        ChannelGains(S=-1.0, I=1.0, C=1.0)
    assert ChannelGains(S=0.0, I=1.0, C=1.0).S == 0.0
    g = ChannelGains.from_db(30.0, 34.77, 37.63)
    assert g.S == pytest.approx(1000.0)


def test_exponent_triple_validation():
    with pytest.raises(ValueError):
        ExponentTriple(-0.1, 1.0, 1.0)
    with pytest.raises(ValueError):
        ExponentTriple(float("inf"), 1.0, 1.0)


def test_rate_bound_invariants():
    with pytest.raises(ValueError):
        RateBound(value=-0.5, kind=BoundKind.LDA)
    with pytest.raises(ValueError):
        RateBound(value=1.0, kind=BoundKind.LDA, gamma=1.5)
    with pytest.raises(ValueError):
        RateBound(value=1.0, kind=BoundKind.NNC_RANDOM,
                  g00=0.5, g01=0.5, g10=0.2, g11=0.2)
    rb = RateBound(value=1.0, kind=BoundKind.NNC_RANDOM,
                   g00=0.25, g01=0.25, g10=0.25, g11=0.25)
    assert rb.state_probabilities() == (0.25, 0.25, 0.25, 0.25)


def test_network_descriptor_round_trip():
    a = np.zeros((4, 4))
    a[1, 0], a[2, 0], a[3, 0] = 2.5, 1.4, 1.0
    a[3, 1], a[3, 2] = 0.5, 1.8
    a[1, 2], a[2, 1] = 0.6, 0.8
    net = NetworkExponents(K=4, alpha=a)
    again = NetworkExponents.from_json(net.to_json())
    assert again.K == 4
    assert np.array_equal(again.alpha, net.alpha)
    assert list(net.relays) == [1, 2]
    e = net.relay_triple(2)
    assert (e.beta_sd, e.beta_rd, e.beta_sr) == (1.0, 1.8, 1.4)


def test_network_descriptor_rejects_bad_shapes():
    with pytest.raises(ValueError):
        NetworkExponents.from_json(json.dumps({"K": 3, "alpha": [[0, 0], [0, 0]]}))
    with pytest.raises(ValueError):
        NetworkExponents.from_json(json.dumps({"K": 2, "alpha": [[0, 0], [0, 0]]}))
    with pytest.raises(ValueError):
        NetworkExponents(K=13, alpha=np.zeros((13, 13)))


def test_network_masked_entries_ignored():
    a = np.zeros((3, 3))
    a[0, 0] = float("nan")  # masked: source row
    a[1, 0], a[2, 0], a[2, 1] = 1.0, 1.0, 1.0
    net = NetworkExponents(K=3, alpha=a)
    with pytest.raises(ValueError):
        net.exponent(0, 1)  # source never receives
    with pytest.raises(ValueError):
        net.exponent(1, 2)  # destination never transmits
    assert net.exponent(2, 0) == 1.0


def test_diamond_detection():
    a = np.zeros((4, 4))
    a[1, 0], a[2, 0] = 1.0, 2.0
    a[3, 1], a[3, 2] = 1.5, 0.5
    assert NetworkExponents(K=4, alpha=a).is_diamond()
    a[3, 0] = 0.3  # direct link breaks the diamond
    assert not NetworkExponents(K=4, alpha=a).is_diamond()
