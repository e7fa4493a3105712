import numpy as np
import pytest

from relaybounds import ChannelGains


def random_gains(rng, n, lo_db=-10.0, hi_db=60.0):
    """Log-uniform gain triples over [lo_db, hi_db]."""
    out = []
    for _ in range(n):
        s_db, i_db, c_db = rng.uniform(lo_db, hi_db, 3)
        out.append(ChannelGains(S=10 ** (s_db / 10), I=10 ** (i_db / 10), C=10 ** (c_db / 10)))
    return out


@pytest.fixture
def rng():
    return np.random.default_rng(20240801)
