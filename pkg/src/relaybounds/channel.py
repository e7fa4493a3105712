"""Core channel types and SNR/exponent conversions for half-duplex relay networks.

Link strengths live in linear power-gain scale internally; decibels are
accepted and produced only at the boundaries.  All rates downstream are in
bits per channel use (base-2 logs).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

# Relay on/off state enumeration is 2**(K-2), so cap the node count.
MAX_NETWORK_NODES = 12

_PROB_SUM_TOL = 1e-9


def db_to_linear(x_db: float) -> float:
    """Convert a dB quantity to linear scale, 10**(x/10)."""
    if not math.isfinite(x_db):
        raise ValueError(f"dB value must be finite, got {x_db!r}")
    return 10.0 ** (x_db / 10.0)


def linear_to_db(x: float) -> float:
    """Convert a positive linear power quantity to dB."""
    if not (x > 0 and math.isfinite(x)):
        raise ValueError(f"linear value must be finite and > 0, got {x!r}")
    return 10.0 * math.log10(x)


@dataclass(frozen=True)
class ChannelGains:
    """Linear power gains of the three single-relay links.

    S: source->destination, I: relay->destination, C: source->relay.
    C and I must be strictly positive; if either is zero the relay is
    disconnected and the channel degenerates to a point-to-point link.
    """

    S: float
    I: float
    C: float

    def __post_init__(self):
        for name, v in (("S", self.S), ("I", self.I), ("C", self.C)):
            if not (math.isfinite(v) and v >= 0):
                raise ValueError(f"gain {name} must be finite and >= 0, got {v!r}")
        if self.C <= 0:
            raise ValueError("source->relay gain C must be > 0 (relay disconnected)")
        if self.I <= 0:
            raise ValueError("relay->destination gain I must be > 0 (relay disconnected)")

    @classmethod
    def from_db(cls, s_db: float, i_db: float, c_db: float) -> "ChannelGains":
        return cls(S=db_to_linear(s_db), I=db_to_linear(i_db), C=db_to_linear(c_db))


@dataclass(frozen=True)
class ExponentTriple:
    """High-SNR exponents of the three single-relay links (gain = SNR**beta)."""

    beta_sd: float
    beta_rd: float
    beta_sr: float

    def __post_init__(self):
        for name in ("beta_sd", "beta_rd", "beta_sr"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v >= 0):
                raise ValueError(f"{name} must be finite and >= 0, got {v!r}")


def exponents_to_gains(e: ExponentTriple, snr: float) -> ChannelGains:
    """Instantiate link gains at a given SNR: S=snr**b_sd, I=snr**b_rd, C=snr**b_sr."""
    if not (snr > 0 and math.isfinite(snr)):
        raise ValueError(f"snr must be finite and > 0, got {snr!r}")
    gains = [snr**b for b in (e.beta_sd, e.beta_rd, e.beta_sr)]
    if not all(math.isfinite(g) for g in gains):
        raise OverflowError(f"snr**beta overflowed for snr={snr}, exponents={e}")
    return ChannelGains(S=gains[0], I=gains[1], C=gains[2])


class BoundKind(str, Enum):
    """Which bound a RateBound value came from."""

    CUTSET_NUMERIC = "CutsetNumeric"
    CUTSET_ANALYTIC = "CutsetAnalytic"
    PDF_RANDOM = "PdfRandom"
    PDF_DETERMINISTIC = "PdfDeterministic"
    PDF_ANALYTIC = "PdfAnalytic"
    LDA = "Lda"
    NNC_DETERMINISTIC = "NncDeterministic"
    NNC_RANDOM = "NncRandom"
    NNC_NO_Q = "NncNoQ"
    NNC_ANALYTIC = "NncAnalytic"
    FD_CUTSET = "FdCutset"


@dataclass(frozen=True)
class RateBound:
    """A bound value in bits/channel-use plus the point that achieves it.

    Optimizer fields that a bound does not use stay None: gamma is the
    relay listen fraction, beta the source power fraction spent while the
    relay listens, alpha1 the transmit-state input correlation magnitude,
    sigma2 the quantization noise, and g00..g11 the joint (time-share,
    relay-state) probabilities of the four-state schedule.
    """

    value: float
    kind: BoundKind
    gamma: Optional[float] = None
    beta: Optional[float] = None
    alpha1: Optional[float] = None
    sigma2: Optional[float] = None
    g00: Optional[float] = None
    g01: Optional[float] = None
    g10: Optional[float] = None
    g11: Optional[float] = None
    converged: bool = True

    def __post_init__(self):
        if not (math.isfinite(self.value) and self.value >= 0):
            raise ValueError(f"bound value must be finite and >= 0, got {self.value!r}")
        for name in ("gamma", "beta", "alpha1", "g00", "g01", "g10", "g11"):
            v = getattr(self, name)
            if v is not None and not (-1e-12 <= v <= 1 + 1e-12):
                raise ValueError(f"{name} must lie in [0, 1], got {v!r}")
        probs = [p for p in (self.g00, self.g01, self.g10, self.g11) if p is not None]
        if probs and abs(sum(probs) - 1.0) > _PROB_SUM_TOL:
            raise ValueError(f"state probabilities must sum to 1, got {probs}")

    def state_probabilities(self) -> Optional[tuple]:
        if self.g00 is None:
            return None
        return (self.g00, self.g01, self.g10, self.g11)


@dataclass(frozen=True)
class NetworkExponents:
    """SNR exponents of every link in a K-node network.

    alpha[i][j] is the exponent of the power gain from transmitter j to
    receiver i (0-based).  Row 0 (the source never receives), column K-1
    (the destination never transmits) and the diagonal are unused and
    ignored by validation; reading them is a bug in the caller.
    """

    K: int
    alpha: np.ndarray
    max_nodes: int = MAX_NETWORK_NODES

    def __post_init__(self):
        if self.K < 3:
            raise ValueError(f"need at least 3 nodes (source, relay, destination), got K={self.K}")
        if self.K > self.max_nodes:
            raise ValueError(
                f"K={self.K} exceeds the configured maximum {self.max_nodes} "
                f"(state enumeration is 2**(K-2))"
            )
        a = np.asarray(self.alpha, dtype=float)
        if a.shape != (self.K, self.K):
            raise ValueError(f"alpha must be {self.K}x{self.K}, got {a.shape}")
        for i, j in self.used_entries():
            if not (np.isfinite(a[i, j]) and a[i, j] >= 0):
                raise ValueError(f"alpha[{i}][{j}] must be finite and >= 0, got {a[i, j]!r}")
        object.__setattr__(self, "alpha", a)

    def used_entries(self):
        """(receiver, transmitter) index pairs that carry a physical link."""
        for i in range(1, self.K):
            for j in range(self.K - 1):
                if i != j:
                    yield i, j

    @property
    def relays(self) -> range:
        """0-based indices of the relay nodes (source is 0, destination K-1)."""
        return range(1, self.K - 1)

    def exponent(self, rx: int, tx: int) -> float:
        if rx == 0 or tx == self.K - 1 or rx == tx:
            raise ValueError(f"link ({tx} -> {rx}) is masked (unused in this model)")
        return float(self.alpha[rx, tx])

    def relay_triple(self, relay: int) -> ExponentTriple:
        """Exponent triple of the sub-network using a single relay."""
        if relay not in self.relays:
            raise ValueError(f"node {relay} is not a relay")
        d = self.K - 1
        return ExponentTriple(
            beta_sd=self.exponent(d, 0),
            beta_rd=self.exponent(d, relay),
            beta_sr=self.exponent(relay, 0),
        )

    def is_diamond(self, tol: float = 0.0) -> bool:
        """True when only source->relay and relay->destination links are nonzero."""
        d = self.K - 1
        if self.exponent(d, 0) > tol:
            return False
        for r1 in self.relays:
            for r2 in self.relays:
                if r1 != r2 and self.exponent(r1, r2) > tol:
                    return False
        return True

    @classmethod
    def from_json(cls, text: str, max_nodes: int = MAX_NETWORK_NODES) -> "NetworkExponents":
        """Parse the {"K": int, "alpha": [[...]]} network descriptor."""
        data = json.loads(text)
        try:
            k = int(data["K"])
            alpha = data["alpha"]
        except (KeyError, TypeError) as exc:
            raise ValueError('network descriptor needs fields "K" and "alpha"') from exc
        a = np.asarray(alpha, dtype=float)
        if a.shape != (k, k):
            raise ValueError(f'"alpha" must be a {k}x{k} matrix, got shape {a.shape}')
        # Masked entries may hold anything (often null); zero them out.
        net = cls(K=k, alpha=np.nan_to_num(a, nan=0.0), max_nodes=max_nodes)
        return net

    def to_json(self) -> str:
        return json.dumps({"K": self.K, "alpha": self.alpha.tolist()})

    @classmethod
    def from_triple(cls, e: ExponentTriple) -> "NetworkExponents":
        """Embed a single-relay triple as a K=3 network."""
        a = np.zeros((3, 3))
        a[1, 0] = e.beta_sr
        a[2, 0] = e.beta_sd
        a[2, 1] = e.beta_rd
        return cls(K=3, alpha=a)


def gains_row_db(g: ChannelGains) -> tuple:
    """dB view of a gain triple for reporting; S=0 maps to -inf dB."""
    s_db = -math.inf if g.S == 0 else linear_to_db(g.S)
    return (s_db, linear_to_db(g.I), linear_to_db(g.C))
