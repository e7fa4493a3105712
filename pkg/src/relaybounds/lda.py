"""Exact capacity and bit-level simulation of the shift-matrix relay channel.

The noise-free model replaces each Gaussian link with a bit pipe that
delivers the top beta_* bits of the transmitted word; a half-duplex relay
either listens or talks.  The capacity has a closed form driven by the
entropy of the destination's upper word, whose distribution mixes an
all-zero word (relay listening) with the relay's word (relay talking).
A bit-exact simulator runs the two-phase superposition scheme on the same
channel and checks that every payload bit survives.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .optimize import binary_entropy, golden_max

_MAX_UPPER_WIDTH = 16  # exact upper-word entropy enumerates Hamming weights


@dataclass(frozen=True)
class LdaChannel:
    """Integer bit-level capacities of the three links."""

    beta_sd: int
    beta_rd: int
    beta_sr: int

    def __post_init__(self):
        for name in ("beta_sd", "beta_rd", "beta_sr"):
            v = getattr(self, name)
            if not (isinstance(v, (int, np.integer)) and v >= 0):
                raise ValueError(f"{name} must be a nonnegative integer, got {v!r}")
        if self.word_length < 1:
            raise ValueError("at least one link must carry a bit")

    @property
    def word_length(self) -> int:
        return max(self.beta_sd, self.beta_rd, self.beta_sr)

    @property
    def upper_width(self) -> int:
        """Bits of the destination word that only the relay can reach."""
        return max(self.beta_rd - self.beta_sd, 0)

    @property
    def relay_bonus(self) -> int:
        """Bits per listening slot the relay picks up beyond the direct word."""
        return max(self.beta_sr - self.beta_sd, 0)


@dataclass(frozen=True)
class LdaSchedule:
    """Listen fraction plus the probability of the all-zero upper relay word."""

    gamma: float
    p0: float

    def __post_init__(self):
        for name in ("gamma", "p0"):
            v = getattr(self, name)
            if not (0.0 <= v <= 1.0):
                raise ValueError(f"{name} must lie in [0, 1], got {v!r}")


def optimal_zero_word_probability(ch: LdaChannel, gamma: float) -> float:
    """Relay upper-word mass on zero that maximizes the destination entropy."""
    L = 2.0 ** ch.upper_width
    if gamma >= 1.0:
        return 0.0
    return max(1.0 / L - gamma, 0.0) / (1.0 - gamma)


def _peaked_mixture_entropy(theta: float, L: float) -> float:
    """H of [1-theta, theta/(L-1) x (L-1)] in bits; the upper-word entropy
    when the non-zero words are uniform with total mass theta."""
    if theta <= 0.0 or L <= 1.0:
        return 0.0
    ent = float(binary_entropy(theta))
    return ent + theta * math.log2(L - 1.0) if L > 1.0 else ent


def _best_upper_entropy(ch: LdaChannel, gamma: float) -> float:
    """Destination upper-word entropy under the optimal relay distribution."""
    if ch.upper_width == 0:
        return 0.0
    L = 2.0 ** ch.upper_width
    theta = 1.0 - max(1.0 / L, gamma)
    return _peaked_mixture_entropy(theta, L)


def lda_capacity_hd(ch: LdaChannel) -> float:
    """Half-duplex capacity of the bit-pipe relay channel.

    Nontrivial only when both relay links beat the direct link; the inner
    max over the listen fraction is a min of a nonincreasing entropy term
    and an increasing relayed-bits term, solved by golden section.
    """
    if not (ch.beta_sr > ch.beta_sd and ch.beta_rd > ch.beta_sd):
        return float(ch.beta_sd)

    bonus = ch.relay_bonus

    def inner(gamma):
        return min(_best_upper_entropy(ch, gamma), gamma * bonus)

    _, best = golden_max(inner, 0.0, 1.0, tol=1e-9)
    return ch.beta_sd + best


def lda_capacity_fd(ch: LdaChannel) -> float:
    """Full-duplex capacity: direct word plus the weaker relay bonus."""
    return ch.beta_sd + min(
        max(ch.beta_rd - ch.beta_sd, 0), max(ch.beta_sr - ch.beta_sd, 0)
    )


# ---------------------------------------------------------------------------
# Achievable-rate curves over the listen fraction
# ---------------------------------------------------------------------------


def _bernoulli_mixture_entropy(gamma: float, q: float, width: int) -> float:
    """H of the destination upper word when the relay sends iid Bernoulli(q)
    bits: mass gamma on the zero word plus (1-gamma) times a product law.

    Exact by Hamming-weight enumeration; width is capped so this stays an
    enumeration, not an approximation.
    """
    if width == 0:
        return 0.0
    if width > _MAX_UPPER_WIDTH:
        raise ValueError(f"upper word width {width} exceeds {_MAX_UPPER_WIDTH}")
    w = np.arange(width + 1)
    counts = np.array([math.comb(width, k) for k in w], dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        log_pw = w * np.log(q) + (width - w) * np.log1p(-q)
    log_pw = np.where(np.isnan(log_pw), -np.inf, log_pw)
    pw = np.exp(log_pw)

    ent = 0.0
    p_zero = gamma + (1.0 - gamma) * pw[0]
    if p_zero > 0.0:
        ent -= p_zero * math.log2(p_zero)
    for k in range(1, width + 1):
        p = (1.0 - gamma) * pw[k]
        if p > 0.0:
            ent -= counts[k] * p * math.log2(p)
    return ent


@dataclass(frozen=True)
class LdaRateCurves:
    """Achievable rates vs listen fraction for four relay input strategies."""

    gamma: np.ndarray
    iid_det: np.ndarray  # iid fair bits, deterministic switch
    iid_rand: np.ndarray  # iid fair bits, random switch
    iidq_rand: np.ndarray  # iid Bernoulli(q) bits, q optimized, random switch
    q_opt: np.ndarray
    optimal: np.ndarray  # optimal peaked distribution, random switch

    def as_rows(self):
        for k in range(len(self.gamma)):
            yield (
                self.gamma[k],
                self.iid_det[k],
                self.iid_rand[k],
                self.iidq_rand[k],
                self.q_opt[k],
                self.optimal[k],
            )


def lda_achievable_variants(ch: LdaChannel, gamma_step: float = 0.01,
                            q_step: float = 1e-3) -> LdaRateCurves:
    """Rate curves of the four relay strategies over a listen-fraction grid.

    At every grid point the curves are ordered: deterministic switch with
    fair bits <= random switch with fair bits <= random switch with
    optimized bias <= the optimal peaked distribution.
    """
    width = ch.upper_width
    if width > _MAX_UPPER_WIDTH:
        raise ValueError(f"upper word width {width} exceeds {_MAX_UPPER_WIDTH}")
    gammas = np.arange(0.0, 1.0 + 1e-12, gamma_step)
    bonus = ch.relay_bonus
    drd = float(max(ch.beta_rd - ch.beta_sd, 0))

    base = float(ch.beta_sd)
    iid_det = np.empty_like(gammas)
    iid_rand = np.empty_like(gammas)
    iidq_rand = np.empty_like(gammas)
    q_opt = np.empty_like(gammas)
    optimal = np.empty_like(gammas)
    q_grid = np.arange(0.0, 1.0 + 1e-12, q_step)

    for k, gamma in enumerate(gammas):
        relayed = gamma * bonus
        iid_det[k] = base + min(relayed, (1.0 - gamma) * drd)
        iid_rand[k] = base + min(_bernoulli_mixture_entropy(gamma, 0.5, width), relayed)
        if width == 0:
            iidq_rand[k] = base
            q_opt[k] = 0.5
        else:
            ents = [_bernoulli_mixture_entropy(gamma, float(q), width) for q in q_grid]
            j = int(np.argmax(ents))
            q_opt[k] = q_grid[j]
            iidq_rand[k] = base + min(ents[j], relayed)
        optimal[k] = base + min(_best_upper_entropy(ch, gamma), relayed)
    return LdaRateCurves(
        gamma=gammas,
        iid_det=iid_det,
        iid_rand=iid_rand,
        iidq_rand=iidq_rand,
        q_opt=q_opt,
        optimal=optimal,
    )


# ---------------------------------------------------------------------------
# Bit-exact two-phase simulator
# ---------------------------------------------------------------------------


def optimal_listen_fraction(ch: LdaChannel) -> float:
    """Listen fraction that balances relay intake against relay drain."""
    drd = ch.beta_rd - ch.beta_sd
    dsr = ch.beta_sr - ch.beta_sd
    if drd > 0 and dsr > 0:
        return drd / (drd + dsr)
    return 0.0


def schedule_for_slots(ch: LdaChannel, n_slots: int):
    """(listen_slots, talk_slots, payload_bits) for an n-slot block.

    Slot counts round the balanced listen fraction down; the relay queue
    never underflows because talk slots drain at most what was collected.
    """
    if n_slots < 1:
        raise ValueError("need at least one slot")
    gamma = optimal_listen_fraction(ch)
    n_listen = int(math.floor(gamma * n_slots))
    n_talk = n_slots - n_listen
    relayed = min(n_listen * ch.relay_bonus, n_talk * ch.upper_width)
    payload = n_slots * ch.beta_sd + relayed
    return n_listen, n_talk, payload


class DecodeError(RuntimeError):
    """Destination bitstream did not match the transmitted payload."""


@dataclass(frozen=True)
class LdaSimReport:
    decoded_ok: bool
    achieved_rate: float
    n_slots: int
    listen_slots: int
    talk_slots: int
    payload_bits: int


def _shift_top_bits(word: np.ndarray, k: int, n: int) -> np.ndarray:
    """Channel action: deliver the top k bits of an n-bit word (MSB first),
    aligned to the bottom of the receiver's word."""
    out = np.zeros(n, dtype=np.uint8)
    if k > 0:
        out[n - k:] = word[:k]
    return out


def simulate_lda_scheme(
    ch: LdaChannel,
    payload_bits=None,
    seed: Optional[int] = None,
    n_slots: Optional[int] = None,
) -> LdaSimReport:
    """Run the two-phase scheme on the exact bit-shift channel.

    Phase I: the source stacks a fresh direct word on top of relay-bound
    bits that sit below the destination's noise floor; the relay peels the
    direct word, then the relay-bound bits.  Phase II: the relay repacks
    its queue into upper-word symbols that arrive above the direct word at
    the destination.  Raises DecodeError if any decoded bit differs (which
    would indicate a scheme bug, not channel noise: the channel is exact).

    Pass an explicit payload (padded internally to the block capacity), or
    n_slots plus a seed to fill a block of that length with random bits.
    """
    if not (ch.beta_sr > ch.beta_sd and ch.beta_rd > ch.beta_sd):
        raise ValueError("two-phase relaying needs both relay links above the direct link")
    if payload_bits is None:
        if n_slots is None:
            raise ValueError("provide payload_bits, or n_slots to generate a random payload")
        capacity = schedule_for_slots(ch, n_slots)[2]
        payload = np.random.default_rng(seed).integers(0, 2, size=capacity, dtype=np.uint8)
    else:
        payload = np.asarray(payload_bits, dtype=np.uint8).ravel()
        if payload.size and payload.max() > 1:
            raise ValueError("payload must be a bit sequence")
        if n_slots is None:
            n_slots = 1
            while schedule_for_slots(ch, n_slots)[2] < payload.size:
                n_slots *= 2
            lo, hi = max(n_slots // 2, 1), n_slots
            while lo < hi:  # smallest block that fits
                mid = (lo + hi) // 2
                if schedule_for_slots(ch, mid)[2] >= payload.size:
                    hi = mid
                else:
                    lo = mid + 1
            n_slots = lo
        elif schedule_for_slots(ch, n_slots)[2] < payload.size:
            raise ValueError(f"payload does not fit in {n_slots} slots")

    n = ch.word_length
    n_listen, n_talk, capacity = schedule_for_slots(ch, n_slots)

    stream = np.zeros(capacity, dtype=np.uint8)
    stream[: payload.size] = payload

    # Split the padded stream: direct words for every slot, relay-bound bits
    # for the listen slots (only as many as the talk slots can drain).
    n_direct = n_slots * ch.beta_sd
    direct_bits = stream[:n_direct].reshape(n_slots, ch.beta_sd) if ch.beta_sd else np.zeros(
        (n_slots, 0), dtype=np.uint8
    )
    relay_bits = stream[n_direct:]

    relay_queue = []
    decoded_direct = []
    decoded_relayed = []

    cursor = 0
    for t in range(n_listen):
        word = np.zeros(n, dtype=np.uint8)
        word[: ch.beta_sd] = direct_bits[t]
        chunk = relay_bits[cursor: cursor + ch.relay_bonus]
        take = chunk.size
        word[ch.beta_sd: ch.beta_sd + take] = chunk
        cursor += take

        relay_rx = _shift_top_bits(word, ch.beta_sr, n)
        # successive peeling at the relay: direct word first, then the rest
        got_direct = relay_rx[n - ch.beta_sr: n - ch.beta_sr + ch.beta_sd]
        got_extra = relay_rx[n - ch.beta_sr + ch.beta_sd: n - ch.beta_sr + ch.beta_sd + take]
        if not np.array_equal(got_direct, direct_bits[t]):
            raise DecodeError(f"relay mis-peeled the direct word in slot {t}")
        relay_queue.extend(got_extra.tolist())

        dest_rx = _shift_top_bits(word, ch.beta_sd, n)
        decoded_direct.append(dest_rx[n - ch.beta_sd:] if ch.beta_sd else dest_rx[:0])

    queue = np.array(relay_queue, dtype=np.uint8)
    drained = 0
    for t in range(n_listen, n_slots):
        word_src = np.zeros(n, dtype=np.uint8)
        word_src[: ch.beta_sd] = direct_bits[t]
        word_rel = np.zeros(n, dtype=np.uint8)
        chunk = queue[drained: drained + ch.upper_width]
        word_rel[: chunk.size] = chunk
        drained += chunk.size

        y = _shift_top_bits(word_src, ch.beta_sd, n) ^ _shift_top_bits(word_rel, ch.beta_rd, n)
        # the relay word rides above the direct word: peel it first
        upper = y[n - ch.beta_rd: n - ch.beta_sd]
        decoded_relayed.append(upper[: chunk.size])
        lower = y[n - ch.beta_sd:] if ch.beta_sd else y[:0]
        decoded_direct.append(lower)

    pieces = [b for b in decoded_direct if b.size] + [b for b in decoded_relayed if b.size]
    reconstructed = np.concatenate(pieces) if pieces else np.zeros(0, dtype=np.uint8)
    if not np.array_equal(reconstructed, stream):
        raise DecodeError("destination bitstream differs from the transmitted payload")
    return LdaSimReport(
        decoded_ok=True,
        achieved_rate=capacity / n_slots,
        n_slots=n_slots,
        listen_slots=n_listen,
        talk_slots=n_talk,
        payload_bits=int(payload.size),
    )
