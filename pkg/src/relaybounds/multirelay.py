"""High-SNR analysis of K-node half-duplex relay networks.

Each relay is either listening or transmitting, so a schedule is a
probability vector over the 2**(K-2) on/off states.  For a cut (a relay
subset kept on the source side) and a state, the high-SNR exponent of the
cut's MIMO mutual information is the maximum-weight bipartite matching
between the transmitting and receiving nodes across the cut; the best
schedule and the network's capacity slope then come from a max-min linear
program over the states.  Constant-gap formulas for general and diamond
networks are evaluated alongside.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
import numpy as np
from scipy.optimize import linear_sum_assignment

from . import simplex
from .channel import NetworkExponents
from .single_relay import gdof_fd, gdof_hd

_DP_LIMIT = 6  # bitmask-DP matching up to this many rows; Hungarian beyond
_WEIGHT_TOL = 1e-9


def relay_states(k: int):
    """All on/off states of the K-2 relays.

    The binary expansion of a state number, written with K-2 digits, maps
    digits left to right onto relays in node order: the most significant
    digit is the first relay's switch (1 = transmitting).
    """
    return range(2 ** (k - 2))


def state_bits(state: int, k: int) -> str:
    """Binary string of a state, first relay first."""
    return format(state, f"0{k - 2}b")


def _matching_dp(weights: np.ndarray) -> float:
    """Exact max-weight matching by bitmask DP over the smaller side."""
    rows, cols = weights.shape
    if rows > cols:
        weights = weights.T
        rows, cols = cols, rows
    full = 1 << rows
    best = np.zeros(full)
    for j in range(cols):
        nxt = best.copy()
        for mask in range(full):
            base = best[mask]
            for r in range(rows):
                if not mask & (1 << r):
                    cand = base + weights[r, j]
                    m2 = mask | (1 << r)
                    if cand > nxt[m2]:
                        nxt[m2] = cand
        best = np.maximum.reduce([nxt, best])
    return float(best.max())


def _matching_hungarian(weights: np.ndarray) -> float:
    row, col = linear_sum_assignment(weights, maximize=True)
    return float(weights[row, col].sum())


def max_weight_matching(weights: np.ndarray) -> float:
    """Maximum-weight (not necessarily perfect) bipartite matching value.

    Weights are nonnegative, so leaving a node unmatched never helps; exact
    enumeration via DP for small sides, assignment algorithm above.
    """
    if weights.size == 0:
        return 0.0
    if min(weights.shape) <= _DP_LIMIT:
        return _matching_dp(np.asarray(weights, dtype=float))
    return _matching_hungarian(np.asarray(weights, dtype=float))


def cut_exponent(net: NetworkExponents, cut: frozenset, state: int) -> float:
    """High-SNR exponent of one cut in one relay state.

    Transmitters: the source plus every cut-side relay that is on;
    receivers: the destination plus every far-side relay that is off.  The
    exponent is the max-weight matching of the link exponents between them.
    """
    k = net.K
    relays = list(net.relays)
    for r in cut:
        if r not in net.relays:
            raise ValueError(f"cut contains {r}, not a relay of a {k}-node network")
    tx = [0] + [r for r in relays if r in cut and _is_on(state, r, k)]
    rx = [k - 1] + [r for r in relays if r not in cut and not _is_on(state, r, k)]
    weights = np.array([[net.alpha[i, j] for j in tx] for i in rx], dtype=float)
    return max_weight_matching(weights)


def _is_on(state: int, relay: int, k: int) -> bool:
    return bool((state >> (k - 2 - relay)) & 1)


@dataclass(frozen=True)
class StateSchedule:
    """Probability weights over the relay on/off states."""

    K: int
    weights: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float)
        if w.shape != (2 ** (self.K - 2),):
            raise ValueError(f"need 2**(K-2) weights, got shape {w.shape}")
        if np.any(w < -_WEIGHT_TOL) or abs(w.sum() - 1.0) > 1e-9:
            raise ValueError("weights must be nonnegative and sum to 1")
        object.__setattr__(self, "weights", w)

    def as_dict(self) -> dict:
        return {
            state_bits(s, self.K): float(self.weights[s])
            for s in range(len(self.weights))
        }


@dataclass(frozen=True)
class LpSolution:
    """Solved schedule: capacity slope, weights, and the binding cuts."""

    gdof: float
    schedule: StateSchedule
    tight_cuts: tuple
    active_states: int

    def to_json_dict(self) -> dict:
        return {
            "gdof": self.gdof,
            "lambda": self.schedule.as_dict(),
            "tight_cuts": [sorted(c) for c in self.tight_cuts],
            "active_states": self.active_states,
        }


def cut_table(net: NetworkExponents) -> tuple:
    """(cuts, states, D) with D[cut_index, state] the matching exponent."""
    relays = list(net.relays)
    cuts = [frozenset(sub) for r in range(len(relays) + 1)
            for sub in itertools.combinations(relays, r)]
    states = list(relay_states(net.K))
    table = np.array([[cut_exponent(net, cut, s) for s in states] for cut in cuts])
    return cuts, states, table


def gdof_lp(net: NetworkExponents) -> LpSolution:
    """Best-schedule capacity slope via the max-min linear program.

    maximize t  s.t.  sum_s w_s D[c, s] >= t for every cut c, w in the
    simplex.  Solved by the in-house Bland-rule simplex; scaling the
    weights up only helps, so the simplex constraint can be relaxed to
    sum w <= 1 and still binds at the optimum.
    """
    cuts, states, table = cut_table(net)
    n_states = len(states)
    n_cuts = len(cuts)

    # variables: (w_0..w_{n-1}, t)
    a_ub = np.zeros((n_cuts + 1, n_states + 1))
    b_ub = np.zeros(n_cuts + 1)
    a_ub[:n_cuts, :n_states] = -table
    a_ub[:n_cuts, n_states] = 1.0
    a_ub[n_cuts, :n_states] = 1.0
    b_ub[n_cuts] = 1.0
    c_obj = np.zeros(n_states + 1)
    c_obj[n_states] = 1.0

    res = simplex.solve_max(c_obj, a_ub, b_ub)
    weights = res.x[:n_states].copy()
    gdof = float(res.x[n_states])

    slack = 1.0 - weights.sum()
    if slack > _WEIGHT_TOL:
        # only possible when some cut exponent is 0 for every state; adding
        # mass never lowers a cut value, so park the remainder on state 0
        weights[0] += slack
    weights = np.maximum(weights, 0.0)
    weights /= weights.sum()

    scheduled = table @ weights
    tight = tuple(
        cuts[i] for i in range(n_cuts) if scheduled[i] <= gdof + 1e-7 * (1.0 + abs(gdof))
    )
    active = int(np.sum(weights > _WEIGHT_TOL))
    return LpSolution(
        gdof=gdof,
        schedule=StateSchedule(K=net.K, weights=weights),
        tight_cuts=tight,
        active_states=active,
    )


def gdof_fd_network(net: NetworkExponents) -> float:
    """Full-duplex capacity slope: min over cuts with every relay on both sides."""
    k = net.K
    relays = list(net.relays)
    best = math.inf
    for r in range(len(relays) + 1):
        for sub in itertools.combinations(relays, r):
            cut = set(sub)
            tx = [0] + sorted(cut)
            rx = [k - 1] + [x for x in relays if x not in cut]
            weights = np.array([[net.alpha[i, j] for j in tx] for i in rx])
            best = min(best, max_weight_matching(weights))
    return best


def best_relay_gdof(net: NetworkExponents, mode: str = "HD") -> float:
    """Capacity slope when only the single best relay is used."""
    if mode not in ("HD", "FD"):
        raise ValueError(f'mode must be "HD" or "FD", got {mode!r}')
    formula = gdof_hd if mode == "HD" else gdof_fd
    direct = net.alpha[net.K - 1, 0]
    best = direct
    for r in net.relays:
        best = max(best, formula(net.relay_triple(r)))
    return float(best)


# ---------------------------------------------------------------------------
# Constant-gap formulas
# ---------------------------------------------------------------------------


def gap_bound(k: int) -> float:
    """Worst-case schedule-plus-quantization gap of the K-node network, bits."""
    if k < 3:
        raise ValueError("need at least 3 nodes")
    best = 0.0
    for cut_size in range(0, k - 1):
        val = min(1 + cut_size, k - 1 - cut_size) * math.log2(1 + cut_size) + min(
            1 + 3 * cut_size, cut_size + k - 1
        )
        best = max(best, val)
    return best


def gap_asymptotic(k: int) -> float:
    """Large-K limit shape of the gap: (K/2) log2(4K)."""
    if k < 3:
        raise ValueError("need at least 3 nodes")
    return 0.5 * k * math.log2(4 * k)


def diamond_gap(k: int, assume_conjecture: bool = False) -> float:
    """Gap for diamond networks (no direct or relay-relay links), bits.

    With the sparse-schedule conjecture (K-1 active states suffice) the
    state-count term drops from K-2 bits to log2(K-1) <= log2(K) bits.
    """
    if k < 3:
        raise ValueError("need at least 3 nodes")
    tail = 2.0 * math.log2(math.e / 2.0)
    if assume_conjecture:
        return 5.0 * math.log2(k) + tail
    return (k - 2) + 4.0 * math.log2(k) + tail


def diamond_state_sparsity(net: NetworkExponents) -> int:
    """Number of schedule states needed by an optimal diamond schedule.

    Solves the LP, then greedily drops active states whose removal does not
    lower the optimum: vertex solutions of degenerate LPs can carry
    spurious support, and the quantity of interest is how few states
    suffice.
    """
    if not net.is_diamond():
        raise ValueError("network is not a diamond (direct or relay-relay links present)")
    sol = gdof_lp(net)
    cuts, states, table = cut_table(net)
    support = [s for s in states if sol.schedule.weights[s] > _WEIGHT_TOL]

    def best_with(support_states):
        if not support_states:
            return 0.0
        sub = table[:, support_states]
        n = len(support_states)
        a_ub = np.zeros((len(cuts) + 1, n + 1))
        a_ub[: len(cuts), :n] = -sub
        a_ub[: len(cuts), n] = 1.0
        a_ub[len(cuts), :n] = 1.0
        b_ub = np.zeros(len(cuts) + 1)
        b_ub[len(cuts)] = 1.0
        c_obj = np.zeros(n + 1)
        c_obj[n] = 1.0
        return simplex.solve_max(c_obj, a_ub, b_ub).objective

    target = sol.gdof
    pruned = list(support)
    for s in sorted(support):
        if len(pruned) == 1:
            break
        trial = [x for x in pruned if x != s]
        if best_with(trial) >= target - 1e-9 * (1.0 + abs(target)):
            pruned = trial
    return len(pruned)
