"""Capacity bounds, gDoF and half-duplex schedules for Gaussian relay networks.

The library computes finite-SNR upper/lower bounds for the single-relay
half-duplex channel, the exact capacity of its noise-free bit-pipe
counterpart, high-SNR schedules for K-node networks via a max-min linear
program, and the constant-gap formulas tying them together.
"""

from .channel import (
    BoundKind,
    ChannelGains,
    ExponentTriple,
    NetworkExponents,
    RateBound,
    db_to_linear,
    exponents_to_gains,
    linear_to_db,
)
from .lda import (
    LdaChannel,
    LdaSchedule,
    lda_achievable_variants,
    lda_capacity_fd,
    lda_capacity_hd,
    simulate_lda_scheme,
)
from .mixture import MixtureSpec, switch_info, switch_info_mixture
from .multirelay import (
    LpSolution,
    StateSchedule,
    best_relay_gdof,
    cut_exponent,
    diamond_gap,
    diamond_state_sparsity,
    gap_asymptotic,
    gap_bound,
    gdof_fd_network,
    gdof_lp,
)
from .single_relay import (
    AnalyticGapConstants,
    PowerSplit,
    analytic_gap_constants,
    cutset_upper,
    cutset_upper_analytic,
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
from .sweeps import SweepGrid, delta_map, gap_sweep, rate_curves_vs_gamma, s0_gap_scan

__version__ = "0.1.0"

__all__ = [
    "AnalyticGapConstants",
    "BoundKind",
    "ChannelGains",
    "ExponentTriple",
    "LdaChannel",
    "LdaSchedule",
    "LpSolution",
    "MixtureSpec",
    "NetworkExponents",
    "PowerSplit",
    "RateBound",
    "StateSchedule",
    "SweepGrid",
    "analytic_gap_constants",
    "best_relay_gdof",
    "cut_exponent",
    "cutset_upper",
    "cutset_upper_analytic",
    "db_to_linear",
    "delta_map",
    "diamond_gap",
    "diamond_state_sparsity",
    "exponents_to_gains",
    "fd_cutset_s0",
    "gap_asymptotic",
    "gap_bound",
    "gap_sweep",
    "gdof_fd",
    "gdof_fd_network",
    "gdof_hd",
    "gdof_lp",
    "lda_achievable_variants",
    "lda_capacity_fd",
    "lda_capacity_hd",
    "lda_rate",
    "linear_to_db",
    "nnc_lower_analytic",
    "nnc_lower_det",
    "nnc_lower_noQ",
    "nnc_lower_random",
    "pdf_lower",
    "pdf_lower_analytic",
    "rate_curves_vs_gamma",
    "s0_gap_scan",
    "simulate_lda_scheme",
    "switch_info",
    "switch_info_mixture",
]
