"""Command-line front end: bounds, sweeps, schedules, and CSV/JSON emission.

Subcommands map one-to-one onto the library surface:

    gdof         closed-form capacity slopes of a single-relay channel
    rates        every bound at one gain triple (optionally rate-vs-gamma curves)
    gap-sweep    worst-case bound gaps over an exponent grid and SNR list
    delta-map    random-vs-deterministic switch advantage over the grid
    lda          bit-pipe relay capacities, strategy curves, simulator
    multirelay   schedule LP for a K-node network descriptor
    gap-formula  constant-gap formulas as a function of network size

All numeric CSV output uses a fixed %.10g format with '.' decimals so
identical runs are byte-identical.  Gains accept either linear values or a
"dB" suffix (e.g. --S 30dB).  Exit code is nonzero if any optimizer
reported non-convergence (the warning column says which).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .channel import (
    BoundKind,
    ChannelGains,
    ExponentTriple,
    NetworkExponents,
    db_to_linear,
    linear_to_db,
)
from . import lda as lda_mod
from . import multirelay as mr
from . import single_relay as sr
from . import sweeps

RATES_COLUMNS = (
    "kind",
    "S_dB",
    "I_dB",
    "C_dB",
    "value_bits",
    "gamma",
    "beta",
    "alpha1",
    "sigma2",
    "g00",
    "g01",
    "g10",
    "g11",
    "warning",
)

LDA_COLUMNS = ("gamma", "rate_iid_det", "rate_iid_rand", "rate_iidq_rand", "q_opt", "rate_optimal")


@dataclass
class RunConfig:
    """Parsed invocation: exactly one input source plus grids and output."""

    command: str
    gains: Optional[ChannelGains] = None
    exponents: Optional[ExponentTriple] = None
    network_file: Optional[str] = None
    snr_db: tuple = ()
    grid: tuple = ()
    schemes: tuple = ()
    out: Optional[str] = None
    seed: Optional[int] = None
    jobs: Optional[int] = None

    def __post_init__(self):
        sources = sum(x is not None for x in (self.gains, self.exponents, self.network_file))
        if sources != 1:
            raise ValueError(f"exactly one input source per run, got {sources}")
        for name, axis in (("snr", self.snr_db), ("grid", self.grid)):
            if axis is None or len(axis) == 0:
                raise ValueError(f"{name} axis must be nonempty")
            if len(axis) > 1 and min(np.diff(np.asarray(axis))) <= 0:
                raise ValueError(f"{name} axis must be strictly increasing")


def parse_gain(text: str) -> float:
    """A linear gain, or a dB value marked with a 'dB' suffix."""
    t = text.strip()
    if t.lower().endswith("db"):
        return db_to_linear(float(t[:-2]))
    value = float(t)
    if value < 0:
        raise ValueError(f"linear gain must be >= 0, got {text!r}")
    return value


def parse_range(text: str) -> np.ndarray:
    """start:stop[:step] inclusive ranges, or a comma list of values."""
    if ":" in text:
        parts = [float(p) for p in text.split(":")]
        if len(parts) == 2:
            start, stop, step = parts[0], parts[1], 1.0
        elif len(parts) == 3:
            start, stop, step = parts
        else:
            raise ValueError(f"bad range {text!r}; use start:stop[:step]")
        if step <= 0:
            raise ValueError(f"range step must be > 0, got {step}")
        n = int(math.floor((stop - start) / step + 1e-9)) + 1
        return start + step * np.arange(max(n, 1))
    return np.array([float(p) for p in text.split(",") if p.strip() != ""])


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    v = float(value)
    if math.isnan(v):
        return ""
    return f"{v:.10g}"


def write_csv(path: Optional[str], header: Sequence[str], rows) -> None:
    lines = [",".join(header)]
    lines.extend(",".join(_fmt(v) for v in row) for row in rows)
    text = "\n".join(lines) + "\n"
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _db_or_neg_inf(x: float) -> float:
    return linear_to_db(x) if x > 0 else float("-inf")


def _bound_row(g: ChannelGains, rb) -> tuple:
    return (
        rb.kind.value,
        _fmt(_db_or_neg_inf(g.S)) if g.S > 0 else "-inf",
        _fmt(linear_to_db(g.I)),
        _fmt(linear_to_db(g.C)),
        _fmt(rb.value),
        _fmt(rb.gamma),
        _fmt(rb.beta),
        _fmt(rb.alpha1),
        _fmt(rb.sigma2),
        _fmt(rb.g00),
        _fmt(rb.g01),
        _fmt(rb.g10),
        _fmt(rb.g11),
        "" if rb.converged else "optimizer-not-converged",
    )


def cmd_gdof(args) -> int:
    cfg = RunConfig(
        command="gdof",
        exponents=ExponentTriple(args.bsd, args.brd, args.bsr),
        snr_db=(0.0,),
        grid=(0.0,),
        out=args.out,
    )
    e = cfg.exponents
    hd = sr.gdof_hd(e)
    fd = sr.gdof_fd(e)
    print(f"hd={hd:.10g} fd={fd:.10g}")
    if args.out:
        write_csv(args.out, ("beta_sd", "beta_rd", "beta_sr", "gdof_hd", "gdof_fd"),
                  [(e.beta_sd, e.beta_rd, e.beta_sr, hd, fd)])
    return 0


_RATE_FUNCS = (
    ("cutset", lambda g: sr.cutset_upper(g)),
    ("cutset-analytic", lambda g: sr.cutset_upper_analytic(g)),
    ("pdf-rand", lambda g: sr.pdf_lower(g, "random")),
    ("pdf-det", lambda g: sr.pdf_lower(g, "deterministic")),
    ("pdf-analytic", lambda g: sr.pdf_lower_analytic(g)),
    ("lda", lambda g: sr.lda_rate(g)),
    ("nnc-rand", lambda g: sr.nnc_lower_random(g)),
    ("nnc-det", lambda g: sr.nnc_lower_det(g)),
    ("nnc-noq", lambda g: sr.nnc_lower_noQ(g)),
    ("nnc-analytic", lambda g: sr.nnc_lower_analytic(g)),
)


def cmd_rates(args) -> int:
    cfg = RunConfig(
        command="rates",
        gains=ChannelGains(S=parse_gain(args.S), I=parse_gain(args.I), C=parse_gain(args.C)),
        snr_db=(0.0,),
        grid=np.arange(0.0, 1.0 + 1e-12, args.gamma_step),
        out=args.out,
        jobs=args.jobs,
    )
    g = cfg.gains
    if args.curve == "gamma":
        kinds = [
            BoundKind.PDF_RANDOM,
            BoundKind.PDF_DETERMINISTIC,
            BoundKind.NNC_RANDOM,
            BoundKind.NNC_DETERMINISTIC,
            BoundKind.LDA,
        ]
        grid = sweeps.rate_curves_vs_gamma(g, kinds, gamma_step=args.gamma_step, jobs=args.jobs)
        write_csv(args.out, grid.columns, grid.rows)
        return 0
    rows = []
    ok = True
    bounds = list(_RATE_FUNCS)
    if g.S == 0.0:
        bounds.append(("fd-cutset", lambda gg: sr.fd_cutset_s0(gg)))
    for _, fn in bounds:
        rb = fn(g)
        ok = ok and rb.converged
        rows.append(_bound_row(g, rb))
    write_csv(args.out, RATES_COLUMNS, rows)
    return 0 if ok else 1


def cmd_gap_sweep(args) -> int:
    cfg = RunConfig(
        command="gap-sweep",
        exponents=ExponentTriple(args.bsd, args.bsd, args.bsd),
        snr_db=tuple(parse_range(args.snr)),
        grid=tuple(parse_range(args.grid)),
        schemes=tuple(args.scheme.split(",")),
        out=args.out,
        jobs=args.jobs,
    )
    grid = sweeps.gap_sweep(cfg.snr_db, cfg.grid, cfg.schemes, beta_sd=args.bsd, jobs=cfg.jobs)
    write_csv(cfg.out, grid.columns, grid.rows)
    return 0


def cmd_delta_map(args) -> int:
    cfg = RunConfig(
        command="delta-map",
        exponents=ExponentTriple(args.bsd, args.bsd, args.bsd),
        snr_db=(args.snr_db,),
        grid=tuple(parse_range(args.grid)),
        out=args.out,
        jobs=args.jobs,
    )
    grid = sweeps.delta_map(args.snr_db, cfg.grid, beta_sd=args.bsd, jobs=cfg.jobs)
    write_csv(cfg.out, grid.columns, grid.rows)
    return 0


def cmd_lda(args) -> int:
    cfg = RunConfig(
        command="lda",
        exponents=ExponentTriple(args.bsd, args.brd, args.bsr),
        snr_db=(0.0,),
        grid=np.arange(0.0, 1.0 + 1e-12, args.gamma_step),
        out=args.out,
        seed=args.seed,
    )
    ch = lda_mod.LdaChannel(args.bsd, args.brd, args.bsr)
    hd = lda_mod.lda_capacity_hd(ch)
    fd = lda_mod.lda_capacity_fd(ch)
    print(f"capacity_hd={hd:.10g} capacity_fd={fd:.10g}")
    curves = lda_mod.lda_achievable_variants(ch, gamma_step=args.gamma_step)
    write_csv(cfg.out, LDA_COLUMNS, curves.as_rows())
    if args.simulate_slots:
        report = lda_mod.simulate_lda_scheme(ch, n_slots=args.simulate_slots, seed=cfg.seed)
        print(
            f"simulated slots={report.n_slots} listen={report.listen_slots} "
            f"decoded_ok={report.decoded_ok} rate={report.achieved_rate:.10g}"
        )
    return 0


def cmd_multirelay(args) -> int:
    cfg = RunConfig(
        command="multirelay",
        network_file=args.file,
        snr_db=(0.0,),
        grid=(0.0,),
        out=args.out,
    )
    with open(cfg.network_file) as fh:
        net = NetworkExponents.from_json(fh.read())
    sol = mr.gdof_lp(net)
    payload = sol.to_json_dict()
    payload["gdof_fd"] = mr.gdof_fd_network(net)
    payload["best_relay_hd"] = mr.best_relay_gdof(net, "HD")
    payload["best_relay_fd"] = mr.best_relay_gdof(net, "FD")
    text = json.dumps(payload, indent=2, sort_keys=True)
    if args.out and args.out != "-":
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    if args.csv:
        write_csv(
            args.csv,
            ("gdof_hd", "gdof_fd", "best_relay_hd", "best_relay_fd", "active_states"),
            [(sol.gdof, payload["gdof_fd"], payload["best_relay_hd"],
              payload["best_relay_fd"], sol.active_states)],
        )
    return 0


def cmd_gap_formula(args) -> int:
    ks = [int(k) for k in parse_range(args.k)]
    rows = []
    for k in ks:
        rows.append(
            (
                k,
                mr.gap_bound(k),
                mr.gap_asymptotic(k),
                mr.diamond_gap(k, assume_conjecture=False),
                mr.diamond_gap(k, assume_conjecture=True),
            )
        )
    write_csv(
        args.out,
        ("k", "gap_bits", "gap_asymptotic_bits", "diamond_gap_bits", "diamond_gap_conjectured_bits"),
        rows,
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="relaybounds", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gdof", help="closed-form capacity slopes")
    g.add_argument("--bsd", type=float, required=True)
    g.add_argument("--brd", type=float, required=True)
    g.add_argument("--bsr", type=float, required=True)
    g.add_argument("--out", default=None)
    g.set_defaults(fn=cmd_gdof)

    r = sub.add_parser("rates", help="all bounds at one gain triple")
    r.add_argument("--S", required=True, help="source->dest gain (linear or dB)")
    r.add_argument("--I", required=True, help="relay->dest gain (linear or dB)")
    r.add_argument("--C", required=True, help="source->relay gain (linear or dB)")
    r.add_argument("--curve", choices=["gamma"], default=None)
    r.add_argument("--gamma-step", type=float, default=0.02)
    r.add_argument("--jobs", type=int, default=None)
    r.add_argument("--out", default=None)
    r.set_defaults(fn=cmd_rates)

    s = sub.add_parser("gap-sweep", help="max bound gap over an exponent grid")
    s.add_argument("--scheme", default="pdf-det",
                   help="comma list from: " + ",".join(sweeps.GAP_SCHEMES))
    s.add_argument("--snr", default="0:60:5", help="SNR dB range start:stop:step")
    s.add_argument("--grid", default="0:2.4:0.1", help="exponent grid for beta_rd/beta_sr")
    s.add_argument("--bsd", type=float, default=1.0)
    s.add_argument("--jobs", type=int, default=None)
    s.add_argument("--out", default=None)
    s.set_defaults(fn=cmd_gap_sweep)

    d = sub.add_parser("delta-map", help="random-switch advantage map at one SNR")
    d.add_argument("--snr-db", type=float, default=20.0)
    d.add_argument("--grid", default="0:2.4:0.1")
    d.add_argument("--bsd", type=float, default=1.0)
    d.add_argument("--jobs", type=int, default=None)
    d.add_argument("--out", default=None)
    d.set_defaults(fn=cmd_delta_map)

    l = sub.add_parser("lda", help="bit-pipe relay capacities and curves")
    l.add_argument("--bsd", type=int, required=True)
    l.add_argument("--brd", type=int, required=True)
    l.add_argument("--bsr", type=int, required=True)
    l.add_argument("--gamma-step", type=float, default=0.01)
    l.add_argument("--simulate-slots", type=int, default=None)
    l.add_argument("--seed", type=int, default=None)
    l.add_argument("--out", default=None)
    l.set_defaults(fn=cmd_lda)

    m = sub.add_parser("multirelay", help="schedule LP for a network descriptor")
    m.add_argument("--file", required=True, help='JSON {"K": int, "alpha": [[...]]}')
    m.add_argument("--out", default=None)
    m.add_argument("--csv", default=None)
    m.set_defaults(fn=cmd_multirelay)

    f = sub.add_parser("gap-formula", help="constant-gap formulas vs network size")
    f.add_argument("--k", default="3:200", help="node-count range start:stop[:step]")
    f.add_argument("--out", default=None)
    f.set_defaults(fn=cmd_gap_formula)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
