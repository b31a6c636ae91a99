"""``junction-spectra`` command line: sweeps, tables and figure data as CSV or JSON lines.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 tolerance breach.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
import warnings
from dataclasses import dataclass
from typing import IO, Iterable, Sequence

import numpy as np

from .junction import resonance_levels, transmission_closed_form
from .potential import MAX_SIGMA, build_barrier_well
from .spectrum import ThresholdProximityError, bound_states, count_bound_states, trace_curves
from .transfer import find_bound_states_numeric, transmission
from .verify import run_checks, transmission_grid
from .waveguide import (
    EmptyCurveError,
    ModePoint,
    WaveguideConfig,
    cutoff_points,
    dispersion_curve,
    map_parameters,
    transverse_transmission,
)

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_TOL = 0, 1, 2, 3

FIG3_ETAS = (0.0005, 0.05, 0.5)
# fixed grids of the waveguide figure preset, per output kind
FIG6 = {"count": 4, "modes": 4, "k_dispersion": "0.01:10:1000", "k_sectors": "0.05:10:100", "q": "0:15:100", "k_lines": "0:10:101"}


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class SweepSpec:
    """A named 1-D sweep; a single fixed value is a sweep of count 1."""

    name: str
    min: float
    max: float
    count: int
    scale: str = "linear"

    def __post_init__(self):
        if self.scale not in ("linear", "logarithmic"):
            raise UsageError(f"{self.name}: scale must be linear or logarithmic")
        if self.count == 1:
            if self.min != self.max:
                raise UsageError(f"{self.name}: a single-point sweep needs min == max")
            return
        if not self.min < self.max:
            raise UsageError(f"{self.name}: need min < max, got {self.min} .. {self.max}")
        if self.count < 2:
            raise UsageError(f"{self.name}: count must be at least 2")
        if self.scale == "logarithmic" and self.min <= 0:
            raise UsageError(f"{self.name}: logarithmic sweeps need min > 0")

    @classmethod
    def parse(cls, name: str, text: str) -> "SweepSpec":
        """``VALUE`` or ``MIN:MAX:COUNT[:lin|log]``."""
        parts = text.split(":")
        try:
            if len(parts) == 1:
                v = float(parts[0])
                return cls(name, v, v, 1)
            if len(parts) in (3, 4):
                scale = "linear"
                if len(parts) == 4:
                    scale = {"lin": "linear", "log": "logarithmic"}.get(parts[3], parts[3])
                return cls(name, float(parts[0]), float(parts[1]), int(parts[2]), scale)
        except ValueError as exc:
            raise UsageError(f"{name}: cannot parse {text!r} ({exc})") from None
        raise UsageError(f"{name}: expected VALUE or MIN:MAX:COUNT[:lin|log], got {text!r}")

    def values(self) -> np.ndarray:
        if self.count == 1:
            return np.array([self.min])
        if self.scale == "logarithmic":
            return np.geomspace(self.min, self.max, self.count)
        return np.linspace(self.min, self.max, self.count)


class RecordWriter:
    """CSV with one header row, or JSON lines; numbers at fixed significant digits."""

    def __init__(self, stream: IO[str], columns: Sequence[str], as_json: bool, precision: int):
        self.stream = stream
        self.columns = list(columns)
        self.as_json = as_json
        self.precision = precision
        if not as_json:
            stream.write(",".join(self.columns) + "\n")

    def _fmt(self, v):
        if isinstance(v, (bool, np.bool_)):
            return str(bool(v)).lower()
        if isinstance(v, (int, np.integer)):
            return str(int(v))
        if isinstance(v, (float, np.floating)):
            return format(float(v), f".{self.precision}g")
        return "" if v is None else str(v)

    def row(self, *values):
        if len(values) != len(self.columns):
            raise ValueError("row width does not match header")
        if self.as_json:
            rec = {}
            for c, v in zip(self.columns, values):
                if isinstance(v, (float, np.floating)):
                    v = float(format(float(v), f".{self.precision}g"))
                elif isinstance(v, np.integer):
                    v = int(v)
                rec[c] = v
            self.stream.write(json.dumps(rec) + "\n")
        else:
            self.stream.write(",".join(self._fmt(v) for v in values) + "\n")

    def warning(self, message: str):
        if self.as_json:
            self.stream.write(json.dumps({"warning": message}) + "\n")
        else:
            self.stream.write(f"# warning: {message}\n")


# --------------------------------------------------------------------- commands


def cmd_transmission(args, out: IO[str]) -> int:
    log_column = False
    if args.preset == "fig2":
        etas, sigmas = transmission_grid(200)
    elif args.preset == "fig3":
        etas = np.array(FIG3_ETAS)
        sigmas = np.linspace(0.01, 12.0, 1200)
        log_column = True
    else:
        if args.eta is None or args.sigma is None:
            raise UsageError("transmission needs --eta and --sigma (or --preset)")
        etas = SweepSpec.parse("eta", args.eta).values()
        sigmas = SweepSpec.parse("sigma", args.sigma).values()
    if np.any(etas <= 0):
        raise UsageError("eta values must be positive")
    if np.any(sigmas < 0) or np.any(sigmas > MAX_SIGMA):
        raise UsageError(f"sigma values must lie in [0, {MAX_SIGMA}]")

    cols = ["eta", "sigma", "T"]
    if args.model == "both":
        cols += ["T_oracle", "abs_diff"]
    if log_column:
        cols.append("log10_T")
    w = RecordWriter(out, cols, args.json, args.precision)

    breach = False
    for eta in etas:
        closed = transmission_closed_form(eta, sigmas) if args.model != "oracle" else None
        oracle = None
        if args.model != "closed":
            oracle = np.array([transmission(build_barrier_well(s), eta) for s in sigmas])
        for j, s in enumerate(sigmas):
            t = float(oracle[j] if args.model == "oracle" else closed[j])
            row = [float(eta), float(s), t]
            if args.model == "both":
                diff = abs(float(closed[j]) - float(oracle[j]))
                breach |= diff > args.tol
                row += [float(oracle[j]), diff]
            if log_column:
                row.append(math.log10(t))
            w.row(*row)
    if breach:
        print(f"tolerance breach: |T_closed - T_oracle| > {args.tol}", file=sys.stderr)
        return EXIT_TOL
    return EXIT_OK


def cmd_resonances(args, out: IO[str]) -> int:
    if args.count < 1:
        raise UsageError("--count must be at least 1")
    w = RecordWriter(out, ["n", "sigma_n", "residual", "T_n", "jump_ratio_sq"], args.json, args.precision)
    for lv in resonance_levels(args.count):
        w.row(lv.n, lv.sigma_n, float(lv.residual), lv.T_n, lv.jump_ratio_sq)
    return EXIT_OK


def cmd_bound_states(args, out: IO[str]) -> int:
    if args.preset == "fig4":
        args.sweep = "0.05:15:300"
    if (args.sigma is None) == (args.sweep is None):
        raise UsageError("bound-states needs exactly one of --sigma or --sweep")
    if args.sigma is not None:
        s = args.sigma
        if not 0 <= s <= MAX_SIGMA:
            raise UsageError(f"--sigma must lie in [0, {MAX_SIGMA}]")
        w = RecordWriter(out, ["sigma", "n", "zeta", "residual", "oracle_zeta", "diff"], args.json, args.precision)
        if s == 0:
            return EXIT_OK
        try:
            count_bound_states(s)
        except ThresholdProximityError as exc:
            w.warning(str(exc))
        states = bound_states(s)
        oracle = find_bound_states_numeric(build_barrier_well(s), s)
        if len(oracle) != len(states):
            w.warning(f"closed form found {len(states)} states, oracle {len(oracle)}")
        for i, b in enumerate(states):
            oz = oracle[i] if i < len(oracle) else None
            w.row(s, b.n, b.zeta, b.residual, oz, None if oz is None else abs(b.zeta - oz))
        return EXIT_OK
    spec = SweepSpec.parse("sigma", args.sweep)
    sig = spec.values()
    if np.any(sig <= 0) or np.any(sig > MAX_SIGMA):
        raise UsageError(f"sweep must stay within (0, {MAX_SIGMA}]")
    w = RecordWriter(out, ["sigma", "n", "zeta"], args.json, args.precision)
    rows = []
    for curve in trace_curves(sig):
        rows += [(s, curve.n, z) for s, z in curve.samples]
    for s, n, z in sorted(rows, key=lambda r: (r[0], r[1])):
        w.row(s, n, z)
    return EXIT_OK


def _config(args) -> WaveguideConfig:
    try:
        return WaveguideConfig(args.a, args.eps_b, args.eps_m)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _k_values(args, default: str) -> np.ndarray:
    return SweepSpec.parse("k", args.k or default).values()


def cmd_waveguide(args, out: IO[str]) -> int:
    cfg = _config(args)
    kind = args.kind
    if args.preset == "fig6":
        args.count, args.modes, args.q = FIG6["count"], FIG6["modes"], FIG6["q"]
        args.k = FIG6.get(f"k_{kind}")
    if kind == "cutoffs":
        w = RecordWriter(out, ["n", "k_n", "q_n0"], args.json, args.precision)
        for n, (k, q) in enumerate(cutoff_points(cfg, args.count), start=1):
            w.row(n, k, q)
    elif kind == "dispersion":
        ks = _k_values(args, FIG6["k_dispersion"])
        w = RecordWriter(out, ["n", "k", "q"], args.json, args.precision)
        for n in range(args.modes):
            try:
                curve = dispersion_curve(cfg, n, ks)
            except EmptyCurveError as exc:
                w.warning(str(exc))
                continue
            for p in curve.points:
                w.row(n, p.k, p.q)
    elif kind == "sectors":
        ks = _k_values(args, FIG6["k_sectors"])
        qs = SweepSpec.parse("q", args.q or FIG6["q"]).values()
        w = RecordWriter(out, ["k", "q", "sector", "T"], args.json, args.precision)
        for k in ks:
            for q in qs:
                pt = ModePoint(float(k), float(q))
                if map_parameters(cfg, pt).regime != "scattering":
                    continue
                res = transverse_transmission(cfg, pt)
                w.row(pt.k, pt.q, res.sector, res.T)
    elif kind == "lines":
        ks = _k_values(args, FIG6["k_lines"])
        w = RecordWriter(out, ["k", "q_line1", "q_line2"], args.json, args.precision)
        for k in ks:
            w.row(float(k), cfg.line1(float(k)), cfg.line2(float(k)))
    return EXIT_OK


def cmd_verify(args, out: IO[str]) -> int:
    results = run_checks(args.level, seed=args.seed)
    failed = [r for r in results if not r.passed]
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        out.write(f"{status}  {r.name:<24s} {r.seconds:6.2f}s  {r.detail}\n")
    out.write(f"{len(results) - len(failed)}/{len(results)} checks passed\n")
    if failed:
        out.write("failed: " + ", ".join(r.name for r in failed) + "\n")
        return EXIT_VERIFY
    return EXIT_OK


# ----------------------------------------------------------------------- parser


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", default="-", help="output file (default: stdout)")
    common.add_argument("--json", action="store_true", help="emit JSON lines instead of CSV")
    common.add_argument("--precision", type=int, default=17, help="significant digits (default 17)")
    common.add_argument("--tol", type=float, default=1e-8, help="closed/oracle tolerance for --model both")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")

    p = _Parser(prog="junction-spectra", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    t = sub.add_parser("transmission", parents=[common], help="T(eta, sigma) on a grid")
    t.add_argument("--eta", help="VALUE or MIN:MAX:COUNT[:lin|log]")
    t.add_argument("--sigma", help="VALUE or MIN:MAX:COUNT[:lin|log]")
    t.add_argument("--model", choices=("closed", "oracle", "both"), default="closed")
    t.add_argument("--preset", choices=("fig2", "fig3"))
    t.set_defaults(func=cmd_transmission)

    r = sub.add_parser("resonances", parents=[common], help="transparency levels sigma_n")
    r.add_argument("--count", type=int, default=10)
    r.set_defaults(func=cmd_resonances)

    b = sub.add_parser("bound-states", parents=[common], help="bound states at one sigma or along a sweep")
    b.add_argument("--sigma", type=float)
    b.add_argument("--sweep", help="MIN:MAX:COUNT over sigma")
    b.add_argument("--preset", choices=("fig4",))
    b.set_defaults(func=cmd_bound_states)

    g = sub.add_parser("waveguide", parents=[common], help="TE modes of the dielectric step layer")
    g.add_argument("kind", choices=("cutoffs", "dispersion", "sectors", "lines"))
    g.add_argument("--a", type=float, default=1.0)
    g.add_argument("--eps-b", dest="eps_b", type=float, default=2.25)
    g.add_argument("--eps-m", dest="eps_m", type=float, default=1.0)
    g.add_argument("--count", type=int, default=4, help="number of cut-off points")
    g.add_argument("--modes", type=int, default=4, help="number of guided branches n = 0..modes-1")
    g.add_argument("--k", help="k sweep")
    g.add_argument("--q", help="q sweep (sectors)")
    g.add_argument("--preset", choices=("fig6",), help="fixed grids for the (k, q) figure; overrides the sweep flags")
    g.set_defaults(func=cmd_waveguide)

    v = sub.add_parser("verify", parents=[common], help="run all oracle cross-checks")
    v.add_argument("--level", choices=("quick", "full"), default="quick")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Iterable[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(None if argv is None else list(argv))
    if args.precision < 1 or args.precision > 17:
        print("junction-spectra: error: --precision must be in 1..17", file=sys.stderr)
        return EXIT_USAGE
    out = sys.stdout if args.out == "-" else open(args.out, "w", newline="")
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("default")
            return args.func(args, out)
    except UsageError as exc:
        print(f"junction-spectra: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"junction-spectra: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        if out is not sys.stdout:
            out.close()


if __name__ == "__main__":
    sys.exit(main())
