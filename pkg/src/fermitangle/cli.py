"""Command-line interface: ``sweep``, ``check`` and ``zero``.

Exit codes: 0 success, 1 failed check, 2 bad configuration, 3 I/O error.
"""
from __future__ import annotations

import argparse
import math
import sys

from . import checks
from .closed_form import find_two_tangle_zero
from .errors import FermiTangleError
from .fock import Party, make_w_state
from .measures import equal_params, full_report
from .sweep import DEFAULT_STEPS, Grid, SweepConfig, parse_angle, write_sweep
from .rindler import R_MAX

EXIT_OK, EXIT_CHECK_FAILED, EXIT_CONFIG, EXIT_IO = 0, 1, 2, 3


def _angle(text):
    try:
        return parse_angle(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fermitangle",
        description="Negativity tangles of fermionic W/GHZ states seen by accelerated observers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sw = sub.add_parser("sweep", help="sweep acceleration parameters and write CSV")
    sw.add_argument("--state", default="w", help="w, ghz or custom:<path> (default: w)")
    sw.add_argument("--r-min", type=_angle, default=0.0)
    sw.add_argument("--r-max", type=_angle, default=R_MAX)
    sw.add_argument("--r-steps", type=int, default=DEFAULT_STEPS)
    sw.add_argument("--ra-min", type=_angle)
    sw.add_argument("--ra-max", type=_angle)
    sw.add_argument("--ra-steps", type=int)
    sw.add_argument("--out", help="CSV output path (default: standard output)")
    sw.add_argument("--digits", type=int, default=10, help="significant digits (default 10)")

    sub.add_parser("check", help="run the reference-value regression table")
    sub.add_parser("zero", help="locate the W two-tangle zero crossing")
    return parser


def _config(args) -> SweepConfig:
    state = args.state.strip()
    custom_path = None
    if state.lower().startswith("custom:"):
        custom_path = state.split(":", 1)[1]
        scenario = "custom"
    else:
        scenario = state.lower()
    ra_given = [v is not None for v in (args.ra_min, args.ra_max, args.ra_steps)]
    ra_grid = None
    if any(ra_given):
        if scenario == "w":
            raise ValueError("--ra-* flags apply to ghz/custom states only")
        ra_min = args.ra_min if args.ra_min is not None else 0.0
        ra_max = args.ra_max if args.ra_max is not None else ra_min
        steps = args.ra_steps if args.ra_steps is not None else (1 if ra_min == ra_max else DEFAULT_STEPS)
        ra_grid = Grid(ra_min, ra_max, steps)
    r_grid = Grid(args.r_min, args.r_max, args.r_steps)
    return SweepConfig(scenario, r_grid, ra_grid, args.out, args.digits, custom_path)


def cmd_sweep(args) -> int:
    try:
        cfg = _config(args)
    except ValueError as exc:
        print(f"fermitangle sweep: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        text, rows = write_sweep(cfg)
    except OSError as exc:
        print(f"fermitangle sweep: {exc}", file=sys.stderr)
        return EXIT_IO
    except FermiTangleError as exc:
        print(f"fermitangle sweep: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    if cfg.output_path is None:
        sys.stdout.write(text)
    else:
        last = rows[-1][2]
        print(f"wrote {len(rows)} rows to {cfg.output_path}")
        print(f"last point: r={rows[-1][0]:.6g} r_a={rows[-1][1]:.6g} "
              f"N_A={last.one_tangles[Party.A]:.6g} pi_tangle={last.pi_tangle:.6g}")
    return EXIT_OK


def cmd_check(args) -> int:
    results = checks.run_all()
    for res in results:
        print(res.format())
    failed = [r.key for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed"
          + (f"; failed: {', '.join(failed)}" if failed else ""))
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def cmd_zero(args) -> int:
    r_star = find_two_tangle_zero()
    w = make_w_state()
    print(f"r* = {float(r_star):.10f}")
    print(f"cos^2(r*) = {math.cos(r_star) ** 2:.10f}  (2 - sqrt(2) = {2 - math.sqrt(2):.10f})")
    for dr in (-0.01, 0.01):
        r = r_star + dr
        print(f"two-tangle(r* {dr:+.2f}) = {full_report(w, equal_params(r)).two('A', 'B'):.10g}")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return {"sweep": cmd_sweep, "check": cmd_check, "zero": cmd_zero}[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
