"""Command-line front end: ``run``, ``converge``, ``verify`` and ``modes``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from ..material import ConfigurationError
from . import config as config_io
from . import runner
from .references import UnknownTableError


def _emit(text: str, path: str | None):
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _cmd_run(args) -> int:
    cfg = config_io.load(args.config)
    records = runner.run(cfg)
    _emit(runner.to_csv(records, "run"), args.output or cfg.output)
    return 0


def _cmd_converge(args) -> int:
    cfg = config_io.load(args.config)
    records = runner.converge(cfg)
    _emit(runner.to_csv(records, "converge"), args.output or cfg.output)
    return 0


def _cmd_verify(args) -> int:
    tables = None if args.tables is None else [t.strip() for t in args.tables.split(",") if t.strip()]
    rows = runner.verify(tables)
    _emit(runner.to_csv(rows, "verify"), args.output)
    counts = {s: sum(r["status"] == s for r in rows) for s in ("PASS", "FAIL", "SKIPPED")}
    print(" ".join(f"{k}={v}" for k, v in counts.items()), file=sys.stderr)
    return 1 if counts["FAIL"] else 0


def _cmd_modes(args) -> int:
    cfg = config_io.load(args.config)
    cases = cfg.expand()
    if len(cases) != 1:
        raise ConfigurationError("modes needs a config with exactly one sweep point")
    case = cases[0]
    if case.analysis == "bending":
        raise ConfigurationError("modes needs a vibration or buckling analysis")
    solution, patch, theory = runner.solve_case(case)
    grid = runner.export_mode_grid(solution, patch, theory, args.mode, args.grid)
    _emit(runner.to_csv(grid.to_records(), f"modes mode={args.mode}"), args.output or cfg.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mcsplate", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="run every sweep point of a config")
    p.add_argument("config")
    p.add_argument("-o", "--output", help="CSV path (default: config output or stdout)")
    p.set_defaults(func=_cmd_run)

    p = sub.add_parser("converge", help="mesh convergence study over the config's mesh list")
    p.add_argument("config")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_converge)

    p = sub.add_parser("verify", help="compare against the stored reference tables")
    p.add_argument("--tables", help="comma-separated table ids, e.g. 3,5,9,10circ (default: all)")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("modes", help="export a mode shape on a uniform parametric grid")
    p.add_argument("config")
    p.add_argument("--grid", type=int, required=True)
    p.add_argument("--mode", type=int, default=1, help="1-based mode index")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_modes)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ConfigurationError, UnknownTableError, runner.CaseError, ValueError, IndexError) as exc:
        print(f"mcsplate {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
