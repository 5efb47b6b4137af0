"""Command line interface and the JSON input/output formats.

Input documents are JSON objects with:

    n             ambient dimension (int)
    supports      n lists of integer n-vectors
    coefficients  n lists of nonzero numbers; strings like "-3/4" parse as
                  exact rationals

Exit codes: 0 success, 1 input error, 2 certificate fail, 3 degenerate
lifting, 4 tracking failures present.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .certificate import certify_system
from .errors import RealHomotopyError, TieDegenerate
from .lattice import Scalar, SupportSystem, support_system
from .mixed_cells import MixedCell, circuit_inequalities
from .pipeline import SolverConfig, solve
from .lattice import build_cayley, log_abs_lifting
from .mixed_cells import enumerate_mixed_cells

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CERTIFICATE = 2
EXIT_DEGENERATE = 3
EXIT_TRACKING = 4


def _parse_coefficient(raw: object) -> Scalar:
    if isinstance(raw, str):
        return Fraction(raw)
    if isinstance(raw, bool) or not isinstance(raw, (int, float)):
        raise ValueError(f"bad coefficient {raw!r}")
    if isinstance(raw, int):
        return Fraction(raw)
    return float(raw)


def load_system(path: str | Path) -> SupportSystem:
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    n = int(doc["n"])
    supports = doc["supports"]
    coefficients = doc["coefficients"]
    if len(supports) != n or len(coefficients) != n:
        raise ValueError("need exactly n supports and n coefficient lists")
    return support_system(
        supports,
        [[_parse_coefficient(c) for c in row] for row in coefficients],
    )


def _cell_doc(cell: MixedCell, inequality_count: int) -> dict:
    return {
        "indices": [[p + 1, q + 1] for p, q in cell.edges],
        "normal": [float(v) for v in cell.normal],
        "normal_primitive": list(cell.primitive_normal)
        if cell.primitive_normal
        else None,
        "volume": cell.volume,
        "inequalities": inequality_count,
    }


def cmd_mixed_cells(args: argparse.Namespace) -> int:
    system = load_system(args.input)
    config = build_cayley(system)
    cells = enumerate_mixed_cells(config, log_abs_lifting(system))
    doc = {
        "n": system.n,
        "m": config.m,
        "cell_count": len(cells.cells),
        "total_volume": cells.total_volume(),
        "cells": [
            _cell_doc(c, len(circuit_inequalities(c, config))) for c in cells.cells
        ],
    }
    json.dump(doc, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return EXIT_OK


def cmd_certify(args: argparse.Namespace) -> int:
    system = load_system(args.input)
    cert, cells = certify_system(system)
    doc = {
        "verdict": "pass" if cert.verdict else "fail",
        "m": cert.m,
        "inequality_count": len(cells.inequalities),
        "margins": sorted(cert.margins),
    }
    json.dump(doc, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return EXIT_OK if cert.verdict else EXIT_CERTIFICATE


def cmd_solve(args: argparse.Namespace) -> int:
    system = load_system(args.input)
    cfg = SolverConfig(
        t0=args.t0, tol=args.tol, force=args.force, threads=args.threads
    )
    report = solve(system, cfg)
    config = build_cayley(system)
    doc = {
        "verdict": "pass" if report.verdict else "fail",
        "uncertified": report.uncertified,
        "cell_count": len(report.cells.cells),
        "cells": [
            _cell_doc(c, len(circuit_inequalities(c, config)))
            for c in report.cells.cells
        ],
        "margins": sorted(report.certificate.margins),
        "start_solution_counts": report.start_solutions,
        "solutions": [
            {
                "point": list(s.point),
                "residual": s.residual,
                "steps": s.steps,
            }
            for s in report.solutions
        ],
        "failures": [
            {
                "cell": f.cell_index,
                "path": f.path_index,
                "status": f.status,
                "message": f.message,
            }
            for f in report.failures
        ],
        "timings": report.timings,
    }
    json.dump(doc, sys.stdout, indent=2)
    sys.stdout.write("\n")
    print(
        f"cells={len(report.cells.cells)} verdict="
        f"{'pass' if report.verdict else 'fail'} "
        f"solutions={len(report.solutions)} failures={len(report.failures)}",
        file=sys.stderr,
    )
    if not report.verdict and not args.force:
        return EXIT_CERTIFICATE
    if report.failures:
        return EXIT_TRACKING
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="realhomotopy",
        description="Count and compute real zeros of sparse polynomial systems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_cells = sub.add_parser("mixed-cells", help="enumerate mixed cells")
    p_cells.add_argument("input")
    p_cells.set_defaults(func=cmd_mixed_cells)

    p_cert = sub.add_parser("certify", help="run the patchwork certificate")
    p_cert.add_argument("input")
    p_cert.set_defaults(func=cmd_certify)

    p_solve = sub.add_parser("solve", help="full solve with path tracking")
    p_solve.add_argument("input")
    p_solve.add_argument("--t0", type=float, default=None)
    p_solve.add_argument("--tol", type=float, default=1e-8)
    p_solve.add_argument("--force", action="store_true")
    p_solve.add_argument("--threads", type=int, default=None)
    p_solve.set_defaults(func=cmd_solve)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TieDegenerate as exc:
        print(f"degenerate lifting: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except (RealHomotopyError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def entry() -> None:
    raise SystemExit(main())
