"""Command-line front end.

Exit codes:
  0  success
  2  unreadable or malformed input (arguments, instance, result or rhythm)
  3  k out of range for the instance
  4  requested solver does not apply to the instance or k
  5  oracle enumeration larger than --budget
"""
from __future__ import annotations

import argparse
import json
import logging
import math
import sys
from pathlib import Path

from .dp import solve_dp
from .geometry import DiameterSet, GeometryError, Solution, is_asymmetric, polygon_area
from .instances import InstanceError, dump_instance, generate_instance, load_instance
from .lattice import IntervalVector, interval_vector, solve_lattice
from .oracle import DEFAULT_BUDGET, BudgetExceeded, oracle_solve
from .plotting import render_svg, result_title
from .rhythm import decode_rhythm, encode_rhythm
from .smallk import solve_quadrilateral, solve_triangle

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_K_RANGE = 3
EXIT_MISMATCH = 4
EXIT_BUDGET = 5

log = logging.getLogger("asymgon")


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _round12(x: float) -> float:
    return float(f"{x:.12g}")


def _check_k(ds: DiameterSet, k: int) -> None:
    if not 3 <= k < ds.n:
        raise CliError(f"k={k} must satisfy 3 <= k < n={ds.n}", EXIT_K_RANGE)


def _fast(ds: DiameterSet, k: int) -> Solution:
    if k == 3:
        return solve_triangle(ds)
    if k == 4:
        return solve_quadrilateral(ds)
    raise CliError(f"the fast solver handles k=3 and k=4 only, got k={k}", EXIT_MISMATCH)


def _lattice(ds: DiameterSet, k: int) -> Solution:
    if not ds.is_even():
        raise CliError("the lattice solver needs evenly spaced diameters", EXIT_MISMATCH)
    sol = solve_lattice(ds.n, k)
    # a rotated lattice has the same indices but its own coordinates
    return Solution(sol.selection, polygon_area(ds, sol.selection), sol.solver)


def dispatch(ds: DiameterSet, k: int, solver: str = "auto", threads: int = 1,
             budget: int = DEFAULT_BUDGET) -> Solution:
    _check_k(ds, k)
    if solver == "auto":
        if ds.is_even():
            return _lattice(ds, k)
        if k in (3, 4):
            sol = _fast(ds, k)
            if is_asymmetric(sol.selection, ds.n):
                return sol
            log.warning("fast path returned a diameter; falling back to dp")
        return solve_dp(ds, k, threads=threads)
    if solver == "lattice":
        return _lattice(ds, k)
    if solver == "dp":
        return solve_dp(ds, k, threads=threads)
    if solver == "fast":
        return _fast(ds, k)
    if solver == "oracle":
        return _oracle(ds, k, budget)
    raise CliError(f"unknown solver {solver!r}", EXIT_PARSE)


def _oracle(ds: DiameterSet, k: int, budget: int, asymmetric: bool = True) -> Solution:
    try:
        return oracle_solve(ds, k, require_asymmetric=asymmetric, budget=budget)
    except BudgetExceeded as exc:
        raise CliError(str(exc), EXIT_BUDGET) from exc


def result_dict(ds: DiameterSet, sol: Solution) -> dict:
    idx = list(sol.selection.indices)
    out = {
        "n": ds.n,
        "k": sol.selection.k,
        "solver": sol.solver.value,
        "area": _round12(sol.area),
        "vertex_indices": idx,
        "angles": list(ds.angles),
        "vertex_angles": [ds.angle(x) for x in idx],
    }
    if ds.is_even():
        iv = interval_vector(sol.selection, ds.size)
        out["interval_vector"] = list(iv.gaps)
        out["bits"] = encode_rhythm(sol.selection, ds.size)
    return out


def _emit(obj, out: str | None = None) -> None:
    text = json.dumps(obj, indent=2) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_solve(args) -> int:
    ds = _load(args.instance)
    sol = dispatch(ds, args.k, args.solver, args.threads, args.budget)
    res = result_dict(ds, sol)
    if args.svg:
        render_svg(ds, res["vertex_indices"], args.svg, result_title(res))
    _emit(res, args.out)
    return EXIT_OK


def cmd_oracle(args) -> int:
    ds = _load(args.instance)
    if args.symmetric:
        if not 3 <= args.k <= ds.size:
            raise CliError(f"k={args.k} must satisfy 3 <= k <= 2n={ds.size}", EXIT_K_RANGE)
    else:
        _check_k(ds, args.k)
    sol = _oracle(ds, args.k, args.budget, asymmetric=not args.symmetric)
    _emit(result_dict(ds, sol), args.out)
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.n < 3:
        raise CliError(f"need n >= 3, got {args.n}", EXIT_PARSE)
    text = dump_instance(generate_instance(args.n, args.seed, args.even))
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _read_result(path) -> tuple[DiameterSet, dict]:
    try:
        res = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise CliError(f"cannot read result {path}: {exc}", EXIT_PARSE) from exc
    if not isinstance(res, dict):
        raise CliError("result must be a JSON object", EXIT_PARSE)
    try:
        ds = DiameterSet(tuple(res["angles"]))
        idx = res["vertex_indices"]
        if not isinstance(idx, list) or not all(isinstance(x, int) for x in idx):
            raise TypeError("vertex_indices must be a list of integers")
    except (KeyError, TypeError, GeometryError) as exc:
        raise CliError(f"malformed result {path}: {exc}", EXIT_PARSE) from exc
    return ds, res


def cmd_render(args) -> int:
    ds, res = _read_result(args.result)
    try:
        render_svg(ds, res["vertex_indices"], args.svg, result_title(res))
    except GeometryError as exc:
        raise CliError(f"cannot render: {exc}", EXIT_PARSE) from exc
    return EXIT_OK


def cmd_rhythm(args) -> int:
    try:
        if args.action == "decode":
            iv = decode_rhythm(args.value)
            _emit({"bits": args.value, "m": iv.m, "interval_vector": list(iv.gaps)})
        else:
            nums = [int(v) for v in args.value.replace(",", " ").split()]
            if args.m is None:
                iv = IntervalVector(tuple(nums), sum(nums))
            else:
                iv = interval_vector(nums, args.m)
            _emit({"bits": encode_rhythm(iv), "m": iv.m, "interval_vector": list(iv.gaps)})
    except (ValueError, GeometryError) as exc:
        raise CliError(str(exc), EXIT_PARSE) from exc
    return EXIT_OK


def _load(path) -> DiameterSet:
    try:
        return load_instance(path)
    except InstanceError as exc:
        raise CliError(str(exc), EXIT_PARSE) from exc


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="asymgon",
        description="Maximum-area asymmetric polygons on the endpoints of diameters.",
        epilog="exit codes: 2 bad input, 3 k out of range, 4 solver mismatch, 5 over budget",
    )
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="solve an instance and print a JSON result")
    s.add_argument("instance")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--solver", choices=["auto", "lattice", "dp", "oracle", "fast"], default="auto")
    s.add_argument("--threads", type=int, default=1)
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s.add_argument("--svg", metavar="PATH", help="also render the solution to this SVG file")
    s.add_argument("-o", "--out", help="write the JSON here instead of stdout")
    s.set_defaults(func=cmd_solve)

    o = sub.add_parser("oracle", help="exhaustive search, for small instances")
    o.add_argument("instance")
    o.add_argument("--k", type=int, required=True)
    o.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    o.add_argument("--symmetric", action="store_true", help="allow antipodal vertex pairs")
    o.add_argument("-o", "--out")
    o.set_defaults(func=cmd_oracle)

    g = sub.add_parser("gen", help="write a random or evenly spaced instance")
    g.add_argument("n", type=int)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--even", action="store_true")
    g.add_argument("-o", "--out")
    g.set_defaults(func=cmd_gen)

    r = sub.add_parser("render", help="draw a result JSON as SVG")
    r.add_argument("result")
    r.add_argument("svg")
    r.set_defaults(func=cmd_render)

    h = sub.add_parser("rhythm", help="convert between bit strings and interval vectors")
    h.add_argument("action", choices=["encode", "decode"])
    h.add_argument("value", help="bits to decode, or gaps (or indices with --m) to encode")
    h.add_argument("--m", type=int, help="lattice size; VALUE is then a list of indices")
    h.set_defaults(func=cmd_rhythm)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
