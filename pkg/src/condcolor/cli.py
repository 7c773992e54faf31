"""Command-line front end.

Exit codes: 0 ok, 1 invalid coloring (or disagreement with --fail-on-disagreement),
2 input/usage error, 3 solver budget exhausted.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import constructions as cons
from . import io
from .coloring import Coloring, CondParams, verify_conditional
from .errors import CondColorError, ExcludedCase, UnsupportedCase
from .graph import FAMILIES, FamilySpec, Graph
from .solver import DEFAULT_BUDGET, chi_r_exact
from .sweep import DEFAULT_SOLVER_CAP, THEOREMS, run_sweep

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
DEFAULT_MAX_SOLVE_VERTICES = 40


class UsageError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """``"3..12"``, ``"13,14,19"`` or a mix such as ``"3..5,9"``."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            if ".." in part:
                lo, hi = part.split("..")
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(part))
        except ValueError:
            raise UsageError(f"bad range {text!r}") from None
    if not out:
        raise UsageError(f"empty range {text!r}")
    return out


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _dump(obj, output: str | None) -> None:
    _emit(json.dumps(obj, indent=2), output)


def _spec(args) -> FamilySpec:
    if not args.family:
        raise UsageError("a graph family is required")
    params = {k: getattr(args, k) for k in ("n", "m", "t", "p") if getattr(args, k) is not None}
    return FamilySpec(args.family, params)


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def cmd_gen(args) -> int:
    g = _spec(args).build()
    _emit(io.WRITERS[args.format](g), args.output)
    return EXIT_OK


def _construction(spec: FamilySpec, r: int):
    p = spec.params
    fam = spec.family
    if fam == "grid2n":
        return cons.grid2n_coloring(p["n"])
    if fam == "cycle_square":
        return cons.cycle_square_coloring(p["n"], r)
    if fam == "strong_grid":
        return cons.strong_grid_coloring(p["n"], p["m"], r)
    if fam in ("web", "wheel"):
        if r != 2:
            raise UnsupportedCase("the web construction is a (4, 2)-coloring; use `solve` for other r")
        return cons.web_dynamic_coloring(p.get("t", 1), p["n"])
    raise UnsupportedCase(f"no closed-form construction for family {fam}; use `solve`")


def cmd_construct(args) -> int:
    spec = _spec(args)
    g = spec.build()
    try:
        cc = _construction(spec, args.r)
    except ExcludedCase as exc:
        print(f"excluded case: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnsupportedCase as exc:
        print(f"unsupported case: {exc}", file=sys.stderr)
        return EXIT_USAGE
    verdict = verify_conditional(g, cc.coloring, CondParams(args.r, cc.claimed_k), args.strict_surjective)
    out = {"family": spec.family, "params": spec.params, "r": args.r, **cc.to_json_obj(), "verdict": verdict.to_json_obj()}
    _dump(out, args.output)
    return EXIT_OK if verdict.ok else EXIT_INVALID


def cmd_verify(args) -> int:
    g = io.read_graph(_read(args.graph))
    try:
        obj = json.loads(_read(args.coloring))
    except json.JSONDecodeError as exc:
        raise UsageError(f"bad coloring JSON: {exc}") from None
    if "coloring" in obj and "colors" not in obj:
        obj = obj["coloring"]
    c = Coloring.from_json_obj(obj)
    k = args.k if args.k is not None else c.k
    verdict = verify_conditional(g, c, CondParams(args.r, k), args.strict_surjective)
    _dump(verdict.to_json_obj(), args.output)
    return EXIT_OK if verdict.ok else EXIT_INVALID


def cmd_solve(args) -> int:
    g: Graph = io.read_graph(_read(args.graph)) if args.graph else _spec(args).build()
    if g.vertex_count > args.max_vertices:
        raise UsageError(
            f"graph has {g.vertex_count} vertices; exact search is meant for <= {args.max_vertices} "
            "(raise --max-vertices to try anyway)"
        )
    res = chi_r_exact(g, args.r, budget=args.budget)
    _dump(res.to_json_obj(), args.output)
    return EXIT_OK if res.solved else EXIT_BUDGET


def cmd_sweep(args) -> int:
    ranges: dict[str, list] = {}
    for key in ("n", "m", "t"):
        val = getattr(args, key)
        if val is not None:
            ranges[key] = parse_range(val)
    if args.r is not None:
        rs: list = []
        for part in args.r.split(","):
            rs.extend(["delta"] if part.strip() == "delta" else parse_range(part))
        ranges["r"] = rs
    report = run_sweep(args.theorem, ranges, solver_cap=args.solver_cap, budget=args.budget)
    _dump(report.to_json_obj(), args.output)
    for k, v in report.summary.items():
        print(f"{k}: {v}", file=sys.stderr)
    bad = report.summary["construction-failed"] + report.summary["solver-disagrees"]
    return EXIT_INVALID if args.fail_on_disagreement and bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--output", "-o", help="write machine output here instead of stdout")

    fam = argparse.ArgumentParser(add_help=False)
    fam.add_argument("family", nargs="?", help=f"one of {', '.join(f.replace('_', '-') for f in FAMILIES)}")
    for name in ("n", "m", "t", "p"):
        fam.add_argument(f"--{name}", type=int)

    parser = argparse.ArgumentParser(prog="condcolor", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[shared, fam], help="emit a family graph")
    p.add_argument("--format", choices=sorted(io.WRITERS), default="json")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("construct", parents=[shared, fam], help="emit and verify a closed-form coloring")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--strict-surjective", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", parents=[shared], help="check a coloring file against a graph file")
    p.add_argument("--graph", required=True)
    p.add_argument("--coloring", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--strict-surjective", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("solve", parents=[shared, fam], help="exact chi_r by backtracking")
    p.add_argument("--graph", help="graph file (DIMACS, JSON or DOT) instead of a family")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--max-vertices", type=int, default=DEFAULT_MAX_SOLVE_VERTICES)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("sweep", parents=[shared], help="check a theorem over a parameter range")
    p.add_argument("theorem", choices=THEOREMS)
    p.add_argument("--n")
    p.add_argument("--m")
    p.add_argument("--t")
    p.add_argument("--r", help="comma list or ranges; 'delta' means the instance's max degree")
    p.add_argument("--solver-cap", type=int, default=DEFAULT_SOLVER_CAP)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--fail-on-disagreement", action="store_true")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, CondColorError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
