"""Theorem sweeps: build each instance, check the construction, run the solver, compare."""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Iterable, Sequence

from . import constructions as cons
from .coloring import CondParams, verify_conditional
from .errors import UnsupportedCase
from .graph import FamilySpec, Graph
from .solver import DEFAULT_BUDGET, chi_r_exact

THEOREMS = ("prop1", "thm1", "thm2", "thm3")
AGREEMENTS = ("confirmed", "construction-failed", "solver-disagrees", "unclaimed-probe", "skipped")
DEFAULT_SOLVER_CAP = 14

DEFAULT_RANGES: dict[str, dict[str, list]] = {
    "prop1": {"n": list(range(2, 8)), "r": [2, 3]},
    "thm1": {"n": list(range(3, 13)), "r": [2, 3, 4]},
    "thm2": {"n": [2, 3, 4], "m": [2, 3, 4], "r": [2, 3, "delta"]},
    "thm3": {"t": [1, 2, 3], "n": list(range(3, 9)), "r": [2]},
}


@lru_cache(maxsize=None)
def claims_table() -> dict:
    text = resources.files("condcolor").joinpath("data/claims.json").read_text()
    return json.loads(text)


def _eval(expr: str, env: dict) -> object:
    # bundled data file; expressions are arithmetic over the instance parameters
    return eval(expr, {"__builtins__": {}}, dict(env))


def claimed_chi(theorem: str, params: dict[str, int], r: int, delta: int) -> tuple[int | None, str | None]:
    """Claimed ``χ_r`` for one instance and the case that claims it, or ``(None, None)``."""
    entry = claims_table()[theorem]
    for key, values in entry.get("exclude", {}).items():
        if params.get(key) in values:
            return None, None
    env = {"n": 0, "m": 0, "t": 0, **params, "r": r, "delta": delta}
    for rule in entry["rules"]:
        if _eval(rule["when"], env):
            return int(_eval(rule["chi"], env)), rule["case"]
    return None, None


@dataclass
class SweepRow:
    family: str
    params: dict[str, int]
    r: int
    claimed_chi: int | None
    case: str | None
    constructed_ok: bool | None
    construction_source: str | None
    solver_chi: int | None
    solver_status: str
    agreement: str
    note: str = ""

    def sort_key(self) -> tuple:
        p = self.params
        return (self.family, p.get("n", -1), p.get("m", -1), p.get("t", -1), self.r)


@dataclass
class SweepReport:
    theorem: str
    rows: list[SweepRow] = field(default_factory=list)

    @property
    def summary(self) -> dict[str, int]:
        counts = Counter(row.agreement for row in self.rows)
        return {a: counts.get(a, 0) for a in AGREEMENTS}

    def to_json_obj(self) -> dict:
        return {"theorem": self.theorem, "rows": [asdict(r) for r in self.rows], "summary": self.summary}


def _construct(theorem: str, params: dict[str, int], r: int):
    if theorem == "prop1":
        return cons.grid2n_coloring(params["n"])
    if theorem == "thm1":
        return cons.cycle_square_coloring(params["n"], r)
    if theorem == "thm2":
        return cons.strong_grid_coloring(params["n"], params["m"], r)
    if r != 2:
        raise UnsupportedCase("the web construction is a (4, 2)-coloring only")
    return cons.web_dynamic_coloring(params["t"], params["n"])


def _agreement(claimed: int | None, built: bool | None, solved: int | None) -> str:
    if claimed is None:
        return "unclaimed-probe"
    if solved is not None:
        return "confirmed" if solved == claimed and built is not False else "solver-disagrees"
    if built is False:
        return "construction-failed"
    return "skipped"


def evaluate_instance(
    theorem: str,
    g: Graph,
    params: dict[str, int],
    r: int,
    solver_cap: int = DEFAULT_SOLVER_CAP,
    budget: int = DEFAULT_BUDGET,
    backend: str | None = None,
) -> SweepRow:
    delta = g.max_degree
    claimed, case = claimed_chi(theorem, params, r, delta)
    notes = []
    if claimed is None and any(
        params.get(k) in v for k, v in claims_table()[theorem].get("exclude", {}).items()
    ):
        notes.append("excluded from the theorem statement")

    built, source = None, None
    try:
        cc = _construct(theorem, params, r)
    except UnsupportedCase as exc:
        notes.append(f"no construction: {exc}")
    else:
        source = cc.source
        verdict = verify_conditional(g, cc.coloring, CondParams(r, cc.claimed_k))
        # a construction only counts if it also attains the claimed value
        built = verdict.ok and (claimed is None or cc.claimed_k <= claimed)
        if not verdict.ok:
            notes.append(f"construction has {len(verdict.violations)} violation(s)")

    solved, status = None, "skipped"
    if g.vertex_count <= solver_cap:
        res = chi_r_exact(g, r, budget=budget, backend=backend)
        status = res.status
        solved = res.chi
        if not res.solved:
            notes.append(f"budget exhausted after {res.nodes_explored} nodes")

    return SweepRow(
        g.family or theorem,
        dict(params),
        r,
        claimed,
        case,
        built,
        source,
        solved,
        status,
        _agreement(claimed, built, solved),
        "; ".join(notes),
    )


def _instances(theorem: str, ranges: dict[str, Sequence]) -> Iterable[tuple[str, dict[str, int]]]:
    family = claims_table()[theorem]["family"]
    if theorem == "thm2":
        for n in ranges["n"]:
            for m in ranges["m"]:
                if n <= m:
                    yield family, {"n": n, "m": m}
    elif theorem == "thm3":
        for t in ranges["t"]:
            for n in ranges["n"]:
                yield family, {"t": t, "n": n}
    else:
        for n in ranges["n"]:
            yield family, {"n": n}


def run_sweep(
    theorem: str,
    ranges: dict[str, Sequence] | None = None,
    solver_cap: int = DEFAULT_SOLVER_CAP,
    budget: int = DEFAULT_BUDGET,
    backend: str | None = None,
) -> SweepReport:
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem!r}; choose from {', '.join(THEOREMS)}")
    full = {**DEFAULT_RANGES[theorem], **(ranges or {})}
    report = SweepReport(theorem)
    for family, params in _instances(theorem, full):
        g = FamilySpec(family, params).build()
        rs = sorted({g.max_degree if r == "delta" else int(r) for r in full["r"]})
        for r in rs:
            report.rows.append(evaluate_instance(theorem, g, params, r, solver_cap, budget, backend))
    report.rows.sort(key=SweepRow.sort_key)
    return report
