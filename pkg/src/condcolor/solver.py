"""Exact conditional chromatic numbers and the lower bounds that seed the search."""
from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .coloring import Coloring, compact
from .errors import InvalidParameter
from .graph import Graph

DEFAULT_BUDGET = 10**8
ORACLE_MAX_VERTICES = 10


@dataclass(frozen=True)
class BoundReport:
    lai_bound: int
    chromatic_lb: int | None = None
    lemma1_bound: int = 0
    lemma1_witness: tuple[int, int] | None = None

    def as_list(self) -> list[dict]:
        out = [{"name": "min_r_delta", "value": self.lai_bound}]
        if self.chromatic_lb is not None:
            out.append({"name": "greedy_clique", "value": self.chromatic_lb})
        if self.lemma1_bound:
            out.append({"name": "adjacent_pair", "value": self.lemma1_bound, "witness": list(self.lemma1_witness)})
        return out


@dataclass
class SolveResult:
    r: int
    status: str
    chi: int | None
    witness: Coloring | None
    lower_bounds: list[dict] = field(default_factory=list)
    nodes_explored: int = 0
    elapsed: float = 0.0

    @property
    def solved(self) -> bool:
        return self.status == "solved"

    def to_json_obj(self) -> dict:
        return {
            "status": self.status,
            "r": self.r,
            "chi": self.chi,
            "witness": None if self.witness is None else self.witness.to_json_obj(),
            "bounds": self.lower_bounds,
            "nodes": self.nodes_explored,
            "elapsed": round(self.elapsed, 6),
        }


def lai_lower_bound(g: Graph, r: int) -> int:
    """``min(r, Δ) + 1``: a max-degree vertex and ``min(r, Δ)`` of its neighbors need distinct colors."""
    if r < 1:
        raise InvalidParameter(f"r must be >= 1, got {r}")
    return min(r, g.max_degree) + 1


def _pair_qualifies(g: Graph, u: int, v: int) -> bool:
    nu = set(g.adjacency[u]) - {v}
    nv = set(g.adjacency[v]) - {u}
    # a common neighbour w would have to contain itself, so it never passes
    return all(nv <= set(g.adjacency[w]) for w in nu) and all(nu <= set(g.adjacency[w]) for w in nv)


def lemma1_scan(g: Graph, r: int) -> tuple[int, tuple[int, int] | None]:
    """Best ``d(u) + d(v)`` over adjacent pairs whose other neighbors are fully cross-joined.

    A pair qualifies when ``d(u), d(v) <= r`` and every neighbor of ``u``
    (other than ``v``) is adjacent to all of ``N(v) - {u}``, and symmetrically.
    Returns ``(0, None)`` when no pair qualifies.
    """
    if r > g.max_degree:
        raise InvalidParameter(f"pair bound needs r <= Δ; got r={r}, Δ={g.max_degree}")
    best, witness = 0, None
    deg = g.degrees
    for u, v in g.edges:
        if deg[u] > r or deg[v] > r:
            continue
        s = int(deg[u] + deg[v])
        if s > best and _pair_qualifies(g, u, v):
            best, witness = s, (u, v)
    return best, witness


def greedy_clique_bound(g: Graph) -> int:
    """Size of the largest clique found by growing greedily from every vertex."""
    best = 1
    for s in range(g.vertex_count):
        clique = [s]
        cand = set(g.adjacency[s])
        while cand:
            w = max(sorted(cand), key=lambda x: len(cand & set(g.adjacency[x])))
            clique.append(w)
            cand &= set(g.adjacency[w])
        best = max(best, len(clique))
    return best


def bound_report(g: Graph, r: int) -> BoundReport:
    lemma, wit = lemma1_scan(g, r) if r <= g.max_degree else (0, None)
    return BoundReport(lai_lower_bound(g, r), greedy_clique_bound(g), lemma, wit)


def search_order(g: Graph) -> np.ndarray:
    """BFS order from the lowest-index vertex of maximum degree."""
    start = int(np.argmax(g.degrees))
    seen = [False] * g.vertex_count
    seen[start] = True
    order = []
    queue = deque([start])
    while queue:
        u = queue.popleft()
        order.append(u)
        for w in g.adjacency[u]:
            if not seen[w]:
                seen[w] = True
                queue.append(w)
    return np.asarray(order, dtype=np.int64)


def chi_r_exact(
    g: Graph,
    r: int,
    budget: int = DEFAULT_BUDGET,
    use_lemma1: bool = True,
    backend: str | None = None,
) -> SolveResult:
    """Smallest ``k`` admitting a conditional ``(k, r)``-coloring, with a witness.

    Tries ``k`` upward from the best lower bound. ``budget`` caps the total
    number of search-tree nodes over all ``k``; when it runs out the result
    has ``status="timeout"`` and carries the bound proven so far.
    """
    if r < 1:
        raise InvalidParameter(f"r must be >= 1, got {r}")
    if not g.is_connected():
        raise InvalidParameter("chi_r_exact needs a connected graph")
    t0 = time.perf_counter()
    report = bound_report(g, r)
    bounds = report.as_list()
    if not use_lemma1:
        bounds = [b for b in bounds if b["name"] != "adjacent_pair"]
    lb = max(b["value"] for b in bounds)
    indptr, indices = g.csr
    order = search_order(g)
    req = np.minimum(g.degrees, r)
    nodes = 0
    for k in range(lb, g.vertex_count + 1):
        status, used, colors = kernels.search(indptr, indices, order, req, k, budget - nodes, backend=backend)
        nodes += used
        if status == kernels.FOUND:
            return SolveResult(r, "solved", k, compact(colors), bounds, nodes, time.perf_counter() - t0)
        if status == kernels.BUDGET:
            bounds = bounds + [{"name": "search", "value": k}]
            return SolveResult(r, "timeout", None, None, bounds, nodes, time.perf_counter() - t0)
    raise AssertionError("the rainbow coloring is always conditional; search missed it")


def chromatic_number(g: Graph, budget: int = DEFAULT_BUDGET, backend: str | None = None) -> int:
    res = chi_r_exact(g, 1, budget=budget, backend=backend)
    if not res.solved:
        raise TimeoutError(f"budget of {budget} nodes exhausted")
    return res.chi


def _oracle_admits(adj: list[set[int]], r: int, k: int) -> bool:
    n = len(adj)
    colors = [0] * n
    need = [min(r, len(a)) for a in adj]

    def condition_two() -> bool:
        return all(len({colors[w] for w in adj[v]}) >= need[v] for v in range(n))

    def extend(v: int, used: int) -> bool:
        if v == n:
            return condition_two()
        for c in range(1, min(used + 1, k) + 1):
            if any(colors[w] == c for w in adj[v] if w < v):
                continue
            colors[v] = c
            if extend(v + 1, max(used, c)):
                return True
        colors[v] = 0
        return False

    return extend(0, 0)


def chi_r_oracle(g: Graph, r: int) -> int:
    """Brute force: enumerate every coloring up to renaming of colors, ``k = 1, 2, ...``.

    Vertices are filled in index order and a monochromatic edge rejects the
    branch; the neighborhood condition is checked only on complete colorings.
    """
    if g.vertex_count > ORACLE_MAX_VERTICES:
        raise InvalidParameter(f"oracle refuses graphs above {ORACLE_MAX_VERTICES} vertices")
    if r < 1:
        raise InvalidParameter(f"r must be >= 1, got {r}")
    adj = [set(a) for a in g.adjacency]
    for k in range(1, g.vertex_count + 1):
        if _oracle_admits(adj, r, k):
            return k
    raise AssertionError("unreachable: the rainbow coloring always qualifies")
