"""Graph type and builders for the families studied here.

Vertices are 0-based integers. Family-specific labels (``v_i`` positions on a
cycle square, ``(row, col)`` product coordinates, ``(ring, position)`` web
labels) live in ``Graph.labels`` and are used only for display.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Hashable, Iterable, Sequence

import numpy as np

from .errors import InvalidParameter

FAMILIES = (
    "path",
    "cycle",
    "complete",
    "wheel",
    "cycle_square",
    "grid2n",
    "strong_grid",
    "web",
    "power_of",
)


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    adjacency: tuple[tuple[int, ...], ...]
    labels: tuple[Hashable, ...] | None = field(default=None, compare=False)
    family: str | None = field(default=None, compare=False)
    params: dict[str, int] = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        if self.vertex_count < 1:
            raise InvalidParameter("a graph needs at least one vertex")
        if len(self.adjacency) != self.vertex_count:
            raise InvalidParameter("adjacency length does not match vertex_count")
        for u, nbrs in enumerate(self.adjacency):
            for i, v in enumerate(nbrs):
                if v == u:
                    raise InvalidParameter(f"self-loop at vertex {u}")
                if not 0 <= v < self.vertex_count:
                    raise InvalidParameter(f"neighbor {v} of {u} out of range")
                if i and nbrs[i - 1] >= v:
                    raise InvalidParameter(f"adjacency of {u} not strictly sorted")
                if u not in self.adjacency[v]:
                    raise InvalidParameter(f"edge ({u},{v}) is not symmetric")
        if self.labels is not None and len(self.labels) != self.vertex_count:
            raise InvalidParameter("labels length does not match vertex_count")

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[Hashable] | None = None,
        family: str | None = None,
        params: dict[str, int] | None = None,
    ) -> "Graph":
        if n < 1:
            raise InvalidParameter("a graph needs at least one vertex")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise InvalidParameter(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParameter(f"edge ({u},{v}) out of range for n={n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(
            n,
            tuple(tuple(sorted(s)) for s in nbrs),
            None if labels is None else tuple(labels),
            family,
            dict(params or {}),
        )

    def __len__(self) -> int:
        return self.vertex_count

    def _check(self, v: int) -> None:
        if not isinstance(v, (int, np.integer)) or not 0 <= v < self.vertex_count:
            raise InvalidParameter(f"vertex {v!r} not in graph of order {self.vertex_count}")

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check(v)
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self.adjacency[v])

    @cached_property
    def degrees(self) -> np.ndarray:
        return np.fromiter((len(a) for a in self.adjacency), dtype=np.int64, count=self.vertex_count)

    @property
    def max_degree(self) -> int:
        return int(self.degrees.max())

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Each undirected edge once as ``(u, v)`` with ``u < v``, lexicographic."""
        return tuple((u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """``(indptr, indices)`` arrays for the numeric kernels."""
        indptr = np.zeros(self.vertex_count + 1, dtype=np.int64)
        np.cumsum(self.degrees, out=indptr[1:])
        indices = np.fromiter(
            (v for nbrs in self.adjacency for v in nbrs), dtype=np.int64, count=int(indptr[-1])
        )
        return indptr, indices

    @cached_property
    def label_map(self) -> dict[Hashable, int]:
        if self.labels is None:
            return {}
        return {lab: i for i, lab in enumerate(self.labels)}

    def label(self, v: int) -> Hashable:
        """Display label of ``v``; 1-based index when the graph carries no labels."""
        return v + 1 if self.labels is None else self.labels[v]

    def bfs_distances(self, source: int, limit: int | None = None) -> dict[int, int]:
        self._check(source)
        dist = {source: 0}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            if limit is not None and dist[u] >= limit:
                continue
            for w in self.adjacency[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def is_connected(self) -> bool:
        return len(self.bfs_distances(0)) == self.vertex_count


def neighbors(g: Graph, v: int) -> tuple[int, ...]:
    return g.neighbors(v)


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def max_degree(g: Graph) -> int:
    return g.max_degree


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidParameter(msg)


def path(n: int) -> Graph:
    _need(n >= 1, f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)), family="path", params={"n": n})


def cycle(n: int) -> Graph:
    _need(n >= 3, f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)), family="cycle", params={"n": n})


def complete(n: int) -> Graph:
    _need(n >= 1, f"complete graph needs n >= 1, got {n}")
    edges = ((u, v) for u in range(n) for v in range(u + 1, n))
    return Graph.from_edges(n, edges, family="complete", params={"n": n})


def wheel(n: int) -> Graph:
    """Hub (vertex 0) joined to an ``n``-cycle on vertices ``1..n``; same layout as ``web(1, n)``."""
    _need(n >= 3, f"wheel needs n >= 3 rim vertices, got {n}")
    g = web(1, n)
    return Graph(g.vertex_count, g.adjacency, g.labels, "wheel", {"n": n})


def power(g: Graph, p: int) -> Graph:
    """Join every pair of vertices at distance ``1..p`` in ``g``."""
    _need(p >= 1, f"power needs p >= 1, got {p}")
    _need(g.is_connected(), "power is defined here for connected graphs only")
    edges = []
    for u in range(g.vertex_count):
        for v, d in g.bfs_distances(u, limit=p).items():
            if u < v and 1 <= d <= p:
                edges.append((u, v))
    return Graph.from_edges(g.vertex_count, edges, g.labels, g.family, g.params)


def cycle_square(n: int) -> Graph:
    """``C_n^2``; vertex ``i`` carries the label ``i + 1`` (the ``v_{i+1}`` of the circular labelling)."""
    _need(n >= 3, f"cycle_square needs n >= 3, got {n}")
    sq = power(cycle(n), 2)
    return Graph(sq.vertex_count, sq.adjacency, tuple(range(1, n + 1)), "cycle_square", {"n": n})


def power_of_cycle(n: int, p: int) -> Graph:
    _need(n >= 3, f"power_of needs n >= 3, got {n}")
    pw = power(cycle(n), p)
    return Graph(pw.vertex_count, pw.adjacency, tuple(range(1, n + 1)), "power_of", {"n": n, "p": p})


def _product(g: Graph, h: Graph, diagonal: bool) -> list[tuple[int, int]]:
    m = h.vertex_count
    edges = []
    for x in range(g.vertex_count):
        for y in range(m):
            u = x * m + y
            for y2 in h.adjacency[y]:
                edges.append((u, x * m + y2))
            for x2 in g.adjacency[x]:
                edges.append((u, x2 * m + y))
                if diagonal:
                    for y2 in h.adjacency[y]:
                        edges.append((u, x2 * m + y2))
    return [(u, v) for u, v in edges if u < v]


def product_labels(g: Graph, h: Graph) -> tuple[tuple[int, int], ...]:
    return tuple((x, y) for x in range(g.vertex_count) for y in range(h.vertex_count))


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """``g □ h``; vertex ``(x, y)`` sits at index ``x * |h| + y``."""
    return Graph.from_edges(
        g.vertex_count * h.vertex_count, _product(g, h, diagonal=False), product_labels(g, h)
    )


def strong_product(g: Graph, h: Graph) -> Graph:
    """``g ⊗ h``: Cartesian edges plus the diagonal edges where both coordinates move."""
    return Graph.from_edges(
        g.vertex_count * h.vertex_count, _product(g, h, diagonal=True), product_labels(g, h)
    )


def grid2n(n: int) -> Graph:
    """The ladder ``P_2 □ P_n``; row 0 is vertices ``0..n-1``, row 1 is ``n..2n-1``."""
    _need(n >= 1, f"grid2n needs n >= 1, got {n}")
    g = cartesian_product(path(2), path(n))
    return Graph(g.vertex_count, g.adjacency, g.labels, "grid2n", {"n": n})


def strong_grid(n: int, m: int) -> Graph:
    _need(n >= 1 and m >= 1, f"strong_grid needs n, m >= 1, got {n}, {m}")
    g = strong_product(path(n), path(m))
    return Graph(g.vertex_count, g.adjacency, g.labels, "strong_grid", {"n": n, "m": m})


def web(t: int, n: int) -> Graph:
    """The ``(t, n)``-web: a wheel with ``t - 1`` further concentric ``n``-cycles.

    Hub ``v_{0,0}`` is vertex 0 and ring vertex ``v_{s,i}`` (``1 <= s <= t``,
    ``1 <= i <= n``) is vertex ``(s - 1) * n + i``.
    """
    _need(t >= 1 and n >= 3, f"web needs t >= 1 and n >= 3, got t={t}, n={n}")

    def idx(s: int, i: int) -> int:
        return (s - 1) * n + i

    edges = [(0, idx(1, i)) for i in range(1, n + 1)]
    for s in range(1, t + 1):
        for i in range(1, n + 1):
            edges.append((idx(s, i), idx(s, i % n + 1)))
            if s < t:
                edges.append((idx(s, i), idx(s + 1, i)))
    labels = [(0, 0)] + [(s, i) for s in range(1, t + 1) for i in range(1, n + 1)]
    return Graph.from_edges(1 + t * n, edges, labels, "web", {"t": t, "n": n})


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: dict[str, int]

    def __post_init__(self) -> None:
        fam = self.family.replace("-", "_")
        if fam not in FAMILIES:
            raise InvalidParameter(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        object.__setattr__(self, "family", fam)
        missing = [p for p in _REQUIRED[fam] if self.params.get(p) is None]
        if missing:
            raise InvalidParameter(f"family {fam} needs parameter(s): {', '.join(missing)}")
        object.__setattr__(self, "params", {p: int(self.params[p]) for p in _REQUIRED[fam]})

    def build(self) -> Graph:
        return build_family(self)


_REQUIRED: dict[str, tuple[str, ...]] = {
    "path": ("n",),
    "cycle": ("n",),
    "complete": ("n",),
    "wheel": ("n",),
    "cycle_square": ("n",),
    "grid2n": ("n",),
    "strong_grid": ("n", "m"),
    "web": ("t", "n"),
    "power_of": ("n", "p"),
}


def build_family(spec: FamilySpec) -> Graph:
    p = spec.params
    fam = spec.family
    if fam == "strong_grid":
        return strong_grid(p["n"], p["m"])
    if fam == "web":
        return web(p["t"], p["n"])
    if fam == "power_of":
        return power_of_cycle(p["n"], p["p"])
    builder: Any = {
        "path": path,
        "cycle": cycle,
        "complete": complete,
        "wheel": wheel,
        "cycle_square": cycle_square,
        "grid2n": grid2n,
    }[fam]
    return builder(p["n"])
