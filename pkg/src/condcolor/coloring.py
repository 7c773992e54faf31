"""Colorings and the conditional-coloring checker.

A conditional ``(k, r)``-coloring is a proper coloring with colors ``1..k`` in
which every vertex ``v`` sees at least ``min(r, d(v))`` distinct colors on its
open neighborhood. Surjectivity onto ``1..k`` is only checked on request.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

import numpy as np

from . import kernels
from .errors import InvalidInput, InvalidParameter
from .graph import Graph


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if self.k < 1:
            raise InvalidInput(f"palette size must be >= 1, got {self.k}")
        bad = [c for c in self.colors if not 1 <= c <= self.k]
        if bad:
            raise InvalidInput(f"colors must lie in 1..{self.k}, got {sorted(set(bad))}")

    @classmethod
    def of(cls, colors: Iterable[int], k: int | None = None) -> "Coloring":
        colors = tuple(int(c) for c in colors)
        if not colors:
            raise InvalidInput("empty coloring")
        return cls(colors, max(colors) if k is None else k)

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.colors, dtype=np.int64)

    def to_json_obj(self) -> dict:
        return {"k": self.k, "colors": list(self.colors)}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Coloring":
        try:
            return cls(tuple(obj["colors"]), int(obj["k"]))
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, InvalidInput):
                raise
            raise InvalidInput(f"bad coloring JSON: {exc}") from exc


@dataclass(frozen=True)
class CondParams:
    r: int
    k: int

    def __post_init__(self) -> None:
        if self.r < 1 or self.k < 1:
            raise InvalidParameter(f"need r >= 1 and k >= 1, got r={self.r}, k={self.k}")


@dataclass(frozen=True)
class ProperViolation:
    u: int
    v: int
    color: int
    kind: str = field(default="proper", init=False)


@dataclass(frozen=True)
class NeighborhoodDeficit:
    vertex: int
    distinct_found: int
    required: int
    kind: str = field(default="neighborhood", init=False)


@dataclass(frozen=True)
class SurjectivityGap:
    missing: tuple[int, ...]
    kind: str = field(default="surjectivity", init=False)


Violation = Union[ProperViolation, NeighborhoodDeficit, SurjectivityGap]


@dataclass(frozen=True)
class Verdict:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def of_kind(self, cls: type) -> list:
        return [v for v in self.violations if isinstance(v, cls)]

    def to_json_obj(self) -> dict:
        out = []
        for v in self.violations:
            if isinstance(v, ProperViolation):
                out.append({"kind": v.kind, "edge": [v.u, v.v], "color": v.color})
            elif isinstance(v, NeighborhoodDeficit):
                out.append(
                    {"kind": v.kind, "vertex": v.vertex, "distinct_found": v.distinct_found, "required": v.required}
                )
            else:
                out.append({"kind": v.kind, "missing": list(v.missing)})
        return {"valid": self.ok, "violations": out}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())


def _as_coloring(c: Union[Coloring, Sequence[int]]) -> Coloring:
    return c if isinstance(c, Coloring) else Coloring.of(c)


def _check_length(g: Graph, c: Coloring) -> None:
    if len(c) != g.vertex_count:
        raise InvalidInput(f"coloring has {len(c)} entries, graph has {g.vertex_count} vertices")


def _proper_violations(g: Graph, colors: np.ndarray) -> list[ProperViolation]:
    if not g.edges:
        return []
    e = np.asarray(g.edges, dtype=np.int64)
    clash = np.nonzero(colors[e[:, 0]] == colors[e[:, 1]])[0]
    return [ProperViolation(int(e[i, 0]), int(e[i, 1]), int(colors[e[i, 0]])) for i in clash]


def verify_proper(g: Graph, c: Union[Coloring, Sequence[int]]) -> Verdict:
    """List every monochromatic edge."""
    c = _as_coloring(c)
    _check_length(g, c)
    return Verdict(tuple(_proper_violations(g, c.as_array())))


def neighborhood_color_counts(g: Graph, c: Coloring, backend: str | None = None) -> np.ndarray:
    indptr, indices = g.csr
    return kernels.neighbor_distinct(indptr, indices, c.as_array(), c.k, backend=backend)


def required_counts(g: Graph, r: int) -> np.ndarray:
    return np.minimum(g.degrees, r)


def verify_conditional(
    g: Graph,
    c: Union[Coloring, Sequence[int]],
    p: CondParams,
    strict_surjective: bool = False,
    backend: str | None = None,
) -> Verdict:
    c = _as_coloring(c)
    _check_length(g, c)
    arr = c.as_array()
    if arr.max() > p.k:
        raise InvalidInput(f"coloring uses color {int(arr.max())} but k={p.k}")
    violations: list[Violation] = list(_proper_violations(g, arr))
    found = kernels.neighbor_distinct(*g.csr, arr, p.k, backend=backend)
    need = required_counts(g, p.r)
    # isolated vertices need min(r, 0) = 0 colors and always pass
    for v in np.nonzero(found < need)[0]:
        violations.append(NeighborhoodDeficit(int(v), int(found[v]), int(need[v])))
    if strict_surjective:
        missing = sorted(set(range(1, p.k + 1)) - set(c.colors))
        if missing:
            violations.append(SurjectivityGap(tuple(missing)))
    return Verdict(tuple(violations))


def is_conditional_coloring(g: Graph, c: Union[Coloring, Sequence[int]], r: int, k: int | None = None) -> bool:
    c = _as_coloring(c)
    return verify_conditional(g, c, CondParams(r, k or c.k)).ok


def distinct_colors_used(c: Union[Coloring, Sequence[int]]) -> int:
    colors = c.colors if isinstance(c, Coloring) else c
    return len(set(colors))


def compact(c: Union[Coloring, Sequence[int]]) -> Coloring:
    """Relabel the used colors onto ``1..m`` keeping their relative order."""
    c = _as_coloring(c)
    rank = {col: i + 1 for i, col in enumerate(sorted(set(c.colors)))}
    return Coloring(tuple(rank[x] for x in c.colors), len(rank))
