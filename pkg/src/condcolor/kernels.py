"""Hot loops: neighborhood color counting and the conditional-coloring search.

Each kernel exists twice. The ``_py``/``_np`` variants are plain Python over
numpy arrays; the ``_jit`` variants are the same code (or a loop rewrite)
compiled by numba. Dispatch goes through :func:`neighbor_distinct` and
:func:`search`, which honour the backend chosen in :mod:`condcolor._accel`.
"""
from __future__ import annotations

import numpy as np

from . import _accel

FOUND = 1
INFEASIBLE = 0
BUDGET = 2


def _neighbor_distinct_np(indptr, indices, colors, k):
    n = indptr.shape[0] - 1
    if indices.shape[0] == 0:
        return np.zeros(n, dtype=np.int64)
    owner = np.repeat(np.arange(n, dtype=np.int64), np.diff(indptr))
    keys = np.unique(owner * (k + 1) + colors[indices])
    return np.bincount(keys // (k + 1), minlength=n).astype(np.int64)


def _neighbor_distinct_loop(indptr, indices, colors, k):
    n = indptr.shape[0] - 1
    out = np.zeros(n, dtype=np.int64)
    stamp = np.full(k + 1, -1, dtype=np.int64)
    for v in range(n):
        d = 0
        for j in range(indptr[v], indptr[v + 1]):
            c = colors[indices[j]]
            if stamp[c] != v:
                stamp[c] = v
                d += 1
        out[v] = d
    return out


def _search_py(indptr, indices, order, req, k, budget, colors):
    """Backtracking search for a conditional coloring with colors ``1..k``.

    ``order`` fixes the vertex sequence, ``req[v]`` is the number of distinct
    neighbor colors vertex ``v`` must see. Colors are tried lowest first and a
    vertex may open at most one new color beyond those already used, so the
    first vertex always gets color 1. On success ``colors`` holds the witness.
    Returns ``(status, nodes)``.
    """
    n = order.shape[0]
    cnt = np.zeros((n, k + 1), dtype=np.int64)
    distinct = np.zeros(n, dtype=np.int64)
    uncolored = np.empty(n, dtype=np.int64)
    for v in range(n):
        uncolored[v] = indptr[v + 1] - indptr[v]
        colors[v] = 0
    tried = np.zeros(n, dtype=np.int64)
    maxused = np.zeros(n + 1, dtype=np.int64)
    nodes = 0
    pos = 0
    while True:
        if pos == n:
            return FOUND, nodes
        if nodes >= budget:
            return BUDGET, nodes
        u = order[pos]
        old = colors[u]
        if old != 0:
            for j in range(indptr[u], indptr[u + 1]):
                w = indices[j]
                cnt[w, old] -= 1
                if cnt[w, old] == 0:
                    distinct[w] -= 1
                uncolored[w] += 1
            colors[u] = 0
        limit = min(maxused[pos] + 1, k)
        c = tried[pos] + 1
        placed = 0
        while c <= limit:
            if cnt[u, c] == 0:
                for j in range(indptr[u], indptr[u + 1]):
                    w = indices[j]
                    cnt[w, c] += 1
                    if cnt[w, c] == 1:
                        distinct[w] += 1
                    uncolored[w] -= 1
                ok = True
                for j in range(indptr[u], indptr[u + 1]):
                    w = indices[j]
                    if distinct[w] + uncolored[w] < req[w]:
                        ok = False
                        break
                if ok:
                    placed = c
                    break
                for j in range(indptr[u], indptr[u + 1]):
                    w = indices[j]
                    cnt[w, c] -= 1
                    if cnt[w, c] == 0:
                        distinct[w] -= 1
                    uncolored[w] += 1
            c += 1
        if placed:
            nodes += 1
            colors[u] = placed
            tried[pos] = placed
            maxused[pos + 1] = max(maxused[pos], placed)
            pos += 1
        else:
            tried[pos] = 0
            pos -= 1
            if pos < 0:
                return INFEASIBLE, nodes


_neighbor_distinct_jit = _accel.njit(_neighbor_distinct_loop)
_search_jit = _accel.njit(_search_py)

_BACKENDS = {
    "numba": (_neighbor_distinct_jit, _search_jit),
    "numpy": (_neighbor_distinct_np, _search_py),
}


def _pick(backend: str | None):
    name = backend or _accel.default_backend()
    if name not in _BACKENDS:
        raise ValueError(f"unknown backend {name!r}")
    if name == "numba" and not _accel.HAVE_NUMBA:  # pragma: no cover
        name = "numpy"
    return _BACKENDS[name]


def neighbor_distinct(indptr, indices, colors, k, backend=None) -> np.ndarray:
    """``|c(N(v))|`` for every vertex ``v``; ``colors`` is 1-based, length ``n``."""
    colors = np.ascontiguousarray(colors, dtype=np.int64)
    return _pick(backend)[0](indptr, indices, colors, int(k))


def search(indptr, indices, order, req, k, budget, backend=None) -> tuple[int, int, np.ndarray]:
    colors = np.zeros(order.shape[0], dtype=np.int64)
    status, nodes = _pick(backend)[1](
        indptr,
        indices,
        np.ascontiguousarray(order, dtype=np.int64),
        np.ascontiguousarray(req, dtype=np.int64),
        int(k),
        int(budget),
        colors,
    )
    return int(status), int(nodes), colors
