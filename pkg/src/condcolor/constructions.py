"""Closed-form conditional colorings for the ladder, cycle squares, strong grids and webs.

Every colorer returns a :class:`ClaimedColoring`: the coloring together with
the ``(k, r)`` pair it is supposed to satisfy and a tag naming the case that
produced it. Nothing here checks its own output; run
:func:`condcolor.coloring.verify_conditional` for that.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .coloring import Coloring, compact
from .errors import ExcludedCase, InvalidParameter, UnsupportedCase


@dataclass(frozen=True)
class ClaimedColoring:
    coloring: Coloring
    claimed_k: int
    claimed_r: int
    source: str

    def __post_init__(self) -> None:
        if self.coloring.k != self.claimed_k:
            raise ValueError("coloring palette does not match claimed_k")

    def to_json_obj(self) -> dict:
        return {
            "source": self.source,
            "claimed_k": self.claimed_k,
            "claimed_r": self.claimed_r,
            "coloring": self.coloring.to_json_obj(),
        }


def _claim(colors, k, r, source) -> ClaimedColoring:
    return ClaimedColoring(Coloring(tuple(colors), k), k, r, source)


@lru_cache(maxsize=None)
def errata() -> tuple[dict, ...]:
    text = resources.files("condcolor").joinpath("data/errata.json").read_text()
    return tuple(json.loads(text))


def grid2n_coloring(n: int) -> ClaimedColoring:
    """Ladder ``P_2 □ P_n``: top row cycles 1,2,3,4 and the bottom row 3,4,1,2."""
    if n < 2:
        raise InvalidParameter(f"grid2n coloring needs n >= 2, got {n}")
    colors = [(col + 2 * row) % 4 + 1 for row in (0, 1) for col in range(n)]
    return _claim(colors, 4, 2 if n == 2 else 3, "prop1")


def _rainbow(n: int, r: int, source: str) -> ClaimedColoring:
    return _claim(range(1, n + 1), n, r, source)


# overwrite tables for the r=3 colouring, keyed by n - i
_CASE3_TAIL = {
    1: {4: 2, 3: 1, 2: 3, 1: 2, 0: 4},
    2: {6: 1, 5: 4, 4: 2, 3: 1, 2: 3, 1: 2, 0: 4},
}


def _case6_split(n: int) -> int:
    return n + 1 - 6 * (n % 5)


def cycle_square_coloring(n: int, r: int) -> ClaimedColoring:
    """Conditional coloring of ``C_n^2`` for the regimes with a closed form.

    ``n <= 5`` (a clique) and ``r >= 4`` with ``6 <= n <= 9`` get the rainbow
    coloring. ``r = 3`` uses the period-4 pattern with a patched tail when
    ``n = 1, 2 (mod 4)``. ``r >= 4`` and ``n > 9`` uses the period-5 pattern,
    spliced into a period-6 run from position ``l = n + 1 - 6 (n mod 5)`` when
    ``5`` does not divide ``n``. Since ``Δ = 4``, any ``r > 4`` behaves as ``r = 4``.
    """
    if n < 3:
        raise InvalidParameter(f"cycle_square needs n >= 3, got {n}")
    if r < 1:
        raise InvalidParameter(f"r must be >= 1, got {r}")
    if n <= 5:
        return _rainbow(n, r, "thm1.case1")
    if r >= 4:
        if n <= 9:
            return _rainbow(n, r, "thm1.case4")
        if n % 5 == 0:
            return _claim(((i - 1) % 5 + 1 for i in range(1, n + 1)), 5, r, "thm1.case5")
        split = _case6_split(n)
        if split < 1:
            raise ExcludedCase(
                f"n={n} is excluded for r=4 (n != 13, 14, 19): the period-6 splice "
                f"would start at l={split} < 1"
            )
        colors = [(i - 1) % 5 + 1 if i <= split - 1 else (i - split) % 6 + 1 for i in range(1, n + 1)]
        return _claim(colors, 6, r, "thm1.case6")
    if r == 3:
        if n % 4 == 3:
            raise UnsupportedCase(f"no closed form for r=3 with n = 3 (mod 4) (n={n}); use the solver")
        if n == 6:
            raise UnsupportedCase(
                "n=6, r=3: the n = 2 (mod 4) tail table spans seven vertices; "
                "exhaustive search gives chi_3(C_6^2) = 5, use the solver"
            )
        colors = [(i - 1) % 4 + 1 for i in range(1, n + 1)]
        for back, col in _CASE3_TAIL.get(n % 4, {}).items():
            colors[n - back - 1] = col
        return _claim(colors, 4, r, "thm1.case3")
    raise UnsupportedCase(
        f"r={r} on C_{n}^2: the value is chi(C_n^2) but no explicit coloring is given; use the solver"
    )


def cycle_square_chromatic(n: int) -> int:
    """``χ(C_n^2)``, which is also ``χ_2(C_n^2)``: ``n`` for a clique, else 3 or 4 by ``n mod 3``."""
    if n < 3:
        raise InvalidParameter(f"cycle_square needs n >= 3, got {n}")
    if n <= 5:
        return n
    return 3 if n % 3 == 0 else 4


def strong_grid_max_degree(n: int, m: int) -> int:
    if min(n, m) == 1:
        return 2 if max(n, m) > 2 else max(n, m) - 1
    if n == m == 2:
        return 3
    return 5 if min(n, m) == 2 else 8


def strong_grid_coloring(n: int, m: int, r: int) -> ClaimedColoring:
    """Coloring of ``P_n ⊗ P_m`` for ``r <= 3`` (parity pattern, 4 colors) or ``r >= Δ``.

    The ``r >= Δ`` pattern tiles 3x3 blocks with colors 1..9, running 1,2,3
    along the longer side; on two-row grids only six colors appear, which is
    exactly ``Δ + 1``.
    """
    if n < 2 or m < 2:
        raise InvalidParameter(f"strong_grid coloring needs n, m >= 2, got {n}, {m}")
    if r < 1:
        raise InvalidParameter(f"r must be >= 1, got {r}")
    delta = strong_grid_max_degree(n, m)
    cells = [(a, b) for a in range(n) for b in range(m)]
    if r <= 3:
        return _claim(((a % 2) + 2 * (b % 2) + 1 for a, b in cells), 4, r, "thm2.case1")
    if r < delta:
        raise UnsupportedCase(f"no closed form for 4 <= r < Δ={delta} on P_{n} ⊗ P_{m}; use the solver")
    if n == m == 2:
        return _rainbow(4, r, "thm2.case2")
    if n <= m:
        raw = [(b % 3) + 3 * (a % 3) + 1 for a, b in cells]
    else:
        raw = [(a % 3) + 3 * (b % 3) + 1 for a, b in cells]
    c = compact(raw)
    return ClaimedColoring(c, c.k, r, "thm2.case2")


def _repeat(seq, length: int) -> list[int]:
    return [seq[j % len(seq)] for j in range(length)]


def _web_ring(ring: int, n: int) -> list[int]:
    """Colors of ``v_{ring,1..n}`` read literally off the four residue cases."""
    q = 4 * (n // 4)
    even = ring % 2 == 0
    res = n % 4
    if res == 0:
        if ring == 1:
            return _repeat([1, 2, 1, 3], n)
        return _repeat([3, 1, 4, 2] if even else [1, 4, 2, 3], n)
    if res == 1:
        if ring == 1:
            return _repeat([1, 2], q) + [3]
        return _repeat([3, 1, 2, 4], q) + [1] if even else _repeat([4, 2, 3, 1], q) + [3]
    if res == 2:
        if ring == 1:
            return _repeat([1, 2], q) + [1, 3]
        return _repeat([3, 4, 2, 1], q) + [4, 2] if even else _repeat([1, 2, 3, 4], q) + [2, 3]
    if ring == 1:
        return _repeat([1, 2], q + 2) + [3]
    return _repeat([2, 3, 4, 1], n) if even else _repeat([3, 1, 2, 4], q) + [3, 2, 1]


def web_dynamic_coloring(t: int, n: int, literal: bool = False) -> ClaimedColoring:
    """Conditional (4, 2)-coloring of the ``(t, n)``-web.

    The hub gets color 4 and each ring is colored in label order. With
    ``literal=False`` the repairs listed in :func:`errata` are applied; the
    only one concerns ``t = 2`` with ``n = 1 (mod 4)``.
    """
    if t < 1 or n < 3:
        raise InvalidParameter(f"web needs t >= 1 and n >= 3, got t={t}, n={n}")
    colors = [4]
    for ring in range(1, t + 1):
        seq = _web_ring(ring, n)
        if not literal and t == 2 and ring == 2 and n % 4 == 1:
            seq = _repeat([2, 4, 3, 1], n - 1) + [4]
        colors.extend(seq)
    return _claim(colors, 4, 2, "thm3")
