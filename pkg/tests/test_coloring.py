import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from condcolor import graph as G
from condcolor import kernels
from condcolor.coloring import (
    Coloring,
    CondParams,
    NeighborhoodDeficit,
    ProperViolation,
    SurjectivityGap,
    compact,
    distinct_colors_used,
    verify_conditional,
    verify_proper,
)
from condcolor.errors import InvalidInput, InvalidParameter
from conftest import small_family_instances

INSTANCES = {k: g for k, g in small_family_instances(20).items() if g.vertex_count >= 2}
KEYS = sorted(INSTANCES)


def naive_valid(g, colors, r):
    """Straight from the definition, no shared code with the verifier."""
    for u in range(g.vertex_count):
        for v in g.adjacency[u]:
            if colors[u] == colors[v]:
                return False
        seen = {colors[w] for w in g.adjacency[u]}
        if len(seen) < min(r, len(g.adjacency[u])):
            return False
    return True


@st.composite
def graph_and_coloring(draw, max_k=6):
    g = INSTANCES[draw(st.sampled_from(KEYS))]
    k = draw(st.integers(1, max_k))
    colors = draw(st.lists(st.integers(1, k), min_size=g.vertex_count, max_size=g.vertex_count))
    return g, Coloring(tuple(colors), k)


class TestVerifyProper:
    def test_c4_alternating(self):
        assert verify_proper(G.cycle(4), [1, 2, 1, 2]).ok

    def test_triangle_one_clash(self):
        v = verify_proper(G.cycle(3), [1, 1, 2])
        assert v.violations == (ProperViolation(0, 1, 1),)

    def test_ladder_pattern(self):
        g = G.grid2n(8)
        colors = [(c + 2 * row) % 4 + 1 for row in (0, 1) for c in range(8)]
        assert verify_proper(g, colors).ok

    def test_length_mismatch(self):
        with pytest.raises(InvalidInput):
            verify_proper(G.cycle(4), [1, 2, 1])


class TestVerifyConditional:
    def test_even_cycle_parity_deficits(self):
        v = verify_conditional(G.cycle(6), [1, 2, 1, 2, 1, 2], CondParams(2, 2))
        deficits = v.of_kind(NeighborhoodDeficit)
        assert len(deficits) == 6 and not v.of_kind(ProperViolation)
        assert all(d.distinct_found == 1 and d.required == 2 for d in deficits)

    def test_period5_on_c10_square(self):
        colors = [(i - 1) % 5 + 1 for i in range(1, 11)]
        assert verify_conditional(G.cycle_square(10), colors, CondParams(4, 5)).ok

    def test_period5_breaks_at_wrap_on_c11_square(self):
        colors = [(i - 1) % 5 + 1 for i in range(1, 12)]
        v = verify_conditional(G.cycle_square(11), colors, CondParams(4, 5))
        # v_1 and v_11 share color 1 and are adjacent
        assert ProperViolation(0, 10, 1) in v.violations
        assert not v.ok

    def test_color_above_k_rejected(self):
        with pytest.raises(InvalidInput):
            verify_conditional(G.cycle(4), [1, 2, 3, 2], CondParams(2, 2))

    def test_strict_surjective(self):
        g = G.cycle(4)
        c = Coloring((1, 2, 3, 4), 5)
        assert verify_conditional(g, c, CondParams(2, 5)).ok
        v = verify_conditional(g, c, CondParams(2, 5), strict_surjective=True)
        assert v.violations == (SurjectivityGap((5,)),)

    def test_isolated_vertex_trivially_fine(self):
        assert verify_conditional(G.path(1), [1], CondParams(3, 1)).ok

    def test_reports_all_violations(self):
        v = verify_conditional(G.cycle(3), [1, 1, 1], CondParams(2, 1))
        assert len(v.of_kind(ProperViolation)) == 3
        assert len(v.of_kind(NeighborhoodDeficit)) == 3

    def test_json(self):
        v = verify_conditional(G.cycle(3), [1, 1, 2], CondParams(2, 2), strict_surjective=True)
        obj = json.loads(v.to_json())
        assert obj["valid"] is False
        kinds = [x["kind"] for x in obj["violations"]]
        assert "proper" in kinds and "neighborhood" in kinds
        assert obj["violations"][0] == {"kind": "proper", "edge": [0, 1], "color": 1}

    def test_bad_params(self):
        with pytest.raises(InvalidParameter):
            CondParams(0, 3)


class TestColoringType:
    def test_distinct_colors_used(self):
        assert distinct_colors_used([1, 1, 1]) == 1
        assert distinct_colors_used(Coloring.of([1, 2, 3, 4])) == 4

    def test_range_enforced(self):
        with pytest.raises(InvalidInput):
            Coloring((0, 1), 2)
        with pytest.raises(InvalidInput):
            Coloring((1, 3), 2)

    def test_compact(self):
        c = compact(Coloring((2, 7, 2, 9), 9))
        assert c == Coloring((1, 2, 1, 3), 3)

    def test_json_round_trip(self):
        c = Coloring((1, 3, 2), 4)
        assert Coloring.from_json_obj(json.loads(json.dumps(c.to_json_obj()))) == c
        with pytest.raises(InvalidInput):
            Coloring.from_json_obj({"colors": [1]})


@settings(max_examples=300, deadline=None)
@given(graph_and_coloring())
def test_r1_matches_proper(data):
    g, c = data
    assert verify_conditional(g, c, CondParams(1, c.k)).ok == verify_proper(g, c).ok


@settings(max_examples=300, deadline=None)
@given(graph_and_coloring(max_k=8), st.integers(1, 8))
def test_matches_definition(data, r):
    g, c = data
    assert verify_conditional(g, c, CondParams(r, c.k)).ok == naive_valid(g, c.colors, r)


@settings(max_examples=200, deadline=None)
@given(graph_and_coloring(max_k=8), st.integers(2, 8))
def test_monotone_in_r(data, r):
    g, c = data
    if verify_conditional(g, c, CondParams(r, c.k)).ok:
        for smaller in range(1, r):
            assert verify_conditional(g, c, CondParams(smaller, c.k)).ok


@settings(max_examples=200, deadline=None)
@given(graph_and_coloring(max_k=8), st.integers(1, 8))
def test_deficit_counts_are_exact(data, r):
    g, c = data
    for d in verify_conditional(g, c, CondParams(r, c.k)).of_kind(NeighborhoodDeficit):
        naive = set()
        for w in g.adjacency[d.vertex]:
            naive.add(c.colors[w])
        assert d.distinct_found == len(naive)
        assert d.required == min(r, len(g.adjacency[d.vertex]))


@settings(max_examples=200, deadline=None)
@given(graph_and_coloring(max_k=6), st.integers(1, 6), st.randoms(use_true_random=False))
def test_permutation_invariance(data, r, rnd):
    g, c = data
    perm = list(range(1, c.k + 1))
    rnd.shuffle(perm)
    relabeled = Coloring(tuple(perm[x - 1] for x in c.colors), c.k)
    p = CondParams(r, c.k)
    assert verify_conditional(g, c, p).ok == verify_conditional(g, relabeled, p).ok


@settings(max_examples=150, deadline=None)
@given(graph_and_coloring(max_k=9))
def test_backends_agree(data):
    g, c = data
    indptr, indices = g.csr
    a = kernels.neighbor_distinct(indptr, indices, c.as_array(), c.k, backend="numpy")
    b = kernels.neighbor_distinct(indptr, indices, c.as_array(), c.k, backend="numba")
    assert np.array_equal(a, b)
