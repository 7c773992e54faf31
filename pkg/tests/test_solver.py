import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from condcolor import graph as G
from condcolor import kernels
from condcolor.coloring import CondParams, verify_conditional
from condcolor.errors import InvalidParameter
from condcolor.solver import (
    bound_report,
    chi_r_exact,
    chi_r_oracle,
    chromatic_number,
    greedy_clique_bound,
    lai_lower_bound,
    lemma1_scan,
    search_order,
)
from conftest import oracle_instance_set, small_family_instances

SMALL = {k: g for k, g in small_family_instances(12).items() if g.vertex_count >= 2}
SMALL_KEYS = sorted(SMALL)


def enumerate_chi(g, r):
    """All of V -> {1..k}, no pruning at all."""
    n = g.vertex_count
    for k in range(1, n + 1):
        for colors in itertools.product(range(1, k + 1), repeat=n):
            ok = True
            for v in range(n):
                nb = g.adjacency[v]
                if any(colors[v] == colors[w] for w in nb) or len({colors[w] for w in nb}) < min(r, len(nb)):
                    ok = False
                    break
            if ok:
                return k


class TestBounds:
    def test_lai(self):
        assert lai_lower_bound(G.cycle_square(10), 4) == 5
        assert lai_lower_bound(G.cycle_square(10), 3) == 4
        assert lai_lower_bound(G.path(5), 9) == 3

    def test_lai_bad_r(self):
        with pytest.raises(InvalidParameter):
            lai_lower_bound(G.path(3), 0)

    def test_lemma1_c4(self):
        bound, witness = lemma1_scan(G.cycle(4), 2)
        assert bound == 4 and witness in G.cycle(4).edges

    def test_lemma1_ladder_corner(self):
        g = G.grid2n(5)
        bound, (u, v) = lemma1_scan(g, 2)
        assert bound == 4
        assert g.degree(u) == g.degree(v) == 2 and v in g.neighbors(u)

    def test_lemma1_clique_self_membership(self):
        # every pair of K5 has common neighbours, which never lie in their own neighbourhood
        assert lemma1_scan(G.complete(5), 4) == (0, None)

    def test_lemma1_requires_r_le_delta(self):
        with pytest.raises(InvalidParameter):
            lemma1_scan(G.cycle(5), 3)

    def test_greedy_clique(self):
        assert greedy_clique_bound(G.complete(6)) == 6
        assert greedy_clique_bound(G.cycle(8)) == 2
        assert greedy_clique_bound(G.cycle_square(9)) == 3

    def test_report(self):
        rep = bound_report(G.grid2n(4), 2)
        assert rep.lai_bound == 3 and rep.lemma1_bound == 4
        names = [b["name"] for b in rep.as_list()]
        assert names == ["min_r_delta", "greedy_clique", "adjacent_pair"]


class TestExact:
    @pytest.mark.parametrize("n", range(1, 8))
    @pytest.mark.parametrize("r", [1, 2, 4, 9])
    def test_complete(self, n, r):
        assert chi_r_exact(G.complete(n), r).chi == n

    def test_cycle_square_7(self):
        assert chi_r_exact(G.cycle_square(7), 4).chi == 7

    def test_c5(self):
        res = chi_r_exact(G.cycle(5), 2)
        assert res.chi == 5 and sorted(res.witness.colors) == [1, 2, 3, 4, 5]

    def test_c5_by_full_enumeration(self):
        assert enumerate_chi(G.cycle(5), 2) == 5

    @pytest.mark.parametrize("g,chi", [(G.cycle_square(9), 3), (G.cycle_square(10), 4), (G.cycle(7), 3)])
    def test_chromatic(self, g, chi):
        assert chromatic_number(g) == chi

    def test_witness_compact_and_valid(self):
        res = chi_r_exact(G.grid2n(6), 3)
        assert res.witness.k == res.chi == 4
        assert set(res.witness.colors) == {1, 2, 3, 4}
        assert verify_conditional(G.grid2n(6), res.witness, CondParams(3, 4), strict_surjective=True).ok

    def test_disconnected(self):
        g = G.Graph.from_edges(4, [(0, 1), (2, 3)])
        with pytest.raises(InvalidParameter):
            chi_r_exact(g, 2)

    def test_budget_timeout(self):
        full = chi_r_exact(G.cycle_square(13), 4)
        res = chi_r_exact(G.cycle_square(13), 4, budget=full.nodes_explored // 2)
        assert res.status == "timeout" and res.chi is None and res.witness is None
        assert res.nodes_explored <= full.nodes_explored // 2
        assert res.lower_bounds[-1]["name"] == "search"
        assert res.lower_bounds[-1]["value"] <= full.chi
        with pytest.raises(TimeoutError):
            chromatic_number(G.cycle_square(12), budget=3)

    def test_json_shape(self):
        obj = chi_r_exact(G.cycle(4), 2).to_json_obj()
        assert obj["chi"] == 4 and obj["status"] == "solved"
        assert sorted(obj["witness"]["colors"]) == [1, 2, 3, 4]
        assert {"bounds", "nodes", "elapsed"} <= set(obj)

    def test_search_order_is_bfs_from_max_degree(self):
        order = search_order(G.wheel(6))
        assert order[0] == 0 and sorted(order.tolist()) == list(range(7))

    def test_deterministic(self):
        g = G.web(2, 5)
        a, b = chi_r_exact(g, 2), chi_r_exact(g, 2)
        assert a.witness == b.witness and a.nodes_explored == b.nodes_explored

    @pytest.mark.parametrize("key", ["csq10", "web2_5", "strong3x4", "grid2n_6", "cycle11"])
    @pytest.mark.parametrize("r", [1, 2, 3, 4])
    def test_backends_identical(self, key, r):
        g = SMALL[key]
        a = chi_r_exact(g, r, backend="numpy")
        b = chi_r_exact(g, r, backend="numba")
        assert (a.chi, a.witness, a.nodes_explored) == (b.chi, b.witness, b.nodes_explored)


class TestOracle:
    def test_examples(self):
        assert chi_r_oracle(G.path(3), 2) == 3
        assert chi_r_oracle(G.cycle(4), 2) == 4
        assert chi_r_oracle(G.web(1, 3), 2) == 4

    def test_refuses_large(self):
        with pytest.raises(InvalidParameter):
            chi_r_oracle(G.cycle(11), 2)

    @pytest.mark.parametrize("key", ["path4", "cycle4", "cycle5", "csq6", "ladder2", "web1_4"])
    @pytest.mark.parametrize("r", [1, 2, 3])
    def test_oracle_matches_full_enumeration(self, key, r):
        g = oracle_instance_set()[key]
        assert chi_r_oracle(g, r) == enumerate_chi(g, r)

    @pytest.mark.parametrize("key", sorted(oracle_instance_set()))
    def test_exact_matches_oracle(self, key):
        g = oracle_instance_set()[key]
        for r in (1, 2, 3, 4):
            assert chi_r_exact(g, r).chi == chi_r_oracle(g, r), r


def test_non_monotone_under_induced_subgraph():
    # C5 is the rim of the wheel W(1,5)
    assert chi_r_exact(G.cycle(5), 2).chi == 5
    assert chi_r_exact(G.web(1, 5), 2).chi == 4


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SMALL_KEYS), st.integers(1, 5))
def test_solved_invariants(key, r):
    g = SMALL[key]
    res = chi_r_exact(g, r)
    assert res.solved
    assert verify_conditional(g, res.witness, CondParams(r, res.chi), strict_surjective=True).ok
    assert all(res.chi >= b["value"] for b in res.lower_bounds)
    assert chromatic_number(g) <= res.chi <= g.vertex_count
    if r <= g.max_degree:
        bound, _ = lemma1_scan(g, r)
        assert bound <= res.chi


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(SMALL_KEYS), st.integers(1, 4))
def test_monotone_in_r(key, r):
    g = SMALL[key]
    assert chi_r_exact(g, r).chi <= chi_r_exact(g, r + 1).chi


def test_kernel_search_statuses():
    g = G.cycle(5)
    indptr, indices = g.csr
    req = np.minimum(g.degrees, 2)
    order = search_order(g)
    for backend in ("numpy", "numba"):
        status, _, colors = kernels.search(indptr, indices, order, req, 4, 10**6, backend=backend)
        assert status == kernels.INFEASIBLE
        status, _, colors = kernels.search(indptr, indices, order, req, 5, 10**6, backend=backend)
        assert status == kernels.FOUND and sorted(colors.tolist()) == [1, 2, 3, 4, 5]
