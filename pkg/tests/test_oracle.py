from itertools import combinations

import pytest
from hypothesis import given, settings

from conftest import H, load_corpus, naive_exists, small_hypergraphs
from strongcolor.coloring import verify_strong
from strongcolor.errors import BudgetExhausted, OracleSizeError
from strongcolor.generators import gen_apex_clique, gen_complete_uniform
from strongcolor.oracle import BUDGET_ENV, oracle_exists_coloring, oracle_min_colors

K64 = gen_complete_uniform(6, 4)


def test_naive_oracle_sanity():
    assert naive_exists(H((1, 2, 3)), 3, 3)
    assert not naive_exists(H((1, 2, 3)), 3, 2)
    assert not naive_exists(K64, 3, 4)
    assert naive_exists(K64, 3, 5)


class TestExists:
    def test_complete_6_4_not_four(self):
        assert oracle_exists_coloring(K64, 3, 4) is None

    def test_complete_6_4_five(self):
        C = oracle_exists_coloring(K64, 3, 5)
        r = verify_strong(K64, C, 3)
        assert r.valid and r.colors_used <= 5

    def test_single_edge_rainbow(self):
        C = oracle_exists_coloring(H((1, 2, 3)), 3, 3)
        assert sorted(C.values()) == [1, 2, 3]

    def test_size_guard(self):
        with pytest.raises(OracleSizeError):
            oracle_exists_coloring(H(tuple(range(17))), 2, 2)

    def test_size_guard_configurable(self):
        assert oracle_exists_coloring(H(tuple(range(17))), 2, 2, max_vertices=17) is not None

    def test_budget_is_not_a_negative(self):
        with pytest.raises(BudgetExhausted):
            oracle_exists_coloring(K64, 3, 4, budget=5)

    def test_budget_from_env(self, monkeypatch):
        monkeypatch.setenv(BUDGET_ENV, "5")
        with pytest.raises(BudgetExhausted):
            oracle_exists_coloring(K64, 3, 4)

    def test_rejects_zero_colors(self):
        with pytest.raises(ValueError):
            oracle_exists_coloring(K64, 3, 0)


class TestMinColors:
    def test_pairs_of_three(self):
        assert oracle_min_colors(gen_complete_uniform(3, 2), 2, 5).min_colors == 3

    def test_triples_of_four(self):
        assert oracle_min_colors(gen_complete_uniform(4, 3), 3, 5).min_colors == 4

    def test_apex_k4_needs_five(self):
        hg = H(*((0, a, b) for a, b in combinations(range(1, 5), 2)))
        # every edge {0,a,b} rainbow forces 0,1,2,3,4 pairwise distinct
        assert naive_exists(hg, 3, 5) and not naive_exists(hg, 3, 4)
        assert oracle_min_colors(hg, 3, 6).min_colors == 5

    def test_none_below_cap(self):
        r = oracle_min_colors(K64, 3, 4)
        assert r.min_colors is None and r.witness is None

    def test_budget_spans_all_k(self):
        with pytest.raises(BudgetExhausted):
            oracle_min_colors(K64, 3, 6, budget=30)


def _small_corpus():
    return {k: v for k, v in load_corpus().items() if len(v.vertices) <= 7}


@pytest.mark.parametrize("name", sorted(_small_corpus()))
@pytest.mark.parametrize("strength", [2, 3])
def test_double_oracle_on_corpus(name, strength):
    hg = _small_corpus()[name]
    for k in range(1, 6):
        C = oracle_exists_coloring(hg, strength, k)
        assert (C is not None) == naive_exists(hg, strength, k), (k, C)
        if C is not None:
            assert verify_strong(hg, C, strength).valid
            assert len(set(C.values())) <= k


@settings(max_examples=80, deadline=None)
@given(small_hypergraphs(max_vertex=6, max_edges=6))
def test_double_oracle_random(hg):
    for strength in (2, 3):
        for k in range(1, 5):
            assert (oracle_exists_coloring(hg, strength, k) is not None) == naive_exists(hg, strength, k)


@settings(max_examples=60, deadline=None)
@given(small_hypergraphs(max_vertex=7, max_edges=6))
def test_monotone_in_k(hg):
    for strength in (2, 3):
        found = [oracle_exists_coloring(hg, strength, k) is not None for k in range(1, 7)]
        assert found == sorted(found)


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_apex_needs_k_plus_2(k):
    r = oracle_min_colors(gen_apex_clique(k), 3, k + 3)
    assert r.min_colors == k + 2
