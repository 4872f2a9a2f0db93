import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from psilab.errors import ContractViolation
from psilab.fixtures import fixture
from psilab.graph import from_edges, generate, induced_subgraph
from psilab.matching import (
    MatchingLimitExceeded,
    all_max_matchings_uniquely_restricted,
    as_matching,
    count_perfect_matchings,
    first_non_ur_max_matching,
    is_koenig_egervary,
    is_uniquely_restricted,
    matching_number,
    max_matching,
    maximum_matchings,
)
from psilab.theorems import is_bipartite

from oracles import all_matchings, brute_mu, has_alternating_cycle, nx_graph


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    slots = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(slots), unique=True)) if slots else []
    return from_edges(n, chosen)


def named(G, *pairs):
    return as_matching((G.vset(a).bit_length() - 1, G.vset(b).bit_length() - 1) for a, b in pairs)


@pytest.mark.parametrize("G,mu", [
    (generate("cycle", 5), 2),
    (generate("complete", 4), 2),
    (fixture("Fig101-H"), 2),
    (generate("empty", 3), 0),
])
def test_matching_number_examples(G, mu):
    assert matching_number(G) == mu
    size, M = max_matching(G)
    assert size == mu == len(M)


@settings(max_examples=150)
@given(graphs(max_n=10))
def test_max_matching_matches_networkx(G):
    mu, M = max_matching(G)
    assert mu == len(nx.max_weight_matching(nx_graph(G), maxcardinality=True))
    seen = set()
    for u, v in M:
        assert G.has_edge(u, v) and u not in seen and v not in seen
        seen |= {u, v}


@pytest.mark.parametrize("G,count", [
    (generate("path", 2), 1),
    (generate("cycle", 4), 2),
    (generate("cycle", 6), 2),
    (generate("complete", 4), 3),
    (generate("path", 3), 0),
])
def test_perfect_matching_counts(G, count):
    assert count_perfect_matchings(G) == count


@settings(max_examples=100)
@given(graphs(max_n=8))
def test_perfect_matching_count_matches_oracle(G):
    expected = sum(1 for M in all_matchings(G) if 2 * len(M) == G.n)
    assert count_perfect_matchings(G) == expected


def test_uniquely_restricted_examples():
    H = fixture("Fig101-H")
    assert is_uniquely_restricted(H, named(H, ("u", "v"), ("x", "w")))
    assert not is_uniquely_restricted(H, named(H, ("x", "y"), ("t", "v")))
    assert is_uniquely_restricted(H, frozenset())


def test_uniquely_restricted_rejects_non_matchings():
    P3 = generate("path", 3)
    with pytest.raises(ContractViolation):
        is_uniquely_restricted(P3, as_matching([(0, 1), (1, 2)]))
    with pytest.raises(ContractViolation):
        is_uniquely_restricted(P3, as_matching([(0, 2)]))


@settings(max_examples=100)
@given(graphs(max_n=7))
def test_ur_iff_no_alternating_cycle(G):
    for M in all_matchings(G):
        assert is_uniquely_restricted(G, M) == (not has_alternating_cycle(G, M))


@settings(max_examples=100)
@given(graphs(max_n=8))
def test_maximum_matchings_enumeration(G):
    mu = brute_mu(G)
    expected = {M for M in all_matchings(G) if len(M) == mu}
    got = list(maximum_matchings(G))
    assert len(got) == len(set(got))
    assert {frozenset(frozenset(e) for e in M) for M in got} == {frozenset(frozenset(e) for e in M) for M in expected}


def test_maximum_matchings_limit():
    K6 = generate("complete", 6)
    assert len(list(maximum_matchings(K6))) == 15
    with pytest.raises(MatchingLimitExceeded):
        list(maximum_matchings(K6, limit=10))


def test_all_max_matchings_ur_examples():
    assert all_max_matchings_uniquely_restricted(fixture("Fig101-G"))
    H = fixture("Fig101-H")
    assert not all_max_matchings_uniquely_restricted(H)
    M = first_non_ur_max_matching(H)
    assert M is not None and not is_uniquely_restricted(H, M)
    assert all_max_matchings_uniquely_restricted(fixture("fig2922-G"))
    assert all_max_matchings_uniquely_restricted(fixture("fig2922-H"))


def test_koenig_egervary_examples():
    assert not is_koenig_egervary(generate("complete", 3))
    G = fixture("fig2922-G")
    H, _ = induced_subgraph(G, G.closed_neighborhood(G.vset("b", "c")))
    assert not is_koenig_egervary(H)
    assert is_koenig_egervary(fixture("P4"))


@settings(max_examples=150)
@given(graphs(max_n=8))
def test_bipartite_graphs_are_koenig_egervary(G):
    if is_bipartite(G):
        assert is_koenig_egervary(G)
