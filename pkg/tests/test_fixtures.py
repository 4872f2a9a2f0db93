import pytest

from psilab.fixtures import FAMILY_LITERALS, fig12, fig12_by_corona, fixture, fixture_names, named_corpus
from psilab.graph import to_graph6
from psilab.setsystem import parse_family
from psilab.stability import enumerate_psi, simplicial_vertices

from oracles import brute_psi, masks


def named_edges(G):
    return {frozenset((G.name(u), G.name(v))) for u, v in G.edges()}


def pairs(text):
    return {frozenset(p.split("-")) for p in text.split()}


@pytest.mark.parametrize("name,edges", [
    ("fig10-G", "a-b b-c c-d d-g c-e e-f f-g"),
    ("Fig101-G", "a-b b-c c-d b-e e-f c-f"),
    ("Fig101-H", "u-v v-t y-x x-w v-y t-x"),
    ("fig2922-G", "a-b a-c b-d c-e d-e e-f e-g"),
    ("fig1010-G", "p-a p-b q-b q-c r-b r-c r-d"),
])
def test_listed_edge_lists(name, edges):
    assert named_edges(fixture(name)) == pairs(edges)


def test_fig12_matches_corona_construction():
    G, H = fig12(), fig12_by_corona()
    assert (G.n, G.adj) == (H.n, H.adj)
    assert G.n == 13


@pytest.mark.parametrize("name,psi_facts", [
    # stated membership facts used to double-check the transcriptions
    ("fig10-G", {"a": True, "ed": True, "b": False}),
    ("Fig101-H", {"yt": True, "y": False, "t": False}),
    ("fig2922-G", {"bc": True}),
    ("fig1010-G", {"abc": True, "ab": False, "ac": False, "bc": False}),
])
def test_transcriptions_agree_with_stated_psi_facts(name, psi_facts):
    G = fixture(name)
    psi = enumerate_psi(G).sets
    for members, expected in psi_facts.items():
        assert (G.vset(*members) in psi) == expected


def test_fig1010_simplicial_part():
    G = fixture("fig1010-G")
    assert simplicial_vertices(G) == G.vset("a", "d")


def test_every_fixture_psi_matches_oracle():
    for name, G in named_corpus().items():
        if G.n <= 8:
            assert set(enumerate_psi(G).sets) == masks(brute_psi(G)), name


def test_fixture_names_unique_and_resolvable():
    names = fixture_names()
    assert len(names) == len(set(names))
    for name in names:
        G = fixture(name)
        assert G.label == name
        assert to_graph6(G)


def test_unknown_fixture():
    with pytest.raises(KeyError):
        fixture("nope")


def test_family_literals_parse():
    for letters, text in FAMILY_LITERALS.values():
        F = parse_family(text, list(letters))
        assert F.ground == len(letters)
