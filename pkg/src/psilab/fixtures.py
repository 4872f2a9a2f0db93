"""Named graphs and families used as worked examples.

Edge lists are transcribed from the drawn figures.  Vertices that carry no
letter in a drawing get neutral names (``w1``, ``w2`` ...) so that every
fixture can still be rendered by name.
"""

from __future__ import annotations

import string

from psilab.graph import Graph, corona, from_edges, from_named_edges, generate

LETTERS = string.ascii_lowercase


def _lettered(G: Graph, label: str) -> Graph:
    return G.relabel(label, LETTERS[: G.n])


def _path(n: int) -> Graph:
    return _lettered(generate("path", n), f"P{n}")


def fig10_G() -> Graph:
    return from_named_edges(
        "abcdefg", ["a-b", "b-c", "c-d", "d-g", "c-e", "e-f", "f-g"], "fig10-G"
    )


def fig101_G() -> Graph:
    return from_named_edges("abcdef", ["a-b", "b-c", "c-d", "b-e", "e-f", "c-f"], "Fig101-G")


def fig101_H() -> Graph:
    return from_named_edges(
        ["u", "v", "t", "y", "x", "w"],
        ["u-v", "v-t", "y-x", "x-w", "v-y", "t-x"],
        "Fig101-H",
    )


def fig2922_G() -> Graph:
    return from_named_edges(
        "abcdefg", ["a-b", "a-c", "b-d", "c-e", "d-e", "e-f", "e-g"], "fig2922-G"
    )


def fig2922_H() -> Graph:
    # unlettered in the drawing: bottom row a..d, top row e..h, left to right
    return from_named_edges(
        "abcdefgh",
        ["a-b", "b-c", "c-d", "e-f", "f-g", "g-h", "a-f", "c-g"],
        "fig2922-H",
    )


FIG12_NAMES = ("v1", "v2", "v3", "v4", "k1", "k2", "y", "u", "u1", "x", "m", "z", "t")


def fig12() -> Graph:
    """Corona of the 4-vertex base (path v1-v2-v3-v4 plus chord v1-v3) with K3, K2, P3, K1."""
    edges = [
        "v1-v2", "v2-v3", "v3-v4", "v1-v3",
        "k1-k2", "k1-y", "k2-y", "v1-k1", "v1-k2", "v1-y",
        "u-u1", "v2-u", "v2-u1",
        "x-m", "m-z", "v3-x", "v3-m", "v3-z",
        "v4-t",
    ]
    return from_named_edges(FIG12_NAMES, edges, "fig12")


def fig12_by_corona() -> Graph:
    X = from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 2)])
    parts = [generate("complete", 3), generate("complete", 2), generate("path", 3), generate("complete", 1)]
    return corona(X, parts).relabel("fig12", FIG12_NAMES)


def fig22_G1() -> Graph:
    return from_named_edges(
        ["x", "w1", "z", "w3", "v", "y", "w2", "u"],
        ["x-w1", "w1-z", "z-w3", "w3-v", "y-w2", "w2-u", "w1-y", "w2-w3"],
        "Fig22-G1",
    )


def fig22_G2() -> Graph:
    return from_named_edges(
        ["a", "w1", "w2", "d", "b", "w3", "c"],
        ["a-w1", "w1-w2", "w2-d", "b-w3", "w3-c", "w1-b", "b-w2", "w2-w3"],
        "Fig22-G2",
    )


def fig30_G1() -> Graph:
    return from_named_edges("abcde", ["a-b", "b-c", "c-d", "e-c", "b-e"], "Fig30-G1")


def fig30_G2() -> Graph:
    return from_named_edges("abcdef", ["a-b", "b-c", "c-d", "b-e", "c-f"], "Fig30-G2")


def fig30_G3() -> Graph:
    return from_named_edges(
        ["w1", "w2", "y", "w3", "x", "w4", "w5"],
        ["w1-w2", "w2-y", "x-w4", "w4-w5", "w2-x", "y-w4", "w4-w3"],
        "Fig30-G3",
    )


def fig232_G1() -> Graph:
    return from_named_edges(
        ["w1", "u", "w2", "w3", "w4", "v"],
        ["w1-u", "u-w2", "w2-w3", "w4-v", "w1-w4", "u-w4", "w2-v", "v-w3"],
        "Fig232-G1",
    )


def fig232_G2() -> Graph:
    return from_named_edges(
        ["w1", "a", "w2", "w3", "w4", "b"],
        ["w1-a", "a-w2", "w2-w3", "w4-b", "w4-w2", "a-w4", "w2-b"],
        "Fig232-G2",
    )


def fig232_G3() -> Graph:
    return from_named_edges(
        ["a", "b", "c", "d", "e", "f", "g"],
        ["a-b", "b-c", "c-d", "a-e", "e-f", "e-b", "b-f", "c-g"],
        "Fig232-G3",
    )


def fig1010_G() -> Graph:
    return from_named_edges(
        ["a", "b", "c", "d", "p", "q", "r"],
        ["p-a", "p-b", "q-b", "q-c", "r-b", "r-c", "r-d"],
        "fig1010-G",
    )


def fig23() -> Graph:
    """P5 lettered as drawn: only the first, middle and last vertices carry a, b, c."""
    return from_named_edges(
        ["a", "w1", "b", "w2", "c"], ["a-w1", "w1-b", "b-w2", "w2-c"], "fig23"
    )


def _builders():
    out = {
        "fig10-G": fig10_G,
        "Fig101-G": fig101_G,
        "Fig101-H": fig101_H,
        "fig2922-G": fig2922_G,
        "fig2922-H": fig2922_H,
        "fig12": fig12,
        "Fig22-G1": fig22_G1,
        "Fig22-G2": fig22_G2,
        "Fig30-G1": fig30_G1,
        "Fig30-G2": fig30_G2,
        "Fig30-G3": fig30_G3,
        "Fig232-G1": fig232_G1,
        "Fig232-G2": fig232_G2,
        "Fig232-G3": fig232_G3,
        "fig1010-G": fig1010_G,
        "fig41": lambda: _path(6).relabel("fig41", LETTERS[:6]),
        "fig42": lambda: _path(7).relabel("fig42", LETTERS[:7]),
        "fig23": fig23,
    }
    for n in range(1, 8):
        out[f"P{n}"] = lambda n=n: _path(n)
    for n in range(3, 7):
        out[f"C{n}"] = lambda n=n: _lettered(generate("cycle", n), f"C{n}")
    for n in range(1, 6):
        out[f"K{n}"] = lambda n=n: _lettered(generate("complete", n), f"K{n}")
    for n in range(1, 5):
        out[f"K1,{n}"] = lambda n=n: _lettered(generate("star", n), f"K1,{n}")
    return out


_BUILDERS = _builders()


def fixture_names() -> list[str]:
    return list(_BUILDERS)


def fixture(name: str) -> Graph:
    try:
        return _BUILDERS[name]()
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(_BUILDERS)}") from None


def named_corpus() -> dict[str, Graph]:
    return {name: build() for name, build in _BUILDERS.items()}


# explicit families from the separating examples, as (ground letters, members)
FAMILY_LITERALS = {
    "greedoid-abc": ("abc", "∅;a;b;c;ab;ac;abc"),
    "antimatroid-abcd": ("abcd", "∅;a;c;ab;ac;cd;abc;acd;abcd"),
    "P4-M": ("abcd", "∅;a;b;c;d;ac;ad;bc;bd"),
    "P4-AM": ("abcd", "a;d;ac;ad;bd;abd;acd;abcd"),
}
