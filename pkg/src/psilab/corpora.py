"""Graph streams for sweeps: labelled enumerations, trees, coronas, graph6 files."""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence, TextIO

from psilab.fixtures import fig1010_G
from psilab.graph import (
    DEFAULT_MAX_N,
    SWEEP_CAP,
    Graph,
    corona,
    enumerate_labeled_graphs,
    enumerate_labeled_trees,
    generate,
    parse_graph6,
)

TREE_SWEEP_CAP = 8


def labeled_upto(max_n: int, cap: int = SWEEP_CAP) -> Iterator[Graph]:
    # refuse before yielding anything rather than after sweeping the small orders
    if max_n > cap:
        next(enumerate_labeled_graphs(max_n, cap))
    return itertools.chain.from_iterable(enumerate_labeled_graphs(n, cap) for n in range(1, max_n + 1))


def trees_upto(max_n: int) -> Iterator[Graph]:
    for n in range(1, max_n + 1):
        yield from enumerate_labeled_trees(n)


def default_corona_parts() -> list[Graph]:
    # the last part has a non-greedoid Psi, so both sides of the iff get exercised
    return [
        generate("complete", 1),
        generate("complete", 2),
        generate("complete", 3),
        generate("path", 3),
        generate("path", 4),
        fig1010_G(),
    ]


def coronas_upto(max_n: int, pool: Sequence[Graph] | None = None) -> Iterator[tuple[Graph, tuple[Graph, ...]]]:
    """``(corona(X, parts), parts)`` for every labelled X with 1..max_n vertices and every part assignment."""
    pool = list(pool) if pool is not None else default_corona_parts()
    for n in range(1, max_n + 1):
        for X in enumerate_labeled_graphs(n, cap=max(n, SWEEP_CAP)):
            for parts in itertools.product(pool, repeat=n):
                yield corona(X, parts), parts


def read_graph6(stream: TextIO | Iterable[str], max_n: int = DEFAULT_MAX_N) -> Iterator[Graph]:
    for line in stream:
        s = line.strip()
        if not s or s == ">>graph6<<":
            continue
        yield parse_graph6(s, max_n)
