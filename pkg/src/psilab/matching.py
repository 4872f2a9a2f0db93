"""Exact matching computations by memoised branching on vertex bitmasks."""

from __future__ import annotations

from typing import Iterable, Iterator

from psilab.errors import CapExceeded, ContractViolation
from psilab.graph import DEFAULT_MAX_N, Graph, bits
from psilab.stability import alpha

Matching = frozenset  # frozenset of (u, v) pairs with u < v

MAX_MATCHINGS_LIMIT = 10**6


class MatchingLimitExceeded(CapExceeded):
    pass


def as_matching(edges: Iterable[tuple[int, int]]) -> Matching:
    return frozenset((min(u, v), max(u, v)) for u, v in edges)


def matched_vertices(M: Matching) -> int:
    m = 0
    for u, v in M:
        m |= 1 << u | 1 << v
    return m


def check_matching(G: Graph, M: Matching) -> None:
    seen = 0
    for u, v in M:
        if not (0 <= u < G.n and 0 <= v < G.n) or not G.has_edge(u, v):
            raise ContractViolation(f"{u}-{v} is not an edge of the graph")
        pair = 1 << u | 1 << v
        if seen & pair:
            raise ContractViolation(f"edge {u}-{v} shares a vertex with another matching edge")
        seen |= pair


def _mu(adj: tuple[int, ...], mask: int, memo: dict) -> int:
    r = memo.get(mask)
    if r is not None:
        return r
    low = mask & -mask
    v = low.bit_length() - 1
    rest = mask ^ low
    r = _mu(adj, rest, memo)
    for u in bits(adj[v] & rest):
        cand = 1 + _mu(adj, rest & ~(1 << u), memo)
        if cand > r:
            r = cand
    memo[mask] = r
    return r


def _mu_memo(G: Graph) -> dict:
    memo = G._memo.get("mu")
    if memo is None:
        memo = G._memo["mu"] = {0: 0}
    return memo


def matching_number(G: Graph, mask: int | None = None) -> int:
    return _mu(G.adj, G.vertices if mask is None else mask, _mu_memo(G))


def max_matching(G: Graph, max_n: int = DEFAULT_MAX_N) -> tuple[int, Matching]:
    if G.n > max_n:
        raise CapExceeded(f"n={G.n} exceeds cap {max_n}")
    memo = _mu_memo(G)
    mask = G.vertices
    mu = _mu(G.adj, mask, memo)
    edges = []
    while mask:
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        target = _mu(G.adj, mask, memo)
        if _mu(G.adj, rest, memo) == target:
            mask = rest
            continue
        for u in bits(G.adj[v] & rest):
            if 1 + _mu(G.adj, rest & ~(1 << u), memo) == target:
                edges.append((v, u))
                mask = rest & ~(1 << u)
                break
    return mu, as_matching(edges)


def _count_pm(adj: tuple[int, ...], mask: int, memo: dict) -> int:
    r = memo.get(mask)
    if r is not None:
        return r
    low = mask & -mask
    v = low.bit_length() - 1
    rest = mask ^ low
    r = 0
    for u in bits(adj[v] & rest):
        r += _count_pm(adj, rest & ~(1 << u), memo)
    memo[mask] = r
    return r


def count_perfect_matchings(G: Graph, mask: int | None = None, max_n: int = DEFAULT_MAX_N) -> int:
    """Perfect matchings of the subgraph induced by ``mask`` (default: all of G)."""
    if G.n > max_n:
        raise CapExceeded(f"n={G.n} exceeds cap {max_n}")
    mask = G.vertices if mask is None else mask
    if mask.bit_count() % 2:
        return 0
    memo = G._memo.get("pm")
    if memo is None:
        memo = G._memo["pm"] = {0: 1}
    return _count_pm(G.adj, mask, memo)


def is_uniquely_restricted(G: Graph, M: Matching) -> bool:
    check_matching(G, M)
    return count_perfect_matchings(G, matched_vertices(M)) == 1


def maximum_matchings(G: Graph, limit: int = MAX_MATCHINGS_LIMIT) -> Iterator[Matching]:
    """Every matching of size mu(G); raises MatchingLimitExceeded past ``limit``."""
    memo = _mu_memo(G)
    adj = G.adj
    target = _mu(adj, G.vertices, memo)
    produced = 0

    def rec(mask: int, need: int, acc: tuple) -> Iterator[tuple]:
        if need == 0:
            yield acc
            return
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        if _mu(adj, rest, memo) >= need:
            yield from rec(rest, need, acc)
        for u in bits(adj[v] & rest):
            sub = rest & ~(1 << u)
            if _mu(adj, sub, memo) >= need - 1:
                yield from rec(sub, need - 1, acc + ((v, u),))

    for edges in rec(G.vertices, target, ()):
        produced += 1
        if produced > limit:
            raise MatchingLimitExceeded(f"more than {limit} maximum matchings; raise the limit")
        yield as_matching(edges)


def all_max_matchings_uniquely_restricted(
    G: Graph, limit: int = MAX_MATCHINGS_LIMIT, max_n: int = DEFAULT_MAX_N
) -> bool:
    return first_non_ur_max_matching(G, limit, max_n) is None


def first_non_ur_max_matching(
    G: Graph, limit: int = MAX_MATCHINGS_LIMIT, max_n: int = DEFAULT_MAX_N
) -> Matching | None:
    if G.n > max_n:
        raise CapExceeded(f"n={G.n} exceeds cap {max_n}")
    for M in maximum_matchings(G, limit):
        if count_perfect_matchings(G, matched_vertices(M)) != 1:
            return M
    return None


def is_koenig_egervary(G: Graph, max_n: int = DEFAULT_MAX_N) -> bool:
    return alpha(G, max_n) + max_matching(G, max_n)[0] == G.n
