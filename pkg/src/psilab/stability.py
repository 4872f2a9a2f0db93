"""Stable sets: alpha, maximum and local maximum stable sets, simplicial structure."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from psilab.errors import CapExceeded, ContractViolation
from psilab.graph import DEFAULT_MAX_N, Graph, bits
from psilab.setsystem import SetSystem

CLIQUE_COVER_CAP = 12


@dataclass(frozen=True)
class OmegaFamily:
    alpha: int
    sets: tuple[int, ...]  # increasing bitmask order

    def __len__(self):
        return len(self.sets)

    def __contains__(self, S: int) -> bool:
        return S in self.sets


@dataclass(frozen=True)
class PsiFamily:
    graph: Graph
    sets: SetSystem

    def __len__(self):
        return len(self.sets)

    def __contains__(self, A: int) -> bool:
        return A in self.sets


@dataclass(frozen=True)
class SimplicialDecomposition:
    simp: int
    simplices: tuple[int, ...]
    is_simplicial_graph: bool


def _check_cap(G: Graph, max_n: int) -> None:
    if G.n > max_n:
        raise CapExceeded(f"n={G.n} exceeds cap {max_n}")


def is_stable(G: Graph, S: int) -> bool:
    G.check_subset(S)
    for v in bits(S):
        if G.adj[v] & S:
            return False
    return True


def alpha_of(G: Graph, mask: int) -> int:
    """Stability number of the subgraph induced by ``mask`` (memoised per graph)."""
    memo = G._memo.get("alpha")
    if memo is None:
        memo = G._memo["alpha"] = {0: 0}
    return _alpha(G.adj, mask, memo)


def _alpha(adj: tuple[int, ...], mask: int, memo: dict) -> int:
    r = memo.get(mask)
    if r is not None:
        return r
    lo_v = hi_v = -1
    lo_d = 1 << 30
    hi_d = -1
    for v in bits(mask):
        d = (adj[v] & mask).bit_count()
        if d < lo_d:
            lo_v, lo_d = v, d
            if d <= 1:
                break
        if d > hi_d:
            hi_v, hi_d = v, d
    if lo_d <= 1:
        # some maximum stable set contains a vertex of degree <= 1
        r = 1 + _alpha(adj, mask & ~(adj[lo_v] | 1 << lo_v), memo)
    else:
        r = max(
            _alpha(adj, mask & ~(1 << hi_v), memo),
            1 + _alpha(adj, mask & ~(adj[hi_v] | 1 << hi_v), memo),
        )
    memo[mask] = r
    return r


def alpha(G: Graph, max_n: int = DEFAULT_MAX_N) -> int:
    _check_cap(G, max_n)
    return alpha_of(G, G.vertices)


def max_stable(G: Graph, max_n: int = DEFAULT_MAX_N) -> OmegaFamily:
    _check_cap(G, max_n)
    cached = G._memo.get("omega")
    if cached is not None:
        return cached
    a = alpha_of(G, G.vertices)
    adj = G.adj
    out: list[int] = []

    def rec(cand: int, chosen: int, size: int) -> None:
        if size + alpha_of(G, cand) < a:
            return
        if not cand:
            out.append(chosen)
            return
        low = cand & -cand
        v = low.bit_length() - 1
        rec(cand & ~(adj[v] | low), chosen | low, size + 1)
        rec(cand & ~low, chosen, size)

    rec(G.vertices, 0, 0)
    result = OmegaFamily(a, tuple(sorted(out)))
    G._memo["omega"] = result
    return result


def stable_sets(G: Graph) -> Iterator[tuple[int, int]]:
    """Non-empty stable sets as ``(A, N[A])`` pairs, depth-first by lowest new vertex."""
    adj = G.adj

    def rec(cand: int, A: int, closed: int):
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            A2 = A | low
            closed2 = closed | adj[v] | low
            yield A2, closed2
            # only higher-numbered vertices extend, so every set appears once
            yield from rec(cand & ~adj[v], A2, closed2)

    yield from rec(G.vertices, 0, 0)


def is_local_max_stable(G: Graph, A: int) -> bool:
    if not A:
        raise ContractViolation("local maximum stable sets are non-empty")
    if not is_stable(G, A):
        return False
    return alpha_of(G, G.closed_neighborhood(A)) == A.bit_count()


def enumerate_psi(G: Graph, max_n: int = DEFAULT_MAX_N) -> PsiFamily:
    _check_cap(G, max_n)
    cached = G._memo.get("psi")
    if cached is not None:
        return cached
    found = [A for A, closed in stable_sets(G) if alpha_of(G, closed) == A.bit_count()]
    result = PsiFamily(G, SetSystem(G.n, found))
    G._memo["psi"] = result
    return result


def unique_max_stable(G: Graph, max_n: int = DEFAULT_MAX_N) -> int | None:
    omega = max_stable(G, max_n)
    return omega.sets[0] if len(omega.sets) == 1 else None


# ---------------------------------------------------------------------------
# simplicial structure


def is_clique(G: Graph, S: int) -> bool:
    for v in bits(S):
        if (S & ~(1 << v)) & ~G.adj[v]:
            return False
    return True


def maximal_cliques(G: Graph) -> list[int]:
    """Bron-Kerbosch with Tomita pivoting; returns masks in increasing order."""
    adj = G.adj
    out: list[int] = []

    def expand(R: int, P: int, X: int) -> None:
        if not P and not X:
            out.append(R)
            return
        pivot = max(bits(P | X), key=lambda u: (adj[u] & P).bit_count())
        for v in bits(P & ~adj[pivot]):
            low = 1 << v
            expand(R | low, P & adj[v], X & adj[v])
            P &= ~low
            X |= low

    if G.n:
        expand(0, G.vertices, 0)
    return sorted(out)


def simplicial_vertices(G: Graph) -> int:
    return sum(1 << v for v in range(G.n) if is_clique(G, G.adj[v] | 1 << v))


def simplicial_decomposition(G: Graph) -> SimplicialDecomposition:
    simp = simplicial_vertices(G)
    simplices = tuple(Q for Q in maximal_cliques(G) if Q & simp)
    covered = G.closed_neighborhood(simp)
    return SimplicialDecomposition(simp, simplices, covered == G.vertices)


def pendant_and_isolated(G: Graph) -> tuple[int, int]:
    pend = isol = 0
    for v, row in enumerate(G.adj):
        d = row.bit_count()
        if d == 1:
            pend |= 1 << v
        elif d == 0:
            isol |= 1 << v
    return pend, isol


# ---------------------------------------------------------------------------
# coverings


def maximal_stable_sets(G: Graph) -> list[int]:
    full = G.vertices
    out = [A for A, closed in stable_sets(G) if closed == full]
    if not G.n:
        out.append(0)
    return out


def is_well_covered(G: Graph, max_n: int = DEFAULT_MAX_N) -> bool:
    a = alpha(G, max_n)
    return all(S.bit_count() == a for S in maximal_stable_sets(G))


def is_very_well_covered(G: Graph, max_n: int = DEFAULT_MAX_N) -> bool:
    _, isol = pendant_and_isolated(G)
    return not isol and G.n == 2 * alpha(G, max_n) and is_well_covered(G, max_n)


def clique_cover_number(G: Graph, max_n: int = CLIQUE_COVER_CAP) -> int:
    """Minimum number of cliques covering V(G), by exact subset dynamic programming."""
    if G.n > max_n:
        raise CapExceeded(f"clique cover is exponential; n={G.n} exceeds cap {max_n}")
    n = G.n
    if n == 0:
        return 0
    clique = [False] * (1 << n)
    clique[0] = True
    for m in range(1, 1 << n):
        low = m & -m
        v = low.bit_length() - 1
        rest = m ^ low
        clique[m] = clique[rest] and rest & ~G.adj[v] == 0
    best = [0] * (1 << n)
    for m in range(1, 1 << n):
        low = m & -m
        rest = m ^ low
        b = n + 1
        # cliques containing the lowest member of m: low plus a clique subset of rest
        sub = rest
        while True:
            c = sub | low
            if clique[c]:
                cand = 1 + best[m & ~c]
                if cand < b:
                    b = cand
            if not sub:
                break
            sub = (sub - 1) & rest
        best[m] = b
    return best[(1 << n) - 1]


# ---------------------------------------------------------------------------
# matching a stable set into another


def matchable_into(G: Graph, A: int, S: int) -> bool:
    """True iff some matching of G-edges between ``A`` and ``S`` saturates ``A``."""
    if A & S:
        raise ContractViolation("A and S must be disjoint")
    if not is_stable(G, A) or not is_stable(G, S):
        raise ContractViolation("A and S must both be stable")
    return _saturates(G.adj, A, S)


def _saturates(adj: tuple[int, ...], A: int, S: int) -> bool:
    if A.bit_count() > S.bit_count():
        return False
    mate: dict[int, int] = {}

    def augment(a: int, visited: list[int]) -> bool:
        for s in bits(adj[a] & S):
            if visited[0] >> s & 1:
                continue
            visited[0] |= 1 << s
            if s not in mate or augment(mate[s], visited):
                mate[s] = a
                return True
        return False

    for a in bits(A):
        if not adj[a] & S:
            return False
        if not augment(a, [0]):
            return False
    return True
