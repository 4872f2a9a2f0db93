"""Brute-force reference computations, kept independent of the package internals.

Everything here works on plain Python sets and edge lists read off
``Graph.edges()``; nothing calls into the routines under test.
"""

import itertools

import networkx as nx


def edge_set(G):
    return {frozenset(e) for e in G.edges()}


def subsets(vertices):
    vs = list(vertices)
    for k in range(len(vs) + 1):
        for c in itertools.combinations(vs, k):
            yield frozenset(c)


def brute_stable(E, S):
    return not any(frozenset(p) in E for p in itertools.combinations(S, 2))


def brute_alpha(E, within):
    return max(len(S) for S in subsets(within) if brute_stable(E, S))


def brute_closed_nbhd(E, A, n):
    out = set(A)
    for v in range(n):
        if any(frozenset((v, a)) in E for a in A):
            out.add(v)
    return frozenset(out)


def brute_psi(G):
    """Every non-empty subset tested directly against the definition."""
    E = edge_set(G)
    out = set()
    for A in subsets(range(G.n)):
        if A and brute_stable(E, A) and brute_alpha(E, brute_closed_nbhd(E, A, G.n)) == len(A):
            out.add(A)
    return out


def brute_omega(G):
    E = edge_set(G)
    stable = [S for S in subsets(range(G.n)) if brute_stable(E, S)]
    a = max(len(S) for S in stable)
    return a, {S for S in stable if len(S) == a}


def to_mask(S):
    m = 0
    for v in S:
        m |= 1 << v
    return m


def masks(family):
    return {to_mask(S) for S in family}


def all_matchings(G):
    E = [tuple(e) for e in G.edges()]
    for k in range(len(E) + 1):
        for sub in itertools.combinations(E, k):
            vs = [x for e in sub for x in e]
            if len(vs) == len(set(vs)):
                yield frozenset(sub)


def brute_mu(G):
    return max(len(M) for M in all_matchings(G))


def has_alternating_cycle(G, M):
    """Search for an even cycle alternating between M-edges and non-M edges inside V(M)."""
    M = {frozenset(e) for e in M}
    partner = {}
    for e in M:
        u, v = tuple(e)
        partner[u], partner[v] = v, u
    V = set(partner)
    E = edge_set(G)
    # walk: leave a vertex by a non-matching edge, arrive, then take the matching edge
    for start in V:
        stack = [(start, frozenset([start]))]
        while stack:
            v, seen = stack.pop()
            for w in V:
                if w == v or frozenset((v, w)) not in E or frozenset((v, w)) in M:
                    continue
                x = partner[w]
                if x == start:
                    return True
                if w in seen or x in seen:
                    continue
                stack.append((x, seen | {w, x}))
    return False


def nx_graph(G):
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return H


def reference_graph6(G):
    return nx.to_graph6_bytes(nx_graph(G), header=False).decode().strip()
