"""Checkable statements about local maximum stable sets, and corpus sweeps.

Each theorem id maps to one predicate over a single graph.  Equivalences are
split into implications; a failed implication is reported with its direction
(``"(i)=>(ii)"`` etc.) and the sets that witness it.
"""

from __future__ import annotations

import json
import multiprocessing
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Iterator, Sequence

from psilab import matching as mt
from psilab import setsystem as ss
from psilab import stability as st
from psilab.errors import CapExceeded, UnknownPredicate
from psilab.graph import (
    DEFAULT_MAX_N,
    Graph,
    bits,
    components,
    induced_subgraph,
    to_graph6,
)

THEOREM_IDS = (
    "NT1",
    "BERGE5",
    "FOREST2",
    "BIP22",
    "TRI33",
    "CORONA333",
    "UNION3",
    "ACC_IFF_INTERVAL",
    "LEM_UNIQUE4",
    "LEM_UNION1",
    "ANTI8",
    "MATROID6",
    "SIMPLICIAL7",
    "TRI_MATROID_C1",
    "TREE_ANTI_C2",
    "TREE_TRIMMED",
    "SIMP_LOCAL_POSET2",
)

STATEMENTS = {
    "NT1": "every local maximum stable set lies inside some maximum stable set",
    "BERGE5": "a stable set S is maximum iff every stable set disjoint from S has a matching saturating it into S",
    "FOREST2": "for a forest, Psi is a greedoid",
    "BIP22": "for bipartite G, Psi is a greedoid iff all maximum matchings are uniquely restricted",
    "TRI33": "for triangle-free G, Psi is a greedoid iff all maximum matchings are uniquely "
    "restricted and N[A] induces a Koenig-Egervary graph for every A in Psi",
    "CORONA333": "for a corona with non-empty parts, Psi is a greedoid iff every Psi(H_i) is",
    "UNION3": "if A, B are in Psi and A|B is stable then A|B is in Psi",
    "ACC_IFF_INTERVAL": "Psi is accessible iff Psi is an interval greedoid",
    "LEM_UNIQUE4": "if Omega = {S} then S - {x} is in Psi for every x in S",
    "LEM_UNION1": "|Omega| = 1 iff Psi is closed under union",
    "ANTI8": "Psi is an antimatroid iff |Omega| = 1 and Psi is accessible",
    "MATROID6": "(i) Psi matroid  (ii) every S in Omega inside simp(G)  "
    "(iii) G simplicial and every non-simplicial vertex in >= 2 simplices",
    "SIMPLICIAL7": "for simplicial G the simplices cover V and their number equals theta = alpha",
    "TRI_MATROID_C1": "for triangle-free G: (i) Psi matroid  (ii) every S in Omega inside pend|isol  "
    "(iii) components are K1, K2 or have their pendant set as unique maximum stable set",
    "TREE_ANTI_C2": "for a tree: (i) Psi antimatroid  (ii) |Omega| = 1  "
    "(iii) some S in Omega gives every outside vertex >= 2 neighbours in S",
    "TREE_TRIMMED": "for a tree with n >= 3: (i) Psi matroid  (ii) pend(T) is the unique maximum "
    "stable set; (ii) => Psi is a trimmed matroid, confirmed by an explicit witness",
    "SIMP_LOCAL_POSET2": "if every S in Omega lies inside simp(G), Psi is a local poset greedoid",
}


# ---------------------------------------------------------------------------
# per-graph facts


class GraphFacts:
    """Lazily computed invariants of one graph, shared by all theorem checks."""

    def __init__(self, G: Graph, parts: Sequence[Graph] | None = None,
                 max_n: int = DEFAULT_MAX_N, matching_limit: int = mt.MAX_MATCHINGS_LIMIT):
        if G.n > max_n:
            raise CapExceeded(f"n={G.n} exceeds cap {max_n}")
        self.G = G
        self.parts = parts
        self.max_n = max_n
        self.matching_limit = matching_limit

    @cached_property
    def psi(self) -> ss.SetSystem:
        return st.enumerate_psi(self.G, self.max_n).sets

    @cached_property
    def omega(self) -> st.OmegaFamily:
        return st.max_stable(self.G, self.max_n)

    @cached_property
    def unique_mss(self) -> bool:
        return len(self.omega.sets) == 1

    @cached_property
    def accessible(self) -> tuple[bool, ss.Witness | None]:
        return ss.is_accessible(self.psi)

    @cached_property
    def greedoid(self) -> tuple[bool, ss.Witness | None]:
        if not self.accessible[0]:
            return self.accessible
        return ss.satisfies_exchange(self.psi)

    @cached_property
    def union_closed(self) -> tuple[bool, ss.Witness | None]:
        return ss.is_union_closed(self.psi)

    @cached_property
    def antimatroid(self) -> tuple[bool, ss.Witness | None]:
        if not self.greedoid[0]:
            return self.greedoid
        return self.union_closed

    @cached_property
    def matroid(self) -> tuple[bool, ss.Witness | None]:
        if not self.greedoid[0]:
            return self.greedoid
        return ss.is_hereditary(self.psi)

    @cached_property
    def interval_greedoid(self) -> tuple[bool, ss.Witness | None]:
        return ss.is_interval_greedoid(self.psi)

    @cached_property
    def local_poset(self) -> tuple[bool, ss.Witness | None]:
        if not self.greedoid[0]:
            return self.greedoid
        return ss._local_poset_rule(self.psi)

    @cached_property
    def simplicial(self) -> st.SimplicialDecomposition:
        return st.simplicial_decomposition(self.G)

    @cached_property
    def pend_isol(self) -> tuple[int, int]:
        return st.pendant_and_isolated(self.G)

    @cached_property
    def omega_in_simp(self) -> bool:
        simp = self.simplicial.simp
        return all(S & ~simp == 0 for S in self.omega.sets)

    @cached_property
    def n_edges(self) -> int:
        return self.G.n_edges

    @cached_property
    def components(self) -> list[int]:
        return components(self.G)

    @cached_property
    def acyclic(self) -> bool:
        return self.n_edges == self.G.n - len(self.components)

    @cached_property
    def tree(self) -> bool:
        return self.G.n >= 1 and len(self.components) == 1 and self.acyclic

    @cached_property
    def bipartite(self) -> bool:
        return is_bipartite(self.G)

    @cached_property
    def triangle_free(self) -> bool:
        return is_triangle_free(self.G)

    @cached_property
    def non_ur_max_matching(self):
        return mt.first_non_ur_max_matching(self.G, self.matching_limit, self.max_n)

    @cached_property
    def all_max_matchings_ur(self) -> bool:
        return self.non_ur_max_matching is None

    def first_non_ke_neighbourhood(self) -> int | None:
        """First A in Psi whose closed neighbourhood does not induce a Koenig-Egervary graph."""
        for A in self.psi.sets:
            H, _ = induced_subgraph(self.G, self.G.closed_neighborhood(A))
            if not mt.is_koenig_egervary(H, self.max_n):
                return A
        return None


def is_bipartite(G: Graph) -> bool:
    colour = [-1] * G.n
    for s in range(G.n):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for w in bits(G.adj[v]):
                if colour[w] < 0:
                    colour[w] = 1 - colour[v]
                    stack.append(w)
                elif colour[w] == colour[v]:
                    return False
    return True


def is_triangle_free(G: Graph) -> bool:
    for u, v in G.edges():
        if G.adj[u] & G.adj[v]:
            return False
    return True


# ---------------------------------------------------------------------------
# verdicts


@dataclass
class TheoremVerdict:
    theorem: str
    label: str | None
    graph6: str
    applicable: bool
    holds: bool
    witness: dict | None = None
    skipped: bool = False
    unconfirmed: bool = False
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "label": self.label,
            "graph6": self.graph6,
            "applicable": self.applicable,
            "holds": self.holds,
            "skipped": self.skipped,
            "unconfirmed": self.unconfirmed,
            "witness": self.witness,
            "notes": self.notes,
        }


class _Check:
    """Collects failed implications for one theorem on one graph."""

    def __init__(self, facts: GraphFacts):
        self.facts = facts
        self.failures: list[dict] = []
        self.notes: list[str] = []
        self.unconfirmed = False

    def sets(self, *masks: int) -> list[list[str]]:
        return [self.facts.G.render(m) for m in masks]

    def fail(self, direction: str, **detail) -> None:
        self.failures.append({"direction": direction, **detail})

    def implies(self, direction: str, lhs: bool, rhs: bool, **detail) -> None:
        if lhs and not rhs:
            self.fail(direction, **detail)

    def iff(self, names: tuple[str, str], lhs: bool, rhs: bool, **detail) -> None:
        a, b = names
        self.implies(f"{a}=>{b}", lhs, rhs, **detail)
        self.implies(f"{b}=>{a}", rhs, lhs, **detail)


def _witness_sets(c: _Check, w: ss.Witness | None) -> dict:
    return {} if w is None else {"rule": w.rule, "sets": c.sets(*w.sets)}


def _nt1(c: _Check) -> bool:
    omega = c.facts.omega.sets
    for A in c.facts.psi.sets:
        if not any(A & ~S == 0 for S in omega):
            c.fail("psi-inside-omega", A=c.sets(A)[0])
            return True
    return True


def _maximal_stable_within(G: Graph, within: int) -> Iterator[int]:
    """Stable subsets of ``within`` that cannot be extended inside ``within``."""
    adj = G.adj

    def rec(cand: int, A: int, blocked: int):
        if not cand:
            if blocked & within == within:
                yield A
            return
        low = cand & -cand
        v = low.bit_length() - 1
        yield from rec(cand & ~(adj[v] | low), A | low, blocked | adj[v] | low)
        # skipping v only makes sense if something later can still block it
        if (cand ^ low) & adj[v] or blocked & low:
            yield from rec(cand ^ low, A, blocked)

    if not within:
        yield 0
        return
    yield from rec(within, 0, 0)


def _berge(c: _Check) -> bool:
    G, omega = c.facts.G, c.facts.omega
    full = G.vertices
    # matchability is inherited by subsets, so maximal disjoint stable sets suffice
    for S in omega.sets:
        for A in _maximal_stable_within(G, full & ~S):
            if A and not st._saturates(G.adj, A, S):
                c.fail("omega=>matchable", S=c.sets(S)[0], A=c.sets(A)[0])
                return True
    # converse: any stable non-maximum S has a disjoint stable set not matchable into it
    omega_set = set(omega.sets)
    candidates = [0] + [A for A, _ in st.stable_sets(G)]
    for S in candidates:
        if S in omega_set:
            continue
        blocker = None
        for T in omega.sets:
            A = T & ~S
            if not st._saturates(G.adj, A, S):
                blocker = A
                break
        if blocker is None:
            for A in _maximal_stable_within(G, full & ~S):
                if not st._saturates(G.adj, A, S):
                    blocker = A
                    break
        if blocker is None:
            c.fail("matchable=>omega", S=c.sets(S)[0])
            return True
    return True


def _forest2(c: _Check) -> bool:
    if not c.facts.acyclic:
        return False
    ok, w = c.facts.greedoid
    c.implies("forest=>greedoid", True, ok, **_witness_sets(c, w))
    return True


def _bip22(c: _Check) -> bool:
    f = c.facts
    if not f.bipartite:
        return False
    greedoid, w = f.greedoid
    ur = f.all_max_matchings_ur
    detail = _witness_sets(c, w)
    if not ur:
        detail["non_ur_matching"] = sorted(sorted(f.G.render(1 << u | 1 << v)) for u, v in f.non_ur_max_matching)
    c.iff(("greedoid", "all-max-matchings-ur"), greedoid, ur, **detail)
    return True


def _tri33(c: _Check) -> bool:
    f = c.facts
    if not f.triangle_free:
        return False
    greedoid, w = f.greedoid
    bad_nbhd = f.first_non_ke_neighbourhood() if f.all_max_matchings_ur else None
    cond = f.all_max_matchings_ur and bad_nbhd is None
    detail = _witness_sets(c, w)
    if bad_nbhd is not None:
        detail["non_ke_neighbourhood_of"] = c.sets(bad_nbhd)[0]
    if not f.all_max_matchings_ur:
        detail["non_ur_matching"] = sorted(sorted(f.G.render(1 << u | 1 << v)) for u, v in f.non_ur_max_matching)
    c.iff(("greedoid", "ur-and-ke"), greedoid, cond, **detail)
    return True


def _corona333(c: _Check) -> bool:
    f = c.facts
    if not f.parts or any(H.n == 0 for H in f.parts):
        return False
    part_flags = [ss.is_greedoid(st.enumerate_psi(H, f.max_n).sets)[0] for H in f.parts]
    greedoid = f.greedoid[0]
    c.iff(("greedoid", "parts-greedoid"), greedoid, all(part_flags), part_greedoid=part_flags)
    return True


def _union3(c: _Check) -> bool:
    G, psi = c.facts.G, c.facts.psi
    sets = psi.sets
    for i, A in enumerate(sets):
        for B in sets[i + 1:]:
            U = A | B
            if U not in psi and st.is_stable(G, U):
                c.fail("stable-union=>psi", A=c.sets(A)[0], B=c.sets(B)[0])
                return True
    return True


def _acc_iff_interval(c: _Check) -> bool:
    acc, w1 = c.facts.accessible
    interval, w2 = c.facts.interval_greedoid
    c.iff(("accessible", "interval-greedoid"), acc, interval,
          accessible_witness=_witness_sets(c, w1), interval_witness=_witness_sets(c, w2))
    return True


def _lem_unique4(c: _Check) -> bool:
    f = c.facts
    if not f.unique_mss:
        return False
    (S,) = f.omega.sets
    for x in bits(S):
        T = S & ~(1 << x)
        if T and T not in f.psi:
            c.fail("unique=>S-x-in-psi", S=c.sets(S)[0], x=f.G.name(x))
            break
    return True


def _lem_union1(c: _Check) -> bool:
    ok, w = c.facts.union_closed
    c.iff(("unique-mss", "union-closed"), c.facts.unique_mss, ok, **_witness_sets(c, w))
    return True


def _anti8(c: _Check) -> bool:
    f = c.facts
    anti, w = f.antimatroid
    c.iff(("antimatroid", "unique-and-accessible"), anti, f.unique_mss and f.accessible[0],
          **_witness_sets(c, w))
    return True


def _second_simplex_condition(f: GraphFacts) -> bool:
    dec = f.simplicial
    if not dec.is_simplicial_graph:
        return False
    for v in bits(f.G.vertices & ~dec.simp):
        if sum(1 for Q in dec.simplices if Q >> v & 1) < 2:
            return False
    return True


def _matroid6(c: _Check) -> bool:
    f = c.facts
    i = f.matroid[0]
    ii = f.omega_in_simp
    iii = _second_simplex_condition(f)
    detail = {"matroid": i, "omega_in_simp": ii, "simplicial_two_simplices": iii}
    c.iff(("(i)", "(ii)"), i, ii, **detail)
    c.iff(("(ii)", "(iii)"), ii, iii, **detail)
    return True


def _simplicial7(c: _Check) -> bool:
    f = c.facts
    dec = f.simplicial
    if not dec.is_simplicial_graph:
        return False
    cover = 0
    for Q in dec.simplices:
        cover |= Q
    theta = st.clique_cover_number(f.G)
    s, a = len(dec.simplices), f.omega.alpha
    detail = {"simplices": s, "theta": theta, "alpha": a}
    if cover != f.G.vertices:
        c.fail("simplicial=>cover", uncovered=f.G.render(f.G.vertices & ~cover), **detail)
    if not s == theta == a:
        c.fail("simplicial=>s=theta=alpha", **detail)
    return True


def _component_shape_ok(G: Graph, C: int, max_n: int) -> bool:
    H, _ = induced_subgraph(G, C)
    if H.n <= 2:
        return True
    omega = st.max_stable(H, max_n)
    pend, _ = st.pendant_and_isolated(H)
    return len(omega.sets) == 1 and omega.sets[0] == pend


def _tri_matroid_c1(c: _Check) -> bool:
    f = c.facts
    if not f.triangle_free:
        return False
    pend, isol = f.pend_isol
    i = f.matroid[0]
    ii = all(S & ~(pend | isol) == 0 for S in f.omega.sets)
    iii = all(_component_shape_ok(f.G, C, f.max_n) for C in f.components)
    detail = {"matroid": i, "omega_in_pend_isol": ii, "component_shapes": iii}
    c.iff(("(i)", "(ii)"), i, ii, **detail)
    c.iff(("(ii)", "(iii)"), ii, iii, **detail)
    return True


def _tree_anti_c2(c: _Check) -> bool:
    f = c.facts
    if not f.tree:
        return False
    G = f.G
    i = f.antimatroid[0]
    ii = f.unique_mss
    iii = any(
        all((G.adj[v] & S).bit_count() >= 2 for v in bits(G.vertices & ~S))
        for S in f.omega.sets
    )
    detail = {"antimatroid": i, "unique_mss": ii, "double_domination": iii}
    c.iff(("(i)", "(ii)"), i, ii, **detail)
    c.iff(("(ii)", "(iii)"), ii, iii, **detail)
    return True


def trimmed_witness(F: ss.SetSystem) -> tuple[ss.SetSystem, ss.SetSystem]:
    """Candidate (matroid, antimatroid) pair whose intersection might be ``F``."""
    return ss.hereditary_closure(F), ss.union_closure(F)


def _tree_trimmed(c: _Check) -> bool:
    f = c.facts
    if not f.tree or f.G.n < 3:
        return False
    pend, _ = f.pend_isol
    i = f.matroid[0]
    ii = f.omega.sets == (pend,)
    c.iff(("(i)", "(ii)"), i, ii, matroid=i, pend_unique_mss=ii)
    if ii:
        M, AM = trimmed_witness(f.psi)
        if not ss.verify_trimmed_witness(f.psi, M, AM):
            c.unconfirmed = True
            c.notes.append("(ii)=>(iii): constructed trimmed-matroid witness did not verify")
    return True


def _simp_local_poset2(c: _Check) -> bool:
    f = c.facts
    if not f.omega_in_simp:
        return False
    ok, w = f.local_poset
    c.implies("omega-in-simp=>local-poset", True, ok, **_witness_sets(c, w))
    return True


CHECKS: dict[str, Callable[[_Check], bool]] = {
    "NT1": _nt1,
    "BERGE5": _berge,
    "FOREST2": _forest2,
    "BIP22": _bip22,
    "TRI33": _tri33,
    "CORONA333": _corona333,
    "UNION3": _union3,
    "ACC_IFF_INTERVAL": _acc_iff_interval,
    "LEM_UNIQUE4": _lem_unique4,
    "LEM_UNION1": _lem_union1,
    "ANTI8": _anti8,
    "MATROID6": _matroid6,
    "SIMPLICIAL7": _simplicial7,
    "TRI_MATROID_C1": _tri_matroid_c1,
    "TREE_ANTI_C2": _tree_anti_c2,
    "TREE_TRIMMED": _tree_trimmed,
    "SIMP_LOCAL_POSET2": _simp_local_poset2,
}


def parse_theorem_ids(text: str) -> list[str]:
    ids = [t.strip().upper() for t in text.split(",") if t.strip()]
    for t in ids:
        if t not in CHECKS:
            raise UnknownPredicate(f"unknown theorem id {t!r}; known: {', '.join(THEOREM_IDS)}")
    return ids


def verify(theorem: str, G: Graph, parts: Sequence[Graph] | None = None,
           max_n: int = DEFAULT_MAX_N, facts: GraphFacts | None = None) -> TheoremVerdict:
    if theorem not in CHECKS:
        raise UnknownPredicate(f"unknown theorem id {theorem!r}")
    g6 = to_graph6(G) if G.n <= 62 else ""
    try:
        if facts is None:
            facts = GraphFacts(G, parts, max_n)
        c = _Check(facts)
        applicable = CHECKS[theorem](c)
    except CapExceeded as exc:
        return TheoremVerdict(theorem, G.label, g6, False, True, skipped=True, notes=[str(exc)])
    if not applicable:
        return TheoremVerdict(theorem, G.label, g6, False, True)
    holds = not c.failures
    witness = {"failures": c.failures} if c.failures else None
    return TheoremVerdict(theorem, G.label, g6, True, holds, witness, False, c.unconfirmed, c.notes)


def verify_all(G: Graph, ids: Iterable[str] = THEOREM_IDS, parts=None,
               max_n: int = DEFAULT_MAX_N) -> list[TheoremVerdict]:
    try:
        facts = GraphFacts(G, parts, max_n)
    except CapExceeded:
        facts = None
    return [verify(t, G, parts, max_n, facts) for t in ids]


# ---------------------------------------------------------------------------
# sweeps


@dataclass
class TheoremTally:
    theorem: str
    checked: int = 0
    applicable: int = 0
    held: int = 0
    violated: int = 0
    skipped: int = 0
    unconfirmed: int = 0
    witnesses: list[dict] = field(default_factory=list)

    def add(self, v: TheoremVerdict) -> None:
        self.checked += 1
        if v.skipped:
            self.skipped += 1
            return
        if v.applicable:
            self.applicable += 1
        if v.holds:
            self.held += 1
        else:
            self.violated += 1
            self.witnesses.append({"graph6": v.graph6, "label": v.label, "detail": v.witness})
        if v.unconfirmed:
            self.unconfirmed += 1

    def to_dict(self) -> dict:
        ws = sorted(self.witnesses, key=lambda w: (w["graph6"], json.dumps(w, sort_keys=True)))
        return {
            "theorem": self.theorem,
            "checked": self.checked,
            "applicable": self.applicable,
            "held": self.held,
            "violated": self.violated,
            "skipped": self.skipped,
            "unconfirmed": self.unconfirmed,
            "witnesses": ws,
        }


@dataclass
class SweepReport:
    corpus: dict
    tallies: dict[str, TheoremTally]

    @property
    def violations(self) -> int:
        return sum(t.violated for t in self.tallies.values())

    @property
    def skipped(self) -> int:
        return sum(t.skipped for t in self.tallies.values())

    def to_dict(self) -> dict:
        return {"corpus": self.corpus, "theorems": [t.to_dict() for t in self.tallies.values()]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)


def _as_instance(item) -> tuple[Graph, Sequence[Graph] | None]:
    if isinstance(item, Graph):
        return item, None
    G, parts = item
    return G, parts


def _evaluate(args) -> list[TheoremVerdict]:
    item, ids, max_n = args
    G, parts = _as_instance(item)
    return verify_all(G, ids, parts, max_n)


def sweep(corpus: Iterable, ids: Sequence[str] = THEOREM_IDS, jobs: int = 1,
          max_n: int = DEFAULT_MAX_N, corpus_info: dict | None = None,
          chunksize: int = 256) -> SweepReport:
    """Check ``ids`` on every graph (or ``(graph, parts)`` pair) of ``corpus``."""
    ids = list(ids)
    tallies = {t: TheoremTally(t) for t in ids}
    work = ((item, ids, max_n) for item in corpus)
    if jobs > 1:
        with multiprocessing.Pool(jobs) as pool:
            for verdicts in pool.imap_unordered(_evaluate, work, chunksize=chunksize):
                for v in verdicts:
                    tallies[v.theorem].add(v)
    else:
        for args in work:
            for v in _evaluate(args):
                tallies[v.theorem].add(v)
    return SweepReport(corpus_info or {}, tallies)


# ---------------------------------------------------------------------------
# counterexample search


def _psi_flag(name: str) -> Callable[[GraphFacts], bool]:
    return lambda f: getattr(f, name)[0]


def _trimmed(f: GraphFacts) -> bool:
    M, AM = trimmed_witness(f.psi)
    return ss.verify_trimmed_witness(f.psi, M, AM)


PREDICATES: dict[str, Callable[[GraphFacts], bool]] = {
    "true": lambda f: True,
    "false": lambda f: False,
    "unique-mss": lambda f: f.unique_mss,
    "psi-accessible": _psi_flag("accessible"),
    "psi-greedoid": _psi_flag("greedoid"),
    "psi-matroid": _psi_flag("matroid"),
    "psi-antimatroid": _psi_flag("antimatroid"),
    "psi-interval-greedoid": _psi_flag("interval_greedoid"),
    "psi-local-poset": _psi_flag("local_poset"),
    "psi-union-closed": _psi_flag("union_closed"),
    "psi-hereditary": lambda f: ss.is_hereditary(f.psi)[0],
    "psi-exchange": lambda f: ss.satisfies_exchange(f.psi)[0],
    "psi-trimmed-witness": _trimmed,
    "omega-in-simp": lambda f: f.omega_in_simp,
    "forest": lambda f: f.acyclic,
    "tree": lambda f: f.tree,
    "connected": lambda f: len(f.components) <= 1,
    "bipartite": lambda f: f.bipartite,
    "triangle-free": lambda f: f.triangle_free,
    "simplicial-graph": lambda f: f.simplicial.is_simplicial_graph,
    "well-covered": lambda f: st.is_well_covered(f.G, f.max_n),
    "very-well-covered": lambda f: st.is_very_well_covered(f.G, f.max_n),
    "koenig-egervary": lambda f: mt.is_koenig_egervary(f.G, f.max_n),
    "all-max-matchings-ur": lambda f: f.all_max_matchings_ur,
}


def compile_predicate(expr: str) -> Callable[[GraphFacts], bool]:
    """Conjunction of vocabulary names joined by ``+``; a leading ``!`` negates a term."""
    terms = []
    for raw in expr.split("+"):
        name = raw.strip()
        negate = name.startswith("!")
        name = name.lstrip("!").strip()
        if name not in PREDICATES:
            raise UnknownPredicate(f"unknown predicate {name!r}; known: {', '.join(sorted(PREDICATES))}")
        terms.append((PREDICATES[name], negate))
    return lambda f: all(p(f) != neg for p, neg in terms)


def search_counterexample(corpus: Iterable, hypothesis: str, conclusion: str,
                          limit: int | None = None,
                          max_n: int = DEFAULT_MAX_N) -> tuple[Graph, dict] | None:
    """First graph in corpus order satisfying ``hypothesis`` but not ``conclusion``."""
    hyp = compile_predicate(hypothesis)
    concl = compile_predicate(conclusion)
    for k, item in enumerate(corpus):
        if limit is not None and k >= limit:
            break
        G, parts = _as_instance(item)
        try:
            f = GraphFacts(G, parts, max_n)
            if hyp(f) and not concl(f):
                detail = {
                    "hypothesis": hypothesis,
                    "conclusion": conclusion,
                    "psi": [G.render(A) for A in f.psi.sets],
                    "omega": [G.render(S) for S in f.omega.sets],
                }
                return G, detail
        except CapExceeded:
            continue
    return None
