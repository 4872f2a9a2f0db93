"""Finite set systems and the greedoid axioms.

Families are stored without the empty set.  For the axioms the empty set is
treated as always present: a singleton is accessible, and a union,
intersection or subset that comes out empty counts as a member.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from psilab.errors import ContractViolation, GraphParseError
from psilab.graph import bits, set_key


class SetSystem:
    """Deduplicated family of vertex-set bitmasks over ``range(ground)``.

    Members are kept in canonical order: by cardinality, then by bitmask.
    """

    __slots__ = ("ground", "sets", "_members")

    def __init__(self, ground: int, sets: Iterable[int] = ()):
        full = (1 << ground) - 1
        members = set()
        for S in sets:
            if S < 0 or S & ~full:
                raise ContractViolation(f"set {S:#b} not contained in ground of size {ground}")
            if S:
                members.add(S)
        self.ground = ground
        self._members = frozenset(members)
        self.sets = tuple(sorted(members, key=set_key))

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    def __contains__(self, S: int) -> bool:
        return S in self._members

    def has(self, S: int) -> bool:
        """Membership with the empty set counted as present."""
        return not S or S in self._members

    def __eq__(self, other) -> bool:
        if not isinstance(other, SetSystem):
            return NotImplemented
        return self.ground == other.ground and self.sets == other.sets

    def __hash__(self) -> int:
        return hash((self.ground, self.sets))

    def __repr__(self) -> str:
        return f"SetSystem(ground={self.ground}, sets={[sorted(bits(S)) for S in self.sets]})"

    def restrict(self, X: int) -> SetSystem:
        """Members contained in ``X``."""
        return SetSystem(self.ground, (Y for Y in self.sets if Y & ~X == 0))

    def intersect(self, other: SetSystem) -> SetSystem:
        return SetSystem(self.ground, self._members & other._members)


# ---------------------------------------------------------------------------
# family literals


def parse_family(text: str, letters: Sequence[str] | None = None, ground: int | None = None) -> SetSystem:
    """Parse a family literal such as ``"∅;a;b;ac;bd"`` or ``"0;1,2;0,1,2"``.

    Members are separated by ``;`` or newlines.  A member is ``∅`` (or ``{}``
    or empty) for the empty set, a comma-separated list of vertex tokens, or,
    when ``letters`` is given, a run of single-letter vertex names.  Tokens are
    names from ``letters`` or non-negative integers.
    """
    index = {name: i for i, name in enumerate(letters)} if letters is not None else {}
    members = []
    top = -1
    for raw in text.replace("\n", ";").split(";"):
        tok = raw.strip().strip("{}").strip()
        if tok in ("", "∅"):
            continue
        if "," in tok:
            parts = [p.strip() for p in tok.split(",")]
        elif letters is not None and all(ch in index for ch in tok):
            parts = list(tok)
        else:
            parts = [tok]
        m = 0
        for p in parts:
            if p in index:
                v = index[p]
            elif p.isdigit():
                v = int(p)
            else:
                raise GraphParseError(f"unknown vertex token {p!r} in family literal", 0)
            m |= 1 << v
            top = max(top, v)
        members.append(m)
    if ground is None:
        ground = len(letters) if letters is not None else top + 1
    return SetSystem(ground, members)


# ---------------------------------------------------------------------------
# axioms


@dataclass(frozen=True)
class Witness:
    rule: str
    sets: tuple[int, ...]

    def render(self, name: Callable[[int], list]) -> dict:
        return {"rule": self.rule, "sets": [name(S) for S in self.sets]}


def is_accessible(F: SetSystem) -> tuple[bool, Witness | None]:
    for X in F.sets:
        if X.bit_count() < 2:
            continue
        if not any(X & ~(1 << x) in F for x in bits(X)):
            return False, Witness("accessibility", (X,))
    return True, None


def accessibility_chain(F: SetSystem, S: int) -> list[int] | None:
    """Chain ``{x1} ⊂ {x1,x2} ⊂ ... ⊂ S`` inside ``F``, or None if there is none.

    Descends from ``S`` removing the largest removable vertex first, so the
    chain grows by the smallest vertices available, and backtracks when a
    branch dead-ends.
    """
    if S not in F:
        raise ContractViolation("accessibility chain requested for a non-member")
    dead: set[int] = set()

    def descend(X: int) -> list[int] | None:
        if X.bit_count() == 1:
            return [X]
        for x in reversed(list(bits(X))):
            Y = X & ~(1 << x)
            if Y in F and Y not in dead:
                below = descend(Y)
                if below is not None:
                    return below + [X]
                dead.add(Y)
        return None

    return descend(S)


def _extensions(F: SetSystem) -> dict[int, int]:
    """For each member (and the empty set) the vertices whose addition stays in F."""
    ext: dict[int, int] = {0: 0}
    for Z in F.sets:
        if Z.bit_count() == 1:
            ext[0] |= Z
        for z in bits(Z):
            Y = Z & ~(1 << z)
            if Y in F:
                ext[Y] = ext.get(Y, 0) | 1 << z
    return ext


def satisfies_exchange(F: SetSystem) -> tuple[bool, Witness | None]:
    by_size: dict[int, list[int]] = {}
    for S in F.sets:
        by_size.setdefault(S.bit_count(), []).append(S)
    ext = _extensions(F)
    for k in sorted(by_size):
        smaller = by_size.get(k - 1, []) if k > 1 else []
        for X in by_size[k]:
            for Y in smaller:
                if not (X & ~Y) & ext.get(Y, 0):
                    return False, Witness("exchange", (X, Y))
    return True, None


def is_hereditary(F: SetSystem) -> tuple[bool, Witness | None]:
    # closure under single-element removal is equivalent to closure under subsets
    for X in F.sets:
        for x in bits(X):
            Y = X & ~(1 << x)
            if not F.has(Y):
                return False, Witness("hereditary", (X, Y))
    return True, None


def is_union_closed(F: SetSystem) -> tuple[bool, Witness | None]:
    sets = F.sets
    best = None
    best_key = None
    for j, Y in enumerate(sets):
        size = Y.bit_count()
        if best is not None and size > best_key[0]:
            break
        for X in sets[:j]:
            if X | Y not in F:
                key = (size, X.bit_count() + size, X, Y)
                if best_key is None or key < best_key:
                    best, best_key = (X, Y), key
    if best is None:
        return True, None
    return False, Witness("union", best)


def is_greedoid(F: SetSystem) -> tuple[bool, Witness | None]:
    ok, w = is_accessible(F)
    if not ok:
        return ok, w
    return satisfies_exchange(F)


def is_antimatroid(F: SetSystem) -> tuple[bool, Witness | None]:
    ok, w = is_greedoid(F)
    if not ok:
        return ok, w
    return is_union_closed(F)


def is_matroid(F: SetSystem) -> tuple[bool, Witness | None]:
    ok, w = is_greedoid(F)
    if not ok:
        return ok, w
    return is_hereditary(F)


def is_interval_greedoid(F: SetSystem) -> tuple[bool, Witness | None]:
    """Greedoid whose restriction below every member is an antimatroid."""
    ok, w = is_greedoid(F)
    if not ok:
        return ok, w
    for X in F.sets:
        ok, w = is_antimatroid(F.restrict(X))
        if not ok:
            return False, Witness("interval:" + w.rule, (X,) + w.sets)
    return True, None


def is_local_poset(F: SetSystem) -> tuple[bool, Witness | None]:
    """Local poset rule for greedoids; raises ContractViolation on a non-greedoid."""
    ok, w = is_greedoid(F)
    if not ok:
        raise ContractViolation(f"local poset rule is defined for greedoids; {w.rule} axiom fails")
    return _local_poset_rule(F)


def _local_poset_rule(F: SetSystem) -> tuple[bool, Witness | None]:
    for Z in F.sets:
        below = [X for X in F.sets if X != Z and X & ~Z == 0]
        for i, X in enumerate(below):
            for Y in below[i + 1:]:
                if X | Y not in F or not F.has(X & Y):
                    return False, Witness("local-poset", (X, Y, Z))
    return True, None


FLAGS = (
    "accessible",
    "exchange",
    "hereditary",
    "union_closed",
    "greedoid",
    "matroid",
    "antimatroid",
    "interval_greedoid",
    "local_poset",
)


@dataclass(frozen=True)
class ClassificationReport:
    accessible: bool
    exchange: bool
    hereditary: bool
    union_closed: bool
    greedoid: bool
    matroid: bool
    antimatroid: bool
    interval_greedoid: bool
    local_poset: bool
    witnesses: dict[str, Witness] = field(default_factory=dict)

    def flags(self) -> dict[str, bool]:
        return {name: getattr(self, name) for name in FLAGS}

    def to_dict(self, name: Callable[[int], list] = lambda S: sorted(bits(S))) -> dict:
        return {
            "flags": self.flags(),
            "witnesses": {k: w.render(name) for k, w in sorted(self.witnesses.items())},
        }


def classify(F: SetSystem) -> ClassificationReport:
    witnesses: dict[str, Witness] = {}

    def record(flag: str, result: tuple[bool, Witness | None]) -> bool:
        ok, w = result
        if not ok:
            witnesses[flag] = w
        return ok

    accessible = record("accessible", is_accessible(F))
    exchange = record("exchange", satisfies_exchange(F))
    hereditary = record("hereditary", is_hereditary(F))
    union_closed = record("union_closed", is_union_closed(F))

    greedoid = accessible and exchange
    if not greedoid:
        witnesses["greedoid"] = witnesses["accessible"] if not accessible else witnesses["exchange"]
    matroid = greedoid and hereditary
    if not matroid:
        witnesses["matroid"] = witnesses["greedoid"] if not greedoid else witnesses["hereditary"]
    antimatroid = greedoid and union_closed
    if not antimatroid:
        witnesses["antimatroid"] = witnesses["greedoid"] if not greedoid else witnesses["union_closed"]

    if greedoid:
        interval = record("interval_greedoid", is_interval_greedoid(F))
        local = record("local_poset", _local_poset_rule(F))
    else:
        interval = local = False
        witnesses["interval_greedoid"] = witnesses["greedoid"]
        witnesses["local_poset"] = witnesses["greedoid"]

    return ClassificationReport(
        accessible, exchange, hereditary, union_closed,
        greedoid, matroid, antimatroid, interval, local, witnesses,
    )


def recheck(F: SetSystem, w: Witness) -> bool:
    """True iff ``w`` on its own demonstrates a violation in ``F``."""
    rule, S = w.rule, w.sets
    if rule.startswith("interval:"):
        X = S[0]
        return all(Y in F for Y in S[1:]) and all(Y & ~X == 0 for Y in S[1:]) and recheck(
            F.restrict(X), Witness(rule.split(":", 1)[1], S[1:])
        )
    if rule == "accessibility":
        (X,) = S
        return X in F and X.bit_count() >= 2 and not any(X & ~(1 << x) in F for x in bits(X))
    if rule == "exchange":
        X, Y = S
        return (
            X in F and Y in F and X.bit_count() == Y.bit_count() + 1
            and not any(Y | 1 << x in F for x in bits(X & ~Y))
        )
    if rule == "hereditary":
        X, Y = S
        return X in F and Y & ~X == 0 and not F.has(Y)
    if rule == "union":
        X, Y = S
        return X in F and Y in F and X | Y not in F
    if rule == "local-poset":
        X, Y, Z = S
        return (
            all(T in F for T in S) and X & ~Z == 0 and Y & ~Z == 0 and X != Z and Y != Z
            and (X | Y not in F or not F.has(X & Y))
        )
    raise ValueError(f"unknown witness rule {rule!r}")


# ---------------------------------------------------------------------------
# trimmed matroids


def hereditary_closure(F: SetSystem) -> SetSystem:
    out = set()
    stack = list(F.sets)
    while stack:
        X = stack.pop()
        if X in out:
            continue
        out.add(X)
        stack.extend(X & ~(1 << x) for x in bits(X) if X & ~(1 << x))
    return SetSystem(F.ground, out)


def union_closure(F: SetSystem) -> SetSystem:
    out = set(F.sets)
    frontier = set(out)
    while frontier:
        new = {X | Y for X in frontier for Y in out} - out
        out |= new
        frontier = new
    return SetSystem(F.ground, out)


def verify_trimmed_witness(F: SetSystem, M: SetSystem, AM: SetSystem) -> bool:
    """True iff ``M`` is a matroid, ``AM`` an antimatroid and ``F = M ∩ AM`` (empty set ignored)."""
    if not (F.ground == M.ground == AM.ground):
        raise ContractViolation("trimmed witness families must share a ground set")
    return is_matroid(M)[0] and is_antimatroid(AM)[0] and F == M.intersect(AM)
