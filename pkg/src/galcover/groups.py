"""Finite groups as explicit multiplication tables.

Every group is a table on element indices 0..order-1 with human-readable
labels.  At the orders this package targets (<= 128, and <= 64 for the
exhaustive checks) tables make all structure queries exact and cheap, so
constructors verify the group axioms outright instead of trusting the
caller.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    InvalidParameterError,
    NotASubgroupError,
    NotNormalError,
    SizeCapError,
    WrongFlavorError,
)

ORDER_CAP = 128
EXHAUSTIVE_CHECK_CAP = 64

FLAVOR_DIHEDRAL = "dihedral"
FLAVOR_QUATERNION8 = "quaternion8"
FLAVOR_CYCLIC = "cyclic"
FLAVOR_QUOTIENT = "quotient"
FLAVOR_GENERIC = "generic"


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """Immutable multiplication-table group.

    ``table[a][b]`` is the index of the product a*b.  Identity is always a
    two-sided unit and every element has a two-sided inverse; constructors
    check this (exhaustively for order <= 64).
    """

    order: int
    table: tuple[tuple[int, ...], ...]
    identity: int
    labels: tuple[str, ...]
    flavor: str
    flavor_param: int | None = None
    inverses: tuple[int, ...] = field(default=(), repr=False)
    element_orders: tuple[int, ...] = field(default=(), repr=False)

    def __post_init__(self):
        if not self.inverses:
            object.__setattr__(self, "inverses", _inverse_table(self))
        if not self.element_orders:
            object.__setattr__(self, "element_orders", _order_table(self))
        object.__setattr__(self, "_label_index", {w: i for i, w in enumerate(self.labels)})

    # -- basic arithmetic ------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def power(self, g: int, k: int) -> int:
        if k < 0:
            g, k = self.inv(g), -k
        out = self.identity
        while k:
            if k & 1:
                out = self.table[out][g]
            g = self.table[g][g]
            k >>= 1
        return out

    def conj(self, g: int, by: int) -> int:
        """Return by * g * by^-1."""
        return self.table[self.table[by][g]][self.inv(by)]

    def elements(self) -> range:
        return range(self.order)

    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(a))

    def exponent(self) -> int:
        out = 1
        for m in self.element_orders:
            out = _lcm(out, m)
        return out

    # -- labels ----------------------------------------------------------

    def label(self, g: int) -> str:
        return self.labels[g]

    def parse_element(self, word: str) -> int:
        """Parse an element word (case-sensitive) back to its index."""
        word = word.strip()
        hit = self._label_index.get(word)
        if hit is not None:
            return hit
        if self.flavor in (FLAVOR_DIHEDRAL, FLAVOR_CYCLIC):
            parsed = _parse_rotation_word(word, self.flavor_param or 1,
                                          reflections=self.flavor == FLAVOR_DIHEDRAL)
            if parsed is not None:
                kind, u = parsed
                return u if kind == "rotation" else (self.flavor_param + u)
        if self.flavor == FLAVOR_QUATERNION8 and word in ("ij", "-ij"):
            return self._label_index["k" if word == "ij" else "-k"]
        raise InvalidParameterError(f"unknown element word {word!r} for group {describe(self)}")


@dataclass(frozen=True)
class Subgroup:
    """A subgroup of ``parent`` given by its sorted member indices."""

    parent: FiniteGroup
    members: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def index(self) -> int:
        return self.parent.order // len(self.members)

    def contains(self, g: int) -> bool:
        return g in self._member_set

    def __post_init__(self):
        object.__setattr__(self, "_member_set", frozenset(self.members))

    def __le__(self, other: "Subgroup") -> bool:
        return self.parent is other.parent and self._member_set <= other._member_set


@dataclass(frozen=True)
class Quotient:
    """Result of ``quotient_group``: the coset group plus the projection."""

    group: FiniteGroup
    projection: tuple[int, ...]
    cosets: tuple[tuple[int, ...], ...]


# -- construction ---------------------------------------------------------


def make_dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n: indices 0..n-1 are the rotations r^u,
    indices n..2n-1 the reflections r^u*s."""
    if n < 2:
        raise InvalidParameterError(f"dihedral parameter must be >= 2, got {n}")
    order = 2 * n
    table = []
    for a in range(order):
        row = []
        au, aref = a % n, a >= n
        for b in range(order):
            bu, bref = b % n, b >= n
            u = (au - bu) % n if aref else (au + bu) % n
            row.append(u + n if aref != bref else u)
        table.append(tuple(row))
    labels = [_rotation_label(u) for u in range(n)]
    labels += [_rotation_label(u, reflected=True) for u in range(n)]
    return _finish(FiniteGroup(order, tuple(table), 0, tuple(labels), FLAVOR_DIHEDRAL, n))


_Q8_BASIS = ("1", "i", "j", "k")
# (a, b) -> (sign, basis) for the quaternion units, a, b in 0..3.
_Q8_RULES = {
    ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
    ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j"),
}


def make_quaternion8() -> FiniteGroup:
    """The quaternion group {1, -1, +-i, +-j, +-k}."""
    labels = ("1", "-1", "i", "-i", "j", "-j", "k", "-k")

    def decode(idx):
        return (-1 if idx % 2 else 1), _Q8_BASIS[idx // 2]

    def encode(sign, basis):
        return 2 * _Q8_BASIS.index(basis) + (0 if sign == 1 else 1)

    def unit_mul(x, y):
        if x == "1":
            return 1, y
        if y == "1":
            return 1, x
        if x == y:
            return -1, "1"
        return _Q8_RULES[(x, y)]

    table = []
    for a in range(8):
        sa, xa = decode(a)
        row = []
        for b in range(8):
            sb, xb = decode(b)
            s, x = unit_mul(xa, xb)
            row.append(encode(sa * sb * s, x))
        table.append(tuple(row))
    return _finish(FiniteGroup(8, tuple(table), 0, labels, FLAVOR_QUATERNION8))


def make_cyclic(n: int) -> FiniteGroup:
    """Cyclic group of order n with generator r."""
    if n < 1:
        raise InvalidParameterError(f"cyclic order must be >= 1, got {n}")
    table = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    labels = tuple(_rotation_label(u) for u in range(n))
    return _finish(FiniteGroup(n, table, 0, labels, FLAVOR_CYCLIC, n))


def from_table(table: Sequence[Sequence[int]], labels: Sequence[str] | None = None,
               flavor: str = FLAVOR_GENERIC) -> FiniteGroup:
    """Build a group from a raw multiplication table, verifying the axioms."""
    order = len(table)
    rows = tuple(tuple(row) for row in table)
    for row in rows:
        if len(row) != order or any(not (0 <= x < order) for x in row):
            raise InvalidParameterError("table entries out of range")
    identity = _find_identity(rows)
    if labels is None:
        labels = tuple("1" if i == identity else f"g{i}" for i in range(order))
    return _finish(FiniteGroup(order, rows, identity, tuple(labels), flavor))


def group_from_spec(spec: str) -> FiniteGroup:
    """Parse a group spec string: ``D:n`` (dihedral order 2n), ``Q8``, ``C:n``."""
    spec = spec.strip()
    if spec == "Q8":
        return make_quaternion8()
    m = re.fullmatch(r"([DC]):(\d+)", spec)
    if not m:
        raise InvalidParameterError(f"unrecognized group spec {spec!r} (expected D:n, Q8 or C:n)")
    n = int(m.group(2))
    return make_dihedral(n) if m.group(1) == "D" else make_cyclic(n)


def describe(G: FiniteGroup) -> str:
    if G.flavor == FLAVOR_DIHEDRAL:
        return f"D:{G.flavor_param}"
    if G.flavor == FLAVOR_QUATERNION8:
        return "Q8"
    if G.flavor == FLAVOR_CYCLIC:
        return f"C:{G.flavor_param}"
    return f"{G.flavor}[{G.order}]"


# -- structure queries -----------------------------------------------------


def element_order(G: FiniteGroup, g: int) -> int:
    return G.element_orders[g]


def conjugacy_classes(G: FiniteGroup) -> list[tuple[int, ...]]:
    """Conjugacy classes as sorted index tuples, identity class first,
    ordered by smallest member."""
    seen = [False] * G.order
    classes = []
    for g in range(G.order):
        if seen[g]:
            continue
        cls = {G.conj(g, c) for c in range(G.order)}
        for x in cls:
            seen[x] = True
        classes.append(tuple(sorted(cls)))
    classes.sort(key=lambda c: c[0])
    return classes


def center(G: FiniteGroup) -> Subgroup:
    t = G.table
    members = [g for g in range(G.order)
               if all(t[g][x] == t[x][g] for x in range(G.order))]
    return Subgroup(G, tuple(members))


def closure(G: FiniteGroup, seed: Iterable[int]) -> tuple[int, ...]:
    """Smallest subset containing ``seed`` and the identity that is closed
    under multiplication (hence a subgroup, by finiteness)."""
    t = G.table
    flags = [False] * G.order
    members = [G.identity]
    flags[G.identity] = True
    for s in seed:
        if not flags[s]:
            flags[s] = True
            members.append(s)
    k = 0
    while k < len(members):
        a = members[k]
        for idx in range(len(members)):
            b = members[idx]
            for p in (t[a][b], t[b][a]):
                if not flags[p]:
                    flags[p] = True
                    members.append(p)
        k += 1
    return tuple(sorted(members))


def subgroup_generated(G: FiniteGroup, seed: Iterable[int]) -> Subgroup:
    return Subgroup(G, closure(G, seed))


def cyclic_subgroup(G: FiniteGroup, g: int) -> Subgroup:
    members = [G.identity]
    x = g
    while x != G.identity:
        members.append(x)
        x = G.mul(x, g)
    return Subgroup(G, tuple(sorted(members)))


def subgroup_from_members(G: FiniteGroup, members: Iterable[int]) -> Subgroup:
    """Validate that ``members`` really is a subgroup and wrap it."""
    ms = tuple(sorted(set(members)))
    if not ms or G.identity not in ms:
        raise NotASubgroupError("subgroup must contain the identity")
    mset = set(ms)
    for a in ms:
        if G.inv(a) not in mset:
            raise NotASubgroupError(f"not closed under inverse at {G.label(a)}")
        for b in ms:
            if G.mul(a, b) not in mset:
                raise NotASubgroupError(
                    f"not closed under product at {G.label(a)}*{G.label(b)}")
    return Subgroup(G, ms)


def is_normal(G: FiniteGroup, H: Subgroup) -> bool:
    if H.parent is not G:
        raise NotASubgroupError("subgroup belongs to a different group")
    mset = set(H.members)
    return all(G.conj(h, g) in mset for h in H.members for g in range(G.order))


def normal_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """All normal subgroups, found by closing unions of conjugacy classes."""
    classes = conjugacy_classes(G)
    found = {(G.identity,): Subgroup(G, (G.identity,))}
    work = [(G.identity,)]
    while work:
        base = work.pop()
        for cls in classes:
            if cls[0] == G.identity or set(cls) <= set(base):
                continue
            new = closure(G, set(base) | set(cls))
            if new not in found:
                found[new] = Subgroup(G, new)
                work.append(new)
    return sorted(found.values(), key=lambda h: (h.order, h.members))


def all_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """Every subgroup, by breadth-first closure over added generators."""
    trivial = (G.identity,)
    found = {trivial}
    work = [trivial]
    while work:
        base = work.pop()
        base_set = set(base)
        for g in range(G.order):
            if g in base_set:
                continue
            new = closure(G, base_set | {g})
            if new not in found:
                found.add(new)
                work.append(new)
    return [Subgroup(G, m) for m in sorted(found, key=lambda m: (len(m), m))]


def quotient_group(G: FiniteGroup, N: Subgroup) -> Quotient:
    """Quotient by a normal subgroup, with the canonical projection.

    Cosets are ordered by smallest member, so the identity coset is first
    and the construction is deterministic.
    """
    if not is_normal(G, N):
        raise NotNormalError(f"subgroup of order {N.order} is not normal")
    coset_of = [-1] * G.order
    cosets: list[tuple[int, ...]] = []
    for g in range(G.order):
        if coset_of[g] >= 0:
            continue
        cs = tuple(sorted(G.mul(g, h) for h in N.members))
        for x in cs:
            coset_of[x] = len(cosets)
        cosets.append(cs)
    order = len(cosets)
    table = tuple(
        tuple(coset_of[G.mul(cs_a[0], cs_b[0])] for cs_b in cosets)
        for cs_a in cosets
    )
    labels = tuple(G.label(cs[0]) for cs in cosets)
    q = _finish(FiniteGroup(order, table, coset_of[G.identity], labels, FLAVOR_QUOTIENT))
    return Quotient(q, tuple(coset_of), tuple(cosets))


def dihedral_element_kind(G: FiniteGroup, g: int) -> tuple[str, int]:
    """Classify a dihedral element as ("rotation", u) for r^u or
    ("reflection", a) for r^a*s."""
    if G.flavor != FLAVOR_DIHEDRAL:
        raise WrongFlavorError(f"expected a dihedral group, got {describe(G)}")
    n = G.flavor_param
    return ("rotation", g) if g < n else ("reflection", g - n)


# -- internals -------------------------------------------------------------


def _rotation_label(u: int, reflected: bool = False) -> str:
    if not reflected:
        return "1" if u == 0 else ("r" if u == 1 else f"r^{u}")
    return "s" if u == 0 else ("r*s" if u == 1 else f"r^{u}*s")


_ROTATION_RE = re.compile(r"(1|r(?:\^(-?\d+))?)(\*s)?|s")


def _parse_rotation_word(word: str, n: int, reflections: bool):
    m = _ROTATION_RE.fullmatch(word)
    if m is None:
        return None
    if word == "s" or m.group(3):
        if not reflections:
            return None
        kind = "reflection"
    else:
        kind = "rotation"
    body = m.group(1) or "1"
    if body == "1":
        u = 0
    elif body == "r":
        u = 1
    else:
        u = int(m.group(2))
    return kind, u % n


def _find_identity(table: tuple[tuple[int, ...], ...]) -> int:
    order = len(table)
    for e in range(order):
        if all(table[e][x] == x and table[x][e] == x for x in range(order)):
            return e
    raise InvalidParameterError("table has no two-sided identity")


def _inverse_table(G: FiniteGroup) -> tuple[int, ...]:
    inv = [-1] * G.order
    for a in range(G.order):
        for b in range(G.order):
            if G.table[a][b] == G.identity and G.table[b][a] == G.identity:
                inv[a] = b
                break
        if inv[a] < 0:
            raise InvalidParameterError(f"element {a} has no two-sided inverse")
    return tuple(inv)


def _order_table(G: FiniteGroup) -> tuple[int, ...]:
    orders = []
    for g in range(G.order):
        x, k = g, 1
        while x != G.identity:
            x = G.table[x][g]
            k += 1
        orders.append(k)
    return tuple(orders)


def _finish(G: FiniteGroup) -> FiniteGroup:
    if G.order > ORDER_CAP:
        raise SizeCapError(f"group order {G.order} exceeds cap {ORDER_CAP}")
    n = G.order
    if len(G.labels) != n or len(set(G.labels)) != n:
        raise InvalidParameterError("element labels must be unique, one per element")
    for row in G.table:
        if len(row) != n or any(x < 0 or x >= n for x in row):
            raise InvalidParameterError("table entries out of range")
    if n <= EXHAUSTIVE_CHECK_CAP:
        t = G.table
        for a in range(n):
            for b in range(n):
                tab = t[a][b]
                row_b = t[b]
                row_tab = t[tab]
                for c in range(n):
                    if row_tab[c] != t[a][row_b[c]]:
                        raise InvalidParameterError(
                            f"multiplication not associative at ({a},{b},{c})")
    return G


def _lcm(a: int, b: int) -> int:
    from math import gcd

    return a * b // gcd(a, b)
