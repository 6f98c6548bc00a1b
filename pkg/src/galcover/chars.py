"""Exact complex character theory for table groups.

Dihedral, quaternion and cyclic groups get their classical closed-form
tables; everything else (in particular quotient groups) goes through the
Burnside-Dixon engine.  Both paths produce rows of exact cyclotomic values
over the conjugacy classes and are cross-checked against each other in the
test suite.  Derived bookkeeping lives here too: Frobenius-Schur
indicators, eigenvalue multiplicities of local monodromies, and the Galois
orbits that give the rational irreducibles and the shape of the rational
group algebra.
"""

from __future__ import annotations

import threading
import weakref
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from ._dixon import dixon_character_rows
from .cyclotomic import Cyclo, cyclo_sum
from .errors import (
    InternalInconsistencyError,
    InvalidParameterError,
    SchurIndexUnsupportedError,
    SizeCapError,
)
from .groups import (
    EXHAUSTIVE_CHECK_CAP,
    FLAVOR_CYCLIC,
    FLAVOR_DIHEDRAL,
    FLAVOR_QUATERNION8,
    FLAVOR_QUOTIENT,
    FiniteGroup,
    Subgroup,
    conjugacy_classes,
    describe,
)


@dataclass(frozen=True, eq=False)
class CharacterTable:
    """All irreducible complex characters of a group, as exact rows over
    its conjugacy classes."""

    group: FiniteGroup
    classes: tuple[tuple[int, ...], ...]
    class_reps: tuple[int, ...]
    class_sizes: tuple[int, ...]
    rows: tuple[tuple[Cyclo, ...], ...]
    degrees: tuple[int, ...]

    def __post_init__(self):
        class_of = [0] * self.group.order
        for idx, cls in enumerate(self.classes):
            for g in cls:
                class_of[g] = idx
        object.__setattr__(self, "_class_of", tuple(class_of))
        object.__setattr__(self, "_conjugate_index", None)

    @property
    def count(self) -> int:
        return len(self.rows)

    def class_index(self, g: int) -> int:
        return self._class_of[g]

    def value(self, chi: int, g: int) -> Cyclo:
        return self.rows[chi][self._class_of[g]]

    def is_trivial(self, chi: int) -> bool:
        return self.degrees[chi] == 1 and all(v == 1 for v in self.rows[chi])

    def conjugate_index(self, chi: int) -> int:
        if self._conjugate_index is None:
            object.__setattr__(self, "_conjugate_index", self._pair_rows())
        return self._conjugate_index[chi]

    def _pair_rows(self) -> tuple[int, ...]:
        e = self.group.exponent()
        keys = {tuple(v.key(e) for v in row): i for i, row in enumerate(self.rows)}
        out = []
        for i, row in enumerate(self.rows):
            conj_key = tuple(v.conjugate().key(e) for v in row)
            j = keys.get(conj_key)
            if j is None:
                raise InternalInconsistencyError("conjugate character missing from table")
            out.append(j)
        return tuple(out)

    def inner_product(self, a: int, b: int) -> Fraction:
        total = cyclo_sum(
            self.rows[a][l] * self.rows[b][l].conjugate() * size
            for l, size in enumerate(self.class_sizes)
        )
        return total.as_fraction() / self.group.order


# -- table construction ----------------------------------------------------

_table_cache: "weakref.WeakKeyDictionary[FiniteGroup, CharacterTable]" = weakref.WeakKeyDictionary()
_table_lock = threading.Lock()


def character_table(G: FiniteGroup) -> CharacterTable:
    """The character table, closed-form where the flavor has one, verified,
    and cached per group."""
    table = _table_cache.get(G)
    if table is not None:
        return table
    if G.order > EXHAUSTIVE_CHECK_CAP:
        raise SizeCapError(
            f"character tables are computed for order <= {EXHAUSTIVE_CHECK_CAP}")
    if G.flavor == FLAVOR_DIHEDRAL:
        table = _dihedral_table(G)
    elif G.flavor == FLAVOR_QUATERNION8:
        table = _quaternion_table(G)
    elif G.flavor == FLAVOR_CYCLIC:
        table = _cyclic_table(G)
    else:
        table = character_table_dixon(G)
    _verify_table(table)
    with _table_lock:
        return _table_cache.setdefault(G, table)


def character_table_dixon(G: FiniteGroup) -> CharacterTable:
    """Generic Burnside-Dixon path, exposed for differential testing."""
    if G.order > EXHAUSTIVE_CHECK_CAP:
        raise SizeCapError(
            f"character tables are computed for order <= {EXHAUSTIVE_CHECK_CAP}")
    classes, rows = dixon_character_rows(G)
    return _assemble(G, classes, rows)


def _assemble(G, classes, rows) -> CharacterTable:
    reps = tuple(cls[0] for cls in classes)
    sizes = tuple(len(cls) for cls in classes)
    identity_col = next(l for l, rep in enumerate(reps) if rep == G.identity)
    degrees = []
    for row in rows:
        d = row[identity_col].as_integer()
        if d <= 0:
            raise InternalInconsistencyError("character degree must be positive")
        degrees.append(d)
    order = sorted(range(len(rows)), key=lambda i: _row_key(G, rows[i], degrees[i]))
    rows = tuple(rows[i] for i in order)
    degrees = tuple(degrees[i] for i in order)
    return CharacterTable(G, tuple(classes), reps, sizes, rows, degrees)


def _row_key(G, row, degree):
    e = G.exponent()
    triviality = 0 if (degree == 1 and all(v == 1 for v in row)) else 1
    return (triviality, degree, tuple(v.key(e) for v in row))


def _cyclic_table(G: FiniteGroup) -> CharacterTable:
    n = G.order
    classes = conjugacy_classes(G)
    rows = []
    for h in range(n):
        rows.append(tuple(Cyclo.root_of_unity(n, h * cls[0] % n) if n > 1 else Cyclo.one()
                          for cls in classes))
    return _assemble(G, classes, rows)


def _dihedral_table(G: FiniteGroup) -> CharacterTable:
    n = G.flavor_param
    classes = conjugacy_classes(G)
    reps = [cls[0] for cls in classes]

    def linear(a, b):
        # value (-1)^(a*u + b*v) at r^u s^v; a must be 0 for odd n.
        vals = []
        for g in reps:
            u, v = (g, 0) if g < n else (g - n, 1)
            vals.append(Cyclo.from_rational((-1) ** (a * u + b * v)))
        return tuple(vals)

    rows = [linear(0, 0), linear(0, 1)]
    if n % 2 == 0:
        rows += [linear(1, 0), linear(1, 1)]
    top = (n - 1) // 2 if n % 2 else n // 2 - 1
    for h in range(1, top + 1):
        vals = []
        for g in reps:
            if g < n:
                vals.append(Cyclo.root_of_unity(n, h * g % n)
                            + Cyclo.root_of_unity(n, (-h * g) % n))
            else:
                vals.append(Cyclo.zero())
        rows.append(tuple(vals))
    return _assemble(G, classes, rows)


def _quaternion_table(G: FiniteGroup) -> CharacterTable:
    classes = conjugacy_classes(G)
    reps = [cls[0] for cls in classes]
    # Kernel-based signs: indices 2..7 are +-i, +-j, +-k.
    axis = {2: "i", 3: "i", 4: "j", 5: "j", 6: "k", 7: "k"}

    def linear(kept):
        return tuple(Cyclo.from_rational(1 if g < 2 or axis[g] == kept else -1)
                     for g in reps)

    def two_dim():
        vals = {0: 2, 1: -2}
        return tuple(Cyclo.from_rational(vals.get(g, 0)) for g in reps)

    rows = [tuple(Cyclo.one() for _ in reps), linear("i"), linear("j"), linear("k"),
            two_dim()]
    return _assemble(G, classes, rows)


def _verify_table(table: CharacterTable) -> None:
    G = table.group
    k = table.count
    if k != len(table.classes):
        raise InternalInconsistencyError("character count != class count")
    if sum(d * d for d in table.degrees) != G.order:
        raise InternalInconsistencyError("degrees fail sum-of-squares identity")
    for a in range(k):
        for b in range(a, k):
            expected = Fraction(1 if a == b else 0)
            if table.inner_product(a, b) != expected:
                raise InternalInconsistencyError(
                    f"row orthogonality fails at characters {a}, {b}")


# -- derived data ------------------------------------------------------------


def frobenius_schur(table: CharacterTable, chi: int) -> int:
    """(1/|G|) * sum over g of chi(g^2), always +1, 0 or -1."""
    G = table.group
    total = cyclo_sum(
        table.value(chi, G.mul(rep, rep)) * size
        for rep, size in zip(table.class_reps, table.class_sizes)
    )
    fs = total.as_fraction() / G.order
    if fs not in (1, 0, -1):
        raise InternalInconsistencyError(f"Frobenius-Schur value {fs} outside {{+1,0,-1}}")
    return int(fs)


_eig_cache: "weakref.WeakKeyDictionary[CharacterTable, dict]" = weakref.WeakKeyDictionary()


def eigenvalue_multiplicities(table: CharacterTable, chi: int, g: int) -> tuple[int, ...]:
    """Multiplicity N_alpha of the eigenvalue exp(2*pi*i*alpha/m) of the
    representation matrix at g, for alpha = 0..m-1 (m the order of g)."""
    cache = _eig_cache.setdefault(table, {})
    key = (chi, table.class_index(g))
    hit = cache.get(key)
    if hit is not None:
        return hit
    G = table.group
    m = G.element_orders[g]
    values = []
    x = G.identity
    for _ in range(m):
        values.append(table.value(chi, x))
        x = G.mul(x, g)
    mults = []
    for alpha in range(m):
        total = cyclo_sum(
            values[t] * Cyclo.root_of_unity(m, (-alpha * t) % m) for t in range(m)
        ) / m
        n_alpha = total.as_integer()
        if n_alpha < 0:
            raise InternalInconsistencyError("negative eigenvalue multiplicity")
        mults.append(n_alpha)
    if sum(mults) != table.degrees[chi]:
        raise InternalInconsistencyError("eigenvalue multiplicities do not sum to degree")
    out = tuple(mults)
    cache[key] = out
    return out


def trivial_restriction_multiplicity(table: CharacterTable, chi: int, H: Subgroup) -> int:
    """<chi restricted to H, trivial> = (1/|H|) * sum over h of chi(h)."""
    if H.parent is not table.group:
        raise InvalidParameterError("subgroup belongs to a different group")
    total = cyclo_sum(table.value(chi, h) for h in H.members).as_fraction() / H.order
    if total.denominator != 1 or total < 0:
        raise InternalInconsistencyError("restriction multiplicity not a nonnegative integer")
    return total.numerator


# -- rational irreducibles -----------------------------------------------------

KIND_RATIONAL_FIELD = "rational-field"
KIND_NUMBER_FIELD = "number-field"
KIND_QUATERNIONIC = "quaternionic"


@dataclass(frozen=True)
class RationalIrrep:
    """One Galois orbit of complex characters: a rational irreducible W
    with endomorphism algebra bookkeeping."""

    orbit: tuple[int, ...]
    degree: int
    fs: int
    schur_index: int
    q_dimension: int
    multiplicity_n: int
    division_algebra_kind: str


def galois_orbits(table: CharacterTable) -> list[tuple[int, ...]]:
    """Partition of the character indices under the cyclotomic Galois action."""
    G = table.group
    e = G.exponent()
    keys = {tuple(v.key(e) for v in row): i for i, row in enumerate(table.rows)}
    parent = list(range(table.count))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for k in range(1, e + 1):
        if gcd(k, e) != 1:
            continue
        for i in range(table.count):
            image = tuple(table.value(i, G.power(rep, k)).key(e)
                          for rep in table.class_reps)
            j = keys.get(image)
            if j is None:
                raise InternalInconsistencyError("Galois image is not a table row")
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
    orbits: dict[int, list[int]] = {}
    for i in range(table.count):
        orbits.setdefault(find(i), []).append(i)
    return [tuple(sorted(v)) for _, v in sorted(orbits.items())]


def _schur_index(table: CharacterTable, fs: int) -> int:
    if fs == -1:
        return 2
    if fs == 1:
        return 1
    G = table.group
    supported = G.flavor in (FLAVOR_DIHEDRAL, FLAVOR_QUATERNION8,
                             FLAVOR_CYCLIC, FLAVOR_QUOTIENT)
    if not (supported or G.is_abelian()):
        raise SchurIndexUnsupportedError(
            f"cannot certify Schur index 1 for an FS=0 character of {describe(G)}")
    return 1


def rational_irreducibles(G: FiniteGroup) -> list[RationalIrrep]:
    table = character_table(G)
    out = []
    for orbit in galois_orbits(table):
        fs_values = {frobenius_schur(table, i) for i in orbit}
        if len(fs_values) != 1:
            raise InternalInconsistencyError("Frobenius-Schur varies along a Galois orbit")
        fs = fs_values.pop()
        degree = table.degrees[orbit[0]]
        schur = _schur_index(table, fs)
        if degree % schur:
            raise InternalInconsistencyError("Schur index does not divide the degree")
        kind = (KIND_QUATERNIONIC if fs == -1
                else KIND_RATIONAL_FIELD if (fs == 1 and len(orbit) == 1)
                else KIND_NUMBER_FIELD)
        out.append(RationalIrrep(
            orbit=orbit,
            degree=degree,
            fs=fs,
            schur_index=schur,
            q_dimension=len(orbit) * degree * schur,
            multiplicity_n=degree // schur,
            division_algebra_kind=kind,
        ))
    if sum(w.multiplicity_n * w.q_dimension for w in out) != G.order:
        raise InternalInconsistencyError("rational irreducibles do not fill the group algebra")
    return out


@dataclass(frozen=True)
class AlgebraFactor:
    """Simple factor of the rational group algebra: n x n matrices over a
    division algebra of the tagged kind."""

    matrix_size: int
    division_algebra_kind: str
    center_degree: int


def group_algebra_shape(G: FiniteGroup) -> list[AlgebraFactor]:
    return [
        AlgebraFactor(
            matrix_size=w.multiplicity_n,
            division_algebra_kind=w.division_algebra_kind,
            center_degree=len(w.orbit),
        )
        for w in rational_irreducibles(G)
    ]
