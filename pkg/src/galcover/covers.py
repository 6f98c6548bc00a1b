"""Monodromy data for Galois covers of the line.

A datum is a finite group together with a tuple of local monodromies whose
product is trivial and which generate the group; it determines a branched
cover of the line up to topological equivalence.  This module validates
data, computes genera of the cover and of all intermediate quotients by
coset-orbit counting, and enumerates data up to simultaneous conjugation
and up to Hurwitz (braid) moves.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._kernel import enumerate_tuples
from .errors import (
    DatumError,
    InternalInconsistencyError,
    InvalidParameterError,
    NotASubgroupError,
    SizeCapError,
    WrongFlavorError,
)
from .groups import (
    FLAVOR_DIHEDRAL,
    FiniteGroup,
    Quotient,
    Subgroup,
    closure,
    describe,
    dihedral_element_kind,
    is_normal,
    quotient_group,
)

ENUM_ORDER_CAP = 64
ENUM_BRANCH_CAP = 14

EQUIV_CONJUGATION = "conjugation"
EQUIV_CONJUGATION_BRAID = "conjugation+braid"


@dataclass(frozen=True)
class Datum:
    """A validated monodromy datum.  ``degenerate`` marks quotient data
    that kept fewer than 3 branch points (still computable, not a cover
    family in its own right)."""

    group: FiniteGroup
    orders: tuple[int, ...]
    elements: tuple[int, ...]
    degenerate: bool = False

    @property
    def branch_count(self) -> int:
        return len(self.elements)

    def labels(self) -> tuple[str, ...]:
        return tuple(self.group.label(g) for g in self.elements)

    def signature(self) -> tuple[int, ...]:
        return tuple(sorted(self.orders))


@dataclass(frozen=True)
class DatumRejection:
    """Names the first datum invariant that failed."""

    reason: str
    message: str


@dataclass(frozen=True)
class QuotientDatumResult:
    datum: Datum
    kept_points: tuple[int, ...]
    dropped_points: tuple[int, ...]
    degenerate: bool
    quotient: Quotient


@dataclass(frozen=True)
class EquivalenceClassSet:
    """Pairwise inequivalent representatives plus the orbit sizes, counted
    in tuples."""

    representatives: tuple[Datum, ...]
    class_sizes: tuple[int, ...]
    equivalence: str

    @property
    def total_tuples(self) -> int:
        return sum(self.class_sizes)

    def __len__(self) -> int:
        return len(self.representatives)


# -- validation --------------------------------------------------------------


def validate_datum(G: FiniteGroup, elements, orders=None) -> Datum | DatumRejection:
    """Check the datum invariants in order: branch count, element range,
    ramification orders, trivial product, generation."""
    els = tuple(elements)
    if len(els) < 3:
        return DatumRejection("branch-count", f"need at least 3 branch points, got {len(els)}")
    for g in els:
        if not (0 <= g < G.order):
            return DatumRejection("element-range", f"element index {g} outside 0..{G.order - 1}")
    actual = tuple(G.element_orders[g] for g in els)
    if orders is not None:
        declared = tuple(orders)
        if len(declared) != len(els):
            return DatumRejection("order-mismatch",
                                  f"{len(declared)} orders for {len(els)} branch points")
        if declared != actual:
            return DatumRejection("order-mismatch",
                                  f"declared orders {declared} but elements have orders {actual}")
    if any(m < 2 for m in actual):
        return DatumRejection("order-mismatch", "local monodromies must be nontrivial")
    prod = G.identity
    for g in els:
        prod = G.mul(prod, g)
    if prod != G.identity:
        return DatumRejection("product", f"tuple product is {G.label(prod)}, not the identity")
    if len(closure(G, els)) != G.order:
        return DatumRejection("generation", "tuple does not generate the whole group")
    return Datum(G, actual, els)


def make_datum(G: FiniteGroup, elements, orders=None) -> Datum:
    """Validating constructor; raises instead of returning a rejection."""
    result = validate_datum(G, elements, orders)
    if isinstance(result, DatumRejection):
        raise DatumError(result.reason, result.message)
    return result


def datum_from_words(G: FiniteGroup, words, orders=None) -> Datum:
    return make_datum(G, [G.parse_element(w) for w in words], orders)


# -- genus calculus ------------------------------------------------------------


def genus(D: Datum) -> int:
    """Genus of the cover, by Riemann-Hurwitz over the line."""
    n = D.group.order
    doubled = -2 * n + sum((n // m) * (m - 1) for m in D.orders) + 2
    if doubled % 2 or doubled < 0:
        raise InternalInconsistencyError(f"genus calculation produced {doubled}/2")
    return doubled // 2


def family_dimension(D: Datum) -> int:
    """Moduli of the branch points modulo the automorphisms of the line."""
    if D.branch_count < 3:
        raise InvalidParameterError("family dimension needs at least 3 branch points")
    return D.branch_count - 3


def quotient_datum(D: Datum, N: Subgroup) -> QuotientDatumResult:
    """Push the datum to the quotient by a normal subgroup; branch points
    whose local monodromy dies are dropped."""
    q = quotient_group(D.group, N)
    Gq = q.group
    images = [q.projection[g] for g in D.elements]
    kept = tuple(i for i, img in enumerate(images) if img != Gq.identity)
    dropped = tuple(i for i, img in enumerate(images) if img == Gq.identity)
    els = tuple(images[i] for i in kept)
    orders = tuple(Gq.element_orders[g] for g in els)
    prod = Gq.identity
    for g in els:
        prod = Gq.mul(prod, g)
    if prod != Gq.identity or len(closure(Gq, els)) != Gq.order:
        raise InternalInconsistencyError("quotient datum lost its invariants")
    degenerate = len(kept) < 3
    return QuotientDatumResult(Datum(Gq, orders, els, degenerate), kept, dropped,
                               degenerate, q)


def intermediate_genus(D: Datum, H: Subgroup) -> int:
    """Genus of the quotient curve by any subgroup (normality not needed):
    points over branch point i are the orbits of the cyclic group generated
    by the local monodromy acting on the cosets of H."""
    G = D.group
    if H.parent is not G:
        raise NotASubgroupError("subgroup belongs to a different group")
    coset_of = [-1] * G.order
    reps: list[int] = []
    for g in range(G.order):
        if coset_of[g] >= 0:
            continue
        idx = len(reps)
        for h in H.members:
            coset_of[G.mul(g, h)] = idx
        reps.append(g)
    index = len(reps)
    total = 0
    for g in D.elements:
        perm = [coset_of[G.mul(g, rep)] for rep in reps]
        seen = [False] * index
        for start in range(index):
            if seen[start]:
                continue
            length = 0
            c = start
            while not seen[c]:
                seen[c] = True
                c = perm[c]
                length += 1
            total += length - 1
    doubled = -2 * index + total + 2
    if doubled % 2 or doubled < 0:
        raise InternalInconsistencyError(f"quotient genus calculation produced {doubled}/2")
    return doubled // 2


def prym_dimension(D: Datum, H: Subgroup, K: Subgroup) -> int:
    """Dimension of the complementary abelian subvariety of the map of
    quotient curves by nested subgroups H <= K."""
    if not H <= K:
        raise NotASubgroupError("prym dimension needs nested subgroups H <= K")
    dim = intermediate_genus(D, H) - intermediate_genus(D, K)
    if dim < 0:
        raise InternalInconsistencyError("negative Prym dimension")
    return dim


def reflection_count(D: Datum) -> int:
    """Number of branch points with reflection local monodromy (dihedral)."""
    if D.group.flavor != FLAVOR_DIHEDRAL:
        raise WrongFlavorError(f"expected a dihedral datum, got {describe(D.group)}")
    return sum(1 for g in D.elements
               if dihedral_element_kind(D.group, g)[0] == "reflection")


# -- enumeration ----------------------------------------------------------------


def canonical_tuple(G: FiniteGroup, els: tuple[int, ...]) -> tuple[int, ...]:
    """Lexicographically least tuple in the simultaneous-conjugation orbit."""
    best = els
    for c in range(G.order):
        cand = tuple(G.conj(g, c) for g in els)
        if cand < best:
            best = cand
    return best


def conjugation_orbit_size(G: FiniteGroup, els: tuple[int, ...]) -> int:
    return len({tuple(G.conj(g, c) for g in els) for c in range(G.order)})


def _check_caps(G: FiniteGroup, r: int) -> None:
    if G.order > ENUM_ORDER_CAP:
        raise SizeCapError(f"enumeration capped at group order {ENUM_ORDER_CAP}")
    if r > ENUM_BRANCH_CAP:
        raise SizeCapError(f"enumeration capped at {ENUM_BRANCH_CAP} branch points")


def _mul_flat(G: FiniteGroup) -> list[int]:
    flat = []
    for row in G.table:
        flat.extend(row)
    return flat


def _classes_from_tuples(G: FiniteGroup, tuples) -> EquivalenceClassSet:
    buckets: dict[tuple[int, ...], int] = {}
    for t in tuples:
        key = canonical_tuple(G, t)
        buckets[key] = buckets.get(key, 0) + 1
    reps = sorted(buckets)
    data = tuple(Datum(G, tuple(G.element_orders[g] for g in rep), rep) for rep in reps)
    return EquivalenceClassSet(data, tuple(buckets[rep] for rep in reps),
                               EQUIV_CONJUGATION)


def enumerate_data(G: FiniteGroup, orders) -> EquivalenceClassSet:
    """All valid data with the given ordered ramification signature, up to
    simultaneous conjugation."""
    orders = tuple(orders)
    if any(m < 2 for m in orders):
        raise InvalidParameterError("ramification orders must be >= 2")
    _check_caps(G, len(orders))
    if len(orders) < 3:
        raise InvalidParameterError("a datum needs at least 3 branch points")
    by_order: dict[int, list[int]] = {}
    for g in range(G.order):
        by_order.setdefault(G.element_orders[g], []).append(g)
    candidates = [by_order.get(m, []) for m in orders]
    if any(not c for c in candidates):
        return EquivalenceClassSet((), (), EQUIV_CONJUGATION)
    tuples = enumerate_tuples(G.order, _mul_flat(G), list(G.inverses), G.identity,
                              candidates, True)
    return _classes_from_tuples(G, tuples)


def enumerate_all_data(G: FiniteGroup, branch_count: int) -> EquivalenceClassSet:
    """All valid data with the given number of branch points, any signature,
    up to simultaneous conjugation."""
    _check_caps(G, branch_count)
    if branch_count < 3:
        raise InvalidParameterError("a datum needs at least 3 branch points")
    nontrivial = [g for g in range(G.order) if g != G.identity]
    tuples = enumerate_tuples(G.order, _mul_flat(G), list(G.inverses), G.identity,
                              [nontrivial] * branch_count, True)
    return _classes_from_tuples(G, tuples)


def braid_move(G: FiniteGroup, els: tuple[int, ...], t: int,
               inverse: bool = False) -> tuple[int, ...]:
    """Hurwitz move at position t: (.., a, b, ..) -> (.., aba^-1, a, ..),
    or its inverse (.., a, b, ..) -> (.., b, b^-1ab, ..)."""
    a, b = els[t], els[t + 1]
    if inverse:
        pair = (b, G.mul(G.mul(G.inv(b), a), b))
    else:
        pair = (G.mul(G.mul(a, b), G.inv(a)), a)
    return els[:t] + pair + els[t + 2:]


def braid_orbits(classes: EquivalenceClassSet) -> EquivalenceClassSet:
    """Merge conjugation classes into Hurwitz-move orbits.

    Moves permute the ramification signature, so an orbit sweeps over every
    ordering of the signature multiset; class sizes count all tuples met.
    """
    if not classes.representatives:
        return EquivalenceClassSet((), (), EQUIV_CONJUGATION_BRAID)
    G = classes.representatives[0].group
    r = classes.representatives[0].branch_count
    start_nodes = [canonical_tuple(G, d.elements) for d in classes.representatives]
    component_of: dict[tuple[int, ...], int] = {}
    components: list[list[tuple[int, ...]]] = []
    for seed in start_nodes:
        if seed in component_of:
            continue
        comp_id = len(components)
        queue = [seed]
        component_of[seed] = comp_id
        members = []
        while queue:
            node = queue.pop()
            members.append(node)
            for t in range(r - 1):
                for inverse in (False, True):
                    nxt = canonical_tuple(G, braid_move(G, node, t, inverse))
                    if nxt not in component_of:
                        component_of[nxt] = comp_id
                        queue.append(nxt)
        components.append(sorted(members))
    reps, sizes = [], []
    for members in components:
        rep = members[0]
        reps.append(Datum(G, tuple(G.element_orders[g] for g in rep), rep))
        sizes.append(sum(conjugation_orbit_size(G, m) for m in members))
    order = sorted(range(len(reps)), key=lambda i: reps[i].elements)
    return EquivalenceClassSet(tuple(reps[i] for i in order),
                               tuple(sizes[i] for i in order),
                               EQUIV_CONJUGATION_BRAID)
