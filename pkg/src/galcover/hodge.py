"""Hodge-theoretic bookkeeping for cover families.

For each complex irreducible character the holomorphic multiplicity (its
multiplicity in the space of holomorphic differentials of the cover) is
computed exactly from the eigenvalue data of the local monodromies.  The
convention is pinned by the hyperelliptic calibration in the test suite: a
degree-2 cover with k branch points must give multiplicity k/2 - 1 on the
nontrivial character.  On top of that sit the eigenspace types (a, b), the
delta calculus that lower-bounds the dimension of the smallest special
subvariety containing a family, and the Jacobian decomposition reports.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chars import (
    CharacterTable,
    RationalIrrep,
    character_table,
    eigenvalue_multiplicities,
    frobenius_schur,
    rational_irreducibles,
)
from .covers import Datum, family_dimension, genus, intermediate_genus, prym_dimension
from .errors import (
    ConventionError,
    InternalInconsistencyError,
    InvalidParameterError,
    WrongFlavorError,
)
from .groups import (
    FLAVOR_DIHEDRAL,
    FLAVOR_QUATERNION8,
    Subgroup,
    center,
    cyclic_subgroup,
    describe,
    subgroup_generated,
)

POLICY_LITERAL = "paper-literal"
POLICY_CONSERVATIVE = "conservative"

ASSUMPTION_GM = "GM"


@dataclass(frozen=True)
class DeltaPolicy:
    """How real (FS = +1) eigenspace types are converted to delta values,
    plus the optional external-classification assumption for quaternionic
    Prym pieces over elliptic curves (tag GM)."""

    tag: str = POLICY_CONSERVATIVE
    assume_gm: bool = False

    def __post_init__(self):
        if self.tag not in (POLICY_LITERAL, POLICY_CONSERVATIVE):
            raise InvalidParameterError(f"unknown delta policy {self.tag!r}")


def normalize_policy(policy) -> DeltaPolicy:
    if isinstance(policy, DeltaPolicy):
        return policy
    if isinstance(policy, str):
        tag = {"literal": POLICY_LITERAL, "conservative": POLICY_CONSERVATIVE}.get(
            policy, policy)
        return DeltaPolicy(tag)
    raise InvalidParameterError(f"cannot interpret {policy!r} as a delta policy")


# -- eigenspace reports ---------------------------------------------------------


@dataclass(frozen=True)
class EigenspaceEntry:
    char_index: int
    degree: int
    fs: int
    multiplicity_holo: int
    conjugate_index: int


@dataclass(frozen=True)
class EigenspacePair:
    """A conjugate pair of characters (or one self-conjugate character)
    with its eigenspace type (a, b) = (N_chi, N_chibar)."""

    indices: tuple[int, ...]
    degree: int
    fs: int
    type: tuple[int, int]


@dataclass(frozen=True)
class EigenspaceReport:
    datum: Datum
    genus: int
    entries: tuple[EigenspaceEntry, ...]
    pairs: tuple[EigenspacePair, ...]

    def entry(self, chi: int) -> EigenspaceEntry:
        return self.entries[chi]

    def as_dict(self) -> dict:
        return {
            "genus": self.genus,
            "characters": [
                {
                    "index": e.char_index,
                    "degree": e.degree,
                    "fs": e.fs,
                    "multiplicity_holo": e.multiplicity_holo,
                    "conjugate_index": e.conjugate_index,
                }
                for e in self.entries
            ],
            "pairs": [
                {
                    "indices": list(p.indices),
                    "degree": p.degree,
                    "fs": p.fs,
                    "type": list(p.type),
                }
                for p in self.pairs
            ],
        }


def chevalley_weil(D: Datum, table: CharacterTable | None = None) -> EigenspaceReport:
    """Holomorphic multiplicity of every complex irreducible.

    For a nontrivial character of degree d the multiplicity is
    -d + sum over branch points i and eigenvalue exponents a >= 1 of
    N_{i,a} * a / m_i, with N_{i,a} the multiplicity of exp(2*pi*i*a/m_i)
    among the eigenvalues of the local monodromy; the trivial character
    contributes 0.  Non-integral results raise: they would mean the local
    eigenvalue convention was violated.
    """
    G = D.group
    if table is None:
        table = character_table(G)
    g_total = genus(D)
    mults = []
    for chi in range(table.count):
        d = table.degrees[chi]
        if table.is_trivial(chi):
            mults.append(0)
            continue
        acc = Fraction(-d)
        for g_el, m in zip(D.elements, D.orders):
            eig = eigenvalue_multiplicities(table, chi, g_el)
            acc += sum(Fraction(alpha * eig[alpha], m) for alpha in range(1, m))
        if acc.denominator != 1 or acc < 0:
            raise ConventionError(
                f"holomorphic multiplicity {acc} for character {chi} is not a "
                "nonnegative integer")
        mults.append(int(acc))
    if sum(d * n for d, n in zip(table.degrees, mults)) != g_total:
        raise InternalInconsistencyError(
            "holomorphic multiplicities do not add up to the genus")
    entries = tuple(
        EigenspaceEntry(chi, table.degrees[chi], frobenius_schur(table, chi),
                        mults[chi], table.conjugate_index(chi))
        for chi in range(table.count)
    )
    pairs = []
    for chi in range(table.count):
        conj = table.conjugate_index(chi)
        if conj < chi:
            continue
        indices = (chi,) if conj == chi else (chi, conj)
        pairs.append(EigenspacePair(indices, table.degrees[chi],
                                    entries[chi].fs, (mults[chi], mults[conj])))
    return EigenspaceReport(D, g_total, entries, tuple(pairs))


# -- delta calculus ---------------------------------------------------------------


def delta(pair_type: tuple[int, int], fs: int, policy) -> Fraction:
    """Dimension of the symmetric space forced by an eigenspace type.

    Complex pairs (fs = 0) of type (a, b) give a*b.  Real self-conjugate
    types (a, a) give a(a+2)/2 under the paper-literal rule and the
    symplectic a(a+1)/2 under the conservative rule.  Quaternionic types
    contribute 0 here; any external-assumption bonus is handled by the
    exclusion test, never by this function.
    """
    policy = normalize_policy(policy)
    a, b = pair_type
    if a < 0 or b < 0:
        raise InvalidParameterError("eigenspace type must be nonnegative")
    if fs == 0:
        return Fraction(a * b)
    if fs == 1:
        if a != b:
            raise InvalidParameterError("a real eigenspace has a symmetric type")
        if policy.tag == POLICY_LITERAL:
            return Fraction(a * (a + 2), 2)
        return Fraction(a * (a + 1), 2)
    if fs == -1:
        return Fraction(0)
    raise InvalidParameterError(f"Frobenius-Schur indicator must be +1, 0 or -1, got {fs}")


@dataclass(frozen=True)
class ExclusionContribution:
    pair_indices: tuple[int, ...]
    type: tuple[int, int]
    fs: int
    delta: Fraction
    note: str


@dataclass(frozen=True)
class ExclusionReport:
    family_dim: int
    contributions: tuple[ExclusionContribution, ...]
    lower_bound: Fraction
    verdict: str
    conditional_on: tuple[str, ...]

    @property
    def excluded(self) -> bool:
        return self.verdict == "excluded"

    def as_dict(self) -> dict:
        return {
            "family_dim": self.family_dim,
            "contributions": [
                {
                    "pair": list(c.pair_indices),
                    "type": list(c.type),
                    "fs": c.fs,
                    "delta": str(c.delta),
                    "note": c.note,
                }
                for c in self.contributions
            ],
            "lower_bound": str(self.lower_bound),
            "verdict": self.verdict,
            "conditional_on": list(self.conditional_on),
        }


_FS_NOTE = {0: "complex pair", 1: "real", -1: "quaternionic"}


def shimura_lower_bound(D: Datum, policy=POLICY_CONSERVATIVE,
                        report: EigenspaceReport | None = None) -> ExclusionReport:
    """Sum the forced symmetric-space dimensions over the nonzero eigenspace
    pairs and compare with the family dimension.

    A quaternionic piece normally contributes 0.  Under ``assume_gm`` it
    contributes 1 extra when it is the Prym of a degree-2 quotient over an
    elliptic intermediate curve (an externally classified situation, tagged
    GM in ``conditional_on``).
    """
    policy = normalize_policy(policy)
    if report is None:
        report = chevalley_weil(D)
    table = character_table(D.group)
    fam = family_dimension(D)
    contributions = []
    bound = Fraction(0)
    used_gm = False
    for pair in report.pairs:
        if table.is_trivial(pair.indices[0]) or pair.type == (0, 0):
            continue
        d_val = delta(pair.type, pair.fs, policy)
        note = _FS_NOTE[pair.fs]
        if (pair.fs == -1 and policy.assume_gm
                and _is_prym_over_elliptic(D, report, pair)):
            d_val += 1
            note = "quaternionic, Prym over elliptic curve (GM assumption)"
            used_gm = True
        contributions.append(ExclusionContribution(
            pair.indices, pair.type, pair.fs, d_val, note))
        bound += d_val
    verdict = "excluded" if bound > fam else "inconclusive"
    conditional = (ASSUMPTION_GM,) if used_gm else ()
    return ExclusionReport(fam, tuple(contributions), bound, verdict, conditional)


def _is_prym_over_elliptic(D: Datum, report: EigenspaceReport,
                           pair: EigenspacePair) -> bool:
    """Does this self-conjugate piece fill the Prym of a central degree-2
    quotient with elliptic base?"""
    holo_dim = pair.degree * sum(report.entries[i].multiplicity_holo
                                 for i in pair.indices)
    G = D.group
    for z in center(G).members:
        if G.element_orders[z] != 2:
            continue
        if intermediate_genus(D, cyclic_subgroup(G, z)) == 1 \
                and holo_dim == report.genus - 1:
            return True
    return False


# -- decomposition reports ----------------------------------------------------------


SCHEME_GROUP_ALGEBRA = "group-algebra"
SCHEME_DIHEDRAL = "dihedral"
SCHEME_Q8 = "q8"


@dataclass(frozen=True)
class DecompositionFactor:
    name: str
    dimension: int
    multiplicity: int = 1
    division_algebra_kind: str | None = None
    char_indices: tuple[int, ...] = ()


@dataclass(frozen=True)
class DecompositionReport:
    scheme: str
    genus: int
    factors: tuple[DecompositionFactor, ...]
    residual_dimension: int

    def dimensions(self) -> tuple[int, ...]:
        return tuple(f.dimension for f in self.factors)

    def as_dict(self) -> dict:
        return {
            "scheme": self.scheme,
            "genus": self.genus,
            "factors": [
                {
                    "name": f.name,
                    "dimension": f.dimension,
                    "multiplicity": f.multiplicity,
                    **({"kind": f.division_algebra_kind}
                       if f.division_algebra_kind else {}),
                    **({"characters": list(f.char_indices)} if f.char_indices else {}),
                }
                for f in self.factors
            ],
            "residual_dimension": self.residual_dimension,
        }


def group_algebra_dimensions(D: Datum,
                             report: EigenspaceReport | None = None) -> DecompositionReport:
    """Isogeny factor dimensions induced by the rational irreducibles: each
    rational irreducible W with multiplicity n contributes one abelian
    subvariety Y appearing n times, of dimension (isotypic holomorphic
    dimension) / n."""
    if report is None:
        report = chevalley_weil(D)
    irreps = rational_irreducibles(D.group)
    factors = []
    total = 0
    for idx, w in enumerate(irreps):
        isotypic = w.degree * sum(report.entries[i].multiplicity_holo for i in w.orbit)
        if isotypic % w.multiplicity_n:
            raise InternalInconsistencyError(
                "isotypic dimension not divisible by the factor multiplicity")
        dim = isotypic // w.multiplicity_n
        factors.append(DecompositionFactor(
            name=f"Y{idx + 1}",
            dimension=dim,
            multiplicity=w.multiplicity_n,
            division_algebra_kind=w.division_algebra_kind,
            char_indices=w.orbit,
        ))
        total += w.multiplicity_n * dim
    if total != report.genus:
        raise InternalInconsistencyError("group-algebra factor dimensions miss the genus")
    return DecompositionReport(SCHEME_GROUP_ALGEBRA, report.genus, tuple(factors), 0)


def dihedral_jacobian_decomposition(D: Datum) -> DecompositionReport:
    """Factor dimensions of the cover Jacobian through the three index-2
    subgroups of a dihedral group of order 4p (p an odd prime); whatever is
    left of the genus is reported as the residual."""
    G = D.group
    if G.flavor != FLAVOR_DIHEDRAL:
        raise WrongFlavorError(f"expected a dihedral datum, got {describe(G)}")
    n = G.flavor_param
    p = n // 2
    if n % 2 or p < 3 or not _is_prime(p):
        raise WrongFlavorError(
            f"dihedral decomposition needs rotation order 2p with p an odd prime, got {n}")
    g_total = genus(D)
    full = Subgroup(G, tuple(range(G.order)))
    rotations = Subgroup(G, tuple(range(n)))
    dp = subgroup_generated(G, (2, n))        # r^2 and s
    dp_twisted = subgroup_generated(G, (2, n + 1))  # r^2 and r*s
    base = intermediate_genus(D, full)
    factors = (
        DecompositionFactor("base", base),
        DecompositionFactor("prym_rotation_subgroup",
                            prym_dimension(D, rotations, full)),
        DecompositionFactor("prym_reflection_subgroup",
                            prym_dimension(D, dp, full)),
        DecompositionFactor("prym_twisted_reflection_subgroup",
                            prym_dimension(D, dp_twisted, full)),
    )
    residual = g_total - sum(f.dimension for f in factors)
    if residual < 0:
        raise InternalInconsistencyError("dihedral factors exceed the genus")
    return DecompositionReport(SCHEME_DIHEDRAL, g_total, factors, residual)


def q8_jacobian_decomposition(D: Datum) -> DecompositionReport:
    """The five-factor decomposition through the cyclic subgroups of the
    quaternion group; the dimensions must add up to the genus exactly."""
    G = D.group
    if G.flavor != FLAVOR_QUATERNION8:
        raise WrongFlavorError(f"expected a quaternion datum, got {describe(G)}")
    g_total = genus(D)
    full = Subgroup(G, tuple(range(8)))
    base = intermediate_genus(D, full)
    factors = (
        DecompositionFactor("base", base),
        DecompositionFactor("prym_i", prym_dimension(D, cyclic_subgroup(G, 2), full)),
        DecompositionFactor("prym_j", prym_dimension(D, cyclic_subgroup(G, 4), full)),
        DecompositionFactor("prym_ij", prym_dimension(D, cyclic_subgroup(G, 6), full)),
        DecompositionFactor(
            "prym_center",
            g_total - intermediate_genus(D, cyclic_subgroup(G, 1))),
    )
    if sum(f.dimension for f in factors) != g_total:
        raise InternalInconsistencyError("quaternion factor dimensions miss the genus")
    return DecompositionReport(SCHEME_Q8, g_total, factors, 0)


# -- hyperelliptic certificates ---------------------------------------------------------


@dataclass(frozen=True)
class HyperellipticCertificate:
    """A central involution with rational quotient: exhibits the cover as a
    degree-2 cover of the line.  Absence of a certificate does not prove
    the curve non-hyperelliptic."""

    element: int
    label: str
    fixed_points: int


def hyperelliptic_certificate(D: Datum) -> HyperellipticCertificate | None:
    G = D.group
    g_total = genus(D)
    for z in center(G).members:
        if G.element_orders[z] != 2:
            continue
        if intermediate_genus(D, cyclic_subgroup(G, z)) != 0:
            continue
        fixed = _fixed_point_count(D, z)
        if fixed != 2 * g_total + 2:
            raise InternalInconsistencyError(
                f"{fixed} fixed points, Riemann-Hurwitz demands {2 * g_total + 2}")
        return HyperellipticCertificate(z, G.label(z), fixed)
    return None


def _fixed_point_count(D: Datum, z: int) -> int:
    """Number of points of the cover fixed by z: over branch point i the
    points are the cosets x<g_i>, fixed exactly when z lies in the point
    stabilizer x<g_i>x^-1."""
    G = D.group
    total = 0
    for g in D.elements:
        H = cyclic_subgroup(G, g)
        seen = [False] * G.order
        for x in range(G.order):
            if seen[x]:
                continue
            for h in H.members:
                seen[G.mul(x, h)] = True
            if H.contains(G.mul(G.mul(G.inv(x), z), x)):
                total += 1
    return total


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True
