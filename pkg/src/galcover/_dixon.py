"""Burnside-Dixon character table computation.

The class-multiplication matrices are simultaneously diagonalized over a
prime field F_p with p = 1 (mod exponent) and p > 2*sqrt(|G|); the modular
character values are then lifted to exact cyclotomic numbers through their
root-of-unity eigenvalue multiplicities.  Everything is deterministic: the
eigenvalue scan walks F_p in order and never randomizes.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import Cyclo, cyclo_sum
from .errors import InternalInconsistencyError
from .groups import FiniteGroup, conjugacy_classes


def dixon_character_rows(G: FiniteGroup):
    """Return (classes, rows): conjugacy classes plus one exact character
    row per irreducible, each row a tuple of Cyclo values per class."""
    classes = conjugacy_classes(G)
    r = len(classes)
    class_of = [0] * G.order
    for idx, cls in enumerate(classes):
        for g in cls:
            class_of[g] = idx
    reps = [cls[0] for cls in classes]
    sizes = [len(cls) for cls in classes]
    jstar = [class_of[G.inv(rep)] for rep in reps]

    p = _dixon_prime(G.order, G.exponent())
    mats = _class_matrices(G, classes, class_of, reps)

    # Split F_p^r into the common one-dimensional eigenspaces of all class
    # matrices; each line is the central-character vector of one irreducible.
    spaces = [[_unit_vector(r, i, p) for i in range(r)]]
    for j in range(1, r):
        if all(len(s) == 1 for s in spaces):
            break
        spaces = [piece for s in spaces for piece in _split(mats[j], s, p)]
    if not all(len(s) == 1 for s in spaces):
        raise InternalInconsistencyError("class matrices did not split to lines")

    rows = []
    for (v,) in spaces:
        if v[0] == 0:
            raise InternalInconsistencyError("central character vanishes at identity")
        scale = pow(v[0], -1, p)
        omega = [x * scale % p for x in v]
        degree = _degree_from_omega(omega, sizes, jstar, G.order, p)
        chi_p = [degree * omega[l] * pow(sizes[l], -1, p) % p for l in range(r)]
        rows.append(_lift_row(G, chi_p, classes, class_of, reps, degree, p))
    return classes, rows


def _dixon_prime(order: int, exponent: int) -> int:
    from sympy import isprime

    p = exponent + 1
    while not (isprime(p) and p * p > 4 * order and order % p != 0):
        p += exponent
    return p


def _class_matrices(G, classes, class_of, reps):
    r = len(classes)
    mats = []
    for j in range(r):
        m = [[0] * r for _ in range(r)]
        for x in classes[j]:
            xi = G.inv(x)
            for l, z in enumerate(reps):
                m[class_of[G.mul(xi, z)]][l] += 1
        mats.append(m)
    return mats


def _unit_vector(r, i, p):
    v = [0] * r
    v[i] = 1
    return v


def _matvec(m, v, p):
    return [sum(mi[l] * v[l] for l in range(len(v))) % p for mi in m]


def _split(mat, basis, p):
    """Split a joint-invariant subspace (given by basis vectors) into the
    eigenspaces of ``mat`` restricted to it."""
    s = len(basis)
    if s == 1:
        return [basis]
    restricted = _restriction(mat, basis, p)
    pieces = []
    for lam in range(p):
        shifted = [row[:] for row in restricted]
        for i in range(s):
            shifted[i][i] = (shifted[i][i] - lam) % p
        kernel = _nullspace(shifted, p)
        if kernel:
            pieces.append([_combine(basis, coeffs, p) for coeffs in kernel])
        if sum(len(piece) for piece in pieces) == s:
            break
    if sum(len(piece) for piece in pieces) != s:
        raise InternalInconsistencyError("class matrix not diagonalizable mod p")
    return pieces


def _restriction(mat, basis, p):
    """Matrix R with mat*B = B*R, columns of B the basis vectors."""
    r, s = len(basis[0]), len(basis)
    cols = [[basis[i][row] for i in range(s)] for row in range(r)]  # B as rows
    images = [_matvec(mat, b, p) for b in basis]
    # Solve B*x = image for each image through one shared elimination of B.
    aug = [cols[row] + [images[i][row] for i in range(s)] for row in range(r)]
    reduced, pivots = _rref(aug, p, limit=s)
    if len(pivots) != s:
        raise InternalInconsistencyError("basis vectors not independent mod p")
    sol = [[0] * s for _ in range(s)]
    for prow, pcol in enumerate(pivots):
        for i in range(s):
            sol[pcol][i] = reduced[prow][s + i]
    # R[c][i]: coefficient of basis vector c in the image of basis vector i.
    return sol


def _combine(basis, coeffs, p):
    r = len(basis[0])
    return [sum(coeffs[i] * basis[i][row] for i in range(len(basis))) % p
            for row in range(r)]


def _rref(rows, p, limit=None):
    rows = [row[:] for row in rows]
    ncols = limit if limit is not None else (len(rows[0]) if rows else 0)
    pivots = []
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] % p), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
    return rows, pivots


def _nullspace(mat, p):
    s = len(mat)
    reduced, pivots = _rref(mat, p)
    free = [c for c in range(s) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * s
        v[fc] = 1
        for prow, pcol in enumerate(pivots):
            v[pcol] = (-reduced[prow][fc]) % p
        basis.append(v)
    return basis


def _degree_from_omega(omega, sizes, jstar, order, p):
    t = sum(omega[l] * omega[jstar[l]] * pow(sizes[l], -1, p) for l in range(len(omega))) % p
    d2 = order * pow(t, -1, p) % p
    for d in range(1, order + 1):
        if d * d > order:
            break
        if d * d % p == d2:
            return d
    raise InternalInconsistencyError("no valid character degree matches mod p")


def _primitive_root(p: int) -> int:
    from sympy import primitive_root

    return int(primitive_root(p))


def _lift_row(G, chi_p, classes, class_of, reps, degree, p):
    """Exact character values from modular ones, via the multiplicities of
    each root of unity among the eigenvalues at every class representative."""
    z = _primitive_root(p)
    values = []
    for l, g in enumerate(reps):
        m = G.element_orders[g]
        if m == 1:
            values.append(Cyclo.from_rational(degree))
            continue
        om = pow(z, (p - 1) // m, p)
        om_inv = pow(om, -1, p)
        powers = []
        x = G.identity
        for _ in range(m):
            powers.append(chi_p[class_of[x]])
            x = G.mul(x, g)
        m_inv = pow(m, -1, p)
        terms = []
        for alpha in range(m):
            acc = sum(powers[t] * pow(om_inv, alpha * t, p) for t in range(m))
            mult = acc * m_inv % p
            if mult > degree:
                raise InternalInconsistencyError(
                    "eigenvalue multiplicity exceeds the character degree")
            if mult:
                terms.append(Cyclo.root_of_unity(m, alpha) * Fraction(mult))
        values.append(cyclo_sum(terms) if terms else Cyclo.zero())
    return tuple(values)
