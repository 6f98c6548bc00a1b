"""Exact arithmetic in cyclotomic fields.

Values are stored in the power basis 1, z, ..., z^(phi(e)-1) of Q(z) for a
fixed conductor e (z = exp(2*pi*i/e)), i.e. as polynomials reduced modulo
the e-th cyclotomic polynomial with Fraction coefficients.  The canonical
reduced form makes equality, rationality and integrality decisions exact;
no floating point appears anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import InvalidParameterError


@lru_cache(maxsize=None)
def cyclotomic_polynomial(e: int) -> tuple[int, ...]:
    """Coefficients (low to high) of the e-th cyclotomic polynomial."""
    if e < 1:
        raise InvalidParameterError(f"conductor must be >= 1, got {e}")
    # x^e - 1 divided by the cyclotomic polynomials of the proper divisors.
    poly = [-1] + [0] * (e - 1) + [1]
    for d in range(1, e):
        if e % d == 0:
            poly = _polydiv_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def _polydiv_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c == 0:
            continue
        q, r = divmod(c, den[dd])
        assert r == 0, "cyclotomic division must be exact"
        out[i - dd] = q
        for j in range(dd + 1):
            num[i - dd + j] -= q * den[j]
    assert all(c == 0 for c in num), "cyclotomic division must be exact"
    return out


def phi(e: int) -> int:
    """Euler totient, read off the cyclotomic polynomial degree."""
    return len(cyclotomic_polynomial(e)) - 1


def _reduce(e: int, dense: list[Fraction]) -> tuple[Fraction, ...]:
    """Fold exponents mod e (z^e = 1), then reduce mod the cyclotomic
    polynomial to the canonical power-basis vector of length phi(e)."""
    folded = [Fraction(0)] * e
    for t, c in enumerate(dense):
        if c:
            folded[t % e] += c
    cp = cyclotomic_polynomial(e)
    deg = len(cp) - 1
    for i in range(e - 1, deg - 1, -1):
        c = folded[i]
        if c:
            folded[i] = Fraction(0)
            for j in range(deg):
                folded[i - deg + j] -= c * cp[j]
    return tuple(folded[:deg])


class Cyclo:
    """An element of Q(zeta_e) in canonical reduced form."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs: tuple[Fraction, ...]):
        self.conductor = conductor
        self.coeffs = coeffs

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_rational(q) -> "Cyclo":
        return Cyclo(1, (Fraction(q),))

    @staticmethod
    def root_of_unity(e: int, k: int = 1) -> "Cyclo":
        """zeta_e^k."""
        if e < 1:
            raise InvalidParameterError(f"root-of-unity order must be >= 1, got {e}")
        dense = [Fraction(0)] * e
        dense[k % e] = Fraction(1)
        return Cyclo(e, _reduce(e, dense))

    @staticmethod
    def zero() -> "Cyclo":
        return Cyclo.from_rational(0)

    @staticmethod
    def one() -> "Cyclo":
        return Cyclo.from_rational(1)

    # -- conductor handling --------------------------------------------------

    def lift(self, E: int) -> "Cyclo":
        """Rewrite in Q(zeta_E) for a conductor multiple E."""
        if E == self.conductor:
            return self
        if E % self.conductor != 0:
            raise InvalidParameterError("can only lift to a conductor multiple")
        step = E // self.conductor
        dense = [Fraction(0)] * E
        for t, c in enumerate(self.coeffs):
            if c:
                dense[t * step] = c
        return Cyclo(E, _reduce(E, dense))

    def _common(self, other: "Cyclo") -> tuple["Cyclo", "Cyclo"]:
        e = self.conductor * other.conductor // gcd(self.conductor, other.conductor)
        return self.lift(e), other.lift(e)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._common(other)
        return Cyclo(a.conductor, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclo(self.conductor, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._common(other)
        e = a.conductor
        dense = [Fraction(0)] * (2 * len(a.coeffs))
        for t, c in enumerate(a.coeffs):
            if not c:
                continue
            for u, d in enumerate(b.coeffs):
                if d:
                    dense[t + u] += c * d
        return Cyclo(e, _reduce(e, dense))

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a nonzero rational only."""
        q = Fraction(other)
        return Cyclo(self.conductor, tuple(c / q for c in self.coeffs))

    def galois(self, k: int) -> "Cyclo":
        """Apply the Galois automorphism zeta -> zeta^k, gcd(k, e) = 1."""
        e = self.conductor
        if gcd(k, e) != 1:
            raise InvalidParameterError(f"galois exponent {k} not coprime to {e}")
        dense = [Fraction(0)] * e
        for t, c in enumerate(self.coeffs):
            if c:
                dense[(t * k) % e] += c
        return Cyclo(e, _reduce(e, dense))

    def conjugate(self) -> "Cyclo":
        return self.galois(self.conductor - 1) if self.conductor > 2 else self

    # -- predicates and conversions -------------------------------------------

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    @property
    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise InvalidParameterError(f"{self} is not rational")
        return self.coeffs[0]

    def as_integer(self) -> int:
        q = self.as_fraction()
        if q.denominator != 1:
            raise InvalidParameterError(f"{self} is not a rational integer")
        return q.numerator

    def key(self, E: int | None = None) -> tuple:
        """Canonical comparison key, optionally at a common conductor E."""
        lifted = self.lift(E) if E else self
        return (lifted.conductor, lifted.coeffs)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._common(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        if self.is_rational:
            return hash(self.coeffs[0])
        # Hash at the current conductor; values constructed along different
        # conductor paths are always compared via __eq__, not hashed lookups.
        return hash((self.conductor, self.coeffs))

    # -- rendering ---------------------------------------------------------------

    def render(self) -> str:
        """Word form like ``1 - 2*z8 + 1/2*z8^3`` (``z{e}^t`` per basis power)."""
        if self.is_rational:
            return str(self.coeffs[0])
        sym = f"z{self.conductor}"
        parts = []
        for t, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = -c if c < 0 else c
            if t == 0:
                body = str(mag)
            else:
                power = sym if t == 1 else f"{sym}^{t}"
                body = power if mag == 1 else f"{mag}*{power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"Cyclo({self.render()})"


def _coerce(value):
    if isinstance(value, Cyclo):
        return value
    if isinstance(value, (int, Fraction)):
        return Cyclo.from_rational(value)
    return NotImplemented


def cyclo_sum(values) -> Cyclo:
    out = Cyclo.zero()
    for v in values:
        out = out + v
    return out
