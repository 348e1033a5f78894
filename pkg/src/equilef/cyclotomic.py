"""Exact arithmetic in cyclotomic fields Q(zeta_e).

A value is stored as a vector of rationals in the power basis
1, z, ..., z^(phi(e)-1) of a primitive e-th root of unity z, reduced by the
e-th cyclotomic polynomial.  On construction every value is rewritten over
the smallest cyclotomic field containing it, so equality and hashing are
plain structural comparisons and rational values always carry conductor 1.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .linalg import Mat, QQ, from_columns, rref
from .numtheory import divisors, euler_phi


@lru_cache(maxsize=None)
def cyclotomic_polynomial(e: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_e, low degree first, monic."""
    if e < 1:
        raise ValueError("conductor must be positive")
    # divide x^e - 1 by Phi_d for every proper divisor d of e
    poly = [-1] + [0] * (e - 1) + [1]
    for d in divisors(e)[:-1]:
        phi_d = cyclotomic_polynomial(d)
        poly = _poly_exact_div(poly, list(phi_d))
    return tuple(poly)


def _poly_exact_div(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (den monic)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("division was not exact")
    return out


def _reduce_mod_phi(coeffs: list[Fraction], e: int) -> list[Fraction]:
    """Remainder of a polynomial in z modulo Phi_e, as phi(e) coefficients."""
    phi = cyclotomic_polynomial(e)
    deg = len(phi) - 1
    a = list(coeffs) + [Fraction(0)] * max(0, deg - len(coeffs))
    for i in range(len(a) - 1, deg - 1, -1):
        c = a[i]
        if c:
            a[i] = Fraction(0)
            for j in range(deg):
                a[i - deg + j] -= c * phi[j]
    return a[:deg]


class Cyclotomic:
    """An element of a cyclotomic field in canonical (minimal-conductor) form."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs):
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != euler_phi(conductor):
            raise ValueError("coefficient vector has wrong length")
        self.conductor = conductor
        self.coeffs = coeffs

    # -- construction ------------------------------------------------------

    @classmethod
    def from_rational(cls, q) -> "Cyclotomic":
        return cls(1, (Fraction(q),))

    @classmethod
    def root_of_unity(cls, e: int, k: int = 1) -> "Cyclotomic":
        """zeta_e^k in canonical form."""
        if e < 1:
            raise ValueError("order must be positive")
        k %= e
        g = math.gcd(k, e) if k else e
        e2, k2 = e // g, k // g
        raw = [Fraction(0)] * max(k2 + 1, 1)
        raw[k2] = Fraction(1)
        return _make(e2, raw)

    @classmethod
    def from_root_combination(cls, e: int, coeffs) -> "Cyclotomic":
        """sum_k coeffs[k] * zeta_e^k, reduced to canonical form."""
        raw = [Fraction(c) for c in coeffs]
        if len(raw) > e:
            folded = [Fraction(0)] * e
            for i, c in enumerate(raw):
                folded[i % e] += c
            raw = folded
        return _make(e, raw)

    # -- ring operations ---------------------------------------------------

    def _promoted(self, e: int) -> list[Fraction]:
        """Coefficients of self inside Q(zeta_e); requires conductor | e."""
        if e == self.conductor:
            return list(self.coeffs)
        step = e // self.conductor
        raw = [Fraction(0)] * e
        for i, c in enumerate(self.coeffs):
            raw[(i * step) % e] += c
        return _reduce_mod_phi(raw, e)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        e = math.lcm(self.conductor, other.conductor)
        a, b = self._promoted(e), other._promoted(e)
        return _make(e, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.conductor, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.conductor, tuple(c * other for c in self.coeffs))
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        e = math.lcm(self.conductor, other.conductor)
        a, b = self._promoted(e), other._promoted(e)
        prod = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return _make(e, prod)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        raise TypeError("division only by rational scalars")

    # -- Galois actions ----------------------------------------------------

    def galois(self, k: int) -> "Cyclotomic":
        """Image under sigma_k : zeta -> zeta^k, for k coprime to the conductor."""
        e = self.conductor
        if e == 1:
            return self
        if math.gcd(k, e) != 1:
            raise ValueError(f"{k} is not coprime to the conductor {e}")
        raw = [Fraction(0)] * e
        for i, c in enumerate(self.coeffs):
            raw[(i * k) % e] += c
        return _make(e, raw)

    def conjugate(self) -> "Cyclotomic":
        return self.galois(self.conductor - 1) if self.conductor > 1 else self

    # -- predicates and conversions ----------------------------------------

    def is_rational(self) -> bool:
        return self.conductor == 1

    def as_fraction(self) -> Fraction:
        if self.conductor != 1:
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def is_integer(self) -> bool:
        return self.conductor == 1 and self.coeffs[0].denominator == 1

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.conductor == 1 and self.coeffs[0] == other
        if isinstance(other, Cyclotomic):
            return self.conductor == other.conductor and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        if self.conductor == 1:
            return hash(self.coeffs[0])
        return hash((self.conductor, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        if self.conductor == 1:
            return f"Cyc({self.coeffs[0]})"
        terms = ", ".join(str(c) for c in self.coeffs)
        return f"Cyc(z{self.conductor}; {terms})"

    def sort_key(self):
        """Deterministic total order key (conductor, then coefficients)."""
        return (self.conductor, self.coeffs)


def _coerce(x) -> "Cyclotomic":
    if isinstance(x, Cyclotomic):
        return x
    if isinstance(x, (int, Fraction)):
        return Cyclotomic.from_rational(x)
    return NotImplemented


def _make(e: int, raw_coeffs: list[Fraction]) -> Cyclotomic:
    """Reduce mod Phi_e and rewrite over the smallest containing subfield."""
    coeffs = _reduce_mod_phi([Fraction(c) for c in raw_coeffs], e)
    if e == 1:
        return Cyclotomic(1, coeffs)
    if all(c == 0 for c in coeffs[1:]):
        return Cyclotomic(1, (coeffs[0],))
    for d in divisors(e)[:-1]:
        if _invariant_under_gal(coeffs, e, d):
            return Cyclotomic(d, _express_in_subfield(coeffs, e, d))
    return Cyclotomic(e, tuple(coeffs))


def _invariant_under_gal(coeffs: list[Fraction], e: int, d: int) -> bool:
    """True when the value is fixed by Gal(Q(zeta_e)/Q(zeta_d))."""
    for k in range(1, e):
        if math.gcd(k, e) == 1 and k % d == 1 % d:
            raw = [Fraction(0)] * e
            for i, c in enumerate(coeffs):
                raw[(i * k) % e] += c
            if _reduce_mod_phi(raw, e) != coeffs:
                return False
    return True


def _express_in_subfield(coeffs: list[Fraction], e: int, d: int) -> tuple[Fraction, ...]:
    """Coordinates of the value in the power basis of Q(zeta_d) inside Q(zeta_e)."""
    step = e // d
    cols = []
    for i in range(euler_phi(d)):
        raw = [Fraction(0)] * e
        raw[(i * step) % e] = Fraction(1)
        cols.append(_reduce_mod_phi(raw, e))
    aug = from_columns(cols + [coeffs], euler_phi(e))
    red, pivots = rref(aug, QQ)
    n = len(cols)
    if pivots != list(range(n)):
        raise ArithmeticError("subfield expression failed")
    sol = [Fraction(0)] * n
    for row_idx, col in enumerate(pivots):
        sol[col] = red.rows[row_idx][n]
    return tuple(sol)
