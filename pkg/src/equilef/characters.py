"""Exact character theory of finite groups over Q.

Irreducible complex character tables are computed by the class-algebra
method: the class-sum matrices act on the centre of the group algebra over a
prime field F_p with p = 1 (mod exponent), their common eigenvectors are the
central characters, and eigenvalue data is lifted back to exact cyclotomic
values through root-of-unity multiplicities.  On top of the table live
Galois orbit sums (the rational-irreducible characters), induction and
restriction, and integer-checked virtual characters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import Cyclotomic
from .groups import Group, Subgroup, ElementClass, element_classes, class_index_of
from .linalg import Mat, PrimeField, from_columns, left_inverse, mat_mul, nullspace
from .numtheory import is_prime, primitive_root, sqrt_mod

DIXON_PRIME_BOUND = 10_000_000


class IntegralityError(ArithmeticError):
    """A quantity that the theory forces to be an integer failed to be one."""


@dataclass(frozen=True)
class ClassFunction:
    """A cyclotomic-valued function on conjugacy classes."""

    group: Group
    values: tuple[Cyclotomic, ...]

    def at_element(self, e: int) -> Cyclotomic:
        return self.values[class_index_of(self.group)[e]]

    @property
    def degree(self) -> Cyclotomic:
        return self.values[0]

    def sort_key(self):
        return tuple(v.sort_key() for v in self.values)


@dataclass(frozen=True)
class CharacterTable:
    """All irreducible characters of a group, trivial first, degrees ascending."""

    group: Group
    classes: tuple[ElementClass, ...]
    irreducibles: tuple[ClassFunction, ...]
    degrees: tuple[int, ...]


class VirtualCharacter:
    """A rational-valued class function, the common currency of the engine.

    Supports exact addition, subtraction and rational scaling.  Whether the
    values are an integer combination of irreducible characters is a separate
    check (``is_integral``); engine-level violations of it are hard errors.
    """

    __slots__ = ("group", "values")

    def __init__(self, group: Group, values):
        values = tuple(Fraction(v) for v in values)
        if len(values) != len(element_classes(group)):
            raise ValueError("one value per conjugacy class expected")
        self.group = group
        self.values = values

    def _same_group(self, other: "VirtualCharacter"):
        if self.group is not other.group and self.group.mul != other.group.mul:
            raise ValueError("class functions live on different groups")

    def __add__(self, other):
        self._same_group(other)
        return VirtualCharacter(self.group, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other):
        self._same_group(other)
        return VirtualCharacter(self.group, [a - b for a, b in zip(self.values, other.values)])

    def __neg__(self):
        return VirtualCharacter(self.group, [-a for a in self.values])

    def scale(self, c) -> "VirtualCharacter":
        c = Fraction(c)
        return VirtualCharacter(self.group, [c * a for a in self.values])

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    __mul__ = __rmul__

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values)

    def __eq__(self, other):
        if not isinstance(other, VirtualCharacter):
            return NotImplemented
        return (
            (self.group is other.group or self.group.mul == other.group.mul)
            and self.values == other.values
        )

    def __hash__(self):
        return hash((id(self.group), self.values))

    def __repr__(self):
        return f"VirtualCharacter({list(self.values)})"

    def is_integral(self) -> bool:
        """True when every multiplicity <self, chi_i> is a rational integer."""
        table = character_table(self.group)
        for chi in table.irreducibles:
            if not inner_product(self, chi).is_integer():
                return False
        return True


@dataclass(frozen=True)
class RationalIrreducible:
    """A Galois orbit of irreducible characters and its integer-valued sum."""

    group: Group
    orbit: tuple[int, ...]
    orbit_sum: VirtualCharacter
    orbit_size: int


def trivial_character(g: Group) -> VirtualCharacter:
    return VirtualCharacter(g, [Fraction(1)] * len(element_classes(g)))


def regular_character(g: Group) -> VirtualCharacter:
    values = [Fraction(0)] * len(element_classes(g))
    values[0] = Fraction(g.order)
    return VirtualCharacter(g, values)


def trace_at(v: VirtualCharacter, e: int) -> Fraction:
    """Value of a virtual character at a group element."""
    if not 0 <= e < v.group.order:
        raise ValueError(f"element {e} out of range for a group of order {v.group.order}")
    return v.values[class_index_of(v.group)[e]]


def inner_product(a, b):
    """<a, b> = |G|^-1 sum_g a(g) conj(b(g)), exact.

    Returns a Fraction when both arguments are rational-valued virtual
    characters and a Cyclotomic otherwise.
    """
    ga = a.group
    if ga is not b.group and ga.mul != b.group.mul:
        raise ValueError("inner product needs class functions on one group")
    classes = element_classes(ga)
    if isinstance(a, VirtualCharacter) and isinstance(b, VirtualCharacter):
        total = sum((cl.size * av * bv for cl, av, bv in zip(classes, a.values, b.values)),
                    Fraction(0))
        return total / ga.order
    av = [_cyc(x) for x in a.values]
    bv = [_cyc(x) for x in b.values]
    total = Cyclotomic.from_rational(0)
    for cl, x, y in zip(classes, av, bv):
        total = total + cl.size * (x * y.conjugate())
    return total / ga.order


def _cyc(x) -> Cyclotomic:
    return x if isinstance(x, Cyclotomic) else Cyclotomic.from_rational(x)


def induce(h: Subgroup, f: VirtualCharacter) -> VirtualCharacter:
    """The induced class function ind_H^G f.

    (ind f)(g) = |H|^-1 sum over x in G with x^-1 g x in H of f(x^-1 g x).
    Induction of an integral virtual character is again integral (Frobenius
    reciprocity pairs it with restriction, which is visibly integral).
    """
    hg = h.as_group()
    if f.group is not hg and f.group.mul != hg.mul:
        raise ValueError("the class function is not defined on the given subgroup")
    g = h.parent
    sub_class = class_index_of(hg)
    values = []
    for cl in element_classes(g):
        rep = cl.representative
        acc = Fraction(0)
        for x in range(g.order):
            y = g.mul[g.mul[g.inverse[x]][rep]][x]
            if h.contains(y):
                acc += f.values[sub_class[h.from_parent(y)]]
        values.append(acc / h.order)
    return VirtualCharacter(g, values)


def restrict(f: VirtualCharacter, h: Subgroup) -> VirtualCharacter:
    """res_H^G f: the same function evaluated on H's own classes."""
    g = h.parent
    if f.group is not g and f.group.mul != g.mul:
        raise ValueError("the class function is not defined on the parent group")
    hg = h.as_group()
    parent_class = class_index_of(g)
    values = [
        f.values[parent_class[h.to_parent(cl.representative)]]
        for cl in element_classes(hg)
    ]
    return VirtualCharacter(hg, values)


# ---------------------------------------------------------------------------
# character table by exact diagonalization of the class algebra mod p


def character_table(g: Group) -> CharacterTable:
    if "character_table" not in g._cache:
        g._cache["character_table"] = _build_character_table(g)
    return g._cache["character_table"]


def _dixon_prime(order: int, exponent: int) -> int:
    """Smallest p = 1 (mod exponent) with p^2 > 4|G| (so degrees lift uniquely)."""
    p = exponent + 1
    while p <= DIXON_PRIME_BOUND:
        if p * p > 4 * order and is_prime(p):
            return p
        p += exponent
    raise ArithmeticError(
        f"no suitable prime below {DIXON_PRIME_BOUND} for exponent {exponent}"
    )


def power_map(g: Group) -> list[tuple[int, ...]]:
    """pm[j][k] = class index of (rep of class j)^k, for k = 0..exponent-1."""
    if "power_map" not in g._cache:
        classes = element_classes(g)
        cls_of = class_index_of(g)
        m = g.exponent()
        pm = []
        for cl in classes:
            rep = cl.representative
            row, x = [], 0
            for _ in range(m):
                row.append(cls_of[x])
                x = g.mul[x][rep]
            pm.append(tuple(row))
        g._cache["power_map"] = pm
    return g._cache["power_map"]


def _build_character_table(g: Group) -> CharacterTable:
    classes = tuple(element_classes(g))
    r = len(classes)
    if r == 1:
        triv = ClassFunction(g, (Cyclotomic.from_rational(1),))
        return CharacterTable(g, classes, (triv,), (1,))

    m = g.exponent()
    p = _dixon_prime(g.order, m)
    field = PrimeField(p)
    cls_of = class_index_of(g)
    sizes = [cl.size for cl in classes]
    inv_class = [cls_of[g.inverse[cl.representative]] for cl in classes]

    # structure constants a[i][j][k] = #{(x, y) in C_i x C_j : x y = z_k}
    a = [[[0] * r for _ in range(r)] for _ in range(r)]
    reps = [cl.representative for cl in classes]
    for i, cl in enumerate(classes):
        for x in cl.members:
            xinv = g.inverse[x]
            for k, zk in enumerate(reps):
                a[i][cls_of[g.mul[xinv][zk]]][k] += 1

    # right multiplication by the class sum K_i, acting on the basis {K_j}
    def class_matrix(i: int) -> Mat:
        return Mat(r, r, [[a[j][i][k] % p for k in range(r)] for j in range(r)])

    # split F_p^r into common eigenspaces; each line is a central character
    spaces = [Mat.identity(r, field).columns()]
    for i in range(1, r):
        if all(len(cols) == 1 for cols in spaces):
            break
        mi = class_matrix(i)
        refined = []
        for cols in spaces:
            if len(cols) == 1:
                refined.append(cols)
                continue
            s = from_columns(cols, r)
            b = mat_mul(left_inverse(s, field), mat_mul(mi, s, field), field)
            d = len(cols)
            found = 0
            for lam in range(p):
                shifted = Mat(d, d, [
                    [(b.rows[x][y] - (lam if x == y else 0)) % p for y in range(d)]
                    for x in range(d)
                ])
                kern = nullspace(shifted, field)
                if kern:
                    refined.append([mat_vec_cols(s, v, field) for v in kern])
                    found += len(kern)
                    if found == d:
                        break
            if found != d:
                raise ArithmeticError("class algebra failed to split over F_p")
        spaces = refined
    if any(len(cols) != 1 for cols in spaces):
        raise ArithmeticError("common eigenspace splitting did not reach lines")

    # normalize central characters and recover degrees via orthogonality
    inv_sizes = [pow(s % p, -1, p) for s in sizes]
    rows_mod_p = []
    for (w,) in [tuple(cols) for cols in spaces]:
        if w[0] % p == 0:
            raise ArithmeticError("central character vanishes at the identity class")
        scale = pow(w[0], -1, p)
        omega = [x * scale % p for x in w]
        s_sum = sum(omega[j] * omega[inv_class[j]] * inv_sizes[j] for j in range(r)) % p
        deg_sq = g.order * pow(s_sum, -1, p) % p
        root = sqrt_mod(deg_sq, p)
        degree = min(root, p - root)
        row = [omega[j] * degree * inv_sizes[j] % p for j in range(r)]
        rows_mod_p.append((degree, row))

    # lift each value through root-of-unity multiplicities
    pm = power_map(g)
    z = pow(primitive_root(p), (p - 1) // m, p)
    z_pows = [pow(z, k, p) for k in range(m)]
    z_inv_pows = [pow(z_pows[k], -1, p) for k in range(m)]
    m_inv = pow(m % p, -1, p)
    lifted = []
    for degree, row in rows_mod_p:
        values = []
        for j in range(r):
            mults = []
            for l in range(m):
                acc = 0
                for k in range(m):
                    acc += row[pm[j][k]] * z_inv_pows[l * k % m]
                mults.append(acc % p * m_inv % p)
            if sum(mults) != degree:
                raise ArithmeticError("eigenvalue multiplicities do not sum to the degree")
            values.append(Cyclotomic.from_root_combination(m, mults))
        lifted.append((degree, ClassFunction(g, tuple(values))))

    one = Cyclotomic.from_rational(1)
    trivial = [t for t in lifted if all(v == one for v in t[1].values)]
    rest = [t for t in lifted if not all(v == one for v in t[1].values)]
    if len(trivial) != 1:
        raise ArithmeticError("expected exactly one trivial character")
    rest.sort(key=lambda t: (t[0], t[1].sort_key()))
    ordered = trivial + rest
    degrees = tuple(t[0] for t in ordered)
    irreducibles = tuple(t[1] for t in ordered)

    if sum(d * d for d in degrees) != g.order:
        raise ArithmeticError("degree squares do not sum to the group order")
    table = CharacterTable(g, classes, irreducibles, degrees)
    _check_orthonormality(table)
    return table


def mat_vec_cols(s: Mat, v: list, field) -> list:
    """s . v for a column vector v (helper for eigenspace mapping)."""
    return [
        _dot_mod(row, v, field)
        for row in s.rows
    ]


def _dot_mod(row, v, field):
    acc = field.zero
    for x, y in zip(row, v):
        if x and y:
            acc = field.add(acc, field.mul(x, y))
    return acc


def _check_orthonormality(table: CharacterTable):
    irr = table.irreducibles
    for i in range(len(irr)):
        for j in range(i, len(irr)):
            expected = 1 if i == j else 0
            if inner_product(irr[i], irr[j]) != expected:
                raise ArithmeticError(
                    f"characters {i} and {j} are not orthonormal; lifting is inconsistent"
                )


# ---------------------------------------------------------------------------
# rational irreducibles as Galois orbit sums


def rational_irreducibles(table: CharacterTable) -> list[RationalIrreducible]:
    """Galois orbits of the irreducibles under zeta -> zeta^k, with orbit sums.

    The orbit sum Phi takes rational integer values and satisfies
    <Phi, Phi> = orbit size.  Orbits are listed by least member index, so the
    trivial orbit comes first.
    """
    g = table.group
    if "rational_irreducibles" not in g._cache:
        m = g.exponent()
        pm = power_map(g)
        r = len(table.classes)
        lookup = {table.irreducibles[t].values: t for t in range(len(table.irreducibles))}
        seen = [False] * len(table.irreducibles)
        orbits = []
        for t in range(len(table.irreducibles)):
            if seen[t]:
                continue
            orbit = set()
            stack = [t]
            while stack:
                u = stack.pop()
                if u in orbit:
                    continue
                orbit.add(u)
                seen[u] = True
                base = table.irreducibles[u].values
                for k in range(1, m + 1):
                    if math.gcd(k, m) != 1:
                        continue
                    moved = tuple(base[pm[j][k % m]] for j in range(r))
                    v = lookup.get(moved)
                    if v is None:
                        raise ArithmeticError("Galois action left the character table")
                    if v not in orbit:
                        stack.append(v)
            orbits.append(tuple(sorted(orbit)))
        orbits.sort(key=lambda o: o[0])

        out = []
        for orbit in orbits:
            acc = [Cyclotomic.from_rational(0)] * r
            for t in orbit:
                acc = [x + y for x, y in zip(acc, table.irreducibles[t].values)]
            values = []
            for x in acc:
                if not x.is_integer():
                    raise IntegralityError("Galois orbit sum has a non-integer value")
                values.append(x.as_fraction())
            out.append(
                RationalIrreducible(
                    group=g,
                    orbit=orbit,
                    orbit_sum=VirtualCharacter(g, values),
                    orbit_size=len(orbit),
                )
            )
        g._cache["rational_irreducibles"] = out
    return g._cache["rational_irreducibles"]


def assert_integral(v: VirtualCharacter, context: str) -> VirtualCharacter:
    """Raise IntegralityError unless v is an integral virtual character."""
    if not v.is_integral():
        raise IntegralityError(f"{context}: {v!r} is not an integral virtual character")
    return v
