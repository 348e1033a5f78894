"""The fixed-point identity engine.

A Scenario bundles a finite group, a regular simplicial action, and an
integer lattice of coefficients.  The engine computes, as exact virtual
characters of the group:

  lhs            the equivariant Euler characteristic of the whole space,
  rhs_induction  the sum over subgroup classes [H] of |H|/|N(H)| times the
                 induced Euler characteristic of the stratum of points with
                 stabilizer exactly H,
  rhs_isotypic   the same sum expanded over rational irreducibles of each H,
                 with integer coefficients c recovered by inner products,

and certifies their classwise equality, along with the cyclic-subgroup
comparison of Lefschetz numbers, the free-action vanishing and covering
identities, the regular-multiple identity for free actions, and the
characteristic-p comparison with its per-degree reconciliation.

Every number is an exact rational; a comparison either holds on the nose or
the verdict fails.  Integrality violations (a non-integer coefficient,
a non-integral character) raise IntegralityError: they cannot occur for a
correct computation and are treated as bugs rather than verdicts.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from .characters import (
    IntegralityError,
    RationalIrreducible,
    VirtualCharacter,
    assert_integral,
    character_table,
    induce,
    inner_product,
    rational_irreducibles,
    regular_character,
    trace_at,
)
from .cohomology import GLattice, CochainComplex, cochain_complex
from .complexes import (
    SimplicialGComplex,
    exact_stratum,
    fixed_subcomplex,
    quotient_complex,
)
from .groups import (
    Group,
    Subgroup,
    conjugacy_classes_of_subgroups,
    element_classes,
    normalizer,
)


class Scenario:
    """A named (group, complex, lattice) triple ready for verification."""

    __slots__ = ("name", "group", "complex", "lattice", "description", "primes",
                 "_cache")

    def __init__(self, name: str, group: Group, complex_: SimplicialGComplex,
                 lattice: GLattice, description: str = "",
                 primes: tuple[int, ...] = (2, 3, 5)):
        if complex_.group is not group or lattice.group is not group:
            raise ValueError("scenario parts disagree about the group")
        self.name = name
        self.group = group
        self.complex = complex_
        self.lattice = lattice
        self.description = description
        self.primes = tuple(primes)
        self._cache: dict = {}

    @property
    def subdivision_count(self) -> int:
        return self.complex.subdivision_count

    def whole_cochains(self) -> CochainComplex:
        return cochain_complex(self.complex.as_stratum(), self.lattice)

    def base_lattice(self) -> GLattice:
        """Rank-one trivial coefficients on the same group."""
        if "triv" not in self._cache:
            self._cache["triv"] = GLattice.trivial(self.group)
        return self._cache["triv"]

    def has_trivial_lattice(self) -> bool:
        ident = self.lattice.matrices[0]
        return all(m == ident for m in self.lattice.matrices)

    def __repr__(self):
        return f"Scenario({self.name!r}, |G|={self.group.order}, rank={self.lattice.rank})"


@dataclass(frozen=True)
class IsotypicRow:
    """One rational irreducible of H with its integer coefficient."""

    orbit_index: int
    orbit_size: int
    coefficient: Fraction


@dataclass(frozen=True)
class ClassTerm:
    """Everything the theorem attaches to one subgroup class [H]."""

    subgroup: Subgroup
    subgroup_order: int
    normalizer_order: int
    conjugate_count: int
    weight: Fraction
    stratum_sizes: tuple[int, ...]
    stratum_euler: int
    cohomology_dims: tuple[int, ...]
    theta: VirtualCharacter
    induced: VirtualCharacter
    isotypic: tuple[IsotypicRow, ...]


@dataclass(frozen=True)
class LefschetzReport:
    scenario_name: str
    lhs: VirtualCharacter
    rhs_induction: VirtualCharacter
    rhs_isotypic: VirtualCharacter
    terms: tuple[ClassTerm, ...]
    complex_counts: tuple[int, ...]
    subdivision_count: int
    passed: bool
    elapsed_seconds: float


def lhs_character(s: Scenario) -> VirtualCharacter:
    """Equivariant Euler characteristic of the whole complex, as a character."""
    if "lhs" not in s._cache:
        chi = s.whole_cochains().equivariant_euler_characteristic(
            s.group.whole_subgroup()
        )
        s._cache["lhs"] = assert_integral(chi, f"{s.name}: lhs")
    return s._cache["lhs"]


def _class_terms(s: Scenario) -> tuple[ClassTerm, ...]:
    """Per-[H] tables shared by both right-hand sides."""
    if "terms" in s._cache:
        return s._cache["terms"]
    g = s.group
    x = s.complex
    terms = []
    for cls in conjugacy_classes_of_subgroups(g):
        h = cls.representative
        inner = h.as_group()
        n_order = normalizer(g, h).order
        weight = Fraction(h.order, n_order)
        stratum = exact_stratum(x, h)
        base = cochain_complex(stratum, s.base_lattice())
        hdims = base.rational_dims()
        euler = stratum.euler_characteristic()

        # H fixes its stratum pointwise, so cohomology with lattice values is
        # the base cohomology tensored with the lattice: the character
        # factorizes through the lattice trace.
        theta = VirtualCharacter(
            inner,
            tuple(
                Fraction(euler * s.lattice.trace(h.to_parent(c.representative)))
                for c in element_classes(inner)
            ),
        )
        general = cochain_complex(stratum, s.lattice).equivariant_euler_characteristic(h)
        if theta != general:
            raise ArithmeticError(
                f"{s.name}: factorized character disagrees with traced character "
                f"on stratum of {h!r}"
            )
        assert_integral(theta, f"{s.name}: stratum character of {h!r}")

        rows = []
        for idx, lam in enumerate(rational_irreducibles(character_table(inner))):
            pairing = inner_product(theta, lam.orbit_sum)
            c = pairing / lam.orbit_size
            if c.denominator != 1:
                raise IntegralityError(
                    f"{s.name}: coefficient of orbit {idx} for {h!r} is {c}"
                )
            rows.append(IsotypicRow(idx, lam.orbit_size, c))

        terms.append(
            ClassTerm(
                subgroup=h,
                subgroup_order=h.order,
                normalizer_order=n_order,
                conjugate_count=len(cls.members),
                weight=weight,
                stratum_sizes=stratum.sizes(),
                stratum_euler=euler,
                cohomology_dims=hdims,
                theta=theta,
                induced=induce(h, theta),
                isotypic=tuple(rows),
            )
        )
    s._cache["terms"] = tuple(terms)
    return s._cache["terms"]


def rhs_induction(s: Scenario) -> VirtualCharacter:
    """Sum over [H] of |H|/|N(H)| times the induced stratum character."""
    if "rhs_ind" not in s._cache:
        total = None
        for term in _class_terms(s):
            piece = term.induced.scale(term.weight)
            total = piece if total is None else total + piece
        s._cache["rhs_ind"] = assert_integral(total, f"{s.name}: rhs (induction)")
    return s._cache["rhs_ind"]


def rhs_isotypic(s: Scenario) -> VirtualCharacter:
    """The same sum expanded over rational irreducibles of each H."""
    if "rhs_iso" not in s._cache:
        total = None
        for term in _class_terms(s):
            inner = term.subgroup.as_group()
            irreducibles = rational_irreducibles(character_table(inner))
            for row in term.isotypic:
                if row.coefficient == 0:
                    continue
                piece = induce(term.subgroup, irreducibles[row.orbit_index].orbit_sum)
                piece = piece.scale(term.weight * row.coefficient)
                total = piece if total is None else total + piece
        if total is None:
            total = lhs_character(s).scale(Fraction(0))
        s._cache["rhs_iso"] = assert_integral(total, f"{s.name}: rhs (isotypic)")
    return s._cache["rhs_iso"]


def verify_theorem(s: Scenario) -> LefschetzReport:
    """Compute all three characters and compare them classwise."""
    started = time.perf_counter()
    lhs = lhs_character(s)
    rhs_a = rhs_induction(s)
    rhs_b = rhs_isotypic(s)
    passed = lhs == rhs_a and lhs == rhs_b
    return LefschetzReport(
        scenario_name=s.name,
        lhs=lhs,
        rhs_induction=rhs_a,
        rhs_isotypic=rhs_b,
        terms=_class_terms(s),
        complex_counts=s.complex.counts(),
        subdivision_count=s.subdivision_count,
        passed=passed,
        elapsed_seconds=time.perf_counter() - started,
    )


@dataclass(frozen=True)
class CorollaryReport:
    element: int
    whole_value: Fraction
    fixed_value: Fraction
    passed: bool


def verify_corollary(s: Scenario, g: int) -> CorollaryReport:
    """L(g, X) against L(g, fixed set of the cyclic group generated by g)."""
    whole = s.whole_cochains().lefschetz_number(g)
    cyc = s.group.cyclic_subgroup(g)
    fx = fixed_subcomplex(s.complex, cyc)
    fixed_val = cochain_complex(fx, s.lattice).lefschetz_number(g)
    return CorollaryReport(
        element=g,
        whole_value=whole,
        fixed_value=fixed_val,
        passed=whole == fixed_val,
    )


@dataclass(frozen=True)
class FreeActionReport:
    applicable: bool
    vanishing_ok: bool | None = None
    covering_ok: bool | None = None
    quotient_ok: bool | None = None
    invariant_euler: Fraction | None = None

    @property
    def passed(self) -> bool:
        if not self.applicable:
            return True
        checks = (self.vanishing_ok, self.covering_ok, self.quotient_ok)
        return all(c is not False for c in checks)


def _invariant_euler(s: Scenario) -> Fraction:
    dims = s.whole_cochains().invariant_dims(s.group.whole_subgroup())
    return Fraction(sum((-1) ** k * d for k, d in enumerate(dims)))


def verify_free_action(s: Scenario) -> FreeActionReport:
    """Vanishing of L(g), and the covering-space Euler characteristic laws."""
    if not s.complex.is_free():
        return FreeActionReport(applicable=False)
    cc = s.whole_cochains()
    vanishing = all(cc.lefschetz_number(g) == 0 for g in range(1, s.group.order))
    chi = cc.lefschetz_number(0)
    chi_inv = _invariant_euler(s)
    covering = chi == s.group.order * chi_inv
    quotient_ok = None
    if s.has_trivial_lattice():
        q = quotient_complex(s.complex)
        quotient_ok = (
            q.base.euler_characteristic()
            == s.group.order * q.quotient.euler_characteristic()
        )
    return FreeActionReport(
        applicable=True,
        vanishing_ok=vanishing,
        covering_ok=covering,
        quotient_ok=quotient_ok,
        invariant_euler=chi_inv,
    )


@dataclass(frozen=True)
class VerdierReport:
    applicable: bool
    multiple: Fraction | None = None
    passed: bool = True


def verify_verdier(s: Scenario) -> VerdierReport:
    """For a free action the lhs is (invariant Euler characteristic) x regular."""
    if not s.complex.is_free():
        return VerdierReport(applicable=False)
    c = _invariant_euler(s)
    expected = regular_character(s.group).scale(c)
    return VerdierReport(
        applicable=True,
        multiple=c,
        passed=lhs_character(s) == expected,
    )


@dataclass(frozen=True)
class ModpDegreeRow:
    degree: int
    modp_dim: int
    betti: int
    torsion_here: int
    torsion_above: int

    @property
    def reconciles(self) -> bool:
        return self.modp_dim == self.betti + self.torsion_here + self.torsion_above


@dataclass(frozen=True)
class ModpReport:
    prime: int
    chi_rational: int
    chi_modp: int
    rows: tuple[ModpDegreeRow, ...]

    @property
    def passed(self) -> bool:
        return self.chi_rational == self.chi_modp and all(
            r.reconciles for r in self.rows
        )


def verify_modp_comparison(s: Scenario, p: int) -> ModpReport:
    """chi over F_p equals chi over Q; per-degree dims reconcile with torsion."""
    cc = s.whole_cochains()
    qdims = cc.rational_dims()
    pdims = cc.modp_dims(p)
    betti, torsion = cc.integral_cohomology()
    rows = []
    top = len(qdims) - 1
    for k in range(top + 1):
        r_here = sum(1 for t in torsion[k] if t % p == 0)
        r_above = (
            sum(1 for t in torsion[k + 1] if t % p == 0) if k < top else 0
        )
        rows.append(ModpDegreeRow(k, pdims[k], betti[k], r_here, r_above))
    chi_q = sum((-1) ** k * d for k, d in enumerate(qdims))
    chi_p = sum((-1) ** k * d for k, d in enumerate(pdims))
    return ModpReport(prime=p, chi_rational=chi_q, chi_modp=chi_p, rows=tuple(rows))


@dataclass(frozen=True)
class VerificationSummary:
    scenario_name: str
    theorem: LefschetzReport
    corollaries: tuple[CorollaryReport, ...]
    free_action: FreeActionReport
    verdier: VerdierReport
    modp: tuple[ModpReport, ...]

    @property
    def passed(self) -> bool:
        return (
            self.theorem.passed
            and all(c.passed for c in self.corollaries)
            and self.free_action.passed
            and self.verdier.passed
            and all(m.passed for m in self.modp)
        )


def full_verification(s: Scenario) -> VerificationSummary:
    """Run the theorem, the corollary for every element, and every lemma."""
    theorem = verify_theorem(s)
    corollaries = tuple(
        verify_corollary(s, g) for g in range(s.group.order)
    )
    return VerificationSummary(
        scenario_name=s.name,
        theorem=theorem,
        corollaries=corollaries,
        free_action=verify_free_action(s),
        verdier=verify_verdier(s),
        modp=tuple(verify_modp_comparison(s, p) for p in s.primes),
    )
