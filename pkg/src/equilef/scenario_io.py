"""Scenario files and report emission.

Scenario files are JSON: group generators as permutations, a complex as
maximal simplices plus per-generator vertex images, a lattice as
per-generator integer matrices, and optional run options.  Parsing
validates everything (permutations, face data, invertibility, group
relations) and reports failures as ScenarioError with a location path.

Reports serialize to canonical JSON: fixed key order, rationals as
{"num": ..., "den": ...} strings, no timestamps; two runs on the same
input produce byte-identical output.  Timings are added only on request.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .characters import character_table, rational_irreducibles
from .cohomology import GLattice
from .complexes import build_complex, exact_stratum, fixed_subcomplex
from .engine import Scenario, VerificationSummary, full_verification
from .groups import (
    Group,
    conjugacy_classes_of_subgroups,
    element_classes,
    group_from_permutations,
)
from .linalg import Mat, int_det
from .numtheory import is_prime

SCHEMA_VERSION = 1
DEFAULT_PRIMES = (2, 3, 5)


class ScenarioError(ValueError):
    """Input validation failure, carrying the JSON path of the bad field."""

    def __init__(self, message: str, location: str):
        self.location = location
        self.message = message
        super().__init__(f"{location}: {message}")


@dataclass(frozen=True)
class ScenarioFile:
    """Canonicalized content of a scenario file, before construction."""

    schema_version: int
    name: str
    description: str
    group_degree: int
    group_generators: tuple[tuple[int, ...], ...]
    vertices: int
    maximal_simplices: tuple[tuple[int, ...], ...]
    complex_action: tuple[tuple[int, ...], ...]
    lattice_rank: int
    lattice_action: tuple[tuple[tuple[int, ...], ...], ...]
    primes: tuple[int, ...]
    pre_subdivisions: int


def _expect(cond, message, location):
    if not cond:
        raise ScenarioError(message, location)


def _int_field(obj, key, location, minimum=None):
    _expect(key in obj, f"missing required field {key!r}", location)
    v = obj[key]
    _expect(isinstance(v, int) and not isinstance(v, bool),
            f"field {key!r} must be an integer", f"{location}.{key}")
    if minimum is not None:
        _expect(v >= minimum, f"field {key!r} must be at least {minimum}",
                f"{location}.{key}")
    return v


def _permutation(row, degree, location):
    _expect(isinstance(row, list), "permutation must be a list", location)
    _expect(
        sorted(row) == list(range(degree)),
        f"not a permutation of 0..{degree - 1}",
        location,
    )
    return tuple(row)


def parse_scenario_file(text: str) -> ScenarioFile:
    """Validate scenario JSON into canonical form (no heavy construction)."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"not valid JSON: {exc}", "$") from None
    _expect(isinstance(data, dict), "top level must be an object", "$")
    version = _int_field(data, "schema_version", "$")
    _expect(version == SCHEMA_VERSION,
            f"unsupported schema_version {version}", "$.schema_version")
    name = data.get("name")
    _expect(isinstance(name, str) and name, "field 'name' must be a nonempty string",
            "$.name")
    description = data.get("description", "")
    _expect(isinstance(description, str), "field 'description' must be a string",
            "$.description")

    group = data.get("group")
    _expect(isinstance(group, dict), "field 'group' must be an object", "$.group")
    degree = _int_field(group, "degree", "$.group", minimum=1)
    raw_gens = group.get("generators")
    _expect(isinstance(raw_gens, list), "field 'generators' must be a list",
            "$.group.generators")
    generators = tuple(
        _permutation(row, degree, f"$.group.generators[{i}]")
        for i, row in enumerate(raw_gens)
    )

    comp = data.get("complex")
    _expect(isinstance(comp, dict), "field 'complex' must be an object", "$.complex")
    vertices = _int_field(comp, "vertices", "$.complex", minimum=1)
    raw_max = comp.get("maximal_simplices")
    _expect(isinstance(raw_max, list) and raw_max,
            "field 'maximal_simplices' must be a nonempty list",
            "$.complex.maximal_simplices")
    maximal = []
    for i, simplex in enumerate(raw_max):
        loc = f"$.complex.maximal_simplices[{i}]"
        _expect(isinstance(simplex, list) and simplex,
                "simplex must be a nonempty list of vertices", loc)
        _expect(all(isinstance(v, int) and 0 <= v < vertices for v in simplex),
                f"vertices must be integers in 0..{vertices - 1}", loc)
        _expect(len(set(simplex)) == len(simplex),
                "simplex has a repeated vertex", loc)
        maximal.append(tuple(sorted(simplex)))
    maximal = tuple(sorted(set(maximal)))
    raw_act = comp.get("action")
    _expect(isinstance(raw_act, list), "field 'action' must be a list",
            "$.complex.action")
    _expect(len(raw_act) == len(generators),
            f"need one vertex map per group generator ({len(generators)} expected)",
            "$.complex.action")
    action = tuple(
        _permutation(row, vertices, f"$.complex.action[{i}]")
        for i, row in enumerate(raw_act)
    )

    lat = data.get("lattice")
    _expect(isinstance(lat, dict), "field 'lattice' must be an object", "$.lattice")
    rank = _int_field(lat, "rank", "$.lattice", minimum=1)
    raw_mats = lat.get("action")
    _expect(isinstance(raw_mats, dict), "field 'action' must be an object",
            "$.lattice.action")
    _expect(
        set(raw_mats) == {str(i) for i in range(len(generators))},
        f"need matrices for generator indices 0..{len(generators) - 1}",
        "$.lattice.action",
    )
    matrices = []
    for i in range(len(generators)):
        loc = f"$.lattice.action[{i}]"
        m = raw_mats[str(i)]
        _expect(
            isinstance(m, list) and len(m) == rank
            and all(isinstance(r, list) and len(r) == rank for r in m),
            f"matrix must be {rank}x{rank}", loc)
        _expect(all(isinstance(v, int) and not isinstance(v, bool)
                    for r in m for v in r),
                "matrix entries must be integers", loc)
        det = int_det(Mat.from_rows([list(r) for r in m], rank))
        _expect(abs(det) == 1,
                "lattice generator not invertible over integers", loc)
        matrices.append(tuple(tuple(r) for r in m))

    options = data.get("options", {})
    _expect(isinstance(options, dict), "field 'options' must be an object",
            "$.options")
    primes = options.get("primes", list(DEFAULT_PRIMES))
    _expect(isinstance(primes, list) and primes,
            "option 'primes' must be a nonempty list", "$.options.primes")
    for i, p in enumerate(primes):
        _expect(isinstance(p, int) and is_prime(p),
                f"{p!r} is not a prime", f"$.options.primes[{i}]")
    subdivisions = options.get("subdivisions", 0)
    _expect(isinstance(subdivisions, int) and 0 <= subdivisions <= 2,
            "option 'subdivisions' must be an integer 0..2",
            "$.options.subdivisions")

    return ScenarioFile(
        schema_version=version,
        name=name,
        description=description,
        group_degree=degree,
        group_generators=generators,
        vertices=vertices,
        maximal_simplices=maximal,
        complex_action=action,
        lattice_rank=rank,
        lattice_action=tuple(matrices),
        primes=tuple(primes),
        pre_subdivisions=subdivisions,
    )


def build_scenario(sf: ScenarioFile) -> Scenario:
    """Construct the Scenario, turning construction failures into diagnostics."""
    try:
        group = group_from_permutations(sf.group_degree, sf.group_generators)
    except ValueError as exc:
        raise ScenarioError(str(exc), "$.group") from None
    try:
        complex_ = build_complex(
            sf.maximal_simplices,
            group,
            sf.complex_action,
            n_vertices=sf.vertices,
            pre_subdivisions=sf.pre_subdivisions,
        )
    except ValueError as exc:
        raise ScenarioError(str(exc), "$.complex.action") from None
    try:
        lattice = GLattice.from_generator_matrices(
            group, sf.lattice_rank, sf.lattice_action
        )
    except ValueError as exc:
        raise ScenarioError(str(exc), "$.lattice.action") from None
    scenario = Scenario(
        sf.name, group, complex_, lattice,
        description=sf.description, primes=sf.primes,
    )
    scenario._cache["file"] = sf
    return scenario


def parse_scenario(text: str) -> Scenario:
    return build_scenario(parse_scenario_file(text))


def scenario_file_dict(sf: ScenarioFile) -> dict:
    return {
        "schema_version": sf.schema_version,
        "name": sf.name,
        "description": sf.description,
        "group": {
            "degree": sf.group_degree,
            "generators": [list(g) for g in sf.group_generators],
        },
        "complex": {
            "vertices": sf.vertices,
            "maximal_simplices": [list(s) for s in sf.maximal_simplices],
            "action": [list(a) for a in sf.complex_action],
        },
        "lattice": {
            "rank": sf.lattice_rank,
            "action": {
                str(i): [list(r) for r in m]
                for i, m in enumerate(sf.lattice_action)
            },
        },
        "options": {
            "primes": list(sf.primes),
            "subdivisions": sf.pre_subdivisions,
        },
    }


def serialize_scenario(sf: ScenarioFile) -> str:
    """Canonical JSON text; parse(serialize(parse(t))) == parse(t)."""
    return json.dumps(scenario_file_dict(sf), indent=2) + "\n"


# ---------------------------------------------------------------------------
# report emission


def _rat(value) -> dict:
    f = Fraction(value)
    return {"num": str(f.numerator), "den": str(f.denominator)}


def _rat_str(value) -> str:
    f = Fraction(value)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _character_values(v) -> list:
    return [_rat(x) for x in v.values]


def _class_block(group: Group) -> list:
    return [
        {"representative": c.representative, "size": c.size}
        for c in element_classes(group)
    ]


def summary_to_dict(summary: VerificationSummary, scenario: Scenario,
                    include_timings: bool = False) -> dict:
    th = summary.theorem
    verdicts = {
        "theorem": th.passed,
        "corollary": [
            {
                "element": c.element,
                "whole": _rat(c.whole_value),
                "fixed": _rat(c.fixed_value),
                "passed": c.passed,
            }
            for c in summary.corollaries
        ],
        "free_action": (
            {
                "applicable": True,
                "vanishing": summary.free_action.vanishing_ok,
                "covering": summary.free_action.covering_ok,
                "quotient": summary.free_action.quotient_ok,
                "invariant_euler": _rat(summary.free_action.invariant_euler),
                "passed": summary.free_action.passed,
            }
            if summary.free_action.applicable
            else {"applicable": False, "passed": True}
        ),
        "verdier": (
            {
                "applicable": True,
                "multiple": _rat(summary.verdier.multiple),
                "passed": summary.verdier.passed,
            }
            if summary.verdier.applicable
            else {"applicable": False, "passed": True}
        ),
        "modp": [
            {
                "prime": m.prime,
                "chi_rational": m.chi_rational,
                "chi_modp": m.chi_modp,
                "degrees": [
                    {
                        "degree": r.degree,
                        "dim_modp": r.modp_dim,
                        "betti": r.betti,
                        "torsion_here": r.torsion_here,
                        "torsion_above": r.torsion_above,
                    }
                    for r in m.rows
                ],
                "passed": m.passed,
            }
            for m in summary.modp
        ],
    }
    tables = [
        {
            "subgroup_order": t.subgroup_order,
            "subgroup_members": list(t.subgroup.member_set),
            "normalizer_order": t.normalizer_order,
            "conjugates": t.conjugate_count,
            "weight": _rat(t.weight),
            "stratum_sizes": list(t.stratum_sizes),
            "stratum_euler": t.stratum_euler,
            "cohomology_dims": list(t.cohomology_dims),
            "theta": _character_values(t.theta),
            "isotypic": [
                {
                    "orbit": row.orbit_index,
                    "orbit_size": row.orbit_size,
                    "coefficient": _rat(row.coefficient),
                }
                for row in t.isotypic
            ],
        }
        for t in th.terms
    ]
    out = {
        "scenario": summary.scenario_name,
        "passed": summary.passed,
        "verdicts": verdicts,
        "characters": {
            "classes": _class_block(scenario.group),
            "lhs": _character_values(th.lhs),
            "rhs_induction": _character_values(th.rhs_induction),
            "rhs_isotypic": _character_values(th.rhs_isotypic),
        },
        "tables": {"subgroup_classes": tables},
        "complex": {
            "counts": list(th.complex_counts),
            "subdivisions": th.subdivision_count,
        },
    }
    if include_timings:
        out["timings"] = {"theorem_seconds": th.elapsed_seconds}
    return out


def summary_to_text(summary: VerificationSummary, scenario: Scenario) -> str:
    th = summary.theorem
    lines = []

    def ok(flag):
        return "pass" if flag else "FAIL"

    lines.append(f"scenario {summary.scenario_name}: {ok(summary.passed)}")
    if scenario.description:
        lines.append(f"  {scenario.description}")
    lines.append(
        f"  complex: counts {tuple(th.complex_counts)}, "
        f"{th.subdivision_count} subdivision(s); lattice rank {scenario.lattice.rank}"
    )
    reps = [c.representative for c in element_classes(scenario.group)]
    lines.append(f"  classes (representatives): {reps}")
    lines.append(f"  lhs            : {[_rat_str(v) for v in th.lhs.values]}")
    lines.append(f"  rhs (induction): {[_rat_str(v) for v in th.rhs_induction.values]}")
    lines.append(f"  rhs (isotypic) : {[_rat_str(v) for v in th.rhs_isotypic.values]}")
    lines.append(f"  theorem: {ok(th.passed)}")
    for t in th.terms:
        lines.append(
            f"  [H] order {t.subgroup_order} members {list(t.subgroup.member_set)}: "
            f"|N(H)| = {t.normalizer_order}, weight {_rat_str(t.weight)}, "
            f"stratum sizes {tuple(t.stratum_sizes)}, chi_c = {t.stratum_euler}"
        )
        lines.append(
            f"      cohomology dims {tuple(t.cohomology_dims)}, "
            f"theta {[_rat_str(v) for v in t.theta.values]}, "
            f"coefficients {[_rat_str(r.coefficient) for r in t.isotypic]}"
        )
    cor_bad = [c for c in summary.corollaries if not c.passed]
    lines.append(
        f"  corollary (fixed-set Lefschetz) over {len(summary.corollaries)} "
        f"elements: {ok(not cor_bad)}"
    )
    for c in summary.corollaries:
        lines.append(
            f"      g = {c.element}: L(X) = {_rat_str(c.whole_value)}, "
            f"L(fixed) = {_rat_str(c.fixed_value)}"
            + ("" if c.passed else "  MISMATCH")
        )
    fa = summary.free_action
    if fa.applicable:
        lines.append(
            f"  free action: vanishing {ok(fa.vanishing_ok)}, covering "
            f"{ok(fa.covering_ok)}"
            + (f", quotient {ok(fa.quotient_ok)}" if fa.quotient_ok is not None else "")
            + f" (invariant chi = {_rat_str(fa.invariant_euler)})"
        )
        lines.append(
            f"  regular multiple: {ok(summary.verdier.passed)} "
            f"(lhs = {_rat_str(summary.verdier.multiple)} x regular)"
        )
    else:
        lines.append("  free action: not applicable (action has fixed simplices)")
    for m in summary.modp:
        detail = ", ".join(
            f"H^{r.degree}: {r.modp_dim} = {r.betti}+{r.torsion_here}+{r.torsion_above}"
            for r in m.rows
        )
        lines.append(
            f"  mod {m.prime}: chi {m.chi_modp} vs {m.chi_rational} {ok(m.passed)} "
            f"({detail})"
        )
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# character table and strata listings


def _cyclotomic_dict(v) -> dict:
    return {
        "conductor": v.conductor,
        "coeffs": [_rat(c) for c in v.coeffs],
    }


def cyclotomic_str(v) -> str:
    if v.conductor == 1:
        return _rat_str(v.coeffs[0])
    e = v.conductor
    parts = []
    for k, c in enumerate(v.coeffs):
        if c == 0:
            continue
        if k == 0:
            parts.append(_rat_str(c))
        else:
            mag = "" if abs(c) == 1 else f"{_rat_str(abs(c))}*"
            power = f"z{e}" if k == 1 else f"z{e}^{k}"
            parts.append(
                (("-" if c < 0 else "+") if parts else ("-" if c < 0 else ""))
                + f"{mag}{power}"
            )
    return "".join(parts) if parts else "0"


def chartab_dict(scenario: Scenario) -> dict:
    g = scenario.group
    table = character_table(g)
    rats = rational_irreducibles(table)
    return {
        "scenario": scenario.name,
        "group_order": g.order,
        "classes": _class_block(g),
        "irreducibles": [
            {
                "degree": d,
                "values": [_cyclotomic_dict(v) for v in chi.values],
            }
            for chi, d in zip(table.irreducibles, table.degrees)
        ],
        "rational_irreducibles": [
            {
                "orbit": list(lam.orbit),
                "orbit_size": lam.orbit_size,
                "values": [_rat(v) for v in lam.orbit_sum.values],
            }
            for lam in rats
        ],
    }


def chartab_text(scenario: Scenario) -> str:
    g = scenario.group
    table = character_table(g)
    rats = rational_irreducibles(table)
    lines = [f"group of order {g.order} ({scenario.name})"]
    reps = [c.representative for c in element_classes(g)]
    sizes = [c.size for c in element_classes(g)]
    lines.append(f"  class representatives: {reps}")
    lines.append(f"  class sizes:           {sizes}")
    for i, chi in enumerate(table.irreducibles):
        vals = ", ".join(cyclotomic_str(v) for v in chi.values)
        lines.append(f"  chi_{i}: [{vals}]")
    lines.append("  rational irreducibles (orbit sums):")
    for lam in rats:
        vals = ", ".join(_rat_str(v) for v in lam.orbit_sum.values)
        lines.append(
            f"    orbit {list(lam.orbit)} (size {lam.orbit_size}): [{vals}]"
        )
    return "\n".join(lines) + "\n"


def strata_dict(scenario: Scenario) -> dict:
    g = scenario.group
    x = scenario.complex
    rows = []
    for cls in conjugacy_classes_of_subgroups(g):
        h = cls.representative
        fixed = fixed_subcomplex(x, h)
        exact = exact_stratum(x, h)
        rows.append(
            {
                "subgroup_order": h.order,
                "subgroup_members": list(h.member_set),
                "conjugates": len(cls.members),
                "fixed_sizes": list(fixed.sizes()),
                "fixed_euler": fixed.euler_characteristic(),
                "exact_sizes": list(exact.sizes()),
                "exact_euler_compact": exact.euler_characteristic(),
            }
        )
    return {
        "scenario": scenario.name,
        "complex": {
            "counts": list(x.counts()),
            "subdivisions": x.subdivision_count,
        },
        "subgroup_classes": rows,
    }


def strata_text(scenario: Scenario) -> str:
    data = strata_dict(scenario)
    lines = [
        f"scenario {scenario.name}: counts {tuple(data['complex']['counts'])}, "
        f"{data['complex']['subdivisions']} subdivision(s)"
    ]
    for row in data["subgroup_classes"]:
        lines.append(
            f"  [H] order {row['subgroup_order']} members {row['subgroup_members']} "
            f"({row['conjugates']} conjugate(s)):"
        )
        lines.append(
            f"      fixed set sizes {tuple(row['fixed_sizes'])} "
            f"chi = {row['fixed_euler']}; exact stratum sizes "
            f"{tuple(row['exact_sizes'])} chi_c = {row['exact_euler_compact']}"
        )
    return "\n".join(lines) + "\n"


def canonical_json(data) -> str:
    return json.dumps(data, indent=2, sort_keys=False) + "\n"
