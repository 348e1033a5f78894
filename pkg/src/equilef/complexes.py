"""Finite simplicial complexes with a group action.

Simplices are sorted vertex tuples, kept face-closed and ordered per
dimension.  A complex carries the full per-element vertex action, extended
from generator images through the group's generator words and checked
against the multiplication table.

The action is forced to be regular (an element fixing a simplex setwise
fixes it pointwise) by barycentric subdivision, applied at most twice.
Under regularity the open simplices with pointwise stabilizer exactly H
tile the space; those tiles, fixed subcomplexes, and the order filtration
are all returned as Stratum objects which the cohomology layer consumes.
"""

from __future__ import annotations

from itertools import combinations

from .groups import Group, Subgroup

Simplex = tuple[int, ...]


class Stratum:
    """A locally closed union of open simplices of a parent complex."""

    __slots__ = ("parent", "label", "simplices", "_cache")

    def __init__(self, parent: "SimplicialGComplex", label: str, simplices):
        self.parent = parent
        self.label = label
        self.simplices = tuple(tuple(sorted(set(s))) for s in simplices)
        self._cache: dict = {}

    def sizes(self) -> tuple[int, ...]:
        """Number of open simplices per dimension, degree 0..dim(parent)."""
        counts = [0] * (self.parent.dim + 1)
        for dim, group in enumerate(self.simplices):
            counts[dim] = len(group)
        return tuple(counts)

    def euler_characteristic(self) -> int:
        """Compactly supported Euler characteristic: alternating cell count."""
        return sum((-1) ** dim * len(group) for dim, group in enumerate(self.simplices))

    def simplex_set(self) -> frozenset:
        if "set" not in self._cache:
            self._cache["set"] = frozenset(s for group in self.simplices for s in group)
        return self._cache["set"]

    def closure_set(self) -> frozenset:
        if "closure" not in self._cache:
            out = set()
            for group in self.simplices:
                for s in group:
                    for k in range(1, len(s) + 1):
                        out.update(combinations(s, k))
            self._cache["closure"] = frozenset(out)
        return self._cache["closure"]

    def is_locally_closed(self) -> bool:
        """closure(S) minus S must be face-closed."""
        own = self.simplex_set()
        boundary = self.closure_set() - own
        for s in boundary:
            for k in range(1, len(s)):
                for face in combinations(s, k):
                    if face in own:
                        return False
        return True

    def is_invariant_under(self, e: int) -> bool:
        own = self.simplex_set()
        return all(self.parent.act_simplex(e, s) in own for s in own)

    def __repr__(self):
        return f"Stratum({self.label}, sizes={self.sizes()})"


class SimplicialGComplex:
    """A finite simplicial complex with a simplicial action of a finite group."""

    __slots__ = (
        "group",
        "n_vertices",
        "dim",
        "simplices",
        "vertex_action",
        "subdivision_count",
        "_cache",
    )

    def __init__(self, group: Group, n_vertices: int, simplices_by_dim, vertex_action,
                 subdivision_count: int = 0):
        self.group = group
        self.n_vertices = n_vertices
        sims = tuple(tuple(sorted(set(map(tuple, level)))) for level in simplices_by_dim)
        while sims and not sims[-1]:
            sims = sims[:-1]
        if not sims or not sims[0]:
            raise ValueError("a complex needs at least one vertex simplex")
        self.simplices = sims
        self.dim = len(sims) - 1
        self.vertex_action = tuple(tuple(row) for row in vertex_action)
        self.subdivision_count = subdivision_count
        self._cache = {}
        self._validate()

    def _validate(self):
        if len(self.vertex_action) != self.group.order:
            raise ValueError("vertex action must list one permutation per group element")
        full = set(range(self.n_vertices))
        for e, row in enumerate(self.vertex_action):
            if set(row) != full:
                raise ValueError(f"action of element {e} is not a vertex permutation")
        seen = self.simplex_set()
        for dim, level in enumerate(self.simplices):
            for s in level:
                if len(s) != dim + 1:
                    raise ValueError(f"simplex {s} filed under wrong dimension {dim}")
                if any(not 0 <= v < self.n_vertices for v in s):
                    raise ValueError(f"simplex {s} has out-of-range vertices")
                for k in range(1, len(s)):
                    for face in combinations(s, k):
                        if face not in seen:
                            raise ValueError(f"complex is not face-closed at {s}")
        for e in range(self.group.order):
            for s in seen:
                if self.act_simplex(e, s) not in seen:
                    raise ValueError(
                        f"element {e} does not map simplex {s} to a simplex"
                    )

    # -- basic queries -------------------------------------------------------

    def simplex_set(self) -> frozenset:
        if "set" not in self._cache:
            self._cache["set"] = frozenset(s for level in self.simplices for s in level)
        return self._cache["set"]

    def act_vertex(self, e: int, v: int) -> int:
        return self.vertex_action[e][v]

    def act_simplex(self, e: int, s: Simplex) -> Simplex:
        row = self.vertex_action[e]
        return tuple(sorted(row[v] for v in s))

    def act_simplex_signed(self, e: int, s: Simplex) -> tuple[Simplex, int]:
        """Image simplex and the sign of the sort permutation of the images."""
        row = self.vertex_action[e]
        image = [row[v] for v in s]
        sign = 1
        for i in range(len(image)):
            for j in range(i + 1, len(image)):
                if image[i] > image[j]:
                    sign = -sign
        return tuple(sorted(image)), sign

    def vertex_stabilizers(self) -> list[frozenset]:
        if "vstab" not in self._cache:
            order = self.group.order
            self._cache["vstab"] = [
                frozenset(e for e in range(order) if self.vertex_action[e][v] == v)
                for v in range(self.n_vertices)
            ]
        return self._cache["vstab"]

    def stabilizer(self, s: Simplex) -> frozenset:
        """Pointwise stabilizer of a simplex (equals setwise under regularity)."""
        stabs = self._cache.setdefault("stab", {})
        if s not in stabs:
            vstab = self.vertex_stabilizers()
            acc = vstab[s[0]]
            for v in s[1:]:
                acc = acc & vstab[v]
            stabs[s] = acc
        return stabs[s]

    def regularity_violation(self):
        """A pair (element, simplex) fixed setwise but not pointwise, or None."""
        for level in self.simplices[1:]:
            for s in level:
                stab = self.stabilizer(s)
                for e in range(1, self.group.order):
                    if e not in stab and self.act_simplex(e, s) == s:
                        return (e, s)
        return None

    def is_free(self) -> bool:
        return all(len(st) == 1 for st in self.vertex_stabilizers())

    def euler_characteristic(self) -> int:
        return sum((-1) ** dim * len(level) for dim, level in enumerate(self.simplices))

    def counts(self) -> tuple[int, ...]:
        return tuple(len(level) for level in self.simplices)

    def as_stratum(self) -> Stratum:
        if "whole" not in self._cache:
            self._cache["whole"] = Stratum(self, "space", self.simplices)
        return self._cache["whole"]

    def __repr__(self):
        return (
            f"SimplicialGComplex(|G|={self.group.order}, counts={self.counts()}, "
            f"subdivisions={self.subdivision_count})"
        )


# ---------------------------------------------------------------------------
# construction


def _face_closure(maximal) -> list[list[Simplex]]:
    seen: set[Simplex] = set()
    for s in maximal:
        s = tuple(sorted(set(s)))
        for k in range(1, len(s) + 1):
            seen.update(combinations(s, k))
    dim = max(len(s) for s in seen) - 1
    by_dim: list[list[Simplex]] = [[] for _ in range(dim + 1)]
    for s in seen:
        by_dim[len(s) - 1].append(s)
    return [sorted(level) for level in by_dim]


def _extend_vertex_action(group: Group, n_vertices: int, generator_images) -> list[tuple[int, ...]]:
    """Per-element vertex permutations from generator images, word by word.

    Verifies the assignment is a homomorphism: the image of gen_j * e must be
    the composite of the generator image with the image of e, for all j, e.
    """
    gen_count = len(group.generator_permutations or ()) if group.order > 1 else 0
    if group.generator_permutations is None and group.order > 1:
        raise ValueError("group was not built from generators; cannot extend an action")
    images = []
    if group.order > 1 or generator_images:
        if isinstance(generator_images, dict):
            items = [generator_images.get(j) for j in range(gen_count)]
        else:
            items = list(generator_images)
        if len(items) != gen_count:
            raise ValueError(
                f"action must give one vertex map per generator ({gen_count} expected)"
            )
        for j, img in enumerate(items):
            img = tuple(img)
            if sorted(img) != list(range(n_vertices)):
                raise ValueError(f"action of generator {j} is not a vertex permutation")
            images.append(img)

    identity = tuple(range(n_vertices))
    action = []
    for word in group.words if group.words is not None else [()]:
        perm = identity
        for j in reversed(word):
            g = images[j]
            perm = tuple(g[perm[v]] for v in range(n_vertices))
        action.append(perm)
    if len(action) != group.order:
        raise ValueError("internal: word list does not cover the group")

    gen_elems = group.generator_elements or ()
    for j, ge in enumerate(gen_elems):
        gimg = images[j]
        for e in range(group.order):
            prod = group.mul[ge][e]
            composed = tuple(gimg[action[e][v]] for v in range(n_vertices))
            if action[prod] != composed:
                raise ValueError(
                    f"vertex action violates the relation gen[{j}] * element[{e}]"
                )
    return action


def build_complex(maximal_simplices, group: Group, vertex_action,
                  n_vertices: int | None = None, pre_subdivisions: int = 0) -> SimplicialGComplex:
    """Build a G-complex from maximal simplices and generator vertex images.

    The action is extended to every group element, checked to be simplicial,
    and made regular by barycentric subdivision (at most two, counted on the
    result).  ``pre_subdivisions`` forces extra subdivisions first.
    """
    maximal = [tuple(sorted(set(s))) for s in maximal_simplices]
    if not maximal:
        raise ValueError("at least one maximal simplex is required")
    top = max(v for s in maximal for v in s)
    if n_vertices is None:
        n_vertices = top + 1
    elif top >= n_vertices:
        raise ValueError("maximal simplices mention vertices beyond the declared count")
    levels = _face_closure(maximal)
    if len(levels[0]) < n_vertices:
        missing = sorted(set(range(n_vertices)) - {s[0] for s in levels[0]})
        for v in missing:
            levels[0].append((v,))
        levels[0].sort()

    action = _extend_vertex_action(group, n_vertices, vertex_action)
    x = SimplicialGComplex(group, n_vertices, levels, action, subdivision_count=0)
    for _ in range(pre_subdivisions):
        x = barycentric_subdivision(x)
    attempts = 0
    while x.regularity_violation() is not None:
        if attempts >= 2:
            e, s = x.regularity_violation()
            raise ValueError(
                f"action is not regular after two subdivisions (element {e} on {s})"
            )
        x = barycentric_subdivision(x)
        attempts += 1
    return x


def barycentric_subdivision(x: SimplicialGComplex) -> SimplicialGComplex:
    """The barycentric subdivision with the induced action.

    New vertices are the simplices of x (ordered by dimension then
    lexicographically); new simplices are the chains of proper inclusions.
    """
    order: list[Simplex] = [s for level in x.simplices for s in level]
    index = {s: i for i, s in enumerate(order)}

    chains_by_dim: list[list[tuple[int, ...]]] = [[] for _ in range(x.dim + 1)]
    chain_memo: dict[Simplex, list[tuple[int, ...]]] = {}

    def chains_ending_at(s: Simplex) -> list[tuple[int, ...]]:
        got = chain_memo.get(s)
        if got is None:
            got = [(index[s],)]
            for k in range(1, len(s)):
                for face in combinations(s, k):
                    for ch in chains_ending_at(face):
                        got.append(ch + (index[s],))
            chain_memo[s] = got
        return got

    for s in order:
        for ch in chains_ending_at(s):
            chains_by_dim[len(ch) - 1].append(ch)

    new_action = []
    for e in range(x.group.order):
        new_action.append(tuple(index[x.act_simplex(e, s)] for s in order))

    return SimplicialGComplex(
        x.group,
        len(order),
        chains_by_dim,
        new_action,
        subdivision_count=x.subdivision_count + 1,
    )


# ---------------------------------------------------------------------------
# strata


def _stratum_from_predicate(x: SimplicialGComplex, label: str, keep) -> Stratum:
    levels = [[s for s in level if keep(s)] for level in x.simplices]
    return Stratum(x, label, levels)


def fixed_subcomplex(x: SimplicialGComplex, h: Subgroup) -> Stratum:
    """The closed subcomplex of simplices fixed pointwise by all of H."""
    _check_subgroup(x, h)
    key = ("fixed", h.member_set)
    if key not in x._cache:
        members = h._members_frozen
        x._cache[key] = _stratum_from_predicate(
            x, f"fixed{h.member_set}", lambda s: members <= x.stabilizer(s)
        )
    return x._cache[key]


def exact_stratum(x: SimplicialGComplex, h: Subgroup) -> Stratum:
    """Open simplices whose stabilizer is exactly H (locally closed)."""
    _check_subgroup(x, h)
    key = ("exact", h.member_set)
    if key not in x._cache:
        members = h._members_frozen
        x._cache[key] = _stratum_from_predicate(
            x, f"exact{h.member_set}", lambda s: x.stabilizer(s) == members
        )
    return x._cache[key]


def class_stratum(x: SimplicialGComplex, subgroups) -> Stratum:
    """Union of the exact strata of a family of subgroups (e.g. a conjugacy
    class); locally closed when the family is closed under conjugation."""
    member_sets = [h._members_frozen for h in subgroups]
    label = "class" + "".join(str(sorted(m)) for m in member_sets[:1]) + (
        f"x{len(member_sets)}" if len(member_sets) > 1 else ""
    )
    return _stratum_from_predicate(x, label, lambda s: x.stabilizer(s) in member_sets)


def filtration(x: SimplicialGComplex) -> list[Stratum]:
    """X^i = union of fixed sets of subgroups of order >= i, for i = 1..|G|."""
    if "filtration" not in x._cache:
        out = [
            _stratum_from_predicate(
                x, f"filtration>={i}", lambda s, i=i: len(x.stabilizer(s)) >= i
            )
            for i in range(1, x.group.order + 1)
        ]
        x._cache["filtration"] = out
    return x._cache["filtration"]


def _check_subgroup(x: SimplicialGComplex, h: Subgroup):
    if h.parent is not x.group:
        raise ValueError("subgroup belongs to a different group than the complex")


# ---------------------------------------------------------------------------
# quotients of free actions


class QuotientComplex:
    """Quotient of a free action, kept simplicial by subdividing when needed."""

    __slots__ = ("base", "quotient", "vertex_orbit", "orbit_representatives",
                 "extra_subdivisions")

    def __init__(self, base, quotient, vertex_orbit, orbit_representatives,
                 extra_subdivisions):
        self.base = base
        self.quotient = quotient
        self.vertex_orbit = vertex_orbit
        self.orbit_representatives = orbit_representatives
        self.extra_subdivisions = extra_subdivisions

    def project(self, s: Simplex) -> Simplex:
        return tuple(sorted(self.vertex_orbit[v] for v in s))

    def __repr__(self):
        return f"QuotientComplex(counts={self.quotient.counts()})"


def _quotient_obstruction(x: SimplicialGComplex) -> str | None:
    """Why the naive simplex-orbit quotient is not simplicial, if it is not."""
    order = x.group.order
    vorbit: dict[int, int] = {}
    next_id = 0
    for v in range(x.n_vertices):
        if v not in vorbit:
            for e in range(order):
                vorbit[x.vertex_action[e][v]] = next_id
            next_id += 1
    projected: dict[tuple, Simplex] = {}
    seen_orbits: set[Simplex] = set()
    for level in x.simplices:
        for s in level:
            img = tuple(sorted(vorbit[v] for v in s))
            if len(set(img)) != len(s):
                return f"projection collapses simplex {s}"
            rep = min(x.act_simplex(e, s) for e in range(order))
            if rep in seen_orbits:
                continue
            seen_orbits.add(rep)
            if img in projected:
                return (
                    f"orbits of {projected[img]} and {rep} project to the same set"
                )
            projected[img] = rep
    return None


def quotient_complex(x: SimplicialGComplex) -> QuotientComplex:
    """X/G for a free action; subdivides (at most twice) to stay simplicial."""
    for level in x.simplices:
        for s in level:
            if len(x.stabilizer(s)) != 1:
                raise ValueError(f"action is not free: simplex {s} has nontrivial stabilizer")

    base = x
    extra = 0
    while _quotient_obstruction(base) is not None:
        if extra >= 2:
            raise ValueError(
                f"quotient is not simplicial after two subdivisions: "
                f"{_quotient_obstruction(base)}"
            )
        base = barycentric_subdivision(base)
        extra += 1

    order = base.group.order
    vorbit = [None] * base.n_vertices
    next_id = 0
    for v in range(base.n_vertices):
        if vorbit[v] is None:
            for e in range(order):
                vorbit[base.vertex_action[e][v]] = next_id
            next_id += 1

    reps_by_dim = []
    quo_by_dim = []
    for level in base.simplices:
        reps = sorted({min(base.act_simplex(e, s) for e in range(order)) for s in level})
        if len(reps) * order != len(level):
            raise ArithmeticError("orbit count mismatch for a free action")
        reps_by_dim.append(tuple(reps))
        quo_by_dim.append([tuple(sorted(vorbit[v] for v in s)) for s in reps])

    trivial = Group(((0,),))
    quotient = SimplicialGComplex(
        trivial,
        next_id,
        quo_by_dim,
        [tuple(range(next_id))],
        subdivision_count=0,
    )
    return QuotientComplex(
        base=base,
        quotient=quotient,
        vertex_orbit=tuple(vorbit),
        orbit_representatives=tuple(reps_by_dim),
        extra_subdivisions=extra,
    )
