"""Finite groups as explicit multiplication tables.

A group is a table over element indices 0..n-1 with 0 the identity.  Groups
built from permutation generators remember, for every element, a shortest
generator word; those words are what extend a generator-level action (on
vertices of a complex, or on a lattice) to the whole group.

Enumeration order is deterministic everywhere: elements appear in
breadth-first order over generator words with lexicographic tie-break,
subgroups are sorted by (order, member tuple), conjugacy classes by their
least member.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from itertools import combinations

DEFAULT_MAX_ORDER = 10_000
ORDER_ENV_VAR = "EQUILEF_MAX_GROUP_ORDER"


def max_group_order() -> int:
    """The configured closure bound (env EQUILEF_MAX_GROUP_ORDER overrides)."""
    raw = os.environ.get(ORDER_ENV_VAR)
    if raw is None:
        return DEFAULT_MAX_ORDER
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{ORDER_ENV_VAR} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{ORDER_ENV_VAR} must be positive, got {value}")
    return value


class Group:
    """Immutable finite group given by its multiplication table."""

    __slots__ = (
        "order",
        "mul",
        "inverse",
        "generator_permutations",
        "generator_elements",
        "words",
        "_cache",
    )

    def __init__(self, mul, generator_permutations=None, generator_elements=None, words=None):
        mul = tuple(tuple(row) for row in mul)
        n = len(mul)
        if n == 0:
            raise ValueError("a group needs at least the identity")
        full = frozenset(range(n))
        for i, row in enumerate(mul):
            if len(row) != n or frozenset(row) != full:
                raise ValueError(f"row {i} of the multiplication table is not a permutation")
        for j in range(n):
            if mul[0][j] != j or mul[j][0] != j:
                raise ValueError("element 0 must be the identity")
            if frozenset(mul[i][j] for i in range(n)) != full:
                raise ValueError(f"column {j} of the multiplication table is not a permutation")
        inverse = [None] * n
        for a in range(n):
            for b in range(n):
                if mul[a][b] == 0:
                    if mul[b][a] != 0:
                        raise ValueError(f"one-sided inverse at element {a}")
                    inverse[a] = b
                    break
        self.order = n
        self.mul = mul
        self.inverse = tuple(inverse)
        self.generator_permutations = (
            tuple(tuple(p) for p in generator_permutations)
            if generator_permutations is not None
            else None
        )
        self.generator_elements = (
            tuple(generator_elements) if generator_elements is not None else None
        )
        self.words = tuple(tuple(w) for w in words) if words is not None else None
        self._cache: dict = {}

    # -- elementary operations ----------------------------------------------

    def mul_elem(self, a: int, b: int) -> int:
        return self.mul[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def conj(self, g: int, x: int) -> int:
        """g x g^-1."""
        return self.mul[self.mul[g][x]][self.inverse[g]]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            return self.power(self.inverse[a], -k)
        acc = 0
        for _ in range(k):
            acc = self.mul[acc][a]
        return acc

    def element_order(self, a: int) -> int:
        orders = self._cache.get("element_orders")
        if orders is None:
            orders = {}
            self._cache["element_orders"] = orders
        if a not in orders:
            k, x = 1, a
            while x != 0:
                x = self.mul[x][a]
                k += 1
            orders[a] = k
        return orders[a]

    def exponent(self) -> int:
        if "exponent" not in self._cache:
            self._cache["exponent"] = math.lcm(
                *(self.element_order(a) for a in range(self.order))
            )
        return self._cache["exponent"]

    def is_abelian(self) -> bool:
        return all(
            self.mul[a][b] == self.mul[b][a]
            for a in range(self.order)
            for b in range(a + 1, self.order)
        )

    def subgroup(self, members) -> "Subgroup":
        """The subgroup with the given member set (canonical, cached instance)."""
        key = tuple(sorted(set(members)))
        cache = self._cache.setdefault("subgroup_instances", {})
        if key not in cache:
            cache[key] = Subgroup(self, key)
        return cache[key]

    def cyclic_subgroup(self, a: int) -> "Subgroup":
        members = {0}
        x = a
        while x != 0:
            members.add(x)
            x = self.mul[x][a]
        return self.subgroup(members)

    def whole_subgroup(self) -> "Subgroup":
        return self.subgroup(range(self.order))

    def trivial_subgroup(self) -> "Subgroup":
        return self.subgroup((0,))

    def __repr__(self):
        return f"Group(order={self.order})"


@dataclass(frozen=True)
class ElementClass:
    """A conjugacy class of group elements."""

    representative: int
    members: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)


class Subgroup:
    """A subgroup of a parent group, stored as a sorted member tuple."""

    __slots__ = ("parent", "member_set", "order", "_members_frozen", "_sub_index", "_as_group")

    def __init__(self, parent: Group, members):
        members = tuple(sorted(set(members)))
        if not members or members[0] != 0:
            raise ValueError("a subgroup must contain the identity")
        frozen = frozenset(members)
        for a in members:
            if parent.inverse[a] not in frozen:
                raise ValueError(f"member set not closed under inverse at {a}")
            for b in members:
                if parent.mul[a][b] not in frozen:
                    raise ValueError(f"member set not closed under product at ({a}, {b})")
        if parent.order % len(members) != 0:
            raise ValueError("subgroup order does not divide the group order")
        self.parent = parent
        self.member_set = members
        self.order = len(members)
        self._members_frozen = frozen
        self._sub_index = {e: i for i, e in enumerate(members)}
        self._as_group = None

    def contains(self, e: int) -> bool:
        return e in self._members_frozen

    def to_parent(self, sub_elem: int) -> int:
        return self.member_set[sub_elem]

    def from_parent(self, parent_elem: int) -> int:
        return self._sub_index[parent_elem]

    def as_group(self) -> Group:
        """This subgroup as a group in its own right (indices re-based).

        The whole subgroup returns the parent itself, so characters computed
        on it live on the original group object.
        """
        if self._as_group is None:
            if self.order == self.parent.order:
                self._as_group = self.parent
            else:
                mem = self.member_set
                idx = self._sub_index
                table = [[idx[self.parent.mul[a][b]] for b in mem] for a in mem]
                self._as_group = Group(table)
        return self._as_group

    def conjugate_by(self, g: int) -> "Subgroup":
        p = self.parent
        return p.subgroup(p.conj(g, x) for x in self.member_set)

    def is_whole(self) -> bool:
        return self.order == self.parent.order

    def __eq__(self, other):
        return (
            isinstance(other, Subgroup)
            and self.parent is other.parent
            and self.member_set == other.member_set
        )

    def __hash__(self):
        return hash((id(self.parent), self.member_set))

    def __repr__(self):
        return f"Subgroup(order={self.order}, members={self.member_set})"


@dataclass(frozen=True)
class SubgroupClass:
    """A conjugacy class of subgroups."""

    representative: Subgroup
    members: tuple[Subgroup, ...]
    order: int


# ---------------------------------------------------------------------------
# construction and enumeration


def group_from_permutations(degree: int, generators, max_order: int | None = None) -> Group:
    """Close a set of permutation generators into a Group.

    Elements are enumerated breadth-first over generator words (lexicographic
    within each length), so indexing is reproducible.  Closure beyond the
    configured order bound is rejected.
    """
    if not isinstance(degree, int) or degree < 1:
        raise ValueError("degree must be a positive integer")
    gens = []
    for gi, g in enumerate(generators):
        g = tuple(g)
        if sorted(g) != list(range(degree)):
            raise ValueError(f"generator {gi} is not a permutation of 0..{degree - 1}")
        gens.append(g)
    bound = max_order if max_order is not None else max_group_order()

    identity = tuple(range(degree))
    elems = [identity]
    index = {identity: 0}
    words: list[tuple[int, ...]] = [()]
    frontier = [0]
    while frontier:
        next_frontier = []
        for ei in frontier:
            base = elems[ei]
            for j, gen in enumerate(gens):
                prod = tuple(base[gen[v]] for v in range(degree))
                if prod not in index:
                    if len(elems) >= bound:
                        raise ValueError(
                            f"closure of the generators exceeds the order bound {bound}"
                        )
                    index[prod] = len(elems)
                    elems.append(prod)
                    words.append(words[ei] + (j,))
                    next_frontier.append(index[prod])
        frontier = next_frontier

    n = len(elems)
    mul = [
        [index[tuple(elems[a][elems[b][v]] for v in range(degree))] for b in range(n)]
        for a in range(n)
    ]
    gen_elements = [index[g] for g in gens]
    return Group(mul, generator_permutations=gens, generator_elements=gen_elements, words=words)


def element_classes(g: Group) -> list[ElementClass]:
    """Conjugacy classes of elements; the identity class comes first."""
    if "element_classes" not in g._cache:
        seen = [False] * g.order
        classes = []
        for a in range(g.order):
            if seen[a]:
                continue
            orbit = sorted({g.conj(x, a) for x in range(g.order)})
            for m in orbit:
                seen[m] = True
            classes.append(ElementClass(representative=orbit[0], members=tuple(orbit)))
        classes.sort(key=lambda c: c.members[0])
        g._cache["element_classes"] = classes
        g._cache["class_index"] = _class_index(g.order, classes)
    return g._cache["element_classes"]


def _class_index(order: int, classes) -> tuple[int, ...]:
    idx = [0] * order
    for ci, cl in enumerate(classes):
        for m in cl.members:
            idx[m] = ci
    return tuple(idx)


def class_index_of(g: Group) -> tuple[int, ...]:
    """Map element -> index of its conjugacy class."""
    element_classes(g)
    return g._cache["class_index"]


def _closure_of(g: Group, seed) -> frozenset:
    elems = set(seed)
    elems.add(0)
    frontier = list(elems)
    while frontier:
        fresh = []
        for a in frontier:
            for b in tuple(elems):
                for c in (g.mul[a][b], g.mul[b][a]):
                    if c not in elems:
                        elems.add(c)
                        fresh.append(c)
        frontier = fresh
    return frozenset(elems)


def subgroups(g: Group) -> list[Subgroup]:
    """All subgroups, built bottom-up from cyclic subgroups by closing joins."""
    if "subgroups" not in g._cache:
        found = {frozenset({0})}
        for a in range(1, g.order):
            found.add(frozenset(g.cyclic_subgroup(a).member_set))
        changed = True
        while changed:
            changed = False
            current = sorted(found, key=lambda s: (len(s), sorted(s)))
            for sa, sb in combinations(current, 2):
                if sa <= sb or sb <= sa:
                    continue
                join = _closure_of(g, sa | sb)
                if join not in found:
                    found.add(join)
                    changed = True
        subs = [g.subgroup(s) for s in found]
        subs.sort(key=lambda h: (h.order, h.member_set))
        g._cache["subgroups"] = subs
    return g._cache["subgroups"]


def conjugacy_classes_of_subgroups(g: Group) -> list[SubgroupClass]:
    """Subgroups up to conjugacy, each class listing its members.

    Classes are sorted by (order, representative member tuple); the
    representative is the lexicographically least member.
    """
    if "subgroup_classes" not in g._cache:
        remaining = {h.member_set: h for h in subgroups(g)}
        classes = []
        while remaining:
            key = min(remaining)
            h = remaining[key]
            orbit = sorted(
                {h.conjugate_by(x).member_set for x in range(g.order)}
            )
            members = tuple(remaining.pop(m) if m in remaining else g.subgroup(m) for m in orbit)
            classes.append(
                SubgroupClass(representative=members[0], members=members, order=h.order)
            )
        classes.sort(key=lambda c: (c.order, c.representative.member_set))
        g._cache["subgroup_classes"] = classes
    return g._cache["subgroup_classes"]


def normalizer(g: Group, h: Subgroup) -> Subgroup:
    """N_G(H) = {x : x H x^-1 = H}."""
    if h.parent is not g:
        raise ValueError("subgroup does not belong to this group")
    target = h._members_frozen
    members = [
        x
        for x in range(g.order)
        if frozenset(g.conj(x, m) for m in h.member_set) == target
    ]
    return g.subgroup(members)
