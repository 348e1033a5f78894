"""Complexes, actions, strata, subdivisions, quotients."""

import pytest

from equilef.complexes import (
    barycentric_subdivision,
    build_complex,
    class_stratum,
    exact_stratum,
    filtration,
    fixed_subcomplex,
    quotient_complex,
)
from equilef.groups import (
    conjugacy_classes_of_subgroups,
    group_from_permutations,
    subgroups,
)


def test_face_closure():
    g = group_from_permutations(1, [])
    x = build_complex([(0, 1, 2)], g, [])
    assert x.counts() == (3, 3, 1)
    assert x.simplices[1] == ((0, 1), (0, 2), (1, 2))


def test_rejects_broken_input():
    g1 = group_from_permutations(1, [])
    with pytest.raises(ValueError):
        build_complex([], g1, [])
    with pytest.raises(ValueError):
        build_complex([(0, 5)], g1, [], n_vertices=2)
    c3 = group_from_permutations(3, [(1, 2, 0)])
    # the rotation maps the declared edge to one not in the complex
    with pytest.raises(ValueError):
        build_complex([(0, 1)], c3, [(1, 2, 0)], n_vertices=3)
    c2 = group_from_permutations(2, [(1, 0)])
    with pytest.raises(ValueError):
        build_complex([(0, 1)], c2, [(0, 0)])
    # image must respect every relation of the generators
    with pytest.raises(ValueError) as err:
        build_complex([(0, 1, 2)], c2, [(1, 2, 0)], n_vertices=3)
    assert "relation" in str(err.value)


def test_sign_cocycle(corpus):
    # epsilon(gh, s) = epsilon(g, hs) * epsilon(h, s)
    for s in corpus:
        x = s.complex
        g = s.group
        simplices = [t for dim in x.simplices for t in dim]
        for a in range(g.order):
            for b in range(g.order):
                ab = g.mul[a][b]
                for t in simplices[:25]:
                    bt, sign_b = x.act_simplex_signed(b, t)
                    abt, sign_a = x.act_simplex_signed(a, bt)
                    image, sign_ab = x.act_simplex_signed(ab, t)
                    assert image == abt
                    assert sign_ab == sign_a * sign_b


def test_subdivision_counts_and_euler():
    g = group_from_permutations(1, [])
    filled = build_complex([(0, 1, 2)], g, [])
    sub = barycentric_subdivision(filled)
    assert sub.counts() == (7, 12, 6)
    boundary = build_complex([(0, 1), (1, 2), (0, 2)], g, [])
    assert barycentric_subdivision(boundary).counts() == (6, 6)


def test_subdivision_preserves_euler(corpus):
    seen = set()
    for s in corpus:
        key = id(s.complex)
        if key in seen or sum(s.complex.counts()) > 60:
            continue
        seen.add(key)
        sub = barycentric_subdivision(s.complex)
        assert sub.euler_characteristic() == s.complex.euler_characteristic()
        # one subdivision vertex per original simplex
        assert sub.counts()[0] == sum(s.complex.counts())
        assert sub.subdivision_count == s.complex.subdivision_count + 1


def test_irregular_action_is_subdivided_away():
    # the swap fixes the edge setwise but not pointwise
    c2 = group_from_permutations(2, [(1, 0)])
    x = build_complex([(0, 1)], c2, [(1, 0)])
    assert x.subdivision_count == 1
    assert x.counts() == (3, 2)
    assert x.regularity_violation() is None
    fixed = fixed_subcomplex(x, c2.whole_subgroup())
    assert fixed.sizes() == (1, 0)


def test_corpus_complexes_are_regular(corpus):
    for s in corpus:
        assert s.complex.regularity_violation() is None, s.name


def test_exact_strata_partition(corpus):
    for s in corpus:
        x = s.complex
        total = [0] * len(x.counts())
        for h in subgroups(s.group):
            sizes = exact_stratum(x, h).sizes()
            for k, v in enumerate(sizes):
                total[k] += v
        assert tuple(total) == x.counts(), s.name


def test_exact_strata_are_locally_closed_and_open_in_fixed(corpus):
    for s in corpus:
        x = s.complex
        for cls in conjugacy_classes_of_subgroups(s.group):
            h = cls.representative
            stratum = exact_stratum(x, h)
            assert stratum.is_locally_closed(), (s.name, h.member_set)
            fixed = fixed_subcomplex(x, h)
            # fixed sets are closed subcomplexes
            assert fixed.closure_set() == fixed.simplex_set()
            assert stratum.simplex_set() <= fixed.simplex_set()
            # the stratum is invariant under its own subgroup
            for e in h.member_set:
                assert stratum.is_invariant_under(e)


def test_class_stratum_collects_conjugates(corpus):
    for s in corpus:
        x = s.complex
        for cls in conjugacy_classes_of_subgroups(s.group):
            merged = class_stratum(x, cls.members)
            expected = frozenset().union(
                *(exact_stratum(x, h).simplex_set() for h in cls.members)
            )
            assert merged.simplex_set() == expected


def test_filtration_is_decreasing_and_closed(corpus):
    for s in corpus:
        strata = filtration(s.complex)
        assert strata[0].simplex_set() == s.complex.as_stratum().simplex_set()
        for a, b in zip(strata, strata[1:]):
            assert b.simplex_set() <= a.simplex_set()
        for st in strata:
            assert st.closure_set() == st.simplex_set()


def test_stabilizers_agree_with_vertex_action(corpus):
    for s in corpus:
        x = s.complex
        for v in range(min(x.n_vertices, 8)):
            expected = frozenset(
                e for e in range(s.group.order) if x.act_vertex(e, v) == v
            )
            assert x.vertex_stabilizers()[v] == expected
            assert x.stabilizer((v,)) == expected


QUOTIENT_SHAPES = {
    # name -> (base counts, quotient counts, extra subdivisions)
    "octahedron-antipodal": ((26, 72, 48), (13, 36, 24), 1),
    "hexagon-rot2": ((6, 6), (3, 3), 0),
    "hexagon-rot3": ((12, 12), (4, 4), 1),
    "hexagon-rot6": ((24, 24), (4, 4), 2),
    "pair-of-triangles": ((6, 6, 2), (3, 3, 1), 0),
}


def test_quotients_of_free_actions(by_name):
    for name, (base_counts, quot_counts, extra) in QUOTIENT_SHAPES.items():
        s = by_name[name]
        q = quotient_complex(s.complex)
        assert q.base.counts() == base_counts, name
        assert q.quotient.counts() == quot_counts, name
        assert q.extra_subdivisions == extra, name
        order = s.group.order
        for k, count in enumerate(q.base.counts()):
            assert count == order * q.quotient.counts()[k], (name, k)
        # projection hits every quotient simplex
        images = {q.project(t) for dim in q.base.simplices for t in dim}
        assert images == q.quotient.simplex_set()


def test_quotient_rejects_fixed_points(by_name):
    with pytest.raises(ValueError):
        quotient_complex(by_name["square-reflection"].complex)


def test_antipodal_quotient_is_projective_plane(by_name):
    # same homeomorphism type as the builtin six-vertex model: chi = 1
    q = quotient_complex(by_name["octahedron-antipodal"].complex)
    assert q.quotient.euler_characteristic() == 1
    assert by_name["projective-plane"].complex.euler_characteristic() == 1


def test_triangle_action_needs_one_subdivision(by_name):
    x = by_name["triangle-s3"].complex
    assert x.subdivision_count == 1
    assert x.counts() == (6, 6)
