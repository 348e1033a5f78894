"""Fixed subcomplexes, exact strata, and regularizing subdivisions.

The octahedron boundary is a sphere; a Klein four-group acts on it with one
free element and two elements fixing circles.  Points group by their exact
stabilizer into locally closed strata, one per subgroup class, which is
precisely the decomposition the fixed-point identity sums over.
"""

from equilef import (
    build_complex,
    conjugacy_classes_of_subgroups,
    exact_stratum,
    fixed_subcomplex,
    group_from_permutations,
)

# vertices i and i+3 are antipodal
faces = [
    (0, 1, 2), (0, 1, 5), (0, 4, 2), (0, 4, 5),
    (3, 1, 2), (3, 1, 5), (3, 4, 2), (3, 4, 5),
]
antipodal = (3, 4, 5, 0, 1, 2)
half_turn = (3, 4, 2, 0, 1, 5)
group = group_from_permutations(6, [antipodal, half_turn])
sphere = build_complex(faces, group, [antipodal, half_turn])

print(f"octahedron: {sphere.counts()}, group order {group.order}")
print(f"action regular as given: {sphere.subdivision_count == 0}")
print()

for cls in conjugacy_classes_of_subgroups(group):
    h = cls.representative
    fixed = fixed_subcomplex(sphere, h)
    exact = exact_stratum(sphere, h)
    print(f"subgroup {h.member_set}:")
    print(f"  fixed subcomplex sizes {fixed.sizes()}, "
          f"Euler characteristic {fixed.euler_characteristic()}")
    print(f"  exact stratum sizes {exact.sizes()}, "
          f"compact-support Euler characteristic {exact.euler_characteristic()}")
    print(f"  locally closed: {exact.is_locally_closed()}")

print()
print("the strata tile the sphere: the antipodal map acts freely, the half")
print("turn fixes the two poles, the composite fixes the equator circle,")
print("and everything else has trivial stabilizer.")

# an edge flipped end-to-end is the classic regularity failure: build_complex
# subdivides once so every setwise-fixed simplex is fixed pointwise
c2 = group_from_permutations(2, [(1, 0)])
segment = build_complex([(0, 1)], c2, [(1, 0)])
print()
print(f"flipped segment: subdivided {segment.subdivision_count} time(s), "
      f"now {segment.counts()}")
midpoint = fixed_subcomplex(segment, c2.whole_subgroup())
print(f"fixed set after subdivision: {midpoint.sizes()} (the midpoint)")
