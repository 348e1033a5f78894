"""Exact character tables, rational orbits, induction and restriction.

Character values live in cyclotomic fields and are computed exactly; the
Galois action fuses complex irreducibles into rational orbits whose sums
are the integer-valued building blocks the engine reports against.
"""

from equilef import (
    character_table,
    element_classes,
    group_from_permutations,
    induce,
    inner_product,
    rational_irreducibles,
    restrict,
    subgroups,
    trivial_character,
)
from equilef.scenario_io import cyclotomic_str

s3 = group_from_permutations(3, [(1, 2, 0), (1, 0, 2)])
print("symmetric group on three letters")
table = character_table(s3)
reps = [c.representative for c in element_classes(s3)]
print(f"  class representatives: {reps}")
for i, chi in enumerate(table.irreducibles):
    values = ", ".join(cyclotomic_str(v) for v in chi.values)
    print(f"  chi_{i} (degree {table.degrees[i]}): [{values}]")

print()
c6 = group_from_permutations(6, [(1, 2, 3, 4, 5, 0)])
print("cyclic group of order six: irrational values, rational orbits")
table6 = character_table(c6)
for i, chi in enumerate(table6.irreducibles):
    values = ", ".join(cyclotomic_str(v) for v in chi.values)
    print(f"  chi_{i}: [{values}]")
print("  Galois orbit sums (always integer-valued):")
for lam in rational_irreducibles(table6):
    values = [str(v) for v in lam.orbit_sum.values]
    print(f"    orbit {list(lam.orbit)}: {values}")

print()
print("Frobenius reciprocity, exactly:")
h = next(sub for sub in subgroups(s3) if sub.order == 2)
f = trivial_character(h.as_group())
w = trivial_character(s3)
up = induce(h, f)
print(f"  ind from an order-2 subgroup of the trivial character: "
      f"{[str(v) for v in up.values]}")
lhs = inner_product(up, w)
rhs = inner_product(f, restrict(w, h))
print(f"  <ind f, w> = {lhs}  equals  <f, res w> = {rhs}: {lhs == rhs}")
