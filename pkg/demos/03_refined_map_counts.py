"""
Refined map counts from the Jack partition sum
==============================================

The generating series M(z) = 2 alpha z d/dz log S(z) encodes, per
(vertex distribution, face count, edge count), the number of rooted maps
weighted by crosscaps: a polynomial in b whose value at b=0 counts
orientable maps and at b=1 counts maps on all surfaces.
"""

from fractions import Fraction

from mapchi import map_count_table, nonneg_report, poly_str, specialize_counts

table = map_count_table(3)

print("Refined map numbers through 3 edges (polynomials in b):")
for key in table.keys_sorted():
    label = f"n={key.n} j={key.j} i={list(key.i)}"
    print(f"  {label:<28} {poly_str(table[key])}")

# Column sums reproduce the classical rooted-map sequences.
at_zero = specialize_counts(table, Fraction(0))
at_one = specialize_counts(table, Fraction(1))
print("\nRow sums by edge count:")
print("  orientable (b=0):", [
    sum(v for k, v in at_zero.items() if k.n == n) for n in (1, 2, 3)
])
print("  all surfaces (b=1):", [
    sum(v for k, v in at_one.items() if k.n == n) for n in (1, 2, 3)
])

# Each row also respects the surface constraints: the b-degree is bounded by
# the crosscap budget 2 - chi.
key = max(table.keys_sorted(), key=lambda k: table[k].degree)
chi = key.euler_characteristic
print(f"\nDeepest row {list(key.i)}, j={key.j}, n={key.n}: chi={chi}, "
      f"degree {table[key].degree} <= {2 - chi}")

# Nonnegativity of all coefficients is conjectural; the report is empty here.
print(f"\nNonnegativity violations through 3 edges: {nonneg_report(table)}")
