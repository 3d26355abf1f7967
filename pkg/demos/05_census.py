"""How many polynomial functions are there? Exactly 2**these.

All counts are reported as base-2 exponents since the actual numbers
grow astronomically: at n = 512 there are more reduced polynomial
functions than atoms in the observable universe, squared.
"""

from unitpoly import (
    census_report,
    count_permutational,
    count_reduced,
    count_ring_permutational,
    keller_exponent,
    keller_identity_check,
    max_reduced_degree,
)

print("n    degree cap   log2(reduced)  log2(permutational)  log2(ring perms)")
for n in (2, 3, 4, 5, 6, 8, 16, 32, 64):
    print(
        f"{n:<4} {max_reduced_degree(n):<12} {count_reduced(n):<14} "
        f"{count_permutational(n):<20} {count_ring_permutational(n)}"
    )

print()
print("an independent route to the ring-permutation count walks the")
print("factorial valuations instead; both must land on the same exponent:")
for n in (5, 16, 100):
    print(
        f"  n={n:<4} direct formula: {count_ring_permutational(n):<6} "
        f"valuation walk: {keller_exponent(n):<6} agree: {keller_identity_check(n)}"
    )

print()
print(f"the identity holds over the whole supported range, e.g. up to 1024: "
      f"{all(keller_identity_check(n) for n in range(2, 1025))}")

print()
print("one-stop report:")
report = census_report(6)
for key, value in report.to_dict().items():
    print(f"  {key} = {value}")
