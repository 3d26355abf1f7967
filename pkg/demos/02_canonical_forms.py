"""Canonical forms for polynomial functions on the odd residues.

Two polynomials can disagree coefficient-wise yet act identically on
every odd residue. Reduction modulo the vanishing ideal turns each
function into one short, unique coefficient vector.
"""

from unitpoly import (
    Context,
    equivalent,
    evaluate,
    ideal_generators,
    induces_function_on_units,
    induces_permutation_on_units,
    parse_poly,
    reduce,
    rivest_permutes_ring,
)

ctx = Context(5)
print(f"n = 5: canonical vectors have {ctx.d + 1} slots, far fewer than 2**5 coefficients")
print(f"slot value ranges: {[1 << b for b in ctx.coeff_bits]}")

p = parse_poly("1,0,0,0,0,3")
rp = reduce(p, ctx)
print()
print(f"1 + 3x^5 reduces to {rp.pretty()}   (vector {rp.coeffs})")
print("same values on every odd residue:")
for x in ctx.units():
    assert evaluate(p, x, ctx) == evaluate(rp, x, ctx)
print(f"  checked all {len(list(ctx.units()))} units")

print()
print("the vanishing ideal behind the reduction, at n = 5:")
for gen in ideal_generators(ctx):
    values = {evaluate(gen, x, ctx) for x in ctx.units()}
    print(f"  {gen.pretty():34}  values on units: {values}")

print()
print(f"equivalent(1 + 3x^5, 31 + 3x + 2x^2): {equivalent(p, (31, 3, 2), ctx)}")

print()
print("membership and permutation tests read off coefficient parities:")
for coeffs in ((2, 1), (4, 4, 1), (1, 1), (5, 1, 1)):
    member = induces_function_on_units(coeffs)
    perm = induces_permutation_on_units(coeffs)
    print(f"  {str(coeffs):12} unit-valued: {str(member):5}  permutes units: {perm}")

print()
print("and a third parity test covers permutations of the whole ring:")
for coeffs in ((2, 1), (5, 1, 1), (0, 1, 0, 0, 2)):
    print(f"  {str(coeffs):15} permutes Z_(2**n): {rivest_permutes_ring(coeffs)}")
