"""Two kinds of inverse, plus the pointwise product.

A permutation polynomial has a functional inverse (undoing the map) and
any unit-valued polynomial has a multiplicative inverse (reciprocal at
every point). Both come back as canonical vectors.
"""

from unitpoly import (
    Context,
    evaluate,
    induces_permutation_on_units,
    invert_permutation,
    multiplicative_inverse,
    multiply_reduced,
    reduce,
)

ctx = Context(4)
mod = ctx.modulus

p = (5, 1, 1)
print(f"p = 5 + x + x^2 on the odd residues mod {mod}")
print(f"  forward table: {[(x, evaluate(p, x, ctx)) for x in ctx.units()]}")

r = invert_permutation(p, ctx)
print(f"functional inverse: {r.pretty()}")
print(f"  r(p(x)) = x at every unit: "
      f"{all(evaluate(r, evaluate(p, x, ctx), ctx) == x for x in ctx.units())}")

print()
q = multiplicative_inverse(p, ctx)
print(f"multiplicative inverse: {q.pretty()}")
print(f"  p(x) * q(x) = 1 at every unit: "
      f"{all(evaluate(p, x, ctx) * evaluate(q, x, ctx) % mod == 1 for x in ctx.units())}")

print()
print("pointwise products stay canonical:")
g = reduce((2, 1), ctx)
square = multiply_reduced(g, g, ctx)
print(f"  (2 + x)^2 -> {square.pretty()}")
print(f"  2 + x permutes the units: {induces_permutation_on_units(g.coeffs)}")
print(f"  its square does not:     {induces_permutation_on_units(square.coeffs)}")
print("so the permutation polynomials are not closed under this product.")

print()
print("powers collapse: every unit-valued function to the 2**(n-2) is 1")
acc = g
for _ in range(ctx.n - 2):
    acc = multiply_reduced(acc, acc, ctx)
print(f"  (2 + x)^(2**{ctx.n - 2}) -> {acc.pretty()}")
