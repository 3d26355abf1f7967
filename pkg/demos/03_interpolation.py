"""Interpolation over Z_{2**n}: unusual, but exact.

Unlike over a field, d+1 values do not always determine a polynomial,
and some value tables admit no polynomial at all. The solver handles
all three situations: unique, multiple, none.
"""

from unitpoly import Context, InconsistentTable, evaluate, interpolate, interpolate_at_nodes

ctx = Context(4)
print(f"n = 4: canonical polynomials have degree <= {ctx.d}")
print(f"standard nodes: {list(ctx.interpolation_nodes)}")

print()
values = (9, 5, 9)
rp = interpolate(values, ctx)
print(f"values {values} at the standard nodes -> {rp.pretty()}")
print(f"  check: {[evaluate(rp, x, ctx) for x in ctx.interpolation_nodes]}")

print()
print("away from the standard nodes the fit can be non-unique:")
fits = interpolate_at_nodes((1, 5, 9), (9, 9, 9), ctx)
print(f"polynomials taking the value 9 at 1, 5 and 9:")
for fit in fits:
    print(f"  {fit.pretty():18} -> {[evaluate(fit, x, ctx) for x in (1, 5, 9)]}")

print()
print("but the fitted functions still disagree elsewhere:")
for fit in fits:
    print(f"  {fit.pretty():18} at x=3: {evaluate(fit, 3, ctx)}")

print()
print("and some tables are plainly impossible:")
try:
    interpolate((1, 1, 3), ctx)
except InconsistentTable as exc:
    print(f"  values (1, 1, 3): {exc}")

print()
print("underdetermined systems enumerate cleanly too:")
fits = interpolate_at_nodes((1,), (7,), ctx)
print(f"  {len(fits)} canonical polynomials pass through (1, 7)")
