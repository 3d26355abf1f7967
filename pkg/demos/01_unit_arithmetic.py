"""Arithmetic on the odd residues modulo 2**n.

The odd residues form the unit group of Z_{2**n}. This walk-through
shows exact inverses, root lifting bit by bit, and the two-generator
structure of the group.
"""

from unitpoly import Context, check_unit_group_structure, hensel_roots, unit_inverse

n = 8
ctx = Context(n)
print(f"working modulo 2**{n} = {ctx.modulus}")

a = 173
inv = unit_inverse(a, n)
print(f"inverse of {a}: {inv}  (check: {a} * {inv} mod {ctx.modulus} = {a * inv % ctx.modulus})")

print()
print("roots of x^2 - 1, lifted one bit at a time:")
for k in (3, 4, 5):
    print(f"  mod 2**{k}: {hensel_roots((-1, 0, 1), k)}")
print("four square roots of one appear from n = 4 on, not two.")

print()
print("x^2 + 1 has no odd root, and the search notices early:")
print(f"  mod 2**8: {hensel_roots((1, 0, 1), 8)}")

print()
print("the unit group is generated by -1 and 5:")
for k in (5, 10, 20):
    report = check_unit_group_structure(k)
    print(
        f"  n={k}: 5 has order 2**{report.order_exponent}, "
        f"and 5**(2**{k - 3}) = {report.halfway_power} "
        f"(expected {report.halfway_expected}, passed={report.passed})"
    )

print()
print("consequence: every unit a satisfies a**(2**(n-2)) = 1, e.g. n=6:")
ctx6 = Context(6)
print(f"  {[pow(a, 1 << 4, 64) for a in list(ctx6.units())[:8]]} ...")
