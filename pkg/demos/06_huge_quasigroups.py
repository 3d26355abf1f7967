"""k-ary quasigroups on gigantic carriers, with instant adjoints.

A handful of permutation polynomials composes into a k-ary operation
whose defining tables would never fit in memory (2**256 rows here), yet
every "solve for the missing argument" query costs a few polynomial
evaluations.
"""

import random

from unitpoly import Context, Mode, QuasigroupSpec

rng = random.Random(2026)

ctx = Context(256)
spec = QuasigroupSpec.random(ctx, 3, Mode.UNIT_PRODUCT, rng)
print(f"ternary quasigroup on the {2**255}-element unit group of Z_(2**256)")
print(f"(that is 2**255 elements; the operation table would have 2**765 entries)")

args = [rng.getrandbits(256) | 1 for _ in range(3)]
value = spec.apply(args)
print()
print("apply(a1, a2, a3):")
for i, a in enumerate(args, start=1):
    print(f"  a{i} = {a}")
print(f"  -> {value}")

probe = list(args)
probe[1] = value
recovered = spec.adjoint(2, probe)
print()
print(f"adjoint solves for a2 given the result: recovered == a2 is {recovered == args[1]}")

print()
print("ring-carrier modes splice permutations over odd and even halves:")
small = QuasigroupSpec.random(Context(4), 2, Mode.RING_GLUED, rng)
print(f"  n=4 spec verifies exhaustively as a latin square: {small.latin_check()}")

print()
doc = small.to_json()
print(f"specs serialize to JSON ({len(doc)} bytes):")
print(f"  {doc}")
clone = QuasigroupSpec.from_json(doc)
print(f"round trip preserves behaviour: {clone.apply((3, 12)) == small.apply((3, 12))}")

print()
print("the same document drives the command line:")
print("  unitpoly qg random --n 64 --k 3 --mode unit_product --seed 7 > spec.json")
print("  unitpoly qg adjoint --spec spec.json --coord 2 --args 5,<target>,9")
