"""Unit-group arithmetic modulo 2**n by bit-by-bit lifting.

A root of a polynomial modulo 2**(k+1) restricts to a root modulo 2**k,
so roots can be grown one bit at a time. Inversion of an odd residue is
the special case P(x) = a*x - 1, where each bit is forced and the search
never branches.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceeded

DEFAULT_BRANCH_LIMIT = 1 << 20


def _coeff_list(poly) -> list[int]:
    return [int(c) for c in getattr(poly, "coeffs", poly)]


def unit_inverse(a: int, n: int) -> int:
    """Multiplicative inverse of an odd residue modulo 2**n.

    Bit k of the inverse is set exactly when the running product
    disagrees with 1 modulo 2**(k+1); adding a << k then fixes that bit
    without disturbing the lower ones. Runs in n steps, no branching.
    """
    if n < 1:
        raise ValueError("modulus exponent must be positive")
    mask = (1 << n) - 1
    a = int(a) & mask
    if a & 1 == 0:
        raise ValueError("only odd residues are invertible modulo 2**n")
    inv = 1
    prod = a  # invariant: prod == a * inv mod 2**n, and prod == 1 mod 2**(k)
    for k in range(1, n):
        if (prod >> k) & 1:
            inv |= 1 << k
            prod = (prod + (a << k)) & mask
    return inv


def _eval_masked(coeffs: list[int], x: int, mask: int) -> int:
    value = 0
    for c in reversed(coeffs):
        value = (value * x + c) & mask
    return value


def hensel_roots(poly, n: int, *, branch_limit: int = DEFAULT_BRANCH_LIMIT) -> list[int]:
    """All roots of the polynomial modulo 2**n, ascending.

    Partial roots modulo 2**k are extended by each bit choice that keeps
    them roots modulo 2**(k+1); candidates that stop being roots are
    dropped. The frontier of live candidates is capped by branch_limit.

    Args:
        poly: coefficient sequence or polynomial object, lowest degree first.
        n: modulus exponent, n >= 1.
        branch_limit: maximum number of simultaneous partial roots.

    Raises:
        BudgetExceeded: when the frontier outgrows branch_limit.
    """
    if n < 1:
        raise ValueError("modulus exponent must be positive")
    full_mask = (1 << n) - 1
    coeffs = [c & full_mask for c in _coeff_list(poly)]
    frontier = [0]
    for k in range(n):
        step_mask = (2 << k) - 1
        new_frontier = []
        for r in frontier:
            for bit in (0, 1):
                candidate = r | (bit << k)
                if _eval_masked(coeffs, candidate, step_mask) == 0:
                    new_frontier.append(candidate)
        if len(new_frontier) > branch_limit:
            raise BudgetExceeded(
                f"root search frontier grew past {branch_limit} at bit {k}"
            )
        frontier = new_frontier
        if not frontier:
            return []
    return sorted(frontier)


@dataclass(frozen=True)
class UnitGroupReport:
    """Structured outcome of the unit-group structure check."""

    n: int
    order_exponent: int
    halfway_power: int
    halfway_expected: int
    order_ok: bool
    halfway_ok: bool

    @property
    def passed(self) -> bool:
        return self.order_ok and self.halfway_ok


def check_unit_group_structure(n: int) -> UnitGroupReport:
    """Verify that 5 has order exactly 2**(n-2) modulo 2**n, n >= 3.

    Repeated squaring walks 5 up to the exponent 2**(n-3); that halfway
    value must be 2**(n-1) + 1, and one more squaring must reach 1 while
    the halfway value itself is not 1 (so the order is not smaller).
    """
    if n < 3:
        raise ValueError("the structure check needs n >= 3")
    mask = (1 << n) - 1
    v = 5
    for _ in range(n - 3):
        v = (v * v) & mask
    halfway = v
    final = (v * v) & mask
    expected = (1 << (n - 1)) + 1
    return UnitGroupReport(
        n=n,
        order_exponent=n - 2,
        halfway_power=halfway,
        halfway_expected=expected,
        order_ok=(final == 1 and halfway != 1),
        halfway_ok=(halfway == expected),
    )
