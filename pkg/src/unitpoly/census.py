"""Closed-form counts of induced-function classes, as exponents of two.

All counts are powers of two, so every function here returns or stores
the exponent, never the (possibly astronomical) count itself.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .context import max_reduced_degree, two_adic_factorial_valuation


def _require(n: int) -> None:
    if n < 2:
        raise ValueError(f"modulus exponent must be at least 2, got {n}")


def _valuation_sum(d: int) -> int:
    return sum(two_adic_factorial_valuation(i) for i in range(d + 1))


def count_reduced(n: int) -> int:
    """log2 of the number of polynomial functions on the odd residues."""
    _require(n)
    d = max_reduced_degree(n)
    return ((2 * n - d) * (d + 1)) // 2 - 1 - _valuation_sum(d)


def count_permutational(n: int) -> int:
    """log2 of the number of polynomial permutations of the odd residues.

    Exactly half the polynomial functions are permutations, so this is
    count_reduced(n) - 1.
    """
    return count_reduced(n) - 1


def count_ring_permutational(n: int) -> int:
    """log2 of the number of polynomial permutations of all of Z_{2**n}.

    Each one either preserves or swaps the odd/even classes, and either
    half is a free pair of permutations on the odd residues, giving
    2 * (2**count_permutational)**2.
    """
    return 2 * count_permutational(n) + 1


def keller_beta(j: int) -> int:
    """Smallest s with 2**j dividing s!."""
    if j < 1:
        raise ValueError("keller_beta needs j >= 1")
    s = 1
    while two_adic_factorial_valuation(s) < j:
        s += 1
    return s


def _beta_sum(n: int) -> int:
    # t_s is non-decreasing, so one upward scan crosses each threshold once
    total = 0
    s = 1
    for j in range(3, n + 1):
        while two_adic_factorial_valuation(s) < j:
            s += 1
        total += s
    return total


def keller_exponent(n: int) -> int:
    """Exponent of the classical factorial-threshold count, 3 + sum of
    keller_beta(j) for 3 <= j <= n (empty sum at n = 2)."""
    _require(n)
    return 3 + _beta_sum(n)


def keller_identity_check(n: int) -> bool:
    """Cross-check the two counting routes for ring permutations.

    Verifies 2 * sum(t_i, i <= d) + sum(beta_j, 3 <= j <= n)
    == (2n - d)(d + 1) - 6, which says the factorial-threshold count
    equals the count derived from canonical forms.
    """
    _require(n)
    d = max_reduced_degree(n)
    return 2 * _valuation_sum(d) + _beta_sum(n) == (2 * n - d) * (d + 1) - 6


@dataclass(frozen=True)
class CensusReport:
    """All counts for one n, as log2 exponents, plus the identity verdict."""

    n: int
    log2_reduced: int
    log2_permutational: int
    log2_ring_permutational: int
    keller_exponent: int
    identity_ok: bool

    def to_dict(self) -> dict:
        return asdict(self)


def census_report(n: int) -> CensusReport:
    return CensusReport(
        n=n,
        log2_reduced=count_reduced(n),
        log2_permutational=count_permutational(n),
        log2_ring_permutational=count_ring_permutational(n),
        keller_exponent=keller_exponent(n),
        identity_ok=keller_identity_check(n),
    )
