"""Linear solving modulo 2**n: interpolation and both kinds of inversion.

Two is a zero divisor modulo 2**n, so Gaussian elimination cannot divide
freely. Rows are combined using only three moves that preserve the
solution set exactly: adding an integer multiple of one row to another,
swapping rows, and rescaling a row by an odd unit. Picking the pivot of
minimal two-adic valuation in each column and normalizing away its odd
part leaves a pure power of two on the diagonal; for Vandermonde systems
over odd nodes that power in column i is exactly 2**(i + t_i), so each
back-substitution step is a single exact shift.
"""

from __future__ import annotations

from .context import Context
from .errors import BudgetExceeded, InconsistentTable, NotAPermutation, NotAUnitFunction
from .poly import (
    IntPoly,
    ReducedPoly,
    _as_coeffs,
    evaluate,
    induces_function_on_units,
    induces_permutation_on_units,
    reduce,
)
from .residue import unit_inverse


def _vandermonde_rows(nodes, width: int, ctx: Context) -> list[list[int]]:
    mask = ctx.mask
    rows = []
    for node in nodes:
        row = [1]
        power = 1
        for _ in range(width - 1):
            power = (power * node) & mask
            row.append(power)
        rows.append(row)
    return rows


def _echelon(rows: list[list[int]], rhs: list[int], ctx: Context) -> list[tuple[int, int, int]]:
    """Row-reduce [rows | rhs] over Z_{2**n} in place.

    For each column the surviving entry of minimal two-adic valuation is
    swapped up, its odd part is cancelled by multiplying the row with the
    part's inverse, and every lower entry (whose valuation cannot be
    smaller) is cleared by subtracting an exact integer multiple.

    Returns:
        Pivot triples (row, column, exponent), in order; the pivot entry
        itself is 2**exponent. Columns without a pivot are free.
    """
    mask = ctx.mask
    height = len(rows)
    width = len(rows[0]) if rows else 0
    pivots = []
    rank = 0
    for col in range(width):
        if rank == height:
            break
        best = -1
        best_val = ctx.n
        for i in range(rank, height):
            entry = rows[i][col]
            if entry:
                val = (entry & -entry).bit_length() - 1
                if val < best_val:
                    best, best_val = i, val
        if best < 0:
            continue
        rows[rank], rows[best] = rows[best], rows[rank]
        rhs[rank], rhs[best] = rhs[best], rhs[rank]
        odd = rows[rank][col] >> best_val
        if odd != 1:
            inv = unit_inverse(odd, ctx.n)
            rows[rank] = [(inv * v) & mask for v in rows[rank]]
            rhs[rank] = (inv * rhs[rank]) & mask
        pivot_row = rows[rank]
        for i in range(rank + 1, height):
            entry = rows[i][col]
            if entry:
                m = entry >> best_val  # exact: best_val was minimal in this column
                rows[i] = [(x - m * y) & mask for x, y in zip(rows[i], pivot_row)]
                rhs[i] = (rhs[i] - m * rhs[rank]) & mask
        pivots.append((rank, col, best_val))
        rank += 1
    return pivots


def _solve_triangular(rows, rhs, pivots, ctx: Context) -> list[int]:
    """Back-substitute a fully pivoted square system.

    Each pivot equation reads 2**e * a_col = remainder; the low e bits of
    the remainder must vanish, and the shifted value is the unique
    solution below 2**(n-e).
    """
    mask = ctx.mask
    width = len(rows[0])
    coeffs = [0] * width
    for row, col, exponent in reversed(pivots):
        acc = rhs[row]
        line = rows[row]
        for k in range(col + 1, width):
            acc = (acc - line[k] * coeffs[k]) & mask
        if acc & ((1 << exponent) - 1):
            raise InconsistentTable(
                f"no polynomial function fits: 2**{exponent} does not divide "
                f"{acc} at degree {col}"
            )
        coeffs[col] = acc >> exponent
    return coeffs


def _solve_unique(rows, rhs, ctx: Context) -> list[int]:
    pivots = _echelon(rows, rhs, ctx)
    expected = [(i, i, i + ctx.t[i]) for i in range(len(rows[0]))]
    if pivots != expected:
        raise RuntimeError(
            "row reduction did not reach the expected triangular form; "
            f"pivots {pivots}"
        )
    return _solve_triangular(rows, rhs, pivots, ctx)


def interpolate(values, ctx: Context) -> ReducedPoly:
    """The canonical polynomial taking the given values at 1, 3, ..., 2d+1.

    The d+1 values must be odd residues. Exactly one canonical polynomial
    fits any value table that comes from a polynomial function, and the
    table determines the function everywhere else on the odd residues.

    Raises:
        InconsistentTable: no polynomial function takes these values.
        ValueError: wrong table length, or an entry is not an odd residue.
    """
    vals = [ctx.check_unit(v) for v in values]
    if len(vals) != ctx.d + 1:
        raise ValueError(f"need exactly {ctx.d + 1} values for n={ctx.n}, got {len(vals)}")
    rows = _vandermonde_rows(ctx.interpolation_nodes, ctx.d + 1, ctx)
    coeffs = _solve_unique(rows, vals, ctx)
    return ReducedPoly(tuple(coeffs), ctx.n)


def interpolate_at_nodes(nodes, values, ctx: Context, *, max_solutions: int | None = None) -> list[ReducedPoly]:
    """Every canonical polynomial agreeing with a table on arbitrary odd nodes.

    The nodes must be distinct odd residues, values odd residues. The
    system may be underdetermined, in which case free coefficients sweep
    their whole range and partially pinned ones branch over the residue
    classes the pivot power leaves open; the result is the complete
    (possibly empty) solution set, sorted by coefficient vector.

    Args:
        max_solutions: optional cap; exceeding it raises BudgetExceeded
            instead of enumerating an enormous set.
    """
    node_list = [ctx.check_unit(v) for v in nodes]
    value_list = [ctx.check_unit(v) for v in values]
    if len(node_list) != len(value_list):
        raise ValueError("nodes and values must have the same length")
    if len(set(node_list)) != len(node_list):
        raise ValueError("nodes must be distinct")
    width = ctx.d + 1
    rows = _vandermonde_rows(node_list, width, ctx)
    rhs = list(value_list)
    pivots = _echelon(rows, rhs, ctx)
    for i in range(len(pivots), len(rows)):
        if rhs[i]:
            return []
    pivot_for_col = {col: (row, exponent) for row, col, exponent in pivots}
    mask = ctx.mask
    solutions: list[ReducedPoly] = []
    assignment = [0] * width

    def sweep(col: int) -> None:
        if col < 0:
            solutions.append(ReducedPoly(tuple(assignment), ctx.n))
            if max_solutions is not None and len(solutions) > max_solutions:
                raise BudgetExceeded(f"more than {max_solutions} polynomials fit the table")
            return
        bound = 1 << ctx.coeff_bits[col]
        if col not in pivot_for_col:
            for v in range(bound):
                assignment[col] = v
                sweep(col - 1)
            return
        row, exponent = pivot_for_col[col]
        acc = rhs[row]
        line = rows[row]
        for k in range(col + 1, width):
            acc = (acc - line[k] * assignment[k]) & mask
        if acc & ((1 << exponent) - 1):
            return
        candidate = acc >> exponent
        step = 1 << (ctx.n - exponent)
        while candidate < bound:
            assignment[col] = candidate
            sweep(col - 1)
            candidate += step

    sweep(width - 1)
    solutions.sort(key=lambda r: r.coeffs)
    return solutions


def invert_permutation(poly, ctx: Context) -> ReducedPoly:
    """Canonical polynomial inducing the inverse permutation.

    Evaluates the permutation at the d+1 standard nodes, then solves the
    Vandermonde system whose nodes are those images and whose right side
    is the original nodes. Images of distinct odd points differ by an odd
    multiple of the point difference, so the system reduces to the same
    triangular shape as the standard one; this is asserted at run time,
    and the result is checked by composition at the nodes.

    Raises:
        NotAPermutation: the polynomial does not permute the odd residues.
    """
    if not induces_permutation_on_units(poly):
        raise NotAPermutation("polynomial does not permute the odd residues")
    nodes = list(ctx.interpolation_nodes)
    images = [evaluate(poly, x, ctx) for x in nodes]
    rows = _vandermonde_rows(images, ctx.d + 1, ctx)
    coeffs = _solve_unique(rows, list(nodes), ctx)
    inverse = ReducedPoly(tuple(coeffs), ctx.n)
    for x in nodes:
        if evaluate(poly, evaluate(inverse, x, ctx), ctx) != x:
            raise RuntimeError("inverse failed its composition check")
    return inverse


def multiplicative_inverse(poly, ctx: Context) -> ReducedPoly:
    """Canonical polynomial for the pointwise inverse 1/p on odd residues.

    The inverse of a function into the odd residues is again a polynomial
    function (the function group has two-power order), so inverting the
    d+1 node values and interpolating recovers its canonical form.

    Raises:
        NotAUnitFunction: some value of p is even.
    """
    if not induces_function_on_units(poly):
        raise NotAUnitFunction("polynomial does not map odd residues to odd residues")
    values = [
        unit_inverse(evaluate(poly, x, ctx), ctx.n) for x in ctx.interpolation_nodes
    ]
    return interpolate(values, ctx)


def multiply_reduced(p: ReducedPoly, s: ReducedPoly, ctx: Context) -> ReducedPoly:
    """Product in the group of canonical forms: exact convolution, then reduce."""
    if not isinstance(p, ReducedPoly) or not isinstance(s, ReducedPoly):
        raise ValueError("multiply_reduced needs two canonical polynomials")
    if p.n != ctx.n or s.n != ctx.n:
        raise ValueError("operands and context must share the same n")
    product = IntPoly(_as_coeffs(p)) * IntPoly(_as_coeffs(s))
    return reduce(product, ctx)
