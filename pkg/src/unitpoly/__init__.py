"""Polynomial functions on the odd residues modulo 2**n.

The package works with the group of units of the ring of integers
modulo a power of two: canonical forms for the polynomials that act on
it, interpolation and inversion, hensel-style root lifting, counting
formulas, and huge k-ary quasigroups built from permutation polynomials.
"""

from .census import (
    CensusReport,
    census_report,
    count_permutational,
    count_reduced,
    count_ring_permutational,
    keller_beta,
    keller_exponent,
    keller_identity_check,
)
from .context import (
    DEFAULT_MAX_N,
    Context,
    max_reduced_degree,
    two_adic_factorial_valuation,
)
from .errors import (
    BudgetExceeded,
    CarrierError,
    InconsistentTable,
    NotAPermutation,
    NotAUnitFunction,
    UnitPolyError,
)
from .poly import (
    IntPoly,
    ReducedPoly,
    bivariate_quasigroup_check,
    conjugate_to_nonunits,
    equivalent,
    evaluate,
    format_poly,
    glue_polynomial,
    ideal_generators,
    indicator_polys,
    induces_function_on_units,
    induces_permutation_on_units,
    parse_poly,
    reduce,
    rivest_permutes_ring,
)
from .quasigroup import Mode, QuasigroupSpec, random_permutational_poly
from .residue import (
    UnitGroupReport,
    check_unit_group_structure,
    hensel_roots,
    unit_inverse,
)
from .solve import (
    interpolate,
    interpolate_at_nodes,
    invert_permutation,
    multiplicative_inverse,
    multiply_reduced,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "CarrierError",
    "CensusReport",
    "Context",
    "DEFAULT_MAX_N",
    "InconsistentTable",
    "IntPoly",
    "Mode",
    "NotAPermutation",
    "NotAUnitFunction",
    "QuasigroupSpec",
    "ReducedPoly",
    "UnitGroupReport",
    "UnitPolyError",
    "bivariate_quasigroup_check",
    "census_report",
    "check_unit_group_structure",
    "conjugate_to_nonunits",
    "count_permutational",
    "count_reduced",
    "count_ring_permutational",
    "equivalent",
    "evaluate",
    "format_poly",
    "glue_polynomial",
    "hensel_roots",
    "ideal_generators",
    "indicator_polys",
    "induces_function_on_units",
    "induces_permutation_on_units",
    "interpolate",
    "interpolate_at_nodes",
    "invert_permutation",
    "keller_beta",
    "keller_exponent",
    "keller_identity_check",
    "max_reduced_degree",
    "multiplicative_inverse",
    "multiply_reduced",
    "parse_poly",
    "random_permutational_poly",
    "reduce",
    "rivest_permutes_ring",
    "two_adic_factorial_valuation",
    "unit_inverse",
    "__version__",
]
