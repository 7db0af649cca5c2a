"""Exact diagonal differential operators on generalized Hermite bases.

The package works entirely over the rationals: polynomial coefficients,
sequence entries, and operator data are `fractions.Fraction` values, so every
check is an exact identity rather than a floating-point comparison.
"""

from .classify import (
    FALSIFIED,
    INCONCLUSIVE,
    IS_MS,
    NOT_MS,
    HermiteBasis,
    LaguerreBasis,
    RealityTable,
    StandardBasis,
    Verdict,
    Witness,
    check_turan_necessity,
    coefficient_reality_table,
    falsify_sequence,
    is_classical_ms,
    is_hermite_ms,
    ratio_limit_check,
)
from .diffop import (
    HermiteDiffOp,
    TruncationError,
    apply_operator,
    build_operator,
    coefficient_polynomial,
    interpolation_poly,
    solve_operator_from_action,
)
from .hermite import HermiteExpansion, from_hermite_basis, hermite_poly, hermite_polys, to_hermite_basis
from .jensen import (
    FactoredSpec,
    GammaSeq,
    SeriesSpec,
    bessel_j0_spec,
    difference_via_exp_shift,
    exp_half_cosh_spec,
    finite_difference,
    jensen_reversed,
    ratio_sequence,
    taylor_gamma,
    turan_quantity,
)
from .laguerre import LaguerreParam, from_laguerre_basis, laguerre_polys, to_laguerre_basis
from .ratpoly import RatPoly, count_real_roots, is_real_rooted, rat, rat_str, squarefree_part
from .reporting import CheckReport
from .sequences import make_sequence

__version__ = "0.1.0"

__all__ = [
    "CheckReport",
    "FALSIFIED",
    "FactoredSpec",
    "GammaSeq",
    "HermiteBasis",
    "HermiteDiffOp",
    "HermiteExpansion",
    "INCONCLUSIVE",
    "IS_MS",
    "LaguerreBasis",
    "LaguerreParam",
    "NOT_MS",
    "RatPoly",
    "RealityTable",
    "SeriesSpec",
    "StandardBasis",
    "TruncationError",
    "Verdict",
    "Witness",
    "apply_operator",
    "bessel_j0_spec",
    "build_operator",
    "check_turan_necessity",
    "coefficient_polynomial",
    "coefficient_reality_table",
    "count_real_roots",
    "difference_via_exp_shift",
    "exp_half_cosh_spec",
    "falsify_sequence",
    "finite_difference",
    "from_hermite_basis",
    "from_laguerre_basis",
    "hermite_poly",
    "hermite_polys",
    "interpolation_poly",
    "is_classical_ms",
    "is_hermite_ms",
    "is_real_rooted",
    "jensen_reversed",
    "laguerre_polys",
    "make_sequence",
    "rat",
    "rat_str",
    "ratio_limit_check",
    "ratio_sequence",
    "solve_operator_from_action",
    "squarefree_part",
    "taylor_gamma",
    "to_hermite_basis",
    "to_laguerre_basis",
    "turan_quantity",
]
