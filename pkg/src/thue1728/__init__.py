"""Integral points on Y^2 = X^3 - N*X via quartic Thue equations.

Exact-arithmetic toolkit: fundamental units of Z[sqrt(D)], Pell orbit
classification, binary quartic invariants and resolvent forms, reduction of
X^2 - D*Y^4 = k to quartic Thue equations, explicit solution-count bounds,
and desk-scale verification of those bounds.
"""

__version__ = "0.1.0"

from .arith import factorize, omega, squarefree_part, divisors, is_square, is_squarefree
from .quadratic import QuadraticInteger, FundamentalUnit, fundamental_unit, plus_one_unit, unit_upper_bound
from .pell import PellSolution, PellOrbit, enumerate_pell, same_orbit, orbits, orbit_count_bound
from .quartic import (
    QuarticForm,
    invariants,
    hessian,
    covariant_m,
    is_reduced,
    gl2_transform,
    real_roots,
    resolvent_pair,
)
from .reduction import (
    ParityBranch,
    ConicParametrization,
    ThueInstance,
    ReductionResult,
    NoConicSolutionError,
    branches,
    solve_ternary,
    parametrize_conic,
    build_thue_instance,
    uv_to_xy,
    xy_to_mn,
    find_uv,
    reduce_equation,
)
from .thue import (
    ThueSolution,
    enumerate_thue,
    classify_solutions,
    gap_chain_report,
    inequality_count_bound,
    equation_count_bound,
)
from .bounds import (
    BoundReport,
    quartic_count_bound,
    small_k_count_bound,
    curve_count_bound,
    walsh_comparison,
)
from .curves import CurvePoint, enumerate_curve_points, decompose_point, verify_theorems
