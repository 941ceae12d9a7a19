"""Exact-arithmetic lab for q-boson and Toda transfer matrices,
Hall-Littlewood polynomials, Baxter Q-matrices and Bethe ansatz checks.

Everything outside the Bethe root solver is exact rational arithmetic;
identity checks are run at random rational points and either hold
exactly or fail loudly.
"""

from .scalars import Scalar, format_scalar, parse_scalar, tbinom, tfact, tpoch
from .partitions import (
    Basis,
    box_basis,
    conjugate,
    is_horizontal_strip,
    is_vertical_strip,
    monomial_sym,
    multiplicity,
    occupation_basis,
    partition,
    partition_basis,
    state_norm,
    strip_test,
    weight,
    window_basis,
)
from .graded import GradedOperator, SparseMatrix, commutator_vanishes, matrix_dump
from .hall_littlewood import (
    cauchy_coeff_check,
    complete_q_coeffs,
    elementary_e_coeffs,
    hl_P,
    hl_PQ,
    hl_Q,
    hl_R,
    p_omega,
    pieri_coeff,
    skew_eval,
    sym_gen_coeffs,
)
from .vertex_ops import (
    VertexOp,
    build_eigenstate,
    build_gamma,
    gamma_commutation_check,
    gamma_eigen_check,
)
from .lattice import (
    build_lax,
    build_sixvertex_r,
    folded_toda_transfer,
    open_transfer,
    periodic_transfer,
    rll_check_qboson,
    toda_gauge_check,
    translation_op,
)
from .baxter_q import (
    ar_project_check,
    build_LL,
    build_qmatrix,
    lambda_q_commute_check,
    null_psi,
    qq_commute_check,
    tq_check,
    trace_qmatrix,
)
from .bethe import (
    BetheSystem,
    bethe_solve,
    bethe_vector,
    interior_staircase_check,
    spin_eigen_check,
    xi,
)
from .gaudin import gaudin_det, gaudin_sum, lascoux_reduction_check
from .suites import SUITE_NAMES, SuiteSpec, draw_params, run_suite

__all__ = [name for name in dir() if not name.startswith("_")]
