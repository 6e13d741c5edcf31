"""Exact constant-term arithmetic and identity verification in q.

The package is organised bottom-up:

  qpoly       exact univariate Laurent polynomials in q and their fractions
  mpoly       sparse multivariate Laurent polynomials and kernel builders
  combi       permutations, compositions, pair sets, tournaments, matrices
  symfun      Schur and key polynomials, divided differences, scalar product
  identities  closed forms and brute-force verifiers for every identity
  interp      multivariate Lagrange interpolation and the bespoke grids
  cli         the batch verification harness (``dysonct`` entry point)
"""

from .qpoly import IntPoly, QRat, qbinom, qmultinom, qpoch
from .mpoly import (
    MPoly, VarTable, bg_alternating_kernel, bg_kernel, dyson_kernel,
    poch_factor, table_kernel, table_tau, table_x, tau_kernel, tkernel,
    tournament_kernel, tzero_kernel,
)
from .combi import (
    Permutation, Tournament, ZeroOneMatrix, comp_stats, conjugate,
    dominance_leq, ell_stats, gale_ryser_feasible, is_strict,
    left_justified_from_rows, pairset_to_perm, staircase,
)
from .symfun import (
    Alphabet, complete_h, divided_difference, hook_content, isobaric_pi,
    isobaric_pihat, key_poly, keyhat_poly, scalar_product, schur_principal,
)
from .identities import (
    D_vlambda, VerifyReport, c_w, poincare_W, rhs_bg_alternating,
    rhs_bg_general, rhs_kadell, rhs_kadell_t, rhs_lxz, rhs_poincare_qdyson,
    rhs_qdyson, rhs_sills, rhs_strict, rhs_tournament,
)
from .interp import (
    Grid, closed_eval, dyson_coeff_interpolated, dyson_grid, generic_coeff,
    sills_coeff_interpolated, sills_grid,
)
