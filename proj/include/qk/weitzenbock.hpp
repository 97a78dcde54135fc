#pragma once

#include "qk/matrix.hpp"
#include "qk/report.hpp"

namespace qk {

/// Coefficient algebra of the matrix Weitzenboeck formula. The six operator
/// slots on either side are purely symbolic; only their rational coefficients
/// are computed. Slot k carries the index pair (H, E) = (k mod 2, k div 2):
///
///   left slots:   0: -nabla*nabla          1: kappa/4 r(r+2)/(n+2)
///                 2: kappa/4 s(2n-s+2)/(n(n+2))   3: C-term
///                 4: L-term                5: zero
///   right slots:  0: -1/2 (D++)*D++        1: 1/2 D+- D-+
///                 2: 1/2 D-+ D+-           3: -1/2 (D--)*D--
///                 4: -(T+)*T+              5: (T-)*T-
///
/// Pairing a right slot value with psi converts it to an operator norm:
///   N0 = -c0/2 on |D++psi|^2,  N1 = c1/2 on |D-+psi|^2,
///   N2 = c2/2 on |D+-psi|^2,   N3 = -c3/2 on |D--psi|^2,
///   N4 = -c4 on |T+psi|^2,     N5 = c5 on |T-psi|^2.
/// This fixed dictionary is verified by derive_min_identity and the two
/// limiting-case solvers simultaneously.
std::string slot_dictionary_description();

struct WeitzenbockMatrices {
  int n, r, s;
  ExactMatrix WH;      // 2x2
  ExactMatrix WE;      // 3x3
  ExactMatrix Wtwist;  // 4x4
};

/// The 2x2, 3x3 and 4x4 coefficient matrices at (n, r, s).
WeitzenbockMatrices build_weitzenbock(int n, int r, int s);

/// The 6x6 matrix of the formula in slot order (the Kronecker product of WH
/// and WE read through the slot index pairing above).
ExactMatrix weitzenbock_6x6(int n, int r, int s);

/// Entrywise checks of WH/WE, det WH = 2r, and W_twist against both its
/// display and the Kronecker combination of the two projector-relation
/// matrices.
Report check_weitzenbock_matrices(int n, int r, int s);

/// Finds the exact row vector u over the left slots (zero on the
/// nabla*nabla, C and L slots) whose image under the 6x6 matrix reproduces
/// the key identity of operator norms. Returns the norm coefficients in the
/// order (|D++|^2, |D-+|^2, |D+-|^2, |T+|^2, |D--|^2, |T-|^2).
struct MinIdentityResult {
  bool ok = false;
  std::vector<Rational> u;            // 6 entries over the left slots
  std::vector<Rational> norm_coeffs;  // 6 entries as above
  Rational lhs_coeff;                 // coefficient of (kappa/4)|psi|^2
};
MinIdentityResult derive_min_identity(int n, int r);
Report check_min_identity(int n, int r);

/// Rows 2,3,6 at (r,s) = (1, n-1) with the minimal-eigenspinor inputs; solves
/// for the two unknown second-order eigenvalues. Coefficients of kappa.
struct LimitingSystem {
  bool ok = false;
  Rational dmm;  // (D--)*D-- psi_1 eigenvalue / kappa
  Rational tmt;  // (T-)*T- psi_1 eigenvalue / kappa
};
LimitingSystem solve_limiting_system(int n);
Report check_limiting_system(int n);

/// Third row at (r,s) = (0, n-2) applied to psi_-; confirms the closed-form
/// coefficients and that the row forces (D+-)*D+- psi_- = 0.
Report check_psi_minus_row(int n);

/// The vanishing first row of the twistor coefficient system at (n, r, s).
Report check_twistor_identity(int n, int r, int s);

}  // namespace qk
