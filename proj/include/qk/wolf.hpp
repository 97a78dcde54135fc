#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qk/matrix.hpp"
#include "qk/report.hpp"

namespace qk {

/// A compact Lie algebra presented by rational structure constants over a
/// fixed basis, with its Killing form B(x,y) = tr(ad_x ad_y).
struct LieAlgebraModel {
  std::string name;
  int dim = 0;
  // bracket[a][b] = coordinates of [x_a, x_b]
  std::vector<std::vector<std::vector<Rational>>> bracket;
  ExactMatrix killing;

  ExactMatrix ad(int a) const;
  std::vector<Rational> bracket_of(const std::vector<Rational>& x,
                                   const std::vector<Rational>& y) const;
  Rational b_eval(const std::vector<Rational>& x,
                  const std::vector<Rational>& y) const;
};

/// Cartan decomposition g = k (+) p with the ideal decomposition of k.
/// The basis is ordered ideal blocks first, then p.
struct CartanDecomposition {
  struct Ideal {
    std::string name;
    std::vector<int> idx;
  };
  std::vector<int> k_idx, p_idx;
  std::vector<Ideal> ideals;
  int quaternionic = 0;  // which ideal defines the quaternionic structure
};

enum class WolfFamily { HPn, GrC2, GrR4 };
const char* family_name(WolfFamily f);

/// Compact-form models with rational structure constants:
/// sp(n+1), su(n+2), so(n+4) with their Wolf-space Cartan decompositions.
std::pair<LieAlgebraModel, CartanDecomposition> build_classical_wolf(WolfFamily f,
                                                                     int n);

/// Antisymmetry, Jacobi identity, and the Killing form recomputed from
/// ad-traces.
Report check_lie_model(const LieAlgebraModel& g);

/// Bracket gradings, partial Killing forms (B_k = B_p = B/2 on p, vanishing
/// on k x p), ideal structure and orthogonality.
Report check_cartan(const LieAlgebraModel& g, const CartanDecomposition& dec);

/// l_i with B_{k_i} = l_i B on each ideal (0 on the center); throws if the
/// forms fail to be proportional.
std::vector<Rational> compute_l_constants(const LieAlgebraModel& g,
                                          const CartanDecomposition& dec);

std::vector<Rational> expected_l_classical(WolfFamily f, int n);

/// The cobracket / curvature-endomorphism suite: adjointness of Delta,
/// bracket . Delta = (L - id)/2, the eigenvalues (1 - l_i)/2 of rho on
/// Delta k_i, vanishing on the orthogonal complement, the scalar-curvature
/// trace, the Ricci identity, and the rho-definition consistency.
Report check_curvature_endomorphism(const LieAlgebraModel& g,
                                    const CartanDecomposition& dec,
                                    const std::vector<Rational>& expected_l);

/// The sp(1) Killing constant computed from first principles: the
/// quaternionic triple satisfies [I,J] = 2K, ad_I is a complex structure on
/// p, tr(ad_I ad_I) = -8 - 4n, and l_{sp(1)} = 2/(n+2).
Report check_sp1_constant(const LieAlgebraModel& g, const CartanDecomposition& dec);

/// One row of the Wolf table: tabulated dimensions and Killing constants.
struct WolfEntry {
  struct IdealData {
    std::string name;
    int dim;
    bool known;
    Rational l;
  };
  std::string name;
  int n;
  std::vector<IdealData> ideals;
  int quaternionic = 0;
};

/// All eight entries; the classical three evaluated at n_classical.
std::vector<WolfEntry> wolf_table(int n_classical = 2);

/// Verifies sum_i dim k_i (1 - l_i) = 2n, or solves for the single unknown
/// constant in place.
Report check_trace_identity(WolfEntry* entry);

std::vector<Rational> rho_eigenvalues(const WolfEntry& entry);  // (1 - l_i)/2
/// rho^hyper eigenvalue on an ideal inside sp(n): (1 - l_i)/2 - 1/(2(n+2)).
Rational rho_hyper_eigenvalue(const WolfEntry& entry, int ideal);
bool is_regular(const WolfEntry& entry);
Report check_regularity(const WolfEntry& entry, bool expect_regular);

}  // namespace qk
