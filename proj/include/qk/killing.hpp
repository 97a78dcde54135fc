#pragma once

#include <array>
#include <map>

#include "qk/clifford.hpp"

namespace qk {

/// Totally symmetric quartic form on E*, with rational coefficients indexed
/// by sorted 4-tuples of basis indices.
class QuarticForm {
 public:
  explicit QuarticForm(int dim) : dim_(dim) {}

  static QuarticForm random(int dim, Rng& rng, int terms = 12);
  /// alpha^4 for a rational covector: K(v1..v4) = prod alpha(v_i).
  static QuarticForm power_of_covector(const std::vector<Rational>& alpha);
  /// Builds from a raw table whose keys may be unsorted; rejects tables that
  /// assign different values to permutations of the same index set.
  static QuarticForm from_table(int dim,
                                const std::map<std::array<int, 4>, Rational>& t);

  int dim() const { return dim_; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int i, int j, int k, int l) const;
  void set(int i, int j, int k, int l, const Rational& v);

  /// K_{e_i, e_j} in End(E): e -> K(e_i, e_j, e, .)^flat.
  ExactMatrix endo(const SymplecticSpace& e, int i, int j) const;

 private:
  int dim_;
  std::map<std::array<int, 4>, Rational> c_;
};

/// Fiberwise curvature data: scalar curvature and the hyperkaehler quartic.
struct CurvatureModel {
  int n = 2;
  Rational kappa = 1;
  QuarticForm quartic{4};
};

/// R_{X,Y} on H (x) E for decomposable X = h1 (x) e1, Y = h2 (x) e2:
/// -kappa/(8n(n+2)) (R^H + R^E) + R^hyper.
ExactMatrix assemble_R(const SpinorAlgebra& sa, const CurvatureModel& m,
                       const Vec& h1, const Vec& e1, const Vec& h2, const Vec& e2);

/// Recovers the quartic from an assembled curvature via the symmetrization
/// formula; independent of the h-choices whenever sigma_H(h1,h2) sigma_H(h3,h4)
/// is nonzero.
QuarticForm extract_quartic(const SpinorAlgebra& sa, const CurvatureModel& m,
                            const Vec& h1, const Vec& h2, const Vec& h3,
                            const Vec& h4);

Report check_assemble_R(const SpinorAlgebra& sa);

/// The three-block fiber Lambda^n_o E (+) (H (x) Lambda^{n-1}_o E) (+)
/// Lambda^{n-2}_o E, the connection perturbation A_X (with the Killing
/// parameter stripped: A_X = lambda * a_hat(X)), and the block actions of the
/// curvature on it.
class KillingModel {
 public:
  explicit KillingModel(const SpinorAlgebra& sa);

  int blocks() const { return 3; }
  int block_r(int b) const { return b == 1 ? 1 : 0; }
  int block_s(int b) const { return sa_.n() - b; }
  int block_dim(int b) const { return sa_.fiber_dim(block_r(b), block_s(b)); }
  int offset(int b) const;
  int total_dim() const;

  /// A_X / lambda as one block matrix on the total fiber.
  ExactMatrix a_hat(const Vec& x) const;
  /// Block-diagonal action of R_{X,Y}.
  ExactMatrix r_action(const CurvatureModel& m, const Vec& h1, const Vec& e1,
                       const Vec& h2, const Vec& e2) const;
  ExactMatrix r_hyper_action(const CurvatureModel& m, const Vec& h1,
                             const Vec& e1, const Vec& h2, const Vec& e2) const;

  const SpinorAlgebra& algebra() const { return sa_; }

 private:
  const SpinorAlgebra& sa_;
};

/// R^Killing = R + [A,A] with lambda^2 = kappa/4 (n+3)/(n+2) substituted;
/// verifies R^Killing = R^hyper on a spanning set of tangent pairs (and so
/// R^Killing = 0 in the zero-quartic model).
Report check_killing_curvature(const SpinorAlgebra& sa, const CurvatureModel& m);

/// The 3x3 length-function system: exact eigenvalues and the f-triples as
/// left eigenvectors. Entries are per unit kappa.
ExactMatrix laplace_matrix(int n);
Report check_laplace(int n);

/// Skew-hermiticity of A_X with respect to the weighted hermitian product
/// diag((n+3)/4n, 1, 6n/(n+3)).
Report check_skew_hermitian(const SpinorAlgebra& sa, const TangentFrame& frame);

/// Both vanishing claims for the curvature terms of the second-differential
/// projection: the quartic contribution (already unprojected) and the
/// assembled sp(n)-contribution morphism.
Report check_curvature_term_vanishing(const EModel& em, int s);

/// Fiberwise consequences of the Killing equations, via the frame sums.
Report check_killing_equation_consequences(const SpinorAlgebra& sa,
                                           const TangentFrame& frame);

}  // namespace qk
