#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "qk/spaces.hpp"

namespace qk {

/// The four degree-shift components of Clifford multiplication in the E-H
/// formalism. Superscript = Sym H degree shift, subscript = primitive E
/// degree shift; each carries the sqrt2 prefactor.
enum class MuKind {
  PlusMinus,   // (r,s) -> (r+1, s-1):  sqrt2 (h. (x) e#_)
  MinusPlus,   // (r,s) -> (r-1, s+1):  sqrt2 (h#_o (x) e^o)
  PlusPlus,    // (r,s) -> (r+1, s+1):  sqrt2 (h. (x) e^o)
  MinusMinus,  // (r,s) -> (r-1, s-1):  sqrt2 (h#_o (x) e#_)
};

int mu_shift_r(MuKind k);
int mu_shift_s(MuKind k);
const char* mu_name(MuKind k);

/// Fiberwise spinor algebra of a quaternionic Kaehler model in dimension 4n:
/// the fibers Sym^r H (x) Lambda^s_o E, the partial Clifford multiplications
/// between them, the calibrated real tangent frame, and the hermitian
/// products. Tangent vectors are coordinate vectors in H (x) E with
/// index = alpha * 2n + i.
class SpinorAlgebra {
 public:
  explicit SpinorAlgebra(int n);

  int n() const { return n_; }
  const EModel& E() const { return em_; }
  const HModel& H() const { return hm_; }

  int fiber_dim(int r, int s) const;
  std::string fiber_label(int r, int s) const;
  /// rank S_r = (r+1) (C(2n, n-r) - C(2n, n-r-2)): the genuine spinor summand.
  long rank_S(int r) const;

  // Tangent vectors in H (x) E.
  int tangent_dim() const { return 4 * n_; }
  Vec tangent_basis(int alpha, int i) const;
  Vec tangent_conj(const Vec& x) const;  // (J (x) J) x
  /// Complex-bilinear metric sigma_H (x) sigma_E.
  Scalar metric(const Vec& x, const Vec& y) const;

  ExactMatrix mu(MuKind k, const Vec& x, int r, int s) const;
  const ExactMatrix& mu_basis(MuKind k, int alpha, int i, int r, int s) const;
  /// Checked variant: rejects compositions that leave admissible degrees.
  ExactMatrix mu_checked(MuKind k, const Vec& x, int r, int s) const;

  /// sum_a mu_k1(X_a) mu_k2(X_a) on the (r,s) fiber, over the given frame.
  ExactMatrix frame_sum(MuKind k1, MuKind k2, const std::vector<Vec>& frame,
                        int r, int s) const;

  /// Full Clifford multiplication mu(x) on the total spinor fiber
  /// (+)_{r=0..n} S_r, as one block matrix.
  ExactMatrix mu_full(const Vec& x) const;
  int full_dim() const;

  // Hermitian products (x,y) = sigma(x, Jy), extended multiplicatively.
  ExactMatrix fiber_gram(int r, int s) const;

  // Curvature-type fiber actions (associated sp(1)/sp(n) representations).
  /// Endomorphism (e_i e_j) of E: e -> sigma(e_i,e) e_j + sigma(e_j,e) e_i.
  ExactMatrix sym2E_endo(int i, int j) const;
  ExactMatrix sym2E_endo(const Vec& u, const Vec& w) const;
  /// Endomorphism (h_a h_b) of H.
  ExactMatrix sym2H_endo(int a, int b) const;
  ExactMatrix sym2H_endo(const Vec& u, const Vec& w) const;

 private:
  int n_;
  EModel em_;
  HModel hm_;
  mutable std::map<std::tuple<int, int, int, int, int>, ExactMatrix> mu_cache_;
};

/// A local orthonormal real frame: 4n (J (x) J)-fixed vectors, calibrated so
/// that the four partial-Clifford sum identities hold. Both sign candidates
/// for the completeness tensor are tried; the matching one is recorded.
struct TangentFrame {
  std::vector<Vec> vectors;
  int completeness_sign = 0;  // +1 or -1, which candidate tensor matched
};

TangentFrame build_frame(const SpinorAlgebra& sa);
/// A second calibrated frame (rational rotation in each quaternionic block),
/// used to confirm frame independence of the sums.
TangentFrame build_frame_rotated(const SpinorAlgebra& sa);

/// Frame structure: reality, orthonormality, completeness tensor.
Report check_frame(const SpinorAlgebra& sa, const TangentFrame& frame);

/// The four nonvanishing sum identities plus vanishing of all mixed sums on
/// Sym^r H (x) Lambda^s_o E. At r = 0 the sums whose inner factor lowers the
/// Sym degree vanish identically and are reported as degenerate.
Report check_summe(const SpinorAlgebra& sa, const TangentFrame& frame, int r,
                   int s);

/// Clifford relation mu(X)mu(Y) + mu(Y)mu(X) = -2 g(X,Y) on the full spinor
/// fiber, for real frame vectors.
Report check_clifford_relation(const SpinorAlgebra& sa, const TangentFrame& frame);

/// The right inverses iota of the partial Clifford multiplications at level r
/// (iota maps into TM (x) S_r, stacked frame-major), and mu . iota = id.
struct IotaMaps {
  ExactMatrix iota_mp;  // S_{r+1} -> TM (x) S_r, right inverse of mu^+_-
  ExactMatrix iota_pm;  // S_{r-1} -> TM (x) S_r, right inverse of mu^-_+
  ExactMatrix iota_mm;  // S_r^+   -> TM (x) S_r, right inverse of mu^+_+
  ExactMatrix iota_pp;  // S_r^-   -> TM (x) S_r, right inverse of mu^-_-
};
IotaMaps build_iota(const SpinorAlgebra& sa, const TangentFrame& frame, int r);
Report check_iota(const SpinorAlgebra& sa, const TangentFrame& frame, int r);

/// Adjointness of the partial multiplications with respect to the hermitian
/// products, on the Killing fibers.
Report check_adjointness(const SpinorAlgebra& sa, const TangentFrame& frame);

/// The five endomorphism-valued 2-form identities used to compute the Killing
/// curvature, on spanning pairs of decomposable tangent vectors.
Report check_wedge_identities(const SpinorAlgebra& sa);

/// Positive definiteness of the hermitian Gram matrices on the spinor fibers.
Report check_gram_positivity(const SpinorAlgebra& sa);

}  // namespace qk
