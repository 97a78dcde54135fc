#pragma once

#include <map>
#include <string>
#include <vector>

#include "qk/matrix.hpp"
#include "qk/report.hpp"

namespace qk {

using Vec = std::vector<Scalar>;

long binom(int m, int k);

/// A symplectic vector space with compatible positive quaternionic structure:
/// the defining data for E = C^{2n} and H = C^2. J is antilinear, given by
/// J(v) = Jmat * conj(v).
struct SymplecticSpace {
  int dim = 0;
  ExactMatrix sigma;  // sigma(x,y) = x^T sigma y
  ExactMatrix Jmat;
  std::string name;

  Scalar sigma_eval(const Vec& x, const Vec& y) const;
  Vec sharp(const Vec& e) const;    // e -> sigma(e, .) in dual coordinates
  Vec flat(const Vec& eta) const;   // inverse of sharp
  Vec J(const Vec& v) const;
  Vec basis(int i) const;
  Vec dual_basis(int i) const;
};

SymplecticSpace build_E(int n);  // sigma(e_i, e_{n+i}) = 1, J e_i = e_{n+i}
SymplecticSpace build_H();

/// Structural checks on a symplectic space: J^2 = -1, compatibility,
/// positivity on basis and random rational vectors, nondegeneracy, and the
/// normalization sigma = 1/2 sum de_i wedge e_i^#.
Report check_symplectic(const SymplecticSpace& sp);

/// Exterior algebra of E with its primitive (Lefschetz) decomposition.
/// All operator builders return exact matrices between the indicated
/// exterior powers; primitive spaces are embedded in the ambient Lambda^s E
/// as kernel coordinates of the sigma-contraction.
class EModel {
 public:
  explicit EModel(int n);

  int n() const { return n_; }
  int dim() const { return 2 * n_; }
  const SymplecticSpace& space() const { return sp_; }

  int lam_dim(int s) const;
  const std::vector<std::vector<int>>& lam_basis(int s) const;
  int lam_index(int s, const std::vector<int>& idx) const;
  std::string lam_label(int s) const;
  std::string prim_label(int s) const;

  // Ambient operators on Lambda^s E.
  ExactMatrix wedge(const Vec& v, int s) const;          // -> Lambda^{s+1}
  ExactMatrix contract(const Vec& eta, int s) const;     // -> Lambda^{s-1}
  ExactMatrix wedge_LE(int s) const;                     // -> Lambda^{s+2}
  ExactMatrix lambda_contraction(int s) const;           // -> Lambda^{s-2}
  ExactMatrix deriv_action(const ExactMatrix& a, int s) const;  // End(E) derivation

  // Primitive subspaces Lambda^s_o E = ker(Lambda); dimension 0 outside 0..n.
  /// Basis of ker(Lambda) in ambient coordinates; rejects s outside 0..n
  /// (beyond the middle degree the primitive space is trivial).
  ExactMatrix primitive_basis(int s) const;
  int prim_dim(int s) const;
  const ExactMatrix& prim_embed(int s) const;   // lam_dim x prim_dim
  const ExactMatrix& prim_coords(int s) const;  // left inverse of prim_embed
  /// Coordinates of an ambient vector that lies in the primitive subspace;
  /// throws if it does not.
  Vec to_prim(int s, const Vec& ambient) const;

  // Operators restricted to primitive spaces.
  ExactMatrix contract_prim(const Vec& eta, int s) const;  // s -> s-1
  /// e wedge_o: s -> s+1 per the projection formula; rejects s >= n
  /// (the target space is trivial from there on).
  ExactMatrix wedge_circ(const Vec& e, int s) const;
  ExactMatrix deriv_action_prim(const ExactMatrix& a, int s) const;
  /// Hermitian Gram matrix of the primitive space, from (x,y) = sigma(x, Jy).
  ExactMatrix prim_gram(int s) const;

  // Cached per-basis-vector families (used by the dual-pair sums).
  const ExactMatrix& wedge_circ_basis(int i, int s) const;     // e_i wedge_o
  const ExactMatrix& contract_prim_dual(int i, int s) const;   // de_i contraction
  const ExactMatrix& contract_prim_sharp(int i, int s) const;  // e_i^# contraction

 private:
  // Internal variant: allows s = n with a 0-dimensional target.
  ExactMatrix wedge_circ_internal(const Vec& e, int s) const;
  friend ExactMatrix build_pr_tilde_K(const EModel&, int);
  friend Report check_kom1(const EModel&, int);
  friend class SpinorAlgebra;

  int n_;
  SymplecticSpace sp_;
  mutable std::map<int, std::vector<std::vector<int>>> bases_;
  mutable std::map<int, std::map<std::vector<int>, int>> index_;
  mutable std::map<int, ExactMatrix> prim_embed_, prim_coords_;
  mutable std::map<std::pair<int, int>, ExactMatrix> wc_basis_, cp_dual_, cp_sharp_;
};

/// Symmetric powers of H with the monomial basis h1^{r-k} h2^k, k = 0..r.
class HModel {
 public:
  HModel();
  const SymplecticSpace& space() const { return sp_; }

  static int sym_dim(int r) { return r < 0 ? 0 : r + 1; }
  static std::string sym_label(int r);

  ExactMatrix sym_mul(const Vec& h, int r) const;        // Sym^r -> Sym^{r+1}
  ExactMatrix contract(const Vec& alpha, int r) const;   // derivation, -> Sym^{r-1}
  ExactMatrix contract_circ(const Vec& alpha, int r) const;  // (1/r) contract
  ExactMatrix deriv_action(const ExactMatrix& a, int r) const;
  /// Hermitian Gram of Sym^r H under the multiplicative (permanent) extension.
  ExactMatrix sym_gram(int r) const;

 private:
  SymplecticSpace sp_;
};

// --- rep_spaces operations -------------------------------------------------

/// sl2 triple on Lambda^* E: returns L: Lambda^{s-2} -> Lambda^s,
/// Lambda: Lambda^s -> Lambda^{s-2}, and verifies H = [Lambda, L] = (n-s) id.
struct Sl2Triple {
  ExactMatrix L, Lambda, H;
};
Sl2Triple build_sl2_triple(const EModel& em, int s);
Report check_sl2(const EModel& em, int s);

/// Anticommutator relations of contraction and modified wedge on Lambda^s_o E.
Report check_kom1(const EModel& em, int s);
/// Commutator relations on Sym^r H.
Report check_kom2(const HModel& hm, int r);
/// The two-fold anticommutator consequence used by the projector
/// simplification, as matrices on Lambda^{s-1}_o E (2 <= s <= n).
Report check_operator_identity(const EModel& em, int s);
/// Structural facts about e wedge_o: contraction stability of primitives,
/// primitivity of the image, and the correction-free case.
Report check_primitive_projection(const EModel& em, int s);

/// The projector onto the Cartan summand K^s E inside E (x) Lambda^s_o E.
/// Index convention: (a, j) -> a * prim_dim + j (E factor major).
ExactMatrix build_pr_tilde_K(const EModel& em, int s);

/// Projector relations (two-by-two matrix identities) on H (x) H (x) Sym^r H.
Report check_projector_relations_H(const HModel& hm, int r);
/// Projector relations on E (x) E (x) Lambda^s_o E, including the simplified
/// closed form of pr_{-K} and the annihilation/idempotency of pr~_K.
Report check_projector_relations_E(const EModel& em, int s);

}  // namespace qk
