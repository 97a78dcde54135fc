#include "qk/clifford.hpp"

#include <sstream>
#include <stdexcept>

namespace qk {

int mu_shift_r(MuKind k) {
  switch (k) {
    case MuKind::PlusMinus:
    case MuKind::PlusPlus:
      return 1;
    default:
      return -1;
  }
}

int mu_shift_s(MuKind k) {
  switch (k) {
    case MuKind::MinusPlus:
    case MuKind::PlusPlus:
      return 1;
    default:
      return -1;
  }
}

const char* mu_name(MuKind k) {
  switch (k) {
    case MuKind::PlusMinus:
      return "mu+-";
    case MuKind::MinusPlus:
      return "mu-+";
    case MuKind::PlusPlus:
      return "mu++";
    default:
      return "mu--";
  }
}

SpinorAlgebra::SpinorAlgebra(int n) : n_(n), em_(n), hm_() {}

int SpinorAlgebra::fiber_dim(int r, int s) const {
  return HModel::sym_dim(r) * em_.prim_dim(s);
}

std::string SpinorAlgebra::fiber_label(int r, int s) const {
  return HModel::sym_label(r) + "(x)" + em_.prim_label(s);
}

long SpinorAlgebra::rank_S(int r) const {
  return (r + 1) * (binom(2 * n_, n_ - r) - binom(2 * n_, n_ - r - 2));
}

Vec SpinorAlgebra::tangent_basis(int alpha, int i) const {
  Vec x(tangent_dim());
  x[alpha * 2 * n_ + i] = 1;
  return x;
}

Vec SpinorAlgebra::tangent_conj(const Vec& x) const {
  // (J (x) J) applied to sum x_{ai} h_a (x) e_i.
  Vec out(tangent_dim());
  const auto& jh = hm_.space().Jmat;
  const auto& je = em_.space().Jmat;
  for (int a = 0; a < 2; ++a)
    for (int i = 0; i < 2 * n_; ++i) {
      const Scalar& c = x[a * 2 * n_ + i];
      if (c.is_zero()) continue;
      const Scalar cc = c.conj();
      for (int b = 0; b < 2; ++b) {
        if (jh(b, a).is_zero()) continue;
        for (int j = 0; j < 2 * n_; ++j) {
          if (je(j, i).is_zero()) continue;
          const Scalar t = jh(b, a) * je(j, i);
          Scalar::add_mul(out[b * 2 * n_ + j], t, cc);
        }
      }
    }
  return out;
}

Scalar SpinorAlgebra::metric(const Vec& x, const Vec& y) const {
  Scalar acc;
  const auto& sh = hm_.space().sigma;
  const auto& se = em_.space().sigma;
  for (int a = 0; a < 2; ++a)
    for (int i = 0; i < 2 * n_; ++i) {
      const Scalar& xc = x[a * 2 * n_ + i];
      if (xc.is_zero()) continue;
      for (int b = 0; b < 2; ++b) {
        if (sh(a, b).is_zero()) continue;
        for (int j = 0; j < 2 * n_; ++j) {
          const Scalar& yc = y[b * 2 * n_ + j];
          if (yc.is_zero() || se(i, j).is_zero()) continue;
          const Scalar t = xc * yc;
          Scalar::add_mul(acc, t, sh(a, b) * se(i, j));
        }
      }
    }
  return acc;
}

const ExactMatrix& SpinorAlgebra::mu_basis(MuKind k, int alpha, int i, int r,
                                           int s) const {
  const auto key = std::make_tuple(static_cast<int>(k), alpha, i, r, s);
  auto it = mu_cache_.find(key);
  if (it != mu_cache_.end()) return it->second;

  const Vec h = hm_.space().basis(alpha);
  const Vec hs = hm_.space().sharp(h);
  ExactMatrix hpart, epart;
  switch (k) {
    case MuKind::PlusMinus:
      hpart = hm_.sym_mul(h, r);
      epart = em_.contract_prim_sharp(i, s);
      break;
    case MuKind::MinusPlus:
      hpart = hm_.contract_circ(hs, r);
      epart = em_.wedge_circ_basis(i, s);
      break;
    case MuKind::PlusPlus:
      hpart = hm_.sym_mul(h, r);
      epart = em_.wedge_circ_basis(i, s);
      break;
    case MuKind::MinusMinus:
      hpart = hm_.contract_circ(hs, r);
      epart = em_.contract_prim_sharp(i, s);
      break;
  }
  const ExactMatrix m = Scalar::sqrt2() * hpart.kron(epart);
  return mu_cache_.emplace(key, m).first->second;
}

ExactMatrix SpinorAlgebra::mu(MuKind k, const Vec& x, int r, int s) const {
  ExactMatrix out(fiber_dim(r + mu_shift_r(k), s + mu_shift_s(k)), fiber_dim(r, s),
                  fiber_label(r + mu_shift_r(k), s + mu_shift_s(k)),
                  fiber_label(r, s));
  for (int a = 0; a < 2; ++a)
    for (int i = 0; i < 2 * n_; ++i) {
      const Scalar& c = x[a * 2 * n_ + i];
      if (c.is_zero()) continue;
      out = out + c * mu_basis(k, a, i, r, s);
    }
  return out;
}

ExactMatrix SpinorAlgebra::mu_checked(MuKind k, const Vec& x, int r, int s) const {
  if (r < 0 || s < 0 || s > n_)
    throw std::invalid_argument("mu: source degrees out of range");
  const int rt = r + mu_shift_r(k), st = s + mu_shift_s(k);
  if (rt < 0 || st < 0 || st > n_)
    throw std::invalid_argument(std::string(mu_name(k)) +
                                ": target degrees out of range");
  return mu(k, x, r, s);
}

ExactMatrix SpinorAlgebra::frame_sum(MuKind k1, MuKind k2,
                                     const std::vector<Vec>& frame, int r,
                                     int s) const {
  const int rm = r + mu_shift_r(k2), sm = s + mu_shift_s(k2);
  ExactMatrix acc(fiber_dim(rm + mu_shift_r(k1), sm + mu_shift_s(k1)),
                  fiber_dim(r, s),
                  fiber_label(rm + mu_shift_r(k1), sm + mu_shift_s(k1)),
                  fiber_label(r, s));
  for (const Vec& x : frame) acc = acc + mu(k1, x, rm, sm) * mu(k2, x, r, s);
  return acc;
}

int SpinorAlgebra::full_dim() const {
  int d = 0;
  for (int r = 0; r <= n_; ++r) d += fiber_dim(r, n_ - r);
  return d;
}

ExactMatrix SpinorAlgebra::mu_full(const Vec& x) const {
  const int d = full_dim();
  ExactMatrix out(d, d);
  std::vector<int> offset(n_ + 2, 0);
  for (int r = 0; r <= n_; ++r) offset[r + 1] = offset[r] + fiber_dim(r, n_ - r);
  for (int r = 0; r <= n_; ++r) {
    for (const MuKind k : {MuKind::PlusMinus, MuKind::MinusPlus}) {
      const int rt = r + mu_shift_r(k);
      if (rt < 0 || rt > n_) continue;
      const ExactMatrix blk = mu(k, x, r, n_ - r);
      for (int i = 0; i < blk.rows(); ++i)
        for (int j = 0; j < blk.cols(); ++j) {
          if (blk(i, j).is_zero()) continue;
          out(offset[rt] + i, offset[r] + j) += blk(i, j);
        }
    }
  }
  return out;
}

ExactMatrix SpinorAlgebra::fiber_gram(int r, int s) const {
  return hm_.sym_gram(r).kron(em_.prim_gram(s));
}

ExactMatrix SpinorAlgebra::sym2E_endo(int i, int j) const {
  return sym2E_endo(em_.space().basis(i), em_.space().basis(j));
}

ExactMatrix SpinorAlgebra::sym2E_endo(const Vec& u, const Vec& w) const {
  const int d = 2 * n_;
  ExactMatrix a(d, d, em_.space().name, em_.space().name);
  for (int g = 0; g < d; ++g) {
    const Scalar su = em_.space().sigma_eval(u, em_.space().basis(g));
    const Scalar sw = em_.space().sigma_eval(w, em_.space().basis(g));
    for (int t = 0; t < d; ++t) {
      if (!su.is_zero() && !w[t].is_zero()) a(t, g) += su * w[t];
      if (!sw.is_zero() && !u[t].is_zero()) a(t, g) += sw * u[t];
    }
  }
  return a;
}

ExactMatrix SpinorAlgebra::sym2H_endo(int a, int b) const {
  return sym2H_endo(hm_.space().basis(a), hm_.space().basis(b));
}

ExactMatrix SpinorAlgebra::sym2H_endo(const Vec& u, const Vec& w) const {
  ExactMatrix m(2, 2, "H", "H");
  for (int g = 0; g < 2; ++g) {
    const Scalar su = hm_.space().sigma_eval(u, hm_.space().basis(g));
    const Scalar sw = hm_.space().sigma_eval(w, hm_.space().basis(g));
    for (int t = 0; t < 2; ++t) {
      if (!su.is_zero() && !w[t].is_zero()) m(t, g) += su * w[t];
      if (!sw.is_zero() && !u[t].is_zero()) m(t, g) += sw * u[t];
    }
  }
  return m;
}

// --- frames --------------------------------------------------------------------

namespace {

// The invariant tensor sum_{a,i} (dh_a^b (x) de_i^b) (x) (h_a (x) e_i) as a
// matrix T[u][v] on H (x) E coordinates; the frame's completeness tensor must
// reproduce it (up to the recorded sign).
ExactMatrix completeness_reference(const SpinorAlgebra& sa) {
  const int n = sa.n(), d = 4 * n;
  ExactMatrix t(d, d);
  const auto& hsp = sa.H().space();
  const auto& esp = sa.E().space();
  for (int a = 0; a < 2; ++a) {
    const Vec hb = hsp.flat(hsp.dual_basis(a));
    for (int i = 0; i < 2 * n; ++i) {
      const Vec eb = esp.flat(esp.dual_basis(i));
      for (int b = 0; b < 2; ++b) {
        if (hb[b].is_zero()) continue;
        for (int j = 0; j < 2 * n; ++j) {
          if (eb[j].is_zero()) continue;
          t(b * 2 * n + j, a * 2 * n + i) += hb[b] * eb[j];
        }
      }
    }
  }
  return t;
}

ExactMatrix completeness_of(const SpinorAlgebra& sa, const std::vector<Vec>& frame) {
  const int d = sa.tangent_dim();
  ExactMatrix t(d, d);
  for (const Vec& x : frame)
    for (int u = 0; u < d; ++u) {
      if (x[u].is_zero()) continue;
      for (int v = 0; v < d; ++v) {
        if (x[v].is_zero()) continue;
        Scalar::add_mul(t(u, v), x[u], x[v]);
      }
    }
  return t;
}

int calibrate_sign(const SpinorAlgebra& sa, const std::vector<Vec>& frame) {
  const ExactMatrix got = completeness_of(sa, frame);
  const ExactMatrix ref = completeness_reference(sa);
  if (got == ref) return 1;
  if (got == Scalar(-1) * ref) return -1;
  return 0;
}

}  // namespace

TangentFrame build_frame(const SpinorAlgebra& sa) {
  const int n = sa.n();
  const Scalar inv_sqrt2 = Scalar::rational(1, 2) * Scalar::sqrt2();
  const Scalar i_inv_sqrt2 = Scalar::i() * inv_sqrt2;
  TangentFrame fr;
  for (int i = 0; i < n; ++i) {
    Vec x0(4 * n), x1(4 * n), x2(4 * n), x3(4 * n);
    const int a0 = 0, a1 = 2 * n;
    x0[a0 + i] = inv_sqrt2;
    x0[a1 + n + i] = inv_sqrt2;
    x1[a0 + i] = i_inv_sqrt2;
    x1[a1 + n + i] = -i_inv_sqrt2;
    x2[a0 + n + i] = inv_sqrt2;
    x2[a1 + i] = -inv_sqrt2;
    x3[a0 + n + i] = i_inv_sqrt2;
    x3[a1 + i] = i_inv_sqrt2;
    fr.vectors.push_back(x0);
    fr.vectors.push_back(x1);
    fr.vectors.push_back(x2);
    fr.vectors.push_back(x3);
  }
  fr.completeness_sign = calibrate_sign(sa, fr.vectors);
  if (fr.completeness_sign == 0)
    throw std::logic_error("build_frame: completeness tensor matches neither sign");
  return fr;
}

TangentFrame build_frame_rotated(const SpinorAlgebra& sa) {
  // Rational rotation (3/5, 4/5) inside each quaternionic block: preserves
  // reality, orthonormality and the completeness tensor.
  TangentFrame fr = build_frame(sa);
  const Scalar c = Scalar::rational(3, 5), s = Scalar::rational(4, 5);
  for (size_t b = 0; b + 3 < fr.vectors.size(); b += 4) {
    const Vec v0 = fr.vectors[b], v1 = fr.vectors[b + 1];
    const Vec v2 = fr.vectors[b + 2], v3 = fr.vectors[b + 3];
    for (size_t t = 0; t < v0.size(); ++t) {
      fr.vectors[b][t] = c * v0[t] + s * v1[t];
      fr.vectors[b + 1][t] = c * v1[t] - s * v0[t];
      fr.vectors[b + 2][t] = c * v2[t] - s * v3[t];
      fr.vectors[b + 3][t] = c * v3[t] + s * v2[t];
    }
  }
  fr.completeness_sign = calibrate_sign(sa, fr.vectors);
  if (fr.completeness_sign == 0)
    throw std::logic_error("rotated frame lost the completeness tensor");
  return fr;
}

Report check_frame(const SpinorAlgebra& sa, const TangentFrame& frame) {
  Report rep{"tangent frame n=" + std::to_string(sa.n()), {}};
  rep.add("frame has 4n vectors",
          static_cast<int>(frame.vectors.size()) == sa.tangent_dim());

  bool real = true;
  for (const Vec& x : frame.vectors)
    if (sa.tangent_conj(x) != x) real = false;
  rep.add("(J(x)J)-reality of frame vectors", real);

  bool ortho = true;
  for (size_t a = 0; a < frame.vectors.size() && ortho; ++a)
    for (size_t b = 0; b < frame.vectors.size(); ++b) {
      if (sa.metric(frame.vectors[a], frame.vectors[b]) != Scalar(a == b ? 1 : 0)) {
        ortho = false;
        break;
      }
    }
  rep.add("g(X_a, X_b) = delta_ab", ortho);

  rep.add("completeness tensor matches invariant form (sign " +
              std::to_string(frame.completeness_sign) + ")",
          frame.completeness_sign == 1);
  return rep;
}

// --- sum identities --------------------------------------------------------------

Report check_summe(const SpinorAlgebra& sa, const TangentFrame& frame, int r,
                   int s) {
  const int n = sa.n();
  Report rep{"partial Clifford sums n=" + std::to_string(n) +
                 " r=" + std::to_string(r) + " s=" + std::to_string(s),
             {}};
  if (r < 0 || s < 0 || s > n) {
    rep.add_skipped("degree range", "fiber is trivial");
    return rep;
  }
  const int p = sa.fiber_dim(r, s);
  const Rational num = frac((2 * n - s + 2) * (n - s), n - s + 1);

  struct Expected {
    MuKind outer, inner;
    Rational value;
    bool inner_lowers_r;
  };
  const std::vector<Expected> diagonal = {
      {MuKind::PlusPlus, MuKind::MinusMinus, Rational(2 * s), true},
      {MuKind::PlusMinus, MuKind::MinusPlus, Rational(-2) * num, true},
      {MuKind::MinusPlus, MuKind::PlusMinus, Rational(-2) * frac(s * (r + 2), r + 1),
       false},
      {MuKind::MinusMinus, MuKind::PlusPlus, Rational(2) * num * frac(r + 2, r + 1),
       false},
  };

  const MuKind kinds[] = {MuKind::PlusMinus, MuKind::MinusPlus, MuKind::PlusPlus,
                          MuKind::MinusMinus};
  for (const MuKind k1 : kinds)
    for (const MuKind k2 : kinds) {
      const ExactMatrix sum = sa.frame_sum(k1, k2, frame.vectors, r, s);
      const std::string name =
          std::string("sum ") + mu_name(k1) + " " + mu_name(k2);
      const Expected* diag = nullptr;
      for (const auto& e : diagonal)
        if (e.outer == k1 && e.inner == k2) diag = &e;
      if (diag == nullptr) {
        rep.add(name + " vanishes", sum.is_zero());
        continue;
      }
      if (r == 0 && diag->inner_lowers_r) {
        // The inner factor kills Sym^0; the stated constant needs r >= 1.
        rep.add(name + " (degenerate at r=0)", sum.is_zero());
        continue;
      }
      ExactMatrix expect = Scalar(diag->value) * ExactMatrix::identity(p);
      expect.with_labels(sa.fiber_label(r, s), sa.fiber_label(r, s));
      rep.add(name + " = (" + Scalar(diag->value).str() + ") id", sum == expect);
    }
  return rep;
}

Report check_clifford_relation(const SpinorAlgebra& sa, const TangentFrame& frame) {
  Report rep{"Clifford relation n=" + std::to_string(sa.n()), {}};
  const int d = sa.full_dim();
  rep.add("total spinor dimension = 2^{2n}", d == (1 << (2 * sa.n())));
  bool ok = true;
  std::string witness;
  std::vector<ExactMatrix> mus;
  mus.reserve(frame.vectors.size());
  for (const Vec& x : frame.vectors) mus.push_back(sa.mu_full(x));
  for (size_t a = 0; a < mus.size() && ok; ++a)
    for (size_t b = a; b < mus.size(); ++b) {
      const ExactMatrix anti = mus[a] * mus[b] + mus[b] * mus[a];
      const Scalar g = sa.metric(frame.vectors[a], frame.vectors[b]);
      if (anti != (Scalar(-2) * g) * ExactMatrix::identity(d)) {
        ok = false;
        witness =
            "frame pair (" + std::to_string(a) + "," + std::to_string(b) + ")";
        break;
      }
    }
  rep.add("mu(X)mu(Y) + mu(Y)mu(X) = -2 g(X,Y)", ok, witness);
  return rep;
}

// --- right inverses ---------------------------------------------------------------

namespace {

// c * sum_a X_a (x) mu_k(X_a) phi as a stacked (4n * fiber) x source matrix.
ExactMatrix stack_iota(const SpinorAlgebra& sa, const TangentFrame& frame,
                       MuKind k, const Rational& coef, int r_src, int s_src) {
  const int rows_per = sa.fiber_dim(r_src + mu_shift_r(k), s_src + mu_shift_s(k));
  const int cols = sa.fiber_dim(r_src, s_src);
  ExactMatrix out(static_cast<int>(frame.vectors.size()) * rows_per, cols);
  for (size_t a = 0; a < frame.vectors.size(); ++a) {
    const ExactMatrix blk = sa.mu(k, frame.vectors[a], r_src, s_src);
    for (int i = 0; i < rows_per; ++i)
      for (int j = 0; j < cols; ++j) {
        if (blk(i, j).is_zero()) continue;
        out(static_cast<int>(a) * rows_per + i, j) = Scalar(coef) * blk(i, j);
      }
  }
  return out;
}

// mu_k read off TM (x) S_{(r,s)} in the same frame-major stacking.
ExactMatrix frame_mu_row(const SpinorAlgebra& sa, const TangentFrame& frame,
                         MuKind k, int r, int s) {
  const int cols_per = sa.fiber_dim(r, s);
  const int rows = sa.fiber_dim(r + mu_shift_r(k), s + mu_shift_s(k));
  ExactMatrix out(rows, static_cast<int>(frame.vectors.size()) * cols_per);
  for (size_t a = 0; a < frame.vectors.size(); ++a) {
    const ExactMatrix blk = sa.mu(k, frame.vectors[a], r, s);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols_per; ++j) {
        if (blk(i, j).is_zero()) continue;
        out(i, static_cast<int>(a) * cols_per + j) = blk(i, j);
      }
  }
  return out;
}

}  // namespace

IotaMaps build_iota(const SpinorAlgebra& sa, const TangentFrame& frame, int r) {
  const int n = sa.n(), s = n - r;
  IotaMaps io;
  io.iota_mp = stack_iota(sa, frame, MuKind::MinusPlus,
                          -frac(r + 2, 2 * (n + r + 3) * (r + 1)), r + 1, s - 1);
  io.iota_pm = stack_iota(sa, frame, MuKind::PlusMinus,
                          -frac(r, 2 * (n - r + 1) * (r + 1)), r - 1, s + 1);
  io.iota_mm = stack_iota(sa, frame, MuKind::MinusMinus, frac(1, 2 * (n - r + 1)),
                          r + 1, s + 1);
  io.iota_pp = stack_iota(sa, frame, MuKind::PlusPlus,
                          frac(r * (r + 2), 2 * (n + r + 3) * (r + 1) * (r + 1)),
                          r - 1, s - 1);
  return io;
}

Report check_iota(const SpinorAlgebra& sa, const TangentFrame& frame, int r) {
  const int n = sa.n(), s = n - r;
  Report rep{
      "right inverses at r=" + std::to_string(r) + ", n=" + std::to_string(n), {}};
  if (r < 0 || r > n) {
    rep.add_skipped("degree range", "S_r is trivial");
    return rep;
  }
  const IotaMaps io = build_iota(sa, frame, r);
  struct Case {
    const char* name;
    const ExactMatrix* iota;
    MuKind mu;
    int r_src, s_src;
  };
  const Case cases[] = {
      {"mu+- . iota-+ = id on S_{r+1}", &io.iota_mp, MuKind::PlusMinus, r + 1,
       s - 1},
      {"mu-+ . iota+- = id on S_{r-1}", &io.iota_pm, MuKind::MinusPlus, r - 1,
       s + 1},
      {"mu++ . iota-- = id on S_r^+", &io.iota_mm, MuKind::PlusPlus, r + 1, s + 1},
      {"mu-- . iota++ = id on S_r^-", &io.iota_pp, MuKind::MinusMinus, r - 1,
       s - 1},
  };
  for (const auto& c : cases) {
    const int dim = sa.fiber_dim(c.r_src, c.s_src);
    if (dim == 0) {
      rep.add_skipped(c.name, "source fiber is trivial");
      continue;
    }
    const ExactMatrix comp = frame_mu_row(sa, frame, c.mu, r, s) * *c.iota;
    rep.add(c.name, comp == ExactMatrix::identity(dim));
  }
  return rep;
}

// --- adjointness and Gram positivity ----------------------------------------------

namespace {

bool positive_definite(ExactMatrix g) {
  const int m = g.rows();
  for (int k = 0; k < m; ++k) {
    const Scalar d = g(k, k);
    if (!d.is_real() || d.sign_real() <= 0) return false;
    const Scalar inv = d.inverse();
    for (int i = k + 1; i < m; ++i) {
      if (g(i, k).is_zero()) continue;
      const Scalar f = g(i, k) * inv;
      for (int j = k + 1; j < m; ++j) {
        Scalar t = g(i, j);
        Scalar::add_mul(t, -f, g(k, j));
        g(i, j) = t;
      }
    }
  }
  return true;
}

}  // namespace

Report check_gram_positivity(const SpinorAlgebra& sa) {
  Report rep{"hermitian Gram positivity n=" + std::to_string(sa.n()), {}};
  for (int r = 0; r <= sa.n(); ++r) {
    const int s = sa.n() - r;
    const ExactMatrix g = sa.fiber_gram(r, s);
    rep.add("Gram hermitian on " + sa.fiber_label(r, s), g == g.adjoint());
    rep.add("Gram positive definite on " + sa.fiber_label(r, s),
            positive_definite(g));
  }
  return rep;
}

Report check_adjointness(const SpinorAlgebra& sa, const TangentFrame& frame) {
  const int n = sa.n();
  Report rep{"mu adjointness n=" + std::to_string(n), {}};
  ExactMatrix g0 = sa.fiber_gram(0, n);
  ExactMatrix g1 = sa.fiber_gram(1, n - 1);
  ExactMatrix g2 = sa.fiber_gram(0, n - 2);
  g0.with_labels("", "");
  g1.with_labels("", "");
  g2.with_labels("", "");

  std::vector<Vec> tangents = frame.vectors;
  for (int a = 0; a < 2; ++a)
    for (int i = 0; i < 2 * n; ++i) tangents.push_back(sa.tangent_basis(a, i));

  bool ok1 = true, ok2 = true;
  std::string w1, w2;
  for (size_t t = 0; t < tangents.size(); ++t) {
    const Vec& x = tangents[t];
    const Vec xc = sa.tangent_conj(x);
    // (mu-+(X) psi1, psi0) = -(psi1, mu+-(conj X) psi0)
    ExactMatrix lhs1 = sa.mu(MuKind::MinusPlus, x, 1, n - 1).transpose() * g0;
    ExactMatrix rhs1 =
        Scalar(-1) * (g1 * sa.mu(MuKind::PlusMinus, xc, 0, n).conjugate());
    lhs1.with_labels("", "");
    rhs1.with_labels("", "");
    if (ok1 && lhs1 != rhs1) {
      ok1 = false;
      w1 = "tangent #" + std::to_string(t);
    }
    // (mu++(X) psi-, psi1) = (psi-, mu--(conj X) psi1)
    ExactMatrix lhs2 = sa.mu(MuKind::PlusPlus, x, 0, n - 2).transpose() * g1;
    ExactMatrix rhs2 = g2 * sa.mu(MuKind::MinusMinus, xc, 1, n - 1).conjugate();
    lhs2.with_labels("", "");
    rhs2.with_labels("", "");
    if (ok2 && lhs2 != rhs2) {
      ok2 = false;
      w2 = "tangent #" + std::to_string(t);
    }
  }
  rep.add("(mu-+(X)psi1, psi0) = -(psi1, mu+-(X~)psi0)", ok1, w1);
  rep.add("(mu++(X)psi-, psi1) = (psi-, mu--(X~)psi1)", ok2, w2);
  return rep;
}

// --- curvature wedge identities -----------------------------------------------------

Report check_wedge_identities(const SpinorAlgebra& sa) {
  const int n = sa.n();
  Report rep{"curvature wedge identities n=" + std::to_string(n), {}};
  if (n < 2) {
    rep.add_skipped("dimension", "needs n >= 2");
    return rep;
  }

  struct DecPair {
    Vec h1, e1, h2, e2;
  };
  std::vector<DecPair> pairs;
  const auto& hsp = sa.H().space();
  const auto& esp = sa.E().space();
  for (int a = 0; a < 2; ++a)
    for (int i = 0; i < 2 * n; ++i)
      for (int b = 0; b < 2; ++b)
        for (int j = 0; j < 2 * n; ++j)
          pairs.push_back({hsp.basis(a), esp.basis(i), hsp.basis(b), esp.basis(j)});
  Rng rng(1234);
  for (int t = 0; t < 10; ++t)
    pairs.push_back({rng.rational_vector(2), rng.rational_vector(2 * n),
                     rng.rational_vector(2), rng.rational_vector(2 * n)});

  auto tangent_of = [&](const Vec& h, const Vec& e) {
    Vec x(4 * n);
    for (int a = 0; a < 2; ++a)
      for (int i = 0; i < 2 * n; ++i)
        if (!h[a].is_zero() && !e[i].is_zero()) x[a * 2 * n + i] = h[a] * e[i];
    return x;
  };

  bool ok[5] = {true, true, true, true, true};
  std::string wit[5];
  for (size_t t = 0; t < pairs.size(); ++t) {
    const auto& pr = pairs[t];
    const Vec x = tangent_of(pr.h1, pr.e1), y = tangent_of(pr.h2, pr.e2);
    const Scalar sh = hsp.sigma_eval(pr.h1, pr.h2);
    const Scalar se = esp.sigma_eval(pr.e1, pr.e2);
    auto record = [&](int idx, bool pass) {
      if (ok[idx] && !pass) {
        ok[idx] = false;
        wit[idx] = "pair #" + std::to_string(t);
      }
    };

    const ExactMatrix w_mm_pm =
        sa.mu(MuKind::MinusMinus, x, 1, n - 1) * sa.mu(MuKind::PlusMinus, y, 0, n) -
        sa.mu(MuKind::MinusMinus, y, 1, n - 1) * sa.mu(MuKind::PlusMinus, x, 0, n);
    record(0, w_mm_pm.is_zero());

    const ExactMatrix w_mp_pp =
        sa.mu(MuKind::MinusPlus, x, 1, n - 1) * sa.mu(MuKind::PlusPlus, y, 0, n - 2) -
        sa.mu(MuKind::MinusPlus, y, 1, n - 1) * sa.mu(MuKind::PlusPlus, x, 0, n - 2);
    record(1, w_mp_pp.is_zero());

    {
      const ExactMatrix w =
          sa.mu(MuKind::MinusPlus, x, 1, n - 1) * sa.mu(MuKind::PlusMinus, y, 0, n) -
          sa.mu(MuKind::MinusPlus, y, 1, n - 1) * sa.mu(MuKind::PlusMinus, x, 0, n);
      ExactMatrix re = sh * sa.E().deriv_action_prim(sa.sym2E_endo(pr.e1, pr.e2), n);
      ExactMatrix lhs = w;
      lhs.with_labels("", "");
      re.with_labels("", "");
      record(2, lhs == Scalar(2) * re);
    }
    {
      const ExactMatrix w = sa.mu(MuKind::MinusMinus, x, 1, n - 1) *
                                sa.mu(MuKind::PlusPlus, y, 0, n - 2) -
                            sa.mu(MuKind::MinusMinus, y, 1, n - 1) *
                                sa.mu(MuKind::PlusPlus, x, 0, n - 2);
      ExactMatrix re =
          sh * sa.E().deriv_action_prim(sa.sym2E_endo(pr.e1, pr.e2), n - 2);
      ExactMatrix lhs = w;
      lhs.with_labels("", "");
      re.with_labels("", "");
      record(3, lhs == Scalar(frac(-4, 3)) * re);
    }
    {
      const ExactMatrix w1 =
          sa.mu(MuKind::PlusMinus, x, 0, n) * sa.mu(MuKind::MinusPlus, y, 1, n - 1) -
          sa.mu(MuKind::PlusMinus, y, 0, n) * sa.mu(MuKind::MinusPlus, x, 1, n - 1);
      const ExactMatrix w2 = sa.mu(MuKind::PlusPlus, x, 0, n - 2) *
                                 sa.mu(MuKind::MinusMinus, y, 1, n - 1) -
                             sa.mu(MuKind::PlusPlus, y, 0, n - 2) *
                                 sa.mu(MuKind::MinusMinus, x, 1, n - 1);
      const int pdim = sa.E().prim_dim(n - 1);
      ExactMatrix rh =
          se * sa.sym2H_endo(pr.h1, pr.h2).kron(ExactMatrix::identity(pdim));
      ExactMatrix re = sh * ExactMatrix::identity(2).kron(sa.E().deriv_action_prim(
                                sa.sym2E_endo(pr.e1, pr.e2), n - 1));
      ExactMatrix lhs = w1 - Scalar(frac(3, 2)) * w2;
      lhs.with_labels("", "");
      rh.with_labels("", "");
      re.with_labels("", "");
      record(4, lhs == Scalar(2) * (rh + re));
    }
  }
  rep.add("(mu-- ^ mu+-) = 0", ok[0], wit[0]);
  rep.add("(mu-+ ^ mu++) = 0", ok[1], wit[1]);
  rep.add("(mu-+ ^ mu+-) = 2 R^E", ok[2], wit[2]);
  rep.add("(mu-- ^ mu++) = -4/3 R^E", ok[3], wit[3]);
  rep.add("(mu+- ^ mu-+ - 3/2 mu++ ^ mu--) = 2(R^H + R^E)", ok[4], wit[4]);
  return rep;
}

}  // namespace qk
