#include "qk/wolf.hpp"

#include <sstream>
#include <stdexcept>

namespace qk {

namespace {

Scalar S(const Rational& q) { return Scalar(q); }

// Left-multiplication matrix of a quaternion unit on (1,i,j,k) coordinates.
// comp: 0 = 1, 1 = i, 2 = j, 3 = k.
void quat_unit(int comp, int lq[4][4]) {
  static const int tables[4][4][4] = {
      // 1
      {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}},
      // i
      {{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}},
      // j
      {{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}},
      // k
      {{0, 0, 0, -1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}},
  };
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) lq[a][b] = tables[comp][a][b];
}

// Matrix with the real image of a quaternion unit at block (row, col) of an
// m x m quaternionic matrix.
ExactMatrix quat_entry(int m, int row, int col, int comp, int sign) {
  ExactMatrix out(4 * m, 4 * m);
  int lq[4][4];
  quat_unit(comp, lq);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      if (lq[a][b] != 0) out(4 * row + a, 4 * col + b) = sign * lq[a][b];
  return out;
}

// Complex unit (comp: 0 = 1, 1 = i) at entry (row, col) of an m x m complex
// matrix, realified to 2m x 2m.
ExactMatrix cx_entry(int m, int row, int col, int comp, int sign) {
  ExactMatrix out(2 * m, 2 * m);
  if (comp == 0) {
    out(2 * row, 2 * col) = sign;
    out(2 * row + 1, 2 * col + 1) = sign;
  } else {
    out(2 * row, 2 * col + 1) = -sign;
    out(2 * row + 1, 2 * col) = sign;
  }
  return out;
}

ExactMatrix so_entry(int m, int k, int l) {
  ExactMatrix out(m, m);
  out(k, l) = 1;
  out(l, k) = -1;
  return out;
}

std::vector<Scalar> vectorize(const ExactMatrix& m) {
  std::vector<Scalar> v(static_cast<size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v[static_cast<size_t>(i) * m.cols() + j] = m(i, j);
  return v;
}

// Builds structure constants and the Killing form from explicit matrix
// generators (a faithful real representation used only to compute brackets).
LieAlgebraModel from_generators(const std::string& name,
                                const std::vector<ExactMatrix>& gens) {
  LieAlgebraModel g;
  g.name = name;
  g.dim = static_cast<int>(gens.size());

  const int vd = gens[0].rows() * gens[0].cols();
  ExactMatrix v(vd, g.dim);
  for (int a = 0; a < g.dim; ++a) {
    const auto col = vectorize(gens[a]);
    for (int i = 0; i < vd; ++i) v(i, a) = col[i];
  }
  const ExactMatrix extract = v.left_inverse();

  g.bracket.assign(g.dim, std::vector<std::vector<Rational>>(
                              g.dim, std::vector<Rational>(g.dim)));
  for (int a = 0; a < g.dim; ++a)
    for (int b = a + 1; b < g.dim; ++b) {
      const ExactMatrix br = gens[a] * gens[b] - gens[b] * gens[a];
      const auto coords = extract.apply(vectorize(br));
      // membership: the bracket must lie in the span of the generators
      std::vector<Scalar> back(vd);
      for (int u = 0; u < g.dim; ++u) {
        if (coords[u].is_zero()) continue;
        const auto gu = vectorize(gens[u]);
        for (int i = 0; i < vd; ++i) Scalar::add_mul(back[i], coords[u], gu[i]);
      }
      if (back != vectorize(br))
        throw std::logic_error(name + ": bracket leaves the chosen basis span");
      for (int u = 0; u < g.dim; ++u) {
        if (!coords[u].is_rational())
          throw std::logic_error(name + ": non-rational structure constant");
        g.bracket[a][b][u] = coords[u].a();
        g.bracket[b][a][u] = -coords[u].a();
      }
    }

  // Killing form from ad-traces.
  std::vector<ExactMatrix> ads;
  ads.reserve(g.dim);
  for (int a = 0; a < g.dim; ++a) ads.push_back(g.ad(a));
  g.killing = ExactMatrix(g.dim, g.dim);
  for (int a = 0; a < g.dim; ++a)
    for (int b = a; b < g.dim; ++b) {
      Scalar tr;
      for (int u = 0; u < g.dim; ++u)
        for (int w = 0; w < g.dim; ++w) {
          if (ads[a](u, w).is_zero() || ads[b](w, u).is_zero()) continue;
          Scalar::add_mul(tr, ads[a](u, w), ads[b](w, u));
        }
      g.killing(a, b) = tr;
      g.killing(b, a) = tr;
    }
  return g;
}

int pair_index(int a, int b, int m) {
  // index of (a<b) among sorted pairs of 0..m-1, lexicographic
  return a * m - a * (a + 1) / 2 + (b - a - 1);
}

}  // namespace

ExactMatrix LieAlgebraModel::ad(int a) const {
  ExactMatrix m(dim, dim);
  for (int v = 0; v < dim; ++v)
    for (int u = 0; u < dim; ++u) {
      const Rational& c = bracket[a][v][u];
      if (sgn(c) != 0) m(u, v) = S(c);
    }
  return m;
}

std::vector<Rational> LieAlgebraModel::bracket_of(
    const std::vector<Rational>& x, const std::vector<Rational>& y) const {
  std::vector<Rational> out(dim);
  for (int a = 0; a < dim; ++a) {
    if (sgn(x[a]) == 0) continue;
    for (int b = 0; b < dim; ++b) {
      if (sgn(y[b]) == 0) continue;
      const Rational f = x[a] * y[b];
      for (int u = 0; u < dim; ++u) {
        if (sgn(bracket[a][b][u]) == 0) continue;
        out[u] += f * bracket[a][b][u];
      }
    }
  }
  return out;
}

Rational LieAlgebraModel::b_eval(const std::vector<Rational>& x,
                                 const std::vector<Rational>& y) const {
  Rational acc = 0;
  for (int a = 0; a < dim; ++a) {
    if (sgn(x[a]) == 0) continue;
    for (int b = 0; b < dim; ++b) {
      if (sgn(y[b]) == 0 || killing(a, b).is_zero()) continue;
      acc += x[a] * y[b] * killing(a, b).a();
    }
  }
  return acc;
}

const char* family_name(WolfFamily f) {
  switch (f) {
    case WolfFamily::HPn:
      return "HPn";
    case WolfFamily::GrC2:
      return "GrC2";
    default:
      return "GrR4";
  }
}

std::pair<LieAlgebraModel, CartanDecomposition> build_classical_wolf(WolfFamily f,
                                                                     int n) {
  if (n < 2)
    throw std::invalid_argument("build_classical_wolf: needs n >= 2");
  std::vector<ExactMatrix> gens;
  CartanDecomposition dec;
  auto push_ideal = [&](const std::string& nm) {
    dec.ideals.push_back({nm, {}});
  };
  auto add_k = [&](const ExactMatrix& g) {
    gens.push_back(g);
    const int idx = static_cast<int>(gens.size()) - 1;
    dec.k_idx.push_back(idx);
    dec.ideals.back().idx.push_back(idx);
  };
  auto add_p = [&](const ExactMatrix& g) {
    gens.push_back(g);
    dec.p_idx.push_back(static_cast<int>(gens.size()) - 1);
  };
  std::string name;

  if (f == WolfFamily::HPn) {
    const int m = n + 1;
    name = "sp(" + std::to_string(m) + ")";
    // quaternionic sp(1): the (0,0) imaginary slots
    push_ideal("sp(1)");
    for (int c = 1; c <= 3; ++c) add_k(quat_entry(m, 0, 0, c, 1));
    // sp(n): lower block
    push_ideal("sp(" + std::to_string(n) + ")");
    for (int k = 1; k < m; ++k)
      for (int c = 1; c <= 3; ++c) add_k(quat_entry(m, k, k, c, 1));
    for (int k = 1; k < m; ++k)
      for (int l = k + 1; l < m; ++l) {
        add_k(quat_entry(m, k, l, 0, 1) - quat_entry(m, l, k, 0, 1));
        for (int c = 1; c <= 3; ++c)
          add_k(quat_entry(m, k, l, c, 1) + quat_entry(m, l, k, c, 1));
      }
    // p: first row/column
    for (int l = 1; l < m; ++l) {
      add_p(quat_entry(m, 0, l, 0, 1) - quat_entry(m, l, 0, 0, 1));
      for (int c = 1; c <= 3; ++c)
        add_p(quat_entry(m, 0, l, c, 1) + quat_entry(m, l, 0, c, 1));
    }
  } else if (f == WolfFamily::GrC2) {
    const int m = n + 2;
    name = "su(" + std::to_string(m) + ")";
    // sp(1) = su(2) in the top block: I = i(E00 - E11), J = E01 - E10,
    // K = i(E01 + E10)
    push_ideal("sp(1)");
    add_k(cx_entry(m, 0, 0, 1, 1) - cx_entry(m, 1, 1, 1, 1));
    add_k(cx_entry(m, 0, 1, 0, 1) - cx_entry(m, 1, 0, 0, 1));
    add_k(cx_entry(m, 0, 1, 1, 1) + cx_entry(m, 1, 0, 1, 1));
    // su(n) lower block
    push_ideal("su(" + std::to_string(n) + ")");
    for (int k = 2; k < m - 1; ++k)
      add_k(cx_entry(m, k, k, 1, 1) - cx_entry(m, k + 1, k + 1, 1, 1));
    for (int k = 2; k < m; ++k)
      for (int l = k + 1; l < m; ++l) {
        add_k(cx_entry(m, k, l, 0, 1) - cx_entry(m, l, k, 0, 1));
        add_k(cx_entry(m, k, l, 1, 1) + cx_entry(m, l, k, 1, 1));
      }
    // center: i diag(n, n, -2, ..., -2)
    push_ideal("R");
    {
      ExactMatrix z(2 * m, 2 * m);
      z = z + Scalar(n) * cx_entry(m, 0, 0, 1, 1) + Scalar(n) * cx_entry(m, 1, 1, 1, 1);
      for (int k = 2; k < m; ++k) z = z - Scalar(2) * cx_entry(m, k, k, 1, 1);
      add_k(z);
    }
    // p: off-diagonal 2 x n blocks
    for (int a = 0; a < 2; ++a)
      for (int l = 2; l < m; ++l) {
        add_p(cx_entry(m, a, l, 0, 1) - cx_entry(m, l, a, 0, 1));
        add_p(cx_entry(m, a, l, 1, 1) + cx_entry(m, l, a, 1, 1));
      }
  } else {
    const int m = n + 4;
    name = "so(" + std::to_string(m) + ")";
    // so(4) = sp(1) (+) sp~(1): the two commuting triples with [I,J] = 2K.
    push_ideal("sp(1)");
    add_k(so_entry(m, 0, 1) + so_entry(m, 2, 3));
    add_k(so_entry(m, 0, 2) - so_entry(m, 1, 3));
    add_k(Scalar(-1) * (so_entry(m, 0, 3) + so_entry(m, 1, 2)));
    push_ideal("sp~(1)");
    add_k(so_entry(m, 0, 1) - so_entry(m, 2, 3));
    add_k(so_entry(m, 0, 2) + so_entry(m, 1, 3));
    add_k(so_entry(m, 0, 3) - so_entry(m, 1, 2));
    // so(n)
    push_ideal("so(" + std::to_string(n) + ")");
    for (int k = 4; k < m; ++k)
      for (int l = k + 1; l < m; ++l) add_k(so_entry(m, k, l));
    // p
    for (int k = 0; k < 4; ++k)
      for (int l = 4; l < m; ++l) add_p(so_entry(m, k, l));
  }

  dec.quaternionic = 0;
  LieAlgebraModel g = from_generators(name, gens);
  return {std::move(g), std::move(dec)};
}

Report check_lie_model(const LieAlgebraModel& g) {
  Report rep{"Lie algebra model " + g.name, {}};
  const int d = g.dim;

  bool anti = true;
  for (int a = 0; a < d && anti; ++a)
    for (int b = 0; b < d; ++b)
      for (int u = 0; u < d; ++u)
        if (g.bracket[a][b][u] != -g.bracket[b][a][u]) {
          anti = false;
          break;
        }
  rep.add("antisymmetry of structure constants", anti);

  bool jacobi = true;
  std::string witness;
  for (int a = 0; a < d && jacobi; ++a)
    for (int b = a + 1; b < d && jacobi; ++b)
      for (int c = b + 1; c < d; ++c) {
        std::vector<Rational> acc(d);
        const int t[3][3] = {{a, b, c}, {b, c, a}, {c, a, b}};
        for (const auto& abc : t) {
          const auto inner = g.bracket[abc[1]][abc[2]];
          for (int u = 0; u < d; ++u) {
            if (sgn(inner[u]) == 0) continue;
            for (int w = 0; w < d; ++w)
              acc[w] += inner[u] * g.bracket[abc[0]][u][w];
          }
        }
        for (int w = 0; w < d; ++w)
          if (sgn(acc[w]) != 0) {
            jacobi = false;
            witness = "(a,b,c)=(" + std::to_string(a) + "," + std::to_string(b) +
                      "," + std::to_string(c) + ")";
            break;
          }
      }
  rep.add("Jacobi identity", jacobi, witness);

  // Killing form recomputed from ad-traces.
  bool killing_ok = true;
  for (int a = 0; a < d && killing_ok; ++a) {
    const ExactMatrix ada = g.ad(a);
    for (int b = a; b < d; ++b) {
      const ExactMatrix adb = g.ad(b);
      Scalar tr;
      for (int u = 0; u < d; ++u)
        for (int w = 0; w < d; ++w) {
          if (ada(u, w).is_zero() || adb(w, u).is_zero()) continue;
          Scalar::add_mul(tr, ada(u, w), adb(w, u));
        }
      if (tr != g.killing(a, b)) {
        killing_ok = false;
        break;
      }
    }
  }
  rep.add("Killing form matches ad-traces", killing_ok);

  // ad-invariance spot check: B([x,y],z) = B(x,[y,z]) on coordinate triples.
  bool inv = true;
  for (int a = 0; a < std::min(d, 6) && inv; ++a)
    for (int b = 0; b < std::min(d, 6); ++b)
      for (int c = 0; c < std::min(d, 6); ++c) {
        std::vector<Rational> xa(d), yb(d), zc(d);
        xa[a] = 1;
        yb[b] = 1;
        zc[c] = 1;
        if (g.b_eval(g.bracket_of(xa, yb), zc) !=
            g.b_eval(xa, g.bracket_of(yb, zc))) {
          inv = false;
          break;
        }
      }
  rep.add("B is ad-invariant (spot check)", inv);
  return rep;
}

Report check_cartan(const LieAlgebraModel& g, const CartanDecomposition& dec) {
  Report rep{"Cartan decomposition of " + g.name, {}};
  const int d = g.dim;
  std::vector<int> side(d, -1);  // 0 = k, 1 = p
  for (int i : dec.k_idx) side[i] = 0;
  for (int i : dec.p_idx) side[i] = 1;

  auto supported_in = [&](const std::vector<Rational>& v, int which) {
    for (int u = 0; u < d; ++u)
      if (sgn(v[u]) != 0 && side[u] != which) return false;
    return true;
  };

  bool grading = true;
  for (int a = 0; a < d && grading; ++a)
    for (int b = 0; b < d; ++b) {
      const int target = (side[a] == side[b]) ? 0 : 1;
      if (!supported_in(g.bracket[a][b], target)) {
        grading = false;
        break;
      }
    }
  rep.add("[k,k] in k, [k,p] in p, [p,p] in k", grading);

  // Ideal structure of k.
  bool ideals_ok = true;
  std::vector<int> ideal_of(d, -1);
  for (size_t t = 0; t < dec.ideals.size(); ++t)
    for (int i : dec.ideals[t].idx) ideal_of[i] = static_cast<int>(t);
  for (int a : dec.k_idx)
    for (int b : dec.k_idx) {
      const auto& v = g.bracket[a][b];
      for (int u = 0; u < d; ++u) {
        if (sgn(v[u]) == 0) continue;
        if (ideal_of[a] == ideal_of[b]) {
          if (ideal_of[u] != ideal_of[a]) ideals_ok = false;
        } else {
          ideals_ok = false;  // distinct ideals must commute
        }
      }
    }
  rep.add("k splits into commuting ideals", ideals_ok);

  // Partial Killing forms.
  auto partial = [&](int a, int b, int which) {
    const ExactMatrix ada = g.ad(a), adb = g.ad(b);
    Scalar tr;
    for (int u = 0; u < d; ++u) {
      if (side[u] != which) continue;
      for (int w = 0; w < d; ++w) {
        if (ada(u, w).is_zero() || adb(w, u).is_zero()) continue;
        Scalar::add_mul(tr, ada(u, w), adb(w, u));
      }
    }
    return tr;
  };

  bool bp_ok = true;
  for (size_t i = 0; i < dec.p_idx.size() && bp_ok; ++i)
    for (size_t j = i; j < dec.p_idx.size(); ++j) {
      const int a = dec.p_idx[i], b = dec.p_idx[j];
      const Scalar bk = partial(a, b, 0), bp = partial(a, b, 1);
      if (bk != bp || bk + bp != g.killing(a, b)) {
        bp_ok = false;
        break;
      }
    }
  rep.add("B_k = B_p = B/2 on p x p", bp_ok);

  bool cross_ok = true;
  for (int a : dec.k_idx)
    for (int b : dec.p_idx) {
      if (!partial(a, b, 0).is_zero() || !partial(a, b, 1).is_zero() ||
          !g.killing(a, b).is_zero())
        cross_ok = false;
    }
  rep.add("partial forms vanish on k x p", cross_ok);

  bool orth = true;
  for (int a : dec.k_idx)
    for (int b : dec.k_idx)
      if (ideal_of[a] != ideal_of[b] && !g.killing(a, b).is_zero()) orth = false;
  rep.add("ideals are B-orthogonal", orth);
  return rep;
}

std::vector<Rational> compute_l_constants(const LieAlgebraModel& g,
                                          const CartanDecomposition& dec) {
  const int d = g.dim;
  std::vector<int> side(d, -1);
  for (int i : dec.k_idx) side[i] = 0;
  for (int i : dec.p_idx) side[i] = 1;

  auto bk = [&](int a, int b) {
    const ExactMatrix ada = g.ad(a), adb = g.ad(b);
    Scalar tr;
    for (int u = 0; u < d; ++u) {
      if (side[u] != 0) continue;
      for (int w = 0; w < d; ++w) {
        if (ada(u, w).is_zero() || adb(w, u).is_zero()) continue;
        Scalar::add_mul(tr, ada(u, w), adb(w, u));
      }
    }
    return tr;
  };

  std::vector<Rational> ls;
  for (const auto& ideal : dec.ideals) {
    Rational l = 0;
    bool found = false;
    for (int a : ideal.idx) {
      if (!g.killing(a, a).is_zero()) {
        l = bk(a, a).a() / g.killing(a, a).a();
        found = true;
        break;
      }
    }
    if (!found) throw std::domain_error("compute_l: B degenerate on ideal");
    // cross-check proportionality on all pairs
    for (int a : ideal.idx)
      for (int b : ideal.idx)
        if (bk(a, b) != S(l) * g.killing(a, b))
          throw std::domain_error(
              "compute_l: partial form not proportional on ideal " + ideal.name);
    ls.push_back(l);
  }
  return ls;
}

std::vector<Rational> expected_l_classical(WolfFamily f, int n) {
  switch (f) {
    case WolfFamily::HPn:
      return {frac(2, n + 2), frac(n + 1, n + 2)};
    case WolfFamily::GrC2:
      return {frac(2, n + 2), frac(n, n + 2), Rational(0)};
    default:
      return {frac(2, n + 2), frac(2, n + 2), frac(n - 2, n + 2)};
  }
}

Report check_curvature_endomorphism(const LieAlgebraModel& g,
                                    const CartanDecomposition& dec,
                                    const std::vector<Rational>& expected_l) {
  Report rep{"curvature endomorphism of " + g.name, {}};
  const int d = g.dim;
  const int np = static_cast<int>(dec.p_idx.size());
  const int n2 = np * (np - 1) / 2;

  const std::vector<Rational> ls = compute_l_constants(g, dec);
  {
    bool ok = ls.size() == expected_l.size();
    for (size_t i = 0; ok && i < ls.size(); ++i) ok = ls[i] == expected_l[i];
    std::ostringstream os;
    for (const auto& l : ls) os << l << " ";
    rep.add("l constants match (" + os.str() + ")", ok);
  }

  // B restricted to p and its inverse.
  ExactMatrix bp(np, np);
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < np; ++j) bp(i, j) = g.killing(dec.p_idx[i], dec.p_idx[j]);
  const ExactMatrix bpinv = bp.inverse();

  // Gram of B on Lambda^2 p.
  ExactMatrix g2(n2, n2);
  for (int a = 0; a < np; ++a)
    for (int b = a + 1; b < np; ++b)
      for (int c = 0; c < np; ++c)
        for (int e = c + 1; e < np; ++e)
          g2(pair_index(a, b, np), pair_index(c, e, np)) =
              bp(a, c) * bp(b, e) - bp(a, e) * bp(b, c);

  // Delta: k -> Lambda^2 p.
  const int nk = static_cast<int>(dec.k_idx.size());
  ExactMatrix delta(n2, nk);
  for (int t = 0; t < nk; ++t) {
    std::vector<Rational> kvec(d);
    kvec[dec.k_idx[t]] = 1;
    // coefficients B([K, E_i], E_j)
    ExactMatrix coef(np, np);
    for (int i = 0; i < np; ++i) {
      std::vector<Rational> ei(d);
      ei[dec.p_idx[i]] = 1;
      const auto br = g.bracket_of(kvec, ei);
      for (int j = 0; j < np; ++j) {
        std::vector<Rational> ej(d);
        ej[dec.p_idx[j]] = 1;
        coef(i, j) = S(g.b_eval(br, ej));
      }
    }
    // Delta K = sum_{i<j} coef_ij dE_i^b ^ dE_j^b with dE_i^b = sum_u binv(u,i) E_u
    for (int i = 0; i < np; ++i)
      for (int j = i + 1; j < np; ++j) {
        if (coef(i, j).is_zero()) continue;
        for (int u = 0; u < np; ++u)
          for (int w = u + 1; w < np; ++w) {
            const Scalar c =
                bpinv(u, i) * bpinv(w, j) - bpinv(w, i) * bpinv(u, j);
            if (c.is_zero()) continue;
            delta(pair_index(u, w, np), t) += coef(i, j) * c;
          }
      }
  }

  // Adjointness: B(Delta K, X ^ Y) = B(K, [X,Y]).
  {
    bool ok = true;
    for (int t = 0; t < nk && ok; ++t) {
      std::vector<Rational> kvec(d);
      kvec[dec.k_idx[t]] = 1;
      for (int a = 0; a < np && ok; ++a)
        for (int b = a + 1; b < np; ++b) {
          Scalar lhs;
          for (int u = 0; u < n2; ++u) {
            if (delta(u, t).is_zero() || g2(u, pair_index(a, b, np)).is_zero())
              continue;
            Scalar::add_mul(lhs, delta(u, t), g2(u, pair_index(a, b, np)));
          }
          std::vector<Rational> ea(d), eb(d);
          ea[dec.p_idx[a]] = 1;
          eb[dec.p_idx[b]] = 1;
          const Scalar rhs = S(g.b_eval(kvec, g.bracket_of(ea, eb)));
          if (lhs != rhs) {
            ok = false;
            break;
          }
        }
    }
    rep.add("cobracket adjoint to the bracket", ok);
  }

  // bracket map Lambda^2 p -> k coordinates.
  ExactMatrix brmap(nk, n2);
  for (int a = 0; a < np; ++a)
    for (int b = a + 1; b < np; ++b) {
      std::vector<Rational> ea(d), eb(d);
      ea[dec.p_idx[a]] = 1;
      eb[dec.p_idx[b]] = 1;
      const auto br = g.bracket_of(ea, eb);
      for (int t = 0; t < nk; ++t) brmap(t, pair_index(a, b, np)) = S(br[dec.k_idx[t]]);
    }

  // [,] . Delta = (L - id)/2 on k.
  {
    bool ok = true;
    const ExactMatrix comp = brmap * delta;
    std::vector<int> ideal_of_col(nk);
    int col = 0;
    for (size_t t = 0; t < dec.ideals.size(); ++t)
      for (size_t u = 0; u < dec.ideals[t].idx.size(); ++u)
        ideal_of_col[col++] = static_cast<int>(t);
    for (int c = 0; c < nk && ok; ++c) {
      const Rational expect = (ls[static_cast<size_t>(ideal_of_col[c])] - 1) / 2;
      for (int r0 = 0; r0 < nk; ++r0) {
        const Scalar want = (r0 == c) ? S(expect) : Scalar(0);
        if (comp(r0, c) != want) {
          ok = false;
          break;
        }
      }
    }
    rep.add("bracket . Delta = (L - id)/2", ok);
  }

  // rho = -Delta . bracket.
  const ExactMatrix rho = Scalar(-1) * (delta * brmap);

  // Eigenvalues on Delta k_i.
  {
    bool ok = true;
    int col = 0;
    for (size_t t = 0; t < dec.ideals.size() && ok; ++t) {
      const Rational ev = (1 - ls[t]) / 2;
      for (size_t u = 0; u < dec.ideals[t].idx.size(); ++u, ++col) {
        ExactMatrix dk(n2, 1);
        for (int i = 0; i < n2; ++i) dk(i, 0) = delta(i, col);
        if (rho * dk != S(ev) * dk) {
          ok = false;
          break;
        }
      }
    }
    rep.add("rho = (1 - l_i)/2 on Delta k_i", ok);
  }

  // rho vanishes on the B-orthogonal complement of Delta k.
  {
    const ExactMatrix complement = (delta.transpose() * g2).kernel_basis();
    rep.add("rho vanishes on the complement of Delta k",
            (rho * complement).is_zero());
    rep.add("complement dimension", complement.cols() == n2 - nk);
  }

  // Scalar curvature: 2 tr rho = dim p / 2.
  {
    Scalar tr;
    for (int i = 0; i < n2; ++i) tr += rho(i, i);
    rep.add("2 tr rho = dim p / 2", Scalar(2) * tr == Scalar(frac(np, 2)));
  }

  // Ricci: sum_i B(R_{E_i, X} Y, dE_i^b) = -B_p(X, Y).
  {
    bool ok = true;
    for (int a = 0; a < np && ok; ++a)
      for (int b = 0; b < np; ++b) {
        std::vector<Rational> xa(d), yb(d);
        xa[dec.p_idx[a]] = 1;
        yb[dec.p_idx[b]] = 1;
        Scalar acc;
        for (int i = 0; i < np; ++i) {
          std::vector<Rational> ei(d);
          ei[dec.p_idx[i]] = 1;
          const auto w = g.bracket_of(g.bracket_of(ei, xa), yb);  // [[E_i,X],Y]
          // B(-w, dE_i^b) = -(coordinate of w along E_i in the B-dual basis)
          Scalar c;
          for (int u = 0; u < np; ++u) {
            if (sgn(w[dec.p_idx[u]]) == 0) continue;
            // B(E_u, dE_i^b) = delta_ui
            if (u == i) c += S(w[dec.p_idx[u]]);
          }
          acc -= c;
        }
        // -B_p(X,Y) = -B(X,Y)/2
        if (acc != S(-g.killing(dec.p_idx[a], dec.p_idx[b]).a() / 2)) {
          ok = false;
          break;
        }
      }
    rep.add("Ricci contraction equals -B_p", ok);
  }

  // Definition consistency: B(rho(X^Y), Z^W) = B(R_{X,Y} Z, W).
  {
    bool ok = true;
    const ExactMatrix lhs = g2 * rho;
    for (int a = 0; a < np && ok; ++a)
      for (int b = a + 1; b < np && ok; ++b) {
        std::vector<Rational> ea(d), eb(d);
        ea[dec.p_idx[a]] = 1;
        eb[dec.p_idx[b]] = 1;
        const auto k = g.bracket_of(ea, eb);
        for (int c = 0; c < np && ok; ++c) {
          std::vector<Rational> ec(d);
          ec[dec.p_idx[c]] = 1;
          const auto w = g.bracket_of(k, ec);  // [[E_a,E_b],E_c]
          for (int e = c + 1; e < np; ++e) {
            std::vector<Rational> ee(d);
            ee[dec.p_idx[e]] = 1;
            const Scalar rhs = S(-g.b_eval(w, ee));
            if (lhs(pair_index(c, e, np), pair_index(a, b, np)) != rhs) {
              ok = false;
              break;
            }
          }
        }
      }
    rep.add("B(rho(X^Y), Z^W) = B(R_{X,Y}Z, W)", ok);
  }
  return rep;
}

Report check_sp1_constant(const LieAlgebraModel& g, const CartanDecomposition& dec) {
  Report rep{"sp(1) Killing constant of " + g.name, {}};
  const auto& sp1 = dec.ideals[static_cast<size_t>(dec.quaternionic)];
  if (sp1.idx.size() != 3) {
    rep.add("quaternionic ideal is three-dimensional", false);
    return rep;
  }
  const int d = g.dim;
  const int n = static_cast<int>(dec.p_idx.size()) / 4;
  const int I = sp1.idx[0], J = sp1.idx[1], K = sp1.idx[2];

  auto unit = [&](int a) {
    std::vector<Rational> v(d);
    v[a] = 1;
    return v;
  };
  auto is_scaled_unit = [&](const std::vector<Rational>& v, int a, long scale) {
    for (int u = 0; u < d; ++u)
      if (v[u] != ((u == a) ? Rational(scale) : Rational(0))) return false;
    return true;
  };
  rep.add("[I,J] = 2K", is_scaled_unit(g.bracket_of(unit(I), unit(J)), K, 2));
  rep.add("[J,K] = 2I", is_scaled_unit(g.bracket_of(unit(J), unit(K)), I, 2));
  rep.add("[K,I] = 2J", is_scaled_unit(g.bracket_of(unit(K), unit(I)), J, 2));

  // ad_I is a complex structure on p.
  {
    const ExactMatrix adi = g.ad(I);
    const ExactMatrix sq = adi * adi;
    bool ok = true;
    for (int a : dec.p_idx)
      for (int b : dec.p_idx)
        if (sq(a, b) != Scalar(a == b ? -1 : 0)) ok = false;
    rep.add("ad_I^2 = -id on p", ok);
  }

  rep.add("B(I,I) = -8 - 4n", g.killing(I, I) == Scalar(-8 - 4 * n));
  // Partial trace over the sp(1) ideal itself equals -8.
  {
    const ExactMatrix adi = g.ad(I);
    Scalar tr;
    for (int u : sp1.idx)
      for (int w : sp1.idx) {
        if (adi(u, w).is_zero() || adi(w, u).is_zero()) continue;
        Scalar::add_mul(tr, adi(u, w), adi(w, u));
      }
    rep.add("B_{sp(1)}(I,I) = -8", tr == Scalar(-8));
  }
  rep.add("l_{sp(1)} = 2/(n+2)",
          compute_l_constants(g, dec)[static_cast<size_t>(dec.quaternionic)] ==
              frac(2, n + 2));
  return rep;
}

// --- the eight-entry table ----------------------------------------------------------

std::vector<WolfEntry> wolf_table(int n_classical) {
  const int n = n_classical;
  std::vector<WolfEntry> t;
  t.push_back({"Sp(n+1)/Sp(1)Sp(n)",
               n,
               {{"sp(1)", 3, true, frac(2, n + 2)},
                {"sp(n)", n * (2 * n + 1), true, frac(n + 1, n + 2)}},
               0});
  t.push_back({"SU(n+2)/S(U(2)U(n))",
               n,
               {{"sp(1)", 3, true, frac(2, n + 2)},
                {"su(n)", n * n - 1, true, frac(n, n + 2)},
                {"R", 1, true, Rational(0)}},
               0});
  t.push_back({"SO(n+4)/SO(4)SO(n)",
               n,
               {{"sp(1)", 3, true, frac(2, n + 2)},
                {"sp~(1)", 3, true, frac(2, n + 2)},
                {"so(n)", n * (n - 1) / 2, true, frac(n - 2, n + 2)}},
               0});
  t.push_back({"G2/SO(4)",
               2,
               {{"sp(1)", 3, true, frac(1, 2)}, {"sp~(1)", 3, false, Rational(0)}},
               0});
  t.push_back({"F4/Sp(1)Sp(3)",
               7,
               {{"sp(1)", 3, true, frac(2, 9)}, {"sp(3)", 21, false, Rational(0)}},
               0});
  t.push_back({"E6/Sp(1)SU(6)",
               10,
               {{"sp(1)", 3, true, frac(1, 6)}, {"su(6)", 35, false, Rational(0)}},
               0});
  t.push_back({"E7/Sp(1)Spin(12)",
               16,
               {{"sp(1)", 3, true, frac(1, 9)}, {"so(12)", 66, false, Rational(0)}},
               0});
  t.push_back({"E8/Sp(1)E7",
               28,
               {{"sp(1)", 3, true, frac(1, 15)}, {"e7", 133, false, Rational(0)}},
               0});
  return t;
}

Report check_trace_identity(WolfEntry* entry) {
  Report rep{"trace identity for " + entry->name, {}};
  int unknown = -1;
  Rational known_sum = 0;
  for (size_t i = 0; i < entry->ideals.size(); ++i) {
    if (!entry->ideals[i].known) {
      if (unknown >= 0) {
        rep.add("at most one unknown constant", false);
        return rep;
      }
      unknown = static_cast<int>(i);
    } else {
      known_sum += Rational(entry->ideals[i].dim) * (1 - entry->ideals[i].l);
    }
  }
  const Rational target = Rational(2 * entry->n);
  if (unknown < 0) {
    rep.add("sum dim_i (1 - l_i) = 2n", known_sum == target);
    return rep;
  }
  const Rational residue = target - known_sum;
  auto& ideal = entry->ideals[static_cast<size_t>(unknown)];
  const Rational l = 1 - residue / Rational(ideal.dim);
  ideal.l = l;
  ideal.known = true;
  std::ostringstream os;
  os << "solved l_{" << ideal.name << "} = " << l;
  rep.add(os.str(), true);
  return rep;
}

std::vector<Rational> rho_eigenvalues(const WolfEntry& entry) {
  std::vector<Rational> out;
  for (const auto& ideal : entry.ideals) out.push_back((1 - ideal.l) / 2);
  return out;
}

Rational rho_hyper_eigenvalue(const WolfEntry& entry, int ideal) {
  return (1 - entry.ideals[static_cast<size_t>(ideal)].l) / 2 -
         frac(1, 2 * (entry.n + 2));
}

bool is_regular(const WolfEntry& entry) {
  for (size_t i = 0; i < entry.ideals.size(); ++i) {
    if (static_cast<int>(i) == entry.quaternionic) continue;
    if (sgn(rho_hyper_eigenvalue(entry, static_cast<int>(i))) == 0) return false;
  }
  return true;
}

Report check_regularity(const WolfEntry& entry, bool expect_regular) {
  Report rep{"regularity of " + entry.name, {}};
  for (const auto& ideal : entry.ideals)
    if (!ideal.known) {
      rep.add("all Killing constants known", false);
      return rep;
    }
  const bool reg = is_regular(entry);
  rep.add(std::string("verdict ") + (reg ? "REGULAR" : "DEGENERATE"),
          reg == expect_regular);
  return rep;
}

}  // namespace qk
