#pragma once

// Brute-force reference implementations used as independent oracles for the
// operator matrices. These work on symbolic polyvectors/polynomials directly
// from the definitions and never touch the matrix builders under test.

#include <map>
#include <vector>

#include "qk/scalar.hpp"
#include "qk/spaces.hpp"

namespace oracle {

using qk::Rational;
using qk::Scalar;

// Polyvector: map from a sorted index tuple to its coefficient.
using Poly = std::map<std::vector<int>, Scalar>;

inline void add_term(Poly* p, std::vector<int> idx, const Scalar& coef) {
  if (coef.is_zero()) return;
  int sign = 1;
  for (size_t a = 0; a + 1 < idx.size(); ++a)
    for (size_t b = 0; b + 1 < idx.size() - a; ++b) {
      if (idx[b] == idx[b + 1]) return;
      if (idx[b] > idx[b + 1]) {
        std::swap(idx[b], idx[b + 1]);
        sign = -sign;
      }
    }
  (*p)[idx] += sign > 0 ? coef : -coef;
  if ((*p)[idx].is_zero()) p->erase(idx);
}

// e_i wedge w
inline Poly wedge(int i, const Poly& w) {
  Poly out;
  for (const auto& [idx, c] : w) {
    std::vector<int> t;
    t.push_back(i);
    t.insert(t.end(), idx.begin(), idx.end());
    add_term(&out, t, c);
  }
  return out;
}

// eta . w for a covector given by dual coordinates
inline Poly contract(const std::vector<Scalar>& eta, const Poly& w) {
  Poly out;
  for (const auto& [idx, c] : w)
    for (size_t t = 0; t < idx.size(); ++t) {
      if (eta[idx[t]].is_zero()) continue;
      std::vector<int> rest;
      for (size_t u = 0; u < idx.size(); ++u)
        if (u != t) rest.push_back(idx[u]);
      add_term(&out, rest, (t % 2 == 0 ? eta[idx[t]] : -eta[idx[t]]) * c);
    }
  return out;
}

inline Poly from_coords(const qk::EModel& em, int s, const std::vector<Scalar>& v) {
  Poly out;
  const auto& basis = em.lam_basis(s);
  for (size_t k = 0; k < basis.size(); ++k)
    if (!v[k].is_zero()) out[basis[k]] = v[k];
  return out;
}

inline std::vector<Scalar> to_coords(const qk::EModel& em, int s, const Poly& p) {
  std::vector<Scalar> v(em.lam_dim(s));
  for (const auto& [idx, c] : p) v[em.lam_index(s, idx)] = c;
  return v;
}

// Bivariate polynomial in h1, h2: exponent pair (a,b) -> coefficient.
using Poly2 = std::map<std::pair<int, int>, Scalar>;

inline Poly2 mul_h(int which, const Poly2& p) {
  Poly2 out;
  for (const auto& [e, c] : p)
    out[{e.first + (which == 0), e.second + (which == 1)}] += c;
  return out;
}

inline Poly2 contract_h(const std::vector<Scalar>& alpha, const Poly2& p) {
  Poly2 out;
  for (const auto& [e, c] : p) {
    if (e.first > 0 && !alpha[0].is_zero()) {
      out[{e.first - 1, e.second}] += Rational(e.first) * alpha[0] * c;
      if (out[{e.first - 1, e.second}].is_zero()) out.erase({e.first - 1, e.second});
    }
    if (e.second > 0 && !alpha[1].is_zero())
      out[{e.first, e.second - 1}] += Rational(e.second) * alpha[1] * c;
  }
  return out;
}

}  // namespace oracle
