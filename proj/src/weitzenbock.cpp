#include "qk/weitzenbock.hpp"

#include <sstream>
#include <stdexcept>

namespace qk {

namespace {

Scalar S(const Rational& q) { return Scalar(q); }

void check_equal(Report* rep, const std::string& name, const ExactMatrix& a,
                 const ExactMatrix& b) {
  if (a == b) {
    rep->add(name, true);
    return;
  }
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) {
        std::ostringstream os;
        os << "entry (" << i << "," << j << "): " << a(i, j) << " vs " << b(i, j);
        rep->add(name, false, os.str());
        return;
      }
  rep->add(name, false, "shape mismatch");
}

}  // namespace

std::string slot_dictionary_description() {
  return "slot k = (H,E) = (k mod 2, k div 2); right slot values "
         "(-1/2 (D++)*D++, 1/2 D+-D-+, 1/2 D-+D+-, -1/2 (D--)*D--, -(T+)*T+, "
         "(T-)*T-); norm conversion N = (-c0/2, c1/2, c2/2, -c3/2, -c4, c5)";
}

WeitzenbockMatrices build_weitzenbock(int n, int r, int s) {
  if (n < 1 || r < 0 || s < 0 || s > n)
    throw std::invalid_argument("build_weitzenbock: (n, r, s) out of range");
  WeitzenbockMatrices w{n, r, s, ExactMatrix(2, 2), ExactMatrix(3, 3),
                        ExactMatrix(4, 4)};

  w.WH(0, 0) = 1;
  w.WH(0, 1) = S(-frac(r, r + 1));
  w.WH(1, 0) = r;
  w.WH(1, 1) = S(frac(r * (r + 2), r + 1));

  w.WE(0, 0) = S(frac(1, s + 1));
  w.WE(0, 1) = S(-frac(n - s + 2, (n - s + 1) * (2 * n - s + 3)));
  w.WE(0, 2) = 1;
  w.WE(1, 0) = S(-frac(s, s + 1));
  w.WE(1, 1) =
      S(frac((n - s + 2) * (2 * n - s + 2), (n - s + 1) * (2 * n - s + 3)));
  w.WE(1, 2) = 1;
  w.WE(2, 0) = S(-frac((n + 1) * s, n * (s + 1)));
  w.WE(2, 1) = S(-frac((n + 1) * (n - s) * (2 * n - s + 2),
                       n * (n - s + 1) * (2 * n - s + 3)));
  w.WE(2, 2) = S(frac(n - s, n));

  // The twistor coefficient matrix, entry by entry.
  const Rational a = frac(2 * n - s + 4, 2 * n - s + 3);
  const Rational b = frac(2 * n - s + 2, 2 * n - s + 3);
  const Rational rr = frac(r, r + 1);
  const Rational rp = frac(r * (r + 2), r + 1);
  w.Wtwist(0, 0) = S(a);
  w.Wtwist(0, 1) = S(-rr * a);
  w.Wtwist(0, 2) = 1;
  w.Wtwist(0, 3) = S(-rr);
  w.Wtwist(1, 0) = S(Rational(r) * a);
  w.Wtwist(1, 1) = S(rp * a);
  w.Wtwist(1, 2) = r;
  w.Wtwist(1, 3) = S(rp);
  w.Wtwist(2, 0) = S(-b);
  w.Wtwist(2, 1) = S(rr * b);
  w.Wtwist(2, 2) = 1;
  w.Wtwist(2, 3) = S(-rr);
  w.Wtwist(3, 0) = S(-Rational(r) * b);
  w.Wtwist(3, 1) = S(-rp * b);
  w.Wtwist(3, 2) = r;
  w.Wtwist(3, 3) = S(rp);
  return w;
}

ExactMatrix weitzenbock_6x6(int n, int r, int s) {
  const WeitzenbockMatrices w = build_weitzenbock(n, r, s);
  ExactMatrix m(6, 6);
  for (int L = 0; L < 6; ++L)
    for (int R = 0; R < 6; ++R)
      m(L, R) = w.WH(L % 2, R % 2) * w.WE(L / 2, R / 2);
  return m;
}

Report check_weitzenbock_matrices(int n, int r, int s) {
  Report rep{"Weitzenboeck matrices n=" + std::to_string(n) +
                 " r=" + std::to_string(r) + " s=" + std::to_string(s),
             {}};
  const WeitzenbockMatrices w = build_weitzenbock(n, r, s);

  rep.add("det WH = 2r", w.WH.determinant() == Scalar(2 * r));

  // W_twist is the Kronecker product of the E-side projector-relation matrix
  // with WH(r).
  ExactMatrix wf(2, 2);
  wf(0, 0) = S(frac(2 * n - s + 4, 2 * n - s + 3));
  wf(0, 1) = 1;
  wf(1, 0) = S(-frac(2 * n - s + 2, 2 * n - s + 3));
  wf(1, 1) = 1;
  check_equal(&rep, "W_twist = WF kron WH", w.Wtwist, wf.kron(w.WH));

  const ExactMatrix m = weitzenbock_6x6(n, r, s);
  bool shuffle_ok = true;
  for (int L = 0; L < 6 && shuffle_ok; ++L)
    for (int R = 0; R < 6; ++R)
      if (m(L, R) != w.WH(L % 2, R % 2) * w.WE(L / 2, R / 2)) {
        shuffle_ok = false;
        break;
      }
  rep.add("6x6 slot matrix consistent with WH, WE", shuffle_ok);
  return rep;
}

MinIdentityResult derive_min_identity(int n, int r) {
  if (r < 1 || r > n - 1)
    throw std::invalid_argument("derive_min_identity: needs 1 <= r <= n-1");
  const int s = n - r;
  const ExactMatrix m = weitzenbock_6x6(n, r, s);

  // Unknowns: the kappa-r, kappa-s and zero left slots; the nabla*nabla, C
  // and L slots must not enter a pure norm identity.
  const Rational slot_targets[6] = {
      -frac(r + 1, n - r + 1),                 // |D++psi|^2
      Rational(r + 2),                         // |D-+psi|^2
      frac((r + 2) * (n + r + 2), n + r + 3),  // |D+-psi|^2
      Rational(0),                             // |D--psi|^2
      Rational(-2 * (r + 1)),                  // |T+psi|^2
      Rational(0),                             // |T-psi|^2
  };
  const Rational conv[6] = {frac(-1, 2), frac(1, 2),   frac(1, 2),
                            frac(-1, 2), Rational(-1), Rational(1)};

  ExactMatrix a(7, 3), b(7, 1);
  for (int k = 0; k < 6; ++k) {
    a(k, 0) = S(conv[k]) * m(1, k);
    a(k, 1) = S(conv[k]) * m(2, k);
    a(k, 2) = S(conv[k]) * m(5, k);
    b(k, 0) = S(slot_targets[k]);
  }
  a(6, 0) = S(frac(r * (r + 2), n + 2));
  a(6, 1) = S(frac(s * (2 * n - s + 2), n * (n + 2)));
  a(6, 2) = 0;
  b(6, 0) = S(frac((r + 2) * (n + r + 2), n + 2));

  MinIdentityResult res;
  ExactMatrix sol(3, 1);
  try {
    sol = a.solve(b);
  } catch (const std::domain_error&) {
    return res;  // no valid row vector: transcription error
  }
  if (a * sol != b) return res;

  res.ok = true;
  res.u = {Rational(0), sol(0, 0).a(), sol(1, 0).a(),
           Rational(0), Rational(0),   sol(2, 0).a()};
  res.lhs_coeff = frac((r + 2) * (n + r + 2), n + 2);
  for (int k = 0; k < 6; ++k) {
    const Scalar c =
        S(res.u[1]) * m(1, k) + S(res.u[2]) * m(2, k) + S(res.u[5]) * m(5, k);
    res.norm_coeffs.push_back((S(conv[k]) * c).a());
  }
  return res;
}

Report check_min_identity(int n, int r) {
  Report rep{
      "key norm identity n=" + std::to_string(n) + " r=" + std::to_string(r), {}};
  const MinIdentityResult res = derive_min_identity(n, r);
  rep.add("row vector u exists [" + slot_dictionary_description() + "]", res.ok);
  if (!res.ok) return rep;
  const Rational expected[6] = {-frac(r + 1, n - r + 1),
                                Rational(r + 2),
                                frac((r + 2) * (n + r + 2), n + r + 3),
                                Rational(0),
                                Rational(-2 * (r + 1)),
                                Rational(0)};
  const char* names[6] = {"|D++psi|^2", "|D-+psi|^2", "|D+-psi|^2",
                          "|D--psi|^2", "|T+psi|^2",  "|T-psi|^2"};
  for (int k = 0; k < 6; ++k) {
    std::ostringstream os;
    os << "coefficient of " << names[k] << " = " << expected[k];
    rep.add(os.str(), res.norm_coeffs[static_cast<size_t>(k)] == expected[k]);
  }
  return rep;
}

LimitingSystem solve_limiting_system(int n) {
  if (n < 2) throw std::invalid_argument("solve_limiting_system: needs n >= 2");
  const ExactMatrix m = weitzenbock_6x6(n, 1, n - 1);

  // Rows 2,3,6 (slots 1,2,5). Known input: D+-D-+ psi1 = lambda^2 psi1;
  // unknowns x = (D--)*D-- and y = (T-)*T- eigenvalues, all per unit kappa.
  const Rational lam2 = frac(n + 3, 4 * (n + 2));
  ExactMatrix a(3, 2), b(3, 1);
  const int rows[3] = {1, 2, 5};
  const Rational lhs[3] = {frac(3, 4 * (n + 2)),
                           frac((n + 3) * (n - 1), 4 * n * (n + 2)), Rational(0)};
  for (int t = 0; t < 3; ++t) {
    const int L = rows[t];
    a(t, 0) = S(frac(-1, 2)) * m(L, 3);
    a(t, 1) = m(L, 5);
    b(t, 0) = S(lhs[t]) - S(lam2 / 2) * m(L, 1);
  }
  LimitingSystem out;
  ExactMatrix sol(2, 1);
  try {
    sol = a.solve(b);
  } catch (const std::domain_error&) {
    return out;
  }
  if (a * sol != b) return out;
  out.ok = true;
  out.dmm = sol(0, 0).a();
  out.tmt = sol(1, 0).a();
  return out;
}

Report check_limiting_system(int n) {
  Report rep{"limiting system n=" + std::to_string(n), {}};
  const ExactMatrix m = weitzenbock_6x6(n, 1, n - 1);

  ExactMatrix expected(3, 3);
  expected(0, 0) = S(frac(3, 2 * n));
  expected(0, 1) = S(-frac(9, 4 * (n + 4)));
  expected(0, 2) = S(frac(3, 2));
  expected(1, 0) = S(frac(n - 1, 2 * n));
  expected(1, 1) = S(-frac(3 * (n + 3), 4 * (n + 4)));
  expected(1, 2) = S(-frac(1, 2));
  expected(2, 0) = S(-frac(3 * (n - 1) * (n + 1), 2 * n * n));
  expected(2, 1) = S(-frac(3 * (n + 3) * (n + 1), 4 * n * (n + 4)));
  expected(2, 2) = S(frac(3, 2 * n));
  ExactMatrix got(3, 3);
  const int rows[3] = {1, 2, 5}, cols[3] = {1, 3, 5};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) got(i, j) = m(rows[i], cols[j]);
  check_equal(&rep, "3x3 system has the expected entries", got, expected);

  const LimitingSystem sol = solve_limiting_system(n);
  rep.add("system solvable", sol.ok);
  if (sol.ok) {
    rep.add("(D--)*D-- = kappa/2 (n+4)(n-1)/(n(n+2))",
            sol.dmm == frac((n + 4) * (n - 1), 2 * n * (n + 2)));
    rep.add("(T-)*T- = 0", sgn(sol.tmt) == 0);
  }
  return rep;
}

Report check_psi_minus_row(int n) {
  Report rep{"psi_minus row n=" + std::to_string(n), {}};
  if (n < 2) {
    rep.add_skipped("range", "needs n >= 2");
    return rep;
  }
  const ExactMatrix m = weitzenbock_6x6(n, 0, n - 2);

  // Row 3 (slot 2). At r=0 the H-raising columns drop out.
  rep.add("H-raising columns vanish at r=0",
          m(2, 1).is_zero() && m(2, 3).is_zero() && m(2, 5).is_zero());
  rep.add("coefficient of (D++)*D++ is (n-2)/(2(n-1))",
          S(frac(-1, 2)) * m(2, 0) == S(frac(n - 2, 2 * (n - 1))));
  rep.add("coefficient of D-+D+- is 2(n+4)/(3(n+5))",
          S(frac(1, 2)) * m(2, 2) == S(frac(2 * (n + 4), 3 * (n + 5))));

  // Substitute (D++)*D++ psi_- = kappa/2 (n+4)(n-1)/(n(n+2)) psi_- and
  // T+ psi_- = 0; the remaining slot must be forced to zero.
  const Rational dpp = frac((n + 4) * (n - 1), 2 * n * (n + 2));
  const Scalar residue =
      S(frac((n - 2) * (n + 4), 4 * n * (n + 2))) - m(2, 0) * S(-dpp / 2);
  rep.add("row forces (D+-)*D+- psi_- = 0", residue.is_zero());
  rep.add("forcing coefficient is nonzero", !m(2, 2).is_zero());
  return rep;
}

Report check_twistor_identity(int n, int r, int s) {
  Report rep{"twistor identity n=" + std::to_string(n) +
                 " r=" + std::to_string(r) + " s=" + std::to_string(s),
             {}};
  if (s == 1) {
    rep.add_skipped("identity trivial at s=1", "all four operators vanish");
    return rep;
  }
  if (s < 2 || s > n) {
    rep.add_skipped("degree range", "needs 2 <= s <= n");
    return rep;
  }
  const WeitzenbockMatrices w = build_weitzenbock(n, r, s);
  // Rows 1 and 4 of the twistor system carry zero left-hand slots; row 1,
  // with the 1/sqrt2 slot prefactors absorbed, is the operator identity.
  const Rational pref = frac(2 * n - s + 4, 2 * n - s + 3);
  rep.add("coefficient of T-D+- is (2n-s+4)/(2n-s+3)", w.Wtwist(0, 0) == S(pref));
  rep.add("coefficient of T+D-- is -r/(r+1) (2n-s+4)/(2n-s+3)",
          w.Wtwist(0, 1) == S(-frac(r, r + 1) * pref));
  rep.add("coefficient of theta-T+ is 1", w.Wtwist(0, 2) == Scalar(1));
  rep.add("coefficient of theta+T- is -r/(r+1)",
          w.Wtwist(0, 3) == S(-frac(r, r + 1)));
  // The companion zero row (row 4) scales the same pattern by the H-side
  // second projector row.
  rep.add("row 4 carries the second zero slot",
          w.Wtwist(3, 0) ==
                  S(-Rational(r) * frac(2 * n - s + 2, 2 * n - s + 3)) &&
              w.Wtwist(3, 2) == Scalar(r));
  return rep;
}

}  // namespace qk
