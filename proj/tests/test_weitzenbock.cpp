#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qk/weitzenbock.hpp"

using namespace qk;

namespace {

void require_pass(const Report& rep) {
  INFO(rep.title, ": ", rep.first_failure());
  CHECK(rep.pass());
}

}  // namespace

TEST_CASE("matrix entries") {
  // WH(1) = [[1, -1/2], [1, 3/2]]
  const auto w1 = build_weitzenbock(2, 1, 1);
  CHECK(w1.WH(0, 0) == Scalar(1));
  CHECK(w1.WH(0, 1) == Scalar(frac(-1, 2)));
  CHECK(w1.WH(1, 0) == Scalar(1));
  CHECK(w1.WH(1, 1) == Scalar(frac(3, 2)));
  // WE(1) at n=2: first row (1/2, -1/4, 1), by substituting into the entry
  // formulas by hand.
  CHECK(w1.WE(0, 0) == Scalar(frac(1, 2)));
  CHECK(w1.WE(0, 1) == Scalar(frac(-1, 4)));
  CHECK(w1.WE(0, 2) == Scalar(1));
  // WH(0) collapses.
  const auto w0 = build_weitzenbock(2, 0, 1);
  CHECK(w0.WH(0, 0) == Scalar(1));
  CHECK(w0.WH(0, 1) == Scalar(0));
  CHECK(w0.WH(1, 0) == Scalar(0));
  CHECK(w0.WH(1, 1) == Scalar(0));

  // Kronecker product entry: (WH(1) kron WE(1))(0,0) = 1 * 1/2 at n=2.
  CHECK(w1.WH.kron(w1.WE)(0, 0) == Scalar(frac(1, 2)));

  for (int n = 2; n <= 6; ++n)
    for (int r = 0; r <= 4; ++r)
      for (int s = 2; s <= n; ++s) require_pass(check_weitzenbock_matrices(n, r, s));

  CHECK_THROWS_AS(build_weitzenbock(2, 0, 3), std::invalid_argument);
}

TEST_CASE("key norm identity") {
  // (n, r) = (3, 1): coefficients (-2/3, 3, 3*6/7, -4 on T+, zeros).
  const MinIdentityResult res = derive_min_identity(3, 1);
  REQUIRE(res.ok);
  CHECK(res.norm_coeffs[0] == frac(-2, 3));
  CHECK(res.norm_coeffs[1] == Rational(3));
  CHECK(res.norm_coeffs[2] == frac(18, 7));
  CHECK(res.norm_coeffs[3] == Rational(0));
  CHECK(res.norm_coeffs[4] == Rational(-4));
  CHECK(res.norm_coeffs[5] == Rational(0));
  CHECK(res.lhs_coeff == frac(3 * 6, 5));

  CHECK(derive_min_identity(4, 2).ok);

  // Linearity: scaling u scales all slot outputs (uniqueness up to the
  // kappa normalization).
  const ExactMatrix m = weitzenbock_6x6(3, 1, 2);
  for (int k = 0; k < 6; ++k) {
    Scalar c, c2;
    for (int L : {1, 2, 5}) {
      c += Scalar(res.u[static_cast<size_t>(L)]) * m(L, k);
      c2 += Scalar(2 * res.u[static_cast<size_t>(L)]) * m(L, k);
    }
    CHECK(c2 == Scalar(2) * c);
  }

  for (int n = 2; n <= 6; ++n)
    for (int r = 1; r <= n - 1; ++r) require_pass(check_min_identity(n, r));
}

TEST_CASE("limiting system") {
  // n=2: (D--)*D-- = 3 kappa / 8.
  const LimitingSystem s2 = solve_limiting_system(2);
  REQUIRE(s2.ok);
  CHECK(s2.dmm == frac(3, 8));
  CHECK(sgn(s2.tmt) == 0);

  // n=3: entry (1,1) = 3/(2n) = 1/2.
  const ExactMatrix m3 = weitzenbock_6x6(3, 1, 2);
  CHECK(m3(1, 1) == Scalar(frac(1, 2)));

  for (int n = 2; n <= 8; ++n) require_pass(check_limiting_system(n));
}

TEST_CASE("psi_minus row") {
  // n=3: left side coefficient kappa/4 * 7/15.
  CHECK(frac((3 - 2) * (3 + 4), 4 * 3 * (3 + 2)) == frac(7, 60));
  for (int n = 2; n <= 8; ++n) require_pass(check_psi_minus_row(n));
}

TEST_CASE("twistor corollary") {
  // (n,r,s) = (3,1,2): prefactor (2n-s+4)/(2n-s+3) = 8/7.
  const auto w = build_weitzenbock(3, 1, 2);
  CHECK(w.Wtwist(0, 0) == Scalar(frac(8, 7)));

  for (int n = 2; n <= 4; ++n)
    for (int r = 0; r <= 4; ++r)
      for (int s = 1; s <= n; ++s) require_pass(check_twistor_identity(n, r, s));
}
