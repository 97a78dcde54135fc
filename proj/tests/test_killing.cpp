#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qk/killing.hpp"

using namespace qk;

namespace {

void require_pass(const Report& rep) {
  INFO(rep.title, ": ", rep.first_failure());
  CHECK(rep.pass());
}

}  // namespace

TEST_CASE("curvature assembly") {
  for (int n = 2; n <= 3; ++n) require_pass(check_assemble_R(SpinorAlgebra(n)));
}

TEST_CASE("Killing curvature, zero quartic") {
  for (int n = 2; n <= 3; ++n) {
    SpinorAlgebra sa(n);
    for (const long kap : {1L, 16L}) {
      CurvatureModel m{n, Rational(kap), QuarticForm(2 * n)};
      require_pass(check_killing_curvature(sa, m));
    }
  }
}

TEST_CASE("Killing curvature, de1^4 quartic middle block") {
  SpinorAlgebra sa(2);
  std::vector<Rational> alpha(4);
  alpha[0] = 1;
  CurvatureModel m{2, Rational(1), QuarticForm::power_of_covector(alpha)};
  require_pass(check_killing_curvature(sa, m));

  // Assemble both sides independently for one pair and compare the middle
  // block: R^Killing must act there as sigma_H(h1,h2) id_H (x) K_{e1,e2}.
  KillingModel km(sa);
  const Vec h1 = sa.H().space().basis(0), h2 = sa.H().space().basis(1);
  const Vec e1 = sa.E().space().basis(0), e2 = sa.E().space().basis(2);
  const Vec x = sa.tangent_basis(0, 0), y = sa.tangent_basis(1, 2);
  const Rational lam2 = frac(2 + 3, 4 * (2 + 2));
  const ExactMatrix comm = km.a_hat(x) * km.a_hat(y) - km.a_hat(y) * km.a_hat(x);
  const ExactMatrix rk = km.r_action(m, h1, e1, h2, e2) + Scalar(lam2) * comm;
  ExactMatrix expect_mid = ExactMatrix::identity(2).kron(
      sa.E().deriv_action_prim(m.quartic.endo(sa.E().space(), 0, 2), 1));
  expect_mid.with_labels("", "");
  const int o = km.offset(1), dmid = km.block_dim(1);
  ExactMatrix got(dmid, dmid);
  for (int i = 0; i < dmid; ++i)
    for (int j = 0; j < dmid; ++j) got(i, j) = rk(o + i, o + j);
  const Scalar sh = sa.H().space().sigma_eval(h1, h2);
  CHECK(got == sh * expect_mid);
}

TEST_CASE("Killing curvature, random quartics") {
  Rng rng(5150);
  for (int n = 2; n <= 3; ++n) {
    SpinorAlgebra sa(n);
    for (int t = 0; t < 2; ++t) {
      CurvatureModel m{n, Rational(1), QuarticForm::random(2 * n, rng)};
      require_pass(check_killing_curvature(sa, m));
    }
  }
}

TEST_CASE("Laplace system") {
  // n=2: eigenvalues {0, 3 kappa/16, 7 kappa/16}.
  CHECK(frac(2 + 1, 2 * 2 * (2 + 2)) == frac(3, 16));
  CHECK(frac(2 * 2 + 3, 2 * 2 * (2 + 2)) == frac(7, 16));
  // n=5: {0, 3 kappa/35, 13 kappa/70}.
  CHECK(frac(5 + 1, 2 * 5 * 7) == frac(3, 35));
  CHECK(frac(13, 2 * 5 * 7) == frac(13, 70));
  for (int n = 2; n <= 8; ++n) require_pass(check_laplace(n));
}

TEST_CASE("skew hermiticity of A_X") {
  for (int n = 2; n <= 3; ++n) {
    SpinorAlgebra sa(n);
    const TangentFrame fr = build_frame(sa);
    require_pass(check_skew_hermitian(sa, fr));
  }
}

TEST_CASE("curvature term vanishing") {
  for (int n = 2; n <= 3; ++n) {
    EModel em(n);
    for (int s = 2; s <= n; ++s) require_pass(check_curvature_term_vanishing(em, s));
  }
}

TEST_CASE("Killing equation consequences") {
  // Frozen coefficients at n=2: 4(n+4)/(n+3) = 24/5 and (n-1)/(2n) = 1/4.
  CHECK(frac(4 * (2 + 4), 2 + 3) == frac(24, 5));
  CHECK(frac(2 - 1, 2 * 2) == frac(1, 4));
  for (int n = 2; n <= 3; ++n) {
    SpinorAlgebra sa(n);
    const TangentFrame fr = build_frame(sa);
    require_pass(check_killing_equation_consequences(sa, fr));
  }
}
