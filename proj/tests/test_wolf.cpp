#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qk/wolf.hpp"

using namespace qk;

namespace {

void require_pass(const Report& rep) {
  INFO(rep.title, ": ", rep.first_failure());
  CHECK(rep.pass());
}

}  // namespace

TEST_CASE("classical model dimensions") {
  // HP2: dim sp(3) = 21, dim p = 8.
  const auto [g, dec] = build_classical_wolf(WolfFamily::HPn, 2);
  CHECK(g.dim == 21);
  CHECK(dec.p_idx.size() == 8);
  CHECK(dec.ideals.size() == 2);
  CHECK(dec.ideals[0].idx.size() == 3);
  CHECK(dec.ideals[1].idx.size() == 10);

  // GrC2 at n=2: dim su(4) = 15 = 7 + 8, k = 3 + 3 + 1.
  const auto [g2, dec2] = build_classical_wolf(WolfFamily::GrC2, 2);
  CHECK(g2.dim == 15);
  CHECK(dec2.k_idx.size() == 7);
  CHECK(dec2.p_idx.size() == 8);

  // GrR4 at n=2: ideals sp(1), sp~(1), so(2).
  const auto [g3, dec3] = build_classical_wolf(WolfFamily::GrR4, 2);
  CHECK(g3.dim == 15);
  CHECK(dec3.ideals.size() == 3);
  CHECK(dec3.ideals[2].idx.size() == 1);

  CHECK_THROWS_AS(build_classical_wolf(WolfFamily::HPn, 1), std::invalid_argument);
}

TEST_CASE("Lie model structure and Cartan decomposition") {
  for (const auto f : {WolfFamily::HPn, WolfFamily::GrC2, WolfFamily::GrR4})
    for (int n = 2; n <= 3; ++n) {
      const auto [g, dec] = build_classical_wolf(f, n);
      require_pass(check_lie_model(g));
      require_pass(check_cartan(g, dec));
    }
}

TEST_CASE("Killing constants") {
  // HPn: l_{sp(1)} = 2/(n+2), l_{sp(n)} = (n+1)/(n+2).
  for (int n = 2; n <= 3; ++n) {
    const auto [g, dec] = build_classical_wolf(WolfFamily::HPn, n);
    const auto ls = compute_l_constants(g, dec);
    CHECK(ls[0] == frac(2, n + 2));
    CHECK(ls[1] == frac(n + 1, n + 2));
  }
  // GrC2: l_R = 0.
  {
    const auto [g, dec] = build_classical_wolf(WolfFamily::GrC2, 2);
    CHECK(compute_l_constants(g, dec)[2] == Rational(0));
  }
  // GrR4: l_{so(n)} = (n-2)/(n+2).
  for (int n = 2; n <= 3; ++n) {
    const auto [g, dec] = build_classical_wolf(WolfFamily::GrR4, n);
    CHECK(compute_l_constants(g, dec)[2] == frac(n - 2, n + 2));
  }
}

TEST_CASE("sp(1) constant from first principles") {
  for (const auto f : {WolfFamily::HPn, WolfFamily::GrC2, WolfFamily::GrR4})
    for (int n = 2; n <= 3; ++n) {
      const auto [g, dec] = build_classical_wolf(f, n);
      require_pass(check_sp1_constant(g, dec));
    }
}

TEST_CASE("curvature endomorphism") {
  for (const auto f : {WolfFamily::HPn, WolfFamily::GrC2, WolfFamily::GrR4})
    for (int n = 2; n <= 3; ++n) {
      const auto [g, dec] = build_classical_wolf(f, n);
      require_pass(
          check_curvature_endomorphism(g, dec, expected_l_classical(f, n)));
    }
}

TEST_CASE("rho eigenvalues match the tabulated entries") {
  // HPn at n=2: {1/4, 1/8}.
  {
    WolfEntry e = wolf_table(2)[0];
    const auto ev = rho_eigenvalues(e);
    CHECK(ev[0] == frac(1, 4));
    CHECK(ev[1] == frac(1, 8));
  }
  // GrC2: eigenvalue 1/2 on the center.
  {
    WolfEntry e = wolf_table(2)[1];
    CHECK(rho_eigenvalues(e)[2] == frac(1, 2));
  }
  // GrR4 at n=3: {3/10, 3/10, 2/5}.
  {
    WolfEntry e = wolf_table(3)[2];
    const auto ev = rho_eigenvalues(e);
    CHECK(ev[0] == frac(3, 10));
    CHECK(ev[1] == frac(3, 10));
    CHECK(ev[2] == frac(2, 5));
  }
}

TEST_CASE("trace identity solves the exceptional constants") {
  auto table = wolf_table(2);
  const Rational expected[8] = {Rational(0), Rational(0), Rational(0),
                                frac(1, 6),  frac(4, 9),  frac(1, 2),
                                frac(5, 9),  frac(3, 5)};
  for (size_t t = 0; t < table.size(); ++t) {
    require_pass(check_trace_identity(&table[t]));
    if (t >= 3) CHECK(table[t].ideals.back().l == expected[t]);
  }
}

TEST_CASE("regularity") {
  auto table = wolf_table(2);
  for (auto& e : table) require_pass(check_trace_identity(&e));
  for (size_t t = 0; t < table.size(); ++t) {
    const bool expect_regular = (t != 0);  // only the projective space degenerates
    require_pass(check_regularity(table[t], expect_regular));
  }
  // G2/SO(4): rho^hyper on sp~(1) is 5/12 - 1/8 = 7/24.
  CHECK(rho_hyper_eigenvalue(table[3], 1) == frac(7, 24));
  // GrC2: eigenvalue on the su(n) part is 1/(2(n+2)).
  CHECK(rho_hyper_eigenvalue(table[1], 1) == frac(1, 2 * (2 + 2)));
}
