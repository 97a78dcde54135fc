#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qk/matrix.hpp"
#include "qk/report.hpp"

using qk::ExactMatrix;
using qk::Rng;
using qk::Scalar;

namespace {

ExactMatrix random_matrix(Rng& rng, int r, int c, bool complex_entries = false) {
  ExactMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      m(i, j) = complex_entries
                    ? Scalar(rng.rational(), rng.rational(), rng.rational(),
                             rng.rational())
                    : Scalar(rng.rational());
  return m;
}

}  // namespace

TEST_CASE("label checking at composition time") {
  ExactMatrix a(2, 3, "W", "V");
  ExactMatrix b(3, 2, "V", "U");
  CHECK_NOTHROW(a * b);
  ExactMatrix c(3, 2, "X", "U");
  CHECK_THROWS_AS(a * c, std::invalid_argument);
  const ExactMatrix ab = a * b;
  CHECK(ab.codomain_label() == "W");
  CHECK(ab.domain_label() == "U");
}

TEST_CASE("kernel of simple matrices") {
  CHECK(ExactMatrix::zero(2, 3).kernel_basis().cols() == 3);
  CHECK(ExactMatrix::identity(4).kernel_basis().cols() == 0);
}

TEST_CASE("rank-nullity and kernel membership on random matrices") {
  Rng rng;
  for (int t = 0; t < 20; ++t) {
    const int r = 1 + t % 6, c = 1 + (t * 7) % 8;
    const ExactMatrix m = random_matrix(rng, r, c, t % 2 == 0);
    const int rk = m.rank();
    const ExactMatrix ker = m.kernel_basis();
    CHECK(rk + ker.cols() == c);
    CHECK((m * ker).is_zero());
  }
}

TEST_CASE("rank of products does not exceed factor ranks") {
  Rng rng;
  for (int t = 0; t < 10; ++t) {
    const ExactMatrix a = random_matrix(rng, 4, 3);
    const ExactMatrix b = random_matrix(rng, 3, 5);
    const int rab = (a * b).rank();
    CHECK(rab <= a.rank());
    CHECK(rab <= b.rank());
  }
}

TEST_CASE("elimination is deterministic") {
  Rng rng;
  const ExactMatrix m = random_matrix(rng, 5, 7, true);
  const ExactMatrix k1 = m.kernel_basis();
  const ExactMatrix k2 = m.kernel_basis();
  CHECK(k1 == k2);
}

TEST_CASE("kron basics") {
  CHECK(ExactMatrix::identity(2).kron(ExactMatrix::identity(3)) ==
        ExactMatrix::identity(6));

  // (a kron b)(e1 kron e1) = (a e1) kron (b e1) for random 2x2 a, b.
  Rng rng;
  for (int t = 0; t < 10; ++t) {
    const ExactMatrix a = random_matrix(rng, 2, 2, true);
    const ExactMatrix b = random_matrix(rng, 2, 2, true);
    std::vector<Scalar> e1e1(4);
    e1e1[0] = 1;  // index = i*2 + j with i = j = 0
    const auto lhs = a.kron(b).apply(e1e1);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) CHECK(lhs[i * 2 + j] == a(i, 0) * b(j, 0));
  }
}

TEST_CASE("determinant, inverse, left inverse") {
  Rng rng;
  for (int t = 0; t < 10; ++t) {
    ExactMatrix m = random_matrix(rng, 4, 4, true);
    const Scalar det = m.determinant();
    if (det.is_zero()) continue;
    const ExactMatrix inv = m.inverse();
    CHECK((m * inv).is_identity());
    CHECK((inv * m).is_identity());
  }
  // 2x2 determinant oracle: ad - bc.
  for (int t = 0; t < 10; ++t) {
    const ExactMatrix m = random_matrix(rng, 2, 2, true);
    CHECK(m.determinant() == m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0));
  }
  // left inverse of a tall full-column-rank matrix
  for (int t = 0; t < 10; ++t) {
    const ExactMatrix m = random_matrix(rng, 6, 3);
    if (m.rank() < 3) continue;
    CHECK((m.left_inverse() * m).is_identity());
  }
}

TEST_CASE("solve") {
  Rng rng;
  const ExactMatrix a = random_matrix(rng, 4, 4, true);
  const ExactMatrix x = random_matrix(rng, 4, 2, true);
  const ExactMatrix b = a * x;
  const ExactMatrix sol = a.solve(b);
  CHECK(a * sol == b);
}

TEST_CASE("zero-dimensional matrices are handled") {
  const ExactMatrix z(0, 3);
  CHECK(z.rank() == 0);
  CHECK(z.kernel_basis().cols() == 3);
  const ExactMatrix z2(3, 0);
  CHECK((z2 * z).rows() == 3);
  CHECK((z2 * z).cols() == 3);
  CHECK((z2 * z).is_zero());
}
