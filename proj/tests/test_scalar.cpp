#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qk/report.hpp"
#include "qk/scalar.hpp"

using qk::Rational;
using qk::Rng;
using qk::Scalar;

TEST_CASE("defining relations") {
  CHECK(Scalar::sqrt2() * Scalar::sqrt2() == Scalar(2));
  CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
  // (1 + i sqrt2)(1 - i sqrt2) = 1 - i^2 * 2 = 3
  const Scalar x(1, 0, 0, 1), y(1, 0, 0, -1);
  CHECK(x * y == Scalar(3));
}

TEST_CASE("field axioms on random samples") {
  Rng rng;
  auto rand_scalar = [&] {
    return Scalar(rng.rational(), rng.rational(), rng.rational(), rng.rational());
  };
  for (int t = 0; t < 50; ++t) {
    const Scalar x = rand_scalar(), y = rand_scalar(), z = rand_scalar();
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
    CHECK((x * y) * z == x * (y * z));
    if (!x.is_zero()) {
      CHECK(x * x.inverse() == Scalar(1));
      CHECK(x / x == Scalar(1));
    }
  }
}

TEST_CASE("conjugation") {
  Rng rng;
  for (int t = 0; t < 30; ++t) {
    const Scalar x(rng.rational(), rng.rational(), rng.rational(), rng.rational());
    const Scalar y(rng.rational(), rng.rational(), rng.rational(), rng.rational());
    CHECK(x.conj().conj() == x);
    CHECK((x * y).conj() == x.conj() * y.conj());
    CHECK((x * y).conj() == y.conj() * x.conj());
  }
  CHECK(Scalar::i().conj() == -Scalar::i());
  CHECK(Scalar::sqrt2().conj() == Scalar::sqrt2());
}

TEST_CASE("exact sign of real values") {
  // 1 - sqrt2 < 0 < 3 - 2 sqrt2, and 7 - 5 sqrt2 < 0 (since 50 > 49).
  CHECK(Scalar(1, 0, -1, 0).sign_real() == -1);
  CHECK(Scalar(3, 0, -2, 0).sign_real() == 1);
  CHECK(Scalar(7, 0, -5, 0).sign_real() == -1);
  CHECK(Scalar(0).sign_real() == 0);
  CHECK(Scalar::sqrt2().sign_real() == 1);
  CHECK_THROWS(Scalar::i().sign_real());
}

TEST_CASE("add_mul accumulates exactly") {
  Rng rng;
  for (int t = 0; t < 30; ++t) {
    const Scalar x(rng.rational(), rng.rational(), rng.rational(), rng.rational());
    const Scalar y(rng.rational(), rng.rational(), rng.rational(), rng.rational());
    Scalar acc(5);
    Scalar::add_mul(acc, x, y);
    CHECK(acc == Scalar(5) + x * y);
  }
}
