#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qk/matrix.hpp"
#include "qk/report.hpp"

// The OpenMP kernel must agree entry-for-entry with the serial reference on
// arbitrary inputs; the dispatching multiply must agree with both.

using qk::ExactMatrix;
using qk::Rng;
using qk::Scalar;

namespace {

ExactMatrix random_matrix(Rng& rng, int r, int c, double zero_fraction) {
  ExactMatrix m(r, c);
  Rng coin(static_cast<unsigned long>(r * 1000 + c));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) {
      if (sgn(coin.rational()) < 0 && zero_fraction > 0) continue;
      m(i, j) = Scalar(rng.rational(), rng.rational(), rng.rational(),
                       rng.rational());
    }
  return m;
}

}  // namespace

TEST_CASE("parallel kernel matches the serial reference") {
  Rng rng(42);
  for (int t = 0; t < 6; ++t) {
    const int a = 3 + 11 * t, b = 5 + 7 * t, c = 2 + 13 * t;
    const ExactMatrix x = random_matrix(rng, a, b, t % 2 ? 0.5 : 0.0);
    const ExactMatrix y = random_matrix(rng, b, c, t % 2 ? 0.0 : 0.5);
    const ExactMatrix serial = x.multiply_serial(y);
    const ExactMatrix parallel = x.multiply_parallel(y);
    const ExactMatrix dispatched = x.multiply(y);
    CHECK(serial == parallel);
    CHECK(serial == dispatched);
  }
}

TEST_CASE("kernels agree on sparse structured input") {
  Rng rng(7);
  ExactMatrix x(64, 64), y(64, 64);
  for (int i = 0; i < 64; ++i) {
    x(i, (i * 17) % 64) = Scalar(rng.rational()) + Scalar::sqrt2();
    y((i * 5) % 64, i) = Scalar(0, 1, 0, 0);
    y(i, i) = Scalar(rng.rational());
  }
  CHECK(x.multiply_serial(y) == x.multiply_parallel(y));
}
