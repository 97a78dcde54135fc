// Benchmark comparing the serial reference kernels against the OpenMP ones
// on exact-arithmetic workloads of the sizes this library actually meets.

#include <chrono>
#include <cstdio>

#include "qk/matrix.hpp"
#include "qk/report.hpp"

using qk::ExactMatrix;
using qk::Rng;
using qk::Scalar;

namespace {

ExactMatrix random_matrix(Rng& rng, int dim, int nnz_per_row) {
  ExactMatrix m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int t = 0; t < nnz_per_row; ++t) {
      const int j = static_cast<int>(
          std::abs(rng.nonzero_rational().get_num().get_si()) * 131 + t * 17) %
          dim;
      m(i, j) = Scalar(rng.rational(), rng.rational(), rng.rational(),
                       rng.rational());
    }
  return m;
}

double ms_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

int main() {
  std::printf("exact matrix kernels, %d thread(s) available\n", qk::max_threads());
  std::printf("%8s %8s %12s %12s %12s %9s\n", "dim", "nnz/row", "serial(ms)",
              "parallel(ms)", "speedup", "equal");

  Rng rng(7);
  for (const int dim : {48, 96, 160}) {
    for (const int nnz : {4, dim / 2}) {
      const ExactMatrix a = random_matrix(rng, dim, nnz);
      const ExactMatrix b = random_matrix(rng, dim, nnz);

      auto t0 = std::chrono::steady_clock::now();
      const ExactMatrix s = a.multiply_serial(b);
      const double ts = ms_since(t0);

      t0 = std::chrono::steady_clock::now();
      const ExactMatrix p = a.multiply_parallel(b);
      const double tp = ms_since(t0);

      std::printf("%8d %8d %12.1f %12.1f %11.2fx %9s\n", dim, nnz, ts, tp,
                  ts / (tp > 0 ? tp : 1), s == p ? "yes" : "NO");
    }
  }

  // Elimination workload (rank of a wide sparse matrix).
  for (const int dim : {96, 160}) {
    const ExactMatrix a = random_matrix(rng, dim, 6);
    const auto t0 = std::chrono::steady_clock::now();
    const int rank = a.rank();
    std::printf("rank %dx%d (fraction-free elimination): rank=%d in %.1f ms\n",
                dim, dim, rank, ms_since(t0));
  }
  return 0;
}
