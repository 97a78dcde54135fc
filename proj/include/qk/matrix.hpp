#pragma once

#include <string>
#include <vector>

#include "qk/scalar.hpp"

namespace qk {

/// Dense exact matrix over Q(i, sqrt2) with optional domain/codomain labels.
/// A labeled matrix represents a linear map codomain <- domain; composition
/// checks that the labels agree and throws on mismatch instead of reshaping.
class ExactMatrix {
 public:
  ExactMatrix() : rows_(0), cols_(0) {}
  ExactMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}
  ExactMatrix(int rows, int cols, std::string codomain, std::string domain)
      : rows_(rows),
        cols_(cols),
        data_(static_cast<size_t>(rows) * cols),
        domain_(std::move(domain)),
        codomain_(std::move(codomain)) {}

  static ExactMatrix identity(int n);
  static ExactMatrix zero(int rows, int cols) { return ExactMatrix(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::string& domain_label() const { return domain_; }
  const std::string& codomain_label() const { return codomain_; }
  ExactMatrix& with_labels(std::string codomain, std::string domain) {
    codomain_ = std::move(codomain);
    domain_ = std::move(domain);
    return *this;
  }

  Scalar& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const Scalar& operator()(int r, int c) const {
    return data_[static_cast<size_t>(r) * cols_ + c];
  }

  bool is_zero() const;
  bool is_identity() const;

  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix operator-() const;
  ExactMatrix operator*(const ExactMatrix& o) const { return multiply(o); }
  friend ExactMatrix operator*(const Scalar& s, const ExactMatrix& m);
  bool operator==(const ExactMatrix& o) const;
  bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

  /// Composition this * o. Uses the OpenMP kernel for large products and the
  /// serial kernel otherwise; both are exact and give identical results.
  ExactMatrix multiply(const ExactMatrix& o) const;
  ExactMatrix multiply_serial(const ExactMatrix& o) const;
  ExactMatrix multiply_parallel(const ExactMatrix& o) const;

  ExactMatrix transpose() const;
  ExactMatrix conjugate() const;
  /// Conjugate transpose.
  ExactMatrix adjoint() const { return conjugate().transpose(); }

  /// Kronecker product with composite labels: (A kron B)(x kron y) = Ax kron By.
  ExactMatrix kron(const ExactMatrix& o) const;

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

  /// Rank by fraction-free (Bareiss) elimination; deterministic pivot order.
  int rank() const;
  /// Columns of the returned matrix form a basis of the kernel,
  /// exactly cols() - rank() of them.
  ExactMatrix kernel_basis() const;
  Scalar determinant() const;
  ExactMatrix inverse() const;
  /// Left inverse P with P * (*this) = identity; requires full column rank.
  ExactMatrix left_inverse() const;
  /// Solves this * x = rhs (one column per rhs column). Throws if inconsistent.
  ExactMatrix solve(const ExactMatrix& rhs) const;

  std::string str() const;

 private:
  void check_same_shape(const ExactMatrix& o, const char* op) const;

  int rows_, cols_;
  std::vector<Scalar> data_;
  std::string domain_, codomain_;
};

std::ostream& operator<<(std::ostream& os, const ExactMatrix& m);

/// Column vector helpers.
ExactMatrix column_matrix(const std::vector<Scalar>& v);
std::vector<Scalar> matrix_column(const ExactMatrix& m, int c);

}  // namespace qk
