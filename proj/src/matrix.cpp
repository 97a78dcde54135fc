#include "qk/matrix.hpp"

#include <omp.h>

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qk {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

// Forward elimination in fraction-free (Bareiss) form. Deterministic: pivots
// are chosen as the first nonzero entry scanning rows top-down per column.
struct Echelon {
  ExactMatrix u;
  std::vector<int> pivot_cols;
  std::vector<int> row_origin;  // row_origin[i] = index of the original row now at i
  int swaps = 0;
  int rank() const { return static_cast<int>(pivot_cols.size()); }
};

Echelon bareiss(const ExactMatrix& m) {
  Echelon e{m, {}, {}, 0};
  ExactMatrix& u = e.u;
  const int rows = m.rows(), cols = m.cols();
  e.row_origin.resize(rows);
  for (int i = 0; i < rows; ++i) e.row_origin[i] = i;

  Scalar prev = 1;
  int pr = 0;
  for (int col = 0; col < cols && pr < rows; ++col) {
    int piv = -1;
    for (int i = pr; i < rows; ++i) {
      if (!u(i, col).is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != pr) {
      for (int j = 0; j < cols; ++j) std::swap(u(pr, j), u(piv, j));
      std::swap(e.row_origin[pr], e.row_origin[piv]);
      ++e.swaps;
    }
    const Scalar inv_prev = prev.inverse();
    for (int i = pr + 1; i < rows; ++i) {
      if (u(i, col).is_zero()) {
        // Still rescale the trailing part so the Bareiss invariant holds.
        for (int j = col + 1; j < cols; ++j) {
          if (u(i, j).is_zero()) continue;
          u(i, j) = u(pr, col) * u(i, j) * inv_prev;
        }
        continue;
      }
      for (int j = col + 1; j < cols; ++j) {
        Scalar t = u(pr, col) * u(i, j);
        Scalar::add_mul(t, -u(i, col), u(pr, j));
        u(i, j) = t * inv_prev;
      }
      u(i, col) = Scalar();
    }
    prev = u(pr, col);
    e.pivot_cols.push_back(col);
    ++pr;
  }
  return e;
}

}  // namespace

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool ExactMatrix::is_zero() const {
  for (const Scalar& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

bool ExactMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if ((*this)(i, j) != Scalar(i == j ? 1 : 0)) return false;
  return true;
}

void ExactMatrix::check_same_shape(const ExactMatrix& o, const char* op) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    std::ostringstream os;
    os << op << ": shape mismatch " << rows_ << "x" << cols_ << " vs " << o.rows_
       << "x" << o.cols_;
    throw std::invalid_argument(os.str());
  }
  if (!domain_.empty() && !o.domain_.empty() && domain_ != o.domain_)
    throw std::invalid_argument(std::string(op) + ": domain label mismatch " +
                                domain_ + " vs " + o.domain_);
  if (!codomain_.empty() && !o.codomain_.empty() && codomain_ != o.codomain_)
    throw std::invalid_argument(std::string(op) + ": codomain label mismatch " +
                                codomain_ + " vs " + o.codomain_);
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  check_same_shape(o, "add");
  ExactMatrix out = *this;
  for (size_t k = 0; k < data_.size(); ++k) out.data_[k] += o.data_[k];
  return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
  check_same_shape(o, "sub");
  ExactMatrix out = *this;
  for (size_t k = 0; k < data_.size(); ++k) out.data_[k] -= o.data_[k];
  return out;
}

ExactMatrix ExactMatrix::operator-() const {
  ExactMatrix out = *this;
  for (Scalar& s : out.data_) s = -s;
  return out;
}

ExactMatrix operator*(const Scalar& s, const ExactMatrix& m) {
  ExactMatrix out = m;
  for (Scalar& x : out.data_) x = s * x;
  return out;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t k = 0; k < data_.size(); ++k)
    if (data_[k] != o.data_[k]) return false;
  return true;
}

ExactMatrix ExactMatrix::multiply_serial(const ExactMatrix& o) const {
  require(cols_ == o.rows_, "multiply: inner dimension mismatch");
  if (!domain_.empty() && !o.codomain_.empty() && domain_ != o.codomain_)
    throw std::invalid_argument("multiply: label mismatch, domain " + domain_ +
                                " vs codomain " + o.codomain_);
  ExactMatrix out(rows_, o.cols_, codomain_, o.domain_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < o.cols_; ++j) {
      Scalar acc;
      for (int k = 0; k < cols_; ++k) acc += (*this)(i, k) * o(k, j);
      out(i, j) = acc;
    }
  return out;
}

ExactMatrix ExactMatrix::multiply_parallel(const ExactMatrix& o) const {
  require(cols_ == o.rows_, "multiply: inner dimension mismatch");
  if (!domain_.empty() && !o.codomain_.empty() && domain_ != o.codomain_)
    throw std::invalid_argument("multiply: label mismatch, domain " + domain_ +
                                " vs codomain " + o.codomain_);
  ExactMatrix out(rows_, o.cols_, codomain_, o.domain_);
  const int R = rows_, C = o.cols_, K = cols_;
#pragma omp parallel for num_threads(max_threads()) schedule(dynamic, 8)
  for (int i = 0; i < R; ++i) {
    for (int k = 0; k < K; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < C; ++j) {
        const Scalar& b = o(k, j);
        if (b.is_zero()) continue;
        Scalar::add_mul(out(i, j), a, b);
      }
    }
  }
  return out;
}

ExactMatrix ExactMatrix::multiply(const ExactMatrix& o) const {
  require(cols_ == o.rows_, "multiply: inner dimension mismatch");
  if (!domain_.empty() && !o.codomain_.empty() && domain_ != o.codomain_)
    throw std::invalid_argument("multiply: label mismatch, domain " + domain_ +
                                " vs codomain " + o.codomain_);
  const size_t work =
      static_cast<size_t>(rows_) * static_cast<size_t>(cols_) * o.cols_;
  if (work >= 1u << 16 && max_threads() > 1) return multiply_parallel(o);
  // Same zero-skipping kernel, single thread.
  ExactMatrix out(rows_, o.cols_, codomain_, o.domain_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& b = o(k, j);
        if (b.is_zero()) continue;
        Scalar::add_mul(out(i, j), a, b);
      }
    }
  return out;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix out(cols_, rows_, domain_, codomain_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

ExactMatrix ExactMatrix::conjugate() const {
  ExactMatrix out = *this;
  for (Scalar& s : out.data_) s = s.conj();
  return out;
}

ExactMatrix ExactMatrix::kron(const ExactMatrix& o) const {
  std::string cod, dom;
  if (!codomain_.empty() && !o.codomain_.empty())
    cod = codomain_ + "(x)" + o.codomain_;
  if (!domain_.empty() && !o.domain_.empty()) dom = domain_ + "(x)" + o.domain_;
  ExactMatrix out(rows_ * o.rows_, cols_ * o.cols_, cod, dom);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const Scalar& a = (*this)(i, j);
      if (a.is_zero()) continue;
      for (int p = 0; p < o.rows_; ++p)
        for (int q = 0; q < o.cols_; ++q) {
          const Scalar& b = o(p, q);
          if (b.is_zero()) continue;
          out(i * o.rows_ + p, j * o.cols_ + q) = a * b;
        }
    }
  return out;
}

std::vector<Scalar> ExactMatrix::apply(const std::vector<Scalar>& v) const {
  require(static_cast<int>(v.size()) == cols_, "apply: dimension mismatch");
  std::vector<Scalar> out(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero() || v[k].is_zero()) continue;
      Scalar::add_mul(out[i], a, v[k]);
    }
  return out;
}

int ExactMatrix::rank() const { return bareiss(*this).rank(); }

ExactMatrix ExactMatrix::kernel_basis() const {
  const Echelon e = bareiss(*this);
  const int rk = e.rank();
  const int nullity = cols_ - rk;
  ExactMatrix basis(cols_, nullity, domain_, "");
  std::vector<bool> is_pivot(cols_, false);
  for (int c : e.pivot_cols) is_pivot[c] = true;

  int out_col = 0;
  for (int f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> x(cols_);
    x[f] = 1;
    for (int t = rk - 1; t >= 0; --t) {
      const int c = e.pivot_cols[t];
      Scalar acc;
      for (int j = c + 1; j < cols_; ++j) {
        if (e.u(t, j).is_zero() || x[j].is_zero()) continue;
        Scalar::add_mul(acc, e.u(t, j), x[j]);
      }
      x[c] = -acc / e.u(t, c);
    }
    for (int i = 0; i < cols_; ++i) basis(i, out_col) = x[i];
    ++out_col;
  }
  return basis;
}

Scalar ExactMatrix::determinant() const {
  require(rows_ == cols_, "determinant: matrix not square");
  if (rows_ == 0) return Scalar(1);
  const Echelon e = bareiss(*this);
  if (e.rank() < rows_) return Scalar();
  Scalar det = e.u(rows_ - 1, rows_ - 1);
  return (e.swaps % 2) ? -det : det;
}

ExactMatrix ExactMatrix::solve(const ExactMatrix& rhs) const {
  require(rhs.rows() == rows_, "solve: rhs row mismatch");
  // Gauss-Jordan on the augmented matrix; free variables are set to zero.
  ExactMatrix u(rows_, cols_ + rhs.cols());
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) u(i, j) = (*this)(i, j);
    for (int j = 0; j < rhs.cols(); ++j) u(i, cols_ + j) = rhs(i, j);
  }
  std::vector<int> pivot_cols;
  int pr = 0;
  for (int col = 0; col < cols_ && pr < rows_; ++col) {
    int piv = -1;
    for (int i = pr; i < rows_; ++i)
      if (!u(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != pr)
      for (int j = 0; j < u.cols(); ++j) std::swap(u(pr, j), u(piv, j));
    const Scalar inv = u(pr, col).inverse();
    for (int j = col; j < u.cols(); ++j) u(pr, j) = u(pr, j) * inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == pr || u(i, col).is_zero()) continue;
      const Scalar f = u(i, col);
      for (int j = col; j < u.cols(); ++j) {
        Scalar t = u(i, j);
        Scalar::add_mul(t, -f, u(pr, j));
        u(i, j) = t;
      }
    }
    pivot_cols.push_back(col);
    ++pr;
  }
  for (int i = pr; i < rows_; ++i)
    for (int j = 0; j < rhs.cols(); ++j)
      if (!u(i, cols_ + j).is_zero())
        throw std::domain_error("solve: inconsistent system");
  ExactMatrix x(cols_, rhs.cols(), domain_, rhs.domain_label());
  for (int t = 0; t < static_cast<int>(pivot_cols.size()); ++t)
    for (int j = 0; j < rhs.cols(); ++j) x(pivot_cols[t], j) = u(t, cols_ + j);
  return x;
}

ExactMatrix ExactMatrix::inverse() const {
  require(rows_ == cols_, "inverse: matrix not square");
  ExactMatrix x = solve(identity(rows_));
  // solve() succeeds for singular square systems only if consistent; verify.
  if (!(multiply_serial(x).is_identity()))
    throw std::domain_error("inverse: matrix is singular");
  x.with_labels(domain_, codomain_);
  return x;
}

ExactMatrix ExactMatrix::left_inverse() const {
  const Echelon et = bareiss(transpose());
  if (et.rank() != cols_)
    throw std::domain_error("left_inverse: matrix does not have full column rank");
  // Pivot columns of the transpose are row indices of an invertible square block.
  const std::vector<int>& rows_sel = et.pivot_cols;
  ExactMatrix block(cols_, cols_);
  for (int i = 0; i < cols_; ++i)
    for (int j = 0; j < cols_; ++j) block(i, j) = (*this)(rows_sel[i], j);
  const ExactMatrix inv = block.inverse();
  ExactMatrix p(cols_, rows_, domain_, codomain_);
  for (int i = 0; i < cols_; ++i)
    for (int j = 0; j < cols_; ++j) p(i, rows_sel[j]) = inv(i, j);
  return p;
}

std::string ExactMatrix::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ExactMatrix& m) {
  os << "[";
  for (int i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
  }
  return os << "]";
}

ExactMatrix column_matrix(const std::vector<Scalar>& v) {
  ExactMatrix m(static_cast<int>(v.size()), 1);
  for (size_t i = 0; i < v.size(); ++i) m(static_cast<int>(i), 0) = v[i];
  return m;
}

std::vector<Scalar> matrix_column(const ExactMatrix& m, int c) {
  std::vector<Scalar> v(m.rows());
  for (int i = 0; i < m.rows(); ++i) v[i] = m(i, c);
  return v;
}

}  // namespace qk
