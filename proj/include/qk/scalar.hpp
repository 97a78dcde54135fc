#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace qk {

using Rational = mpq_class;

/// Canonicalized fraction; mpq_class(num, den) alone leaves common factors in.
inline Rational frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Element of the field Q(i, sqrt2), stored as a + b*i + c*sqrt2 + d*i*sqrt2
/// with rational components. All arithmetic is exact; there is no floating
/// point anywhere in the library.
class Scalar {
 public:
  Scalar() : a_(0), b_(0), c_(0), d_(0) {}
  Scalar(int v) : a_(v), b_(0), c_(0), d_(0) {}  // NOLINT: implicit by design
  Scalar(Rational v) : a_(std::move(v)), b_(0), c_(0), d_(0) {}
  Scalar(Rational a, Rational b, Rational c, Rational d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

  static Scalar i() { return Scalar(0, 1, 0, 0); }
  static Scalar sqrt2() { return Scalar(0, 0, 1, 0); }
  static Scalar rational(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return Scalar(q);
  }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& d() const { return d_; }

  bool is_zero() const {
    return sgn(a_) == 0 && sgn(b_) == 0 && sgn(c_) == 0 && sgn(d_) == 0;
  }
  bool is_rational() const { return sgn(b_) == 0 && sgn(c_) == 0 && sgn(d_) == 0; }
  /// True when the value lies in Q(sqrt2), i.e. the i-components vanish.
  bool is_real() const { return sgn(b_) == 0 && sgn(d_) == 0; }

  /// Field conjugation i -> -i (fixes sqrt2).
  Scalar conj() const { return Scalar(a_, -b_, c_, -d_); }

  /// Exact sign of a real value a + c*sqrt2. Throws if the value is not real.
  int sign_real() const;
  bool is_positive_real() const { return sign_real() > 0; }

  Scalar operator-() const { return Scalar(-a_, -b_, -c_, -d_); }
  Scalar operator+(const Scalar& o) const {
    return Scalar(a_ + o.a_, b_ + o.b_, c_ + o.c_, d_ + o.d_);
  }
  Scalar operator-(const Scalar& o) const {
    return Scalar(a_ - o.a_, b_ - o.b_, c_ - o.c_, d_ - o.d_);
  }
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  /// acc += x*y without building the full product when components vanish.
  static void add_mul(Scalar& acc, const Scalar& x, const Scalar& y);

  Scalar inverse() const;

  bool operator==(const Scalar& o) const {
    return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

 private:
  Rational a_, b_, c_, d_;
};

Scalar operator*(const Rational& q, const Scalar& s);
std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Number of OpenMP threads the kernels may use; honors QKSL_THREADS.
int max_threads();

}  // namespace qk
