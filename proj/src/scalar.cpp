#include "qk/scalar.hpp"

#include <omp.h>

#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qk {

Scalar Scalar::operator*(const Scalar& o) const {
  // Multiplication table: i*i = -1, sqrt2*sqrt2 = 2, (i*sqrt2)^2 = -2.
  // Most values in practice are pure rational or pure real; skip the dead
  // component products instead of always doing all sixteen.
  const bool lr = is_rational(), rr = o.is_rational();
  if (lr && rr) return Scalar(a_ * o.a_);
  if (lr) return Scalar(a_ * o.a_, a_ * o.b_, a_ * o.c_, a_ * o.d_);
  if (rr) return Scalar(a_ * o.a_, b_ * o.a_, c_ * o.a_, d_ * o.a_);

  Scalar out;
  add_mul(out, *this, o);
  return out;
}

void Scalar::add_mul(Scalar& acc, const Scalar& x, const Scalar& y) {
  const int xa = sgn(x.a_), xb = sgn(x.b_), xc = sgn(x.c_), xd = sgn(x.d_);
  const int ya = sgn(y.a_), yb = sgn(y.b_), yc = sgn(y.c_), yd = sgn(y.d_);
  if (xa) {
    if (ya) acc.a_ += x.a_ * y.a_;
    if (yb) acc.b_ += x.a_ * y.b_;
    if (yc) acc.c_ += x.a_ * y.c_;
    if (yd) acc.d_ += x.a_ * y.d_;
  }
  if (xb) {
    if (ya) acc.b_ += x.b_ * y.a_;
    if (yb) acc.a_ -= x.b_ * y.b_;
    if (yc) acc.d_ += x.b_ * y.c_;
    if (yd) acc.c_ -= x.b_ * y.d_;
  }
  if (xc) {
    if (ya) acc.c_ += x.c_ * y.a_;
    if (yb) acc.d_ += x.c_ * y.b_;
    if (yc) acc.a_ += 2 * (x.c_ * y.c_);
    if (yd) acc.b_ += 2 * (x.c_ * y.d_);
  }
  if (xd) {
    if (ya) acc.d_ += x.d_ * y.a_;
    if (yb) acc.c_ -= x.d_ * y.b_;
    if (yc) acc.b_ += 2 * (x.d_ * y.c_);
    if (yd) acc.a_ -= 2 * (x.d_ * y.d_);
  }
}

Scalar& Scalar::operator+=(const Scalar& o) {
  a_ += o.a_;
  b_ += o.b_;
  c_ += o.c_;
  d_ += o.d_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  c_ -= o.c_;
  d_ -= o.d_;
  return *this;
}

int Scalar::sign_real() const {
  if (sgn(b_) != 0 || sgn(d_) != 0)
    throw std::domain_error("sign_real: value has nonzero i-part");
  const int sa = sgn(a_), sc = sgn(c_);
  if (sc == 0) return sa;
  if (sa == 0) return sc;
  if (sa == sc) return sa;
  // a and c*sqrt2 compete: compare a^2 against 2 c^2.
  const Rational t = a_ * a_ - 2 * c_ * c_;
  const int st = sgn(t);
  return st == 0 ? 0 : st * sa;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("Scalar::inverse of zero");
  if (is_rational()) return Scalar(Rational(1) / a_);
  // x * conj_i(x) lies in Q(sqrt2); multiply by its sqrt2-conjugate to reach Q.
  const Scalar ci = conj();
  const Scalar m = *this * ci;  // p + q*sqrt2
  const Rational& p = m.a();
  const Rational& q = m.c();
  const Rational norm = p * p - 2 * q * q;
  if (sgn(norm) == 0) throw std::domain_error("Scalar::inverse: zero norm");
  const Scalar cr(p, Rational(0), -q, Rational(0));
  Scalar out = ci * cr;
  const Rational inv = Rational(1) / norm;
  return Scalar(out.a() * inv, out.b() * inv, out.c() * inv, out.d() * inv);
}

std::string Scalar::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

Scalar operator*(const Rational& q, const Scalar& s) {
  return Scalar(q * s.a(), q * s.b(), q * s.c(), q * s.d());
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  if (s.is_zero()) return os << "0";
  bool first = true;
  auto emit = [&](const Rational& q, const char* unit) {
    if (sgn(q) == 0) return;
    if (!first && sgn(q) > 0) os << "+";
    if (unit[0] == '\0') {
      os << q;
    } else if (q == 1) {
      os << unit;
    } else if (q == -1) {
      os << "-" << unit;
    } else {
      os << q << "*" << unit;
    }
    first = false;
  };
  emit(s.a(), "");
  emit(s.b(), "i");
  emit(s.c(), "sqrt2");
  emit(s.d(), "i*sqrt2");
  return os;
}

int max_threads() {
  static const int n = [] {
    int hw = omp_get_max_threads();
    if (const char* env = std::getenv("QKSL_THREADS")) {
      const int cap = std::atoi(env);
      if (cap > 0 && cap < hw) hw = cap;
    }
    return hw < 1 ? 1 : hw;
  }();
  return n;
}

}  // namespace qk
