#include "conway/quadext.hpp"

#include <cmath>
#include <ostream>

namespace conway {

bool approx_equal(double a, double b, const FloatPolicy& policy) {
  double diff = std::fabs(a - b);
  double scale = std::max(std::fabs(a), std::fabs(b));
  return diff <= std::max(policy.rel_tol * scale, policy.abs_tol);
}

QuadExt::QuadExt(const Rational& u, const Rational& v, const Rational& d) : u_(u), v_(v), d_(d) {
  if (d_.sign() < 0) throw Error(ErrorCode::NegativeDiscriminant, "discriminant must be nonnegative");
  canonicalize();
}

void QuadExt::canonicalize() {
  if (v_.is_zero()) return;
  if (d_.is_zero()) {
    v_ = Rational(0);
    return;
  }
  Rational root;
  if (d_.is_perfect_square(&root)) {
    u_ += v_ * root;
    v_ = Rational(0);
  }
}

Rational QuadExt::merged_disc(const QuadExt& a, const QuadExt& b) {
  if (a.is_rational() && b.is_rational()) return a.d_.is_zero() ? b.d_ : a.d_;
  if (a.is_rational()) return b.d_;
  if (b.is_rational()) return a.d_;
  if (a.d_ != b.d_)
    throw Error(ErrorCode::MismatchedDiscriminant,
                "operands live in different fields: sqrt(" + a.d_.str() + ") vs sqrt(" + b.d_.str() + ")");
  return a.d_;
}

QuadExt operator+(const QuadExt& a, const QuadExt& b) {
  Rational d = QuadExt::merged_disc(a, b);
  return QuadExt(a.u_ + b.u_, a.v_ + b.v_, d);
}

QuadExt operator-(const QuadExt& a, const QuadExt& b) {
  Rational d = QuadExt::merged_disc(a, b);
  return QuadExt(a.u_ - b.u_, a.v_ - b.v_, d);
}

QuadExt operator*(const QuadExt& a, const QuadExt& b) {
  Rational d = QuadExt::merged_disc(a, b);
  // (u1 + v1*s)(u2 + v2*s) with s^2 = D
  return QuadExt(a.u_ * b.u_ + a.v_ * b.v_ * d, a.u_ * b.v_ + a.v_ * b.u_, d);
}

QuadExt operator/(const QuadExt& a, const QuadExt& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "quadratic-field division by zero");
  Rational d = QuadExt::merged_disc(a, b);
  // Multiply by the conjugate. The norm u^2 - v^2 D cannot vanish for a
  // nonzero canonical value: v != 0 with u^2 = v^2 D would make D a perfect
  // square, which canonicalization has already folded away.
  Rational norm = b.u_.squared() - b.v_.squared() * d;
  QuadExt conj(b.u_, -b.v_, d);
  QuadExt prod = a * conj;
  return QuadExt(prod.u_ / norm, prod.v_ / norm, d);
}

bool operator==(const QuadExt& a, const QuadExt& b) {
  if (a.is_rational() && b.is_rational()) return a.u_ == b.u_;
  Rational d = QuadExt::merged_disc(a, b);
  (void)d;
  return a.u_ == b.u_ && a.v_ == b.v_;
}

int QuadExt::sign() const {
  int su = u_.sign();
  int sv = v_.sign();
  if (sv == 0) return su;
  if (su == 0) return sv;  // sqrt(D) > 0 here: v != 0 implies D > 0
  if (su == sv) return su;
  // Opposite signs: compare u^2 against v^2 D.
  int cmp_sq = (u_.squared() == v_.squared() * d_) ? 0 : (u_.squared() > v_.squared() * d_ ? 1 : -1);
  if (cmp_sq == 0) return 0;  // cannot happen in canonical form, kept for safety
  return cmp_sq > 0 ? su : sv;
}

double QuadExt::to_double() const {
  return u_.to_double() + v_.to_double() * std::sqrt(d_.to_double());
}

std::string QuadExt::str() const {
  if (is_rational()) return u_.str();
  return u_.str() + " + " + v_.str() + "*sqrt(" + d_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const QuadExt& x) {
  return os << x.str();
}

}  // namespace conway
