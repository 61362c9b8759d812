#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

#include "conway/error.hpp"

namespace conway {

/// Arbitrary-precision rational in canonical form: denominator > 0 and
/// gcd(numerator, denominator) = 1. All arithmetic is exact.
class Rational {
public:
  Rational() : q_(0) {}
  Rational(int n) : q_(n) {}
  Rational(long n) : q_(n) {}
  Rational(long n, long d);
  Rational(const mpz_class& n, const mpz_class& d);
  explicit Rational(const mpq_class& q);

  /// Parses "n", "n/d", or a plain decimal such as "0.25" (converted exactly).
  static Rational parse(std::string_view text);

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rational abs() const { return Rational(mpq_class(::abs(q_))); }
  Rational squared() const { return Rational(mpq_class(q_ * q_)); }
  Rational reciprocal() const;

  /// True iff the value is the square of a rational; the nonnegative root is
  /// written to `root` when supplied.
  bool is_perfect_square(Rational* root = nullptr) const;

  double to_double() const { return q_.get_d(); }

  /// "n/d", or just "n" when the denominator is 1.
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-q_)); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) != 0; }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) >= 0; }

private:
  mpq_class q_;  // kept canonical
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace conway
