#pragma once

#include <string>

#include "conway/rational.hpp"

namespace conway {

/// Tolerances for the floating-point cross-check backend. Exact code never
/// consults these; only float re-evaluations are compared with them.
struct FloatPolicy {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
};

/// |a-b| <= max(rel_tol * max(|a|,|b|), abs_tol).
bool approx_equal(double a, double b, const FloatPolicy& policy = {});

/// Element u + v*sqrt(D) of the quadratic extension field Q(sqrt(D)), D >= 0.
///
/// Canonical form: if D = 0, or D is the square of a rational, the radical
/// part is folded into u and v = 0. Arithmetic between two irrational values
/// requires matching D; values with v = 0 are plain rationals and combine
/// with any D.
class QuadExt {
public:
  QuadExt() : u_(0), v_(0), d_(0) {}
  QuadExt(const Rational& value) : u_(value), v_(0), d_(0) {}
  QuadExt(int value) : u_(value), v_(0), d_(0) {}
  QuadExt(const Rational& u, const Rational& v, const Rational& d);

  /// Lifts a rational into Q(sqrt(d)).
  static QuadExt rational_in(const Rational& value, const Rational& d) { return QuadExt(value, Rational(0), d); }
  /// The element sqrt(d) itself.
  static QuadExt sqrt_of(const Rational& d) { return QuadExt(Rational(0), Rational(1), d); }

  const Rational& u() const { return u_; }
  const Rational& v() const { return v_; }
  const Rational& disc() const { return d_; }

  bool is_rational() const { return v_.is_zero(); }
  bool is_zero() const { return u_.is_zero() && v_.is_zero(); }

  /// Exact sign of the real number u + v*sqrt(D); no floating point involved.
  int sign() const;

  double to_double() const;
  std::string str() const;

  QuadExt operator-() const { return QuadExt(-u_, -v_, d_); }

  friend QuadExt operator+(const QuadExt& a, const QuadExt& b);
  friend QuadExt operator-(const QuadExt& a, const QuadExt& b);
  friend QuadExt operator*(const QuadExt& a, const QuadExt& b);
  friend QuadExt operator/(const QuadExt& a, const QuadExt& b);

  friend QuadExt operator*(const QuadExt& a, const Rational& s) { return QuadExt(a.u_ * s, a.v_ * s, a.d_); }
  friend QuadExt operator*(const Rational& s, const QuadExt& a) { return a * s; }

  friend bool operator==(const QuadExt& a, const QuadExt& b);
  friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }

private:
  void canonicalize();
  // Shared D for a binary operation; throws MismatchedDiscriminant when both
  // operands are irrational over different fields.
  static Rational merged_disc(const QuadExt& a, const QuadExt& b);

  Rational u_, v_, d_;
};

std::ostream& operator<<(std::ostream& os, const QuadExt& x);

}  // namespace conway
