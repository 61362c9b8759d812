#include "conway/rational.hpp"

#include <cctype>
#include <ostream>

namespace conway {

namespace {

void require_nonzero_den(const mpz_class& d) {
  if (d == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
}

}  // namespace

Rational::Rational(long n, long d) : q_() {
  require_nonzero_den(mpz_class(d));
  q_ = mpq_class(n, d);
  q_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
  require_nonzero_den(d);
  q_ = mpq_class(n) / mpq_class(d);  // gmp division canonicalizes
}

Rational::Rational(const mpq_class& q) : q_(q) {
  q_.canonicalize();
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "reciprocal of zero");
  return Rational(mpq_class(1) / q_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational division by zero");
  return Rational(mpq_class(a.q_ / b.q_));
}

bool Rational::is_perfect_square(Rational* root) const {
  if (sign() < 0) return false;
  const mpz_class& n = num();
  const mpz_class& d = den();
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
  if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return false;
  if (root != nullptr) {
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    *root = Rational(rn, rd);
  }
  return true;
}

std::string Rational::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

Rational Rational::parse(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'");
  };

  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) return fail();

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
    if (s.empty()) return fail();
  }

  auto all_digits = [](std::string_view v) {
    if (v.empty()) return false;
    for (char ch : v)
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
  };

  mpq_class value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view n = s.substr(0, slash);
    std::string_view d = s.substr(slash + 1);
    if (!all_digits(n) || !all_digits(d)) return fail();
    mpz_class nn{std::string(n)};
    mpz_class dd{std::string(d)};
    if (dd == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
    value = mpq_class(nn) / mpq_class(dd);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view intpart = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (intpart.empty() && frac.empty()) return fail();
    if (!intpart.empty() && !all_digits(intpart)) return fail();
    if (!frac.empty() && !all_digits(frac)) return fail();
    mpz_class scaled(std::string(intpart) + std::string(frac), 10);
    mpz_class denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), 10, frac.size());
    value = mpq_class(scaled) / mpq_class(denom);
  } else {
    if (!all_digits(s)) return fail();
    value = mpq_class(mpz_class(std::string(s)));
  }

  if (negative) value = -value;
  return Rational(value);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace conway
