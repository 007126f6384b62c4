#include "graphgame/rational.hpp"

#include <cctype>
#include <utility>

#include "graphgame/error.hpp"

namespace gg {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad(std::string_view text) {
  fail(ErrorKind::kParse, "not a rational number: \"" + std::string(text) + "\"");
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) fail(ErrorKind::kInvalidArgument, "zero denominator");
  value_ = mpq_class(num, 1);
  value_ /= den;
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  mpq_class value;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto num = body.substr(0, slash);
    const auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(text);
    mpz_class d(std::string(den), 10);
    if (d == 0) fail(ErrorKind::kParse, "zero denominator in \"" + std::string(text) + "\"");
    value = mpq_class(mpz_class(std::string(num), 10), d);
  } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const auto whole = body.substr(0, dot);
    const auto frac = body.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty())) {
      bad(text);
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    const std::string digits = std::string(whole) + std::string(frac);
    value = mpq_class(mpz_class(digits, 10), scale);
  } else {
    if (!all_digits(body)) bad(text);
    value = mpq_class(mpz_class(std::string(body), 10));
  }
  value.canonicalize();
  if (negative) value = -value;
  return Rational(std::move(value));
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorKind::kInvalidArgument, "division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& base, unsigned exponent) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.mpq().get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.mpq().get_den_mpz_t(), exponent);
  return Rational(mpq_class(num, den));
}

Rational pow2(unsigned exponent) {
  mpz_class v;
  mpz_ui_pow_ui(v.get_mpz_t(), 2, exponent);
  return Rational(mpq_class(v));
}

}  // namespace gg
