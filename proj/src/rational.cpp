#include "mpcmix/rational.hpp"

#include <cctype>

#include "mpcmix/error.hpp"

namespace mpcmix {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(mpz_class(std::to_string(value), 10)) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
    : Rational(mpz_class(std::to_string(numerator), 10), mpz_class(std::to_string(denominator), 10)) {}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw DivisionByZero();
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string_view original = text;
  text = trim(text);
  auto fail = [&]() -> ParseError {
    return ParseError("invalid rational: \"" + std::string(original) + "\"");
  };

  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  mpz_class num;
  mpz_class den = 1;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto top = text.substr(0, slash);
    const auto bottom = text.substr(slash + 1);
    if (!all_digits(top) || !all_digits(bottom)) throw fail();
    num = mpz_class(std::string(top), 10);
    den = mpz_class(std::string(bottom), 10);
    if (den == 0) throw fail();
  } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw fail();
    }
    num = mpz_class(std::string(whole) + std::string(frac), 10);
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
  } else {
    if (!all_digits(text)) throw fail();
    num = mpz_class(std::string(text), 10);
  }
  if (negative) num = -num;
  return Rational(num, den);
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  value_ /= rhs.value_;
  return *this;
}

Rational operator-(const Rational& x) { return Rational(mpq_class(-x.value_)); }

}  // namespace mpcmix
