#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace mpcmix {

/// Exact fraction over arbitrary-precision integers, always kept in lowest
/// terms with a positive denominator. Division by zero throws DivisionByZero.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT: integers convert implicitly
  Rational(std::int64_t numerator, std::int64_t denominator);
  Rational(const mpz_class& numerator, const mpz_class& denominator);

  /// Accepts "a/b" (sign on a only), a bare integer "a", or a finite
  /// decimal such as "-0.25". Surrounding whitespace is ignored.
  static Rational parse(std::string_view text);

  std::string to_string() const;
  double to_double() const { return value_.get_d(); }

  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  Rational abs() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& x);

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& x) {
    return os << x.to_string();
  }

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

static_assert(std::totally_ordered<Rational>);

}  // namespace mpcmix
