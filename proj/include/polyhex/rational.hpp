#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace polyhex {

/**
 * Exact fraction with 64-bit numerator and denominator.
 *
 * Always reduced, with a positive denominator and the sign on the numerator.
 * Intermediate results are formed in 128 bits; a result that does not fit
 * back into 64 bits throws RationalOverflow instead of wrapping.
 */
class Rational {
public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {} // NOLINT: implicit from integers
  /// Throws std::domain_error on a zero denominator.
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  double to_double() const;

  /// "num/den", or just "num" for integers.
  std::string str() const;

  /**
   * Decimal expansion. Exact when the denominator has no prime factors other
   * than 2 and 5; otherwise rounded to max_fraction_digits places with
   * trailing zeros trimmed.
   */
  std::string decimal(int max_fraction_digits = 20) const;

  Rational operator-() const;
  Rational &operator+=(const Rational &rhs);
  Rational &operator-=(const Rational &rhs);
  Rational &operator*=(const Rational &rhs);
  Rational &operator/=(const Rational &rhs);

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

  friend bool operator==(const Rational &, const Rational &) = default;
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b);

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;

  static Rational from_wide(__int128 num, __int128 den);
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

/// r^k for k >= 0.
Rational pow(Rational r, unsigned k);

} // namespace polyhex
