#include "polyhex/rational.hpp"

#include "polyhex/error.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace polyhex {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 uabs(i128 x) { return x < 0 ? u128(0) - u128(x) : u128(x); }

u128 gcd(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(i128 x) { return x >= INT64_MIN && x <= INT64_MAX; }

std::string to_string(u128 x) {
  if (x == 0)
    return "0";
  std::string s;
  while (x != 0) {
    s.push_back(char('0' + int(x % 10)));
    x /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0)
    throw std::domain_error("rational with zero denominator");
  *this = from_wide(num, den);
}

Rational Rational::from_wide(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  u128 g = gcd(uabs(num), u128(den));
  if (g > 1) {
    num /= i128(g);
    den /= i128(g);
  }
  if (!fits64(num) || !fits64(den))
    throw RationalOverflow("rational result exceeds 64-bit range");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

double Rational::to_double() const {
  return static_cast<double>(static_cast<long double>(num_) / static_cast<long double>(den_));
}

std::string Rational::str() const {
  if (den_ == 1)
    return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::decimal(int max_fraction_digits) const {
  u128 n = uabs(num_);
  const u128 d = u128(den_);
  std::string out = num_ < 0 ? "-" : "";
  out += to_string(n / d);
  u128 rem = n % d;
  if (rem == 0)
    return out;

  std::string frac;
  for (int i = 0; i < max_fraction_digits && rem != 0; ++i) {
    rem *= 10;
    frac.push_back(char('0' + int(rem / d)));
    rem %= d;
  }
  if (rem != 0) {
    // round half up on the next digit
    if ((rem * 10) / d >= 5) {
      int i = static_cast<int>(frac.size()) - 1;
      while (i >= 0 && frac[i] == '9')
        frac[i--] = '0';
      if (i >= 0) {
        ++frac[i];
      } else {
        Rational whole = Rational(static_cast<std::int64_t>(n / d + 1));
        out = (num_ < 0 ? "-" : "") + whole.str();
      }
    }
    while (!frac.empty() && frac.back() == '0')
      frac.pop_back();
  }
  if (!frac.empty())
    out += "." + frac;
  return out;
}

Rational Rational::operator-() const { return from_wide(-i128(num_), den_); }

Rational &Rational::operator+=(const Rational &rhs) {
  *this = from_wide(i128(num_) * rhs.den_ + i128(rhs.num_) * den_, i128(den_) * rhs.den_);
  return *this;
}

Rational &Rational::operator-=(const Rational &rhs) {
  *this = from_wide(i128(num_) * rhs.den_ - i128(rhs.num_) * den_, i128(den_) * rhs.den_);
  return *this;
}

Rational &Rational::operator*=(const Rational &rhs) {
  *this = from_wide(i128(num_) * rhs.num_, i128(den_) * rhs.den_);
  return *this;
}

Rational &Rational::operator/=(const Rational &rhs) {
  if (rhs.num_ == 0)
    throw std::domain_error("division by zero rational");
  *this = from_wide(i128(num_) * rhs.den_, i128(den_) * rhs.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
  return i128(a.num_) * b.den_ <=> i128(b.num_) * a.den_;
}

std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

Rational pow(Rational r, unsigned k) {
  Rational out(1);
  for (unsigned i = 0; i < k; ++i)
    out *= r;
  return out;
}

} // namespace polyhex
