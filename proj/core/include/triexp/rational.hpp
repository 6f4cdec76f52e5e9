#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace triexp {

using BigInt = mpz_class;
using Rational = mpq_class;

enum class Sign : int { Negative = -1, Zero = 0, Positive = 1 };

[[nodiscard]] Sign sign_of(const Rational& r);
[[nodiscard]] Sign sign_of(const BigInt& z);
[[nodiscard]] Sign operator*(Sign a, Sign b);
[[nodiscard]] Sign operator-(Sign s);

/// num/den in lowest terms. mpq_class(num, den) alone does not reduce, and
/// GMP arithmetic assumes canonical operands.
[[nodiscard]] Rational make_rational(const BigInt& num, const BigInt& den);

/// Parses "7", "-5/2", "2.5", "1e-3" and "-0.125" into an exact rational.
[[nodiscard]] Rational parse_rational(std::string_view text);

/// "p/q" (or "p" when q = 1), always in lowest terms.
[[nodiscard]] std::string to_string(const Rational& r);

/// Fixed-point decimal rendering with `digits` digits after the point,
/// rounded half away from zero.
[[nodiscard]] std::string to_decimal(const Rational& r, int digits);

/// 2^-bits as an exact rational.
[[nodiscard]] Rational dyadic_width(unsigned bits);

[[nodiscard]] std::size_t hash_value(const Rational& r) noexcept;

/// Closed interval with rational endpoints; lo <= hi.
struct RationalInterval {
  Rational lo;
  Rational hi;

  RationalInterval() = default;
  explicit RationalInterval(const Rational& point) : lo(point), hi(point) {}
  RationalInterval(Rational l, Rational h);

  [[nodiscard]] Rational width() const { return hi - lo; }
  [[nodiscard]] Rational midpoint() const { return (lo + hi) / 2; }
  [[nodiscard]] bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  [[nodiscard]] bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
  [[nodiscard]] bool is_point() const { return lo == hi; }

  friend bool operator==(const RationalInterval&, const RationalInterval&) = default;
};

[[nodiscard]] RationalInterval operator+(const RationalInterval& a, const RationalInterval& b);
[[nodiscard]] RationalInterval operator-(const RationalInterval& a, const RationalInterval& b);
[[nodiscard]] RationalInterval operator*(const RationalInterval& a, const RationalInterval& b);
[[nodiscard]] RationalInterval operator*(const RationalInterval& a, const Rational& s);
[[nodiscard]] RationalInterval operator+(const RationalInterval& a, const Rational& s);

}  // namespace triexp
