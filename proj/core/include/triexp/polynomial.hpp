#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "triexp/rational.hpp"

namespace triexp {

class IntPolynomial;

/// Dense univariate polynomial over the rationals, lowest degree first.
/// The coefficient vector never carries trailing zeros.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs);
  RationalPolynomial(std::initializer_list<Rational> coeffs);

  static RationalPolynomial constant(const Rational& c);
  static RationalPolynomial monomial(const Rational& c, std::size_t degree);

  [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
  [[nodiscard]] const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  [[nodiscard]] Rational coeff(std::size_t i) const;
  [[nodiscard]] const Rational& leading() const;

  [[nodiscard]] RationalPolynomial monic() const;
  [[nodiscard]] RationalPolynomial derivative() const;
  [[nodiscard]] Rational eval(const Rational& x) const;
  [[nodiscard]] RationalInterval eval(const RationalInterval& x) const;

  friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const RationalPolynomial& a, const Rational& s);
  friend RationalPolynomial operator-(const RationalPolynomial& a);
  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of a / b; b must be nonzero.
[[nodiscard]] std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                                       const RationalPolynomial& b);
/// Monic gcd (zero only when both inputs are zero).
[[nodiscard]] RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b);

struct BezoutResult {
  RationalPolynomial gcd;  // monic
  RationalPolynomial s;    // s*a + t*b = gcd
  RationalPolynomial t;
};
[[nodiscard]] BezoutResult extended_gcd(const RationalPolynomial& a, const RationalPolynomial& b);

/// Integer polynomial, lowest degree first.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  /// Clears denominators and removes the content; the leading coefficient is
  /// made positive.
  static IntPolynomial primitive_of(const RationalPolynomial& p);

  [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
  [[nodiscard]] const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  [[nodiscard]] BigInt coeff(std::size_t i) const;
  [[nodiscard]] const BigInt& leading() const;
  [[nodiscard]] BigInt content() const;

  /// Content 1 and positive leading coefficient.
  [[nodiscard]] IntPolynomial primitive() const;
  [[nodiscard]] IntPolynomial derivative() const;
  /// p / gcd(p, p'), made primitive.
  [[nodiscard]] IntPolynomial squarefree_part() const;
  [[nodiscard]] RationalPolynomial to_rational() const;

  [[nodiscard]] Rational eval(const Rational& x) const;
  [[nodiscard]] Sign sign_at(const Rational& x) const { return sign_of(eval(x)); }

  /// "x^3 - 3x^2 + 2x - 1" style rendering.
  [[nodiscard]] std::string to_string(char var = 'x') const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Sturm chain of a squarefree polynomial. Counts distinct real roots.
class SturmSequence {
 public:
  SturmSequence() = default;
  explicit SturmSequence(const IntPolynomial& squarefree);

  [[nodiscard]] std::size_t sign_changes(const Rational& x) const;
  /// Number of distinct roots in (lo, hi]; requires lo < hi.
  [[nodiscard]] std::size_t count_roots(const Rational& lo, const Rational& hi) const;
  [[nodiscard]] std::size_t size() const noexcept { return chain_.size(); }

 private:
  std::vector<IntPolynomial> chain_;
};

/// A bound B with every real root strictly inside (-B, B).
[[nodiscard]] Rational root_bound(const IntPolynomial& p);

}  // namespace triexp
