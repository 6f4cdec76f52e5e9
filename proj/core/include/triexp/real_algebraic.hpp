#pragma once

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "triexp/polynomial.hpp"
#include "triexp/rational.hpp"

namespace triexp {

/// An exact real algebraic number: a squarefree integer polynomial with no
/// rational roots (or a linear one) together with an open isolating interval
/// holding exactly one of its roots. Rational values are stored directly.
///
/// Immutable; copies share the underlying data.
class RealAlgebraic {
 public:
  /// The rational number r, with defining polynomial den*x - num.
  static RealAlgebraic rational(const Rational& r);

  /// The unique root of `p` inside the open interval (lo, hi). Throws
  /// InvalidArgument unless exactly one real root of p lies strictly inside.
  static RealAlgebraic from_isolating(const IntPolynomial& p, const Rational& lo, const Rational& hi);

  RealAlgebraic() : RealAlgebraic(rational(Rational(0))) {}

  [[nodiscard]] const IntPolynomial& defining() const noexcept { return data_->defining; }
  [[nodiscard]] int degree() const noexcept { return data_->defining.degree(); }
  [[nodiscard]] bool is_rational() const noexcept { return data_->is_rational; }
  /// Throws InvalidArgument for irrational values.
  [[nodiscard]] const Rational& rational_value() const;
  /// The stored isolating interval (a point for rationals).
  [[nodiscard]] RationalInterval isolating() const { return {data_->lo, data_->hi}; }

  /// An interval of width <= `width` containing the value, by bisection.
  [[nodiscard]] RationalInterval refine(const Rational& width) const;
  /// Shrinks `start` (which must contain the value) to width <= `width`.
  [[nodiscard]] RationalInterval refine_from(RationalInterval start, const Rational& width) const;

  [[nodiscard]] std::strong_ordering compare(const Rational& r) const;
  [[nodiscard]] double approx() const;
  /// Decimal rendering correct to `digits` places (rounded from an enclosure).
  [[nodiscard]] std::string to_decimal(int digits) const;
  /// "root of x^2 - 2x - 1 in (2, 3)" or the rational itself.
  [[nodiscard]] std::string describe() const;

  friend bool operator==(const RealAlgebraic& a, const RealAlgebraic& b);
  friend std::strong_ordering operator<=>(const RealAlgebraic& a, const RealAlgebraic& b);

 private:
  struct Data {
    IntPolynomial defining;
    SturmSequence sturm;
    Rational lo;
    Rational hi;
    bool is_rational = false;
    Rational value;  // meaningful only when is_rational
    Sign sign_at_lo = Sign::Zero;
  };
  explicit RealAlgebraic(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  static RealAlgebraic irrational(IntPolynomial defining, Rational lo, Rational hi);

  friend std::vector<RealAlgebraic> isolate_real_roots(const IntPolynomial& p);

  std::shared_ptr<const Data> data_;
};

/// Every distinct real root of p, ascending, with pairwise-disjoint isolating
/// intervals. p must be nonzero.
[[nodiscard]] std::vector<RealAlgebraic> isolate_real_roots(const IntPolynomial& p);

/// Exact sign of p at x. Zero exactly when x is a root of p.
[[nodiscard]] Sign sign_of_poly_at(const IntPolynomial& p, const RealAlgebraic& x);
[[nodiscard]] Sign sign_of_poly_at(const RationalPolynomial& p, const RealAlgebraic& x);

/// Same, starting the refinement from an enclosure already known to contain x.
[[nodiscard]] Sign sign_of_poly_at(const RationalPolynomial& p, const RealAlgebraic& x,
                                   const RationalInterval& enclosure);

[[nodiscard]] RationalInterval refine(const RealAlgebraic& x, const Rational& width);

namespace constants {

/// Real root of x^3 - 3x^2 + 2x - 1, approximately 2.32472.
[[nodiscard]] const RealAlgebraic& critical_base();
/// (3 + sqrt 5) / 2, the larger root of x^2 - 3x + 1.
[[nodiscard]] const RealAlgebraic& golden_square();
/// 1 + sqrt 2, the larger root of x^2 - 2x - 1.
[[nodiscard]] const RealAlgebraic& silver_ratio();

[[nodiscard]] const IntPolynomial& critical_polynomial();   // x^3 - 3x^2 + 2x - 1
[[nodiscard]] const IntPolynomial& golden_square_polynomial();  // x^2 - 3x + 1

}  // namespace constants

}  // namespace triexp
