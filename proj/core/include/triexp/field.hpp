#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "triexp/polynomial.hpp"
#include "triexp/real_algebraic.hpp"

namespace triexp {

/// Q(q) realised as Q[x] / (defining polynomial of q), together with the real
/// embedding fixed by q's isolating interval.
class NumberField {
 public:
  explicit NumberField(RealAlgebraic generator);

  static std::shared_ptr<const NumberField> make(RealAlgebraic generator);

  [[nodiscard]] const RealAlgebraic& generator() const noexcept { return generator_; }
  [[nodiscard]] std::size_t degree() const noexcept { return degree_; }
  /// Monic modulus of the quotient ring.
  [[nodiscard]] const RationalPolynomial& modulus() const noexcept { return modulus_; }
  /// A narrow enclosure of the generator, computed once.
  [[nodiscard]] const RationalInterval& enclosure() const noexcept { return enclosure_; }

  [[nodiscard]] bool same_as(const NumberField& other) const;

  /// Reduces an arbitrary polynomial in q to a coefficient vector of length
  /// degree().
  [[nodiscard]] std::vector<Rational> reduce(const RationalPolynomial& p) const;

 private:
  RealAlgebraic generator_;
  std::size_t degree_;
  RationalPolynomial modulus_;
  RationalInterval enclosure_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// An element sum_i c_i q^i of Q(q). Equality is symbolic; ordering follows
/// the real embedding and is decided exactly.
class FieldElement {
 public:
  FieldElement(FieldPtr field, std::vector<Rational> coeffs);

  static FieldElement from_rational(const FieldPtr& field, const Rational& r);
  static FieldElement generator(const FieldPtr& field);

  [[nodiscard]] const FieldPtr& field() const noexcept { return field_; }
  [[nodiscard]] const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  [[nodiscard]] RationalPolynomial as_polynomial() const { return RationalPolynomial(coeffs_); }

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_rational() const;
  [[nodiscard]] Sign sign() const;
  [[nodiscard]] FieldElement inverse() const;
  /// q * this, cheaper than a general product.
  [[nodiscard]] FieldElement times_generator() const;

  [[nodiscard]] RationalInterval enclose(const Rational& width) const;
  [[nodiscard]] double approx() const;
  [[nodiscard]] std::string to_decimal(int digits) const;
  /// "1/2 + 3q - q^2"; plain rational for degree-one fields.
  [[nodiscard]] std::string to_string() const;
  [[nodiscard]] std::size_t hash() const noexcept;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a);
  friend FieldElement operator+(const FieldElement& a, const Rational& r);
  friend FieldElement operator-(const FieldElement& a, const Rational& r);
  friend FieldElement operator*(const FieldElement& a, const Rational& r);

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b);

 private:
  FieldPtr field_;
  std::vector<Rational> coeffs_;
};

enum class FieldOp { Add, Sub, Mul, Div };

/// Dispatching form of the four operations; throws BaseMismatch,
/// DivisionByZero or NotInvertible.
[[nodiscard]] FieldElement field_arith(const FieldElement& a, const FieldElement& b, FieldOp op);

/// Exact three-way comparison in the real embedding.
[[nodiscard]] std::strong_ordering compare(const FieldElement& a, const FieldElement& b);

struct FieldElementHash {
  std::size_t operator()(const FieldElement& e) const noexcept { return e.hash(); }
};

}  // namespace triexp
