#include "triexp/field.hpp"

#include <sstream>

#include "triexp/error.hpp"

namespace triexp {

namespace {
constexpr unsigned kEnclosureBits = 96;

void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (a.field() != b.field() && !a.field()->same_as(*b.field())) {
    throw Error(ErrorKind::BaseMismatch, "operands live in different fields");
  }
}
}  // namespace

NumberField::NumberField(RealAlgebraic generator)
    : generator_(std::move(generator)),
      degree_(static_cast<std::size_t>(generator_.degree())),
      modulus_(generator_.defining().to_rational().monic()),
      enclosure_(generator_.refine(dyadic_width(kEnclosureBits))) {}

std::shared_ptr<const NumberField> NumberField::make(RealAlgebraic generator) {
  return std::make_shared<const NumberField>(std::move(generator));
}

bool NumberField::same_as(const NumberField& other) const {
  return this == &other || (degree_ == other.degree_ && modulus_ == other.modulus_ && generator_ == other.generator_);
}

std::vector<Rational> NumberField::reduce(const RationalPolynomial& p) const {
  std::vector<Rational> out;
  if (p.degree() < static_cast<int>(degree_)) {
    out = p.coefficients();
  } else {
    out = divmod(p, modulus_).second.coefficients();
  }
  out.resize(degree_);
  return out;
}

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coeffs) : field_(std::move(field)) {
  if (!field_) throw Error(ErrorKind::InvalidArgument, "field element without a field");
  if (coeffs.size() > field_->degree()) {
    coeffs_ = field_->reduce(RationalPolynomial(std::move(coeffs)));
  } else {
    coeffs_ = std::move(coeffs);
    coeffs_.resize(field_->degree());
  }
}

FieldElement FieldElement::from_rational(const FieldPtr& field, const Rational& r) {
  return FieldElement(field, std::vector<Rational>{r});
}

FieldElement FieldElement::generator(const FieldPtr& field) {
  return FieldElement(field, std::vector<Rational>{Rational(0), Rational(1)});
}

bool FieldElement::is_zero() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

bool FieldElement::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) return false;
  }
  return true;
}

Sign FieldElement::sign() const {
  if (is_rational()) return sign_of(coeffs_[0]);
  return sign_of_poly_at(as_polynomial(), field_->generator(), field_->enclosure());
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (is_rational()) return from_rational(field_, 1 / coeffs_[0]);
  const BezoutResult b = extended_gcd(as_polynomial(), field_->modulus());
  if (b.gcd.degree() != 0) {
    throw Error(ErrorKind::NotInvertible, to_string() + " is a zero divisor modulo the defining polynomial");
  }
  return FieldElement(field_, field_->reduce(b.s));
}

FieldElement FieldElement::times_generator() const {
  const std::size_t d = coeffs_.size();
  const auto& m = field_->modulus().coefficients();
  std::vector<Rational> out(d);
  const Rational top = coeffs_[d - 1];
  for (std::size_t i = d - 1; i > 0; --i) out[i] = coeffs_[i - 1];
  out[0] = 0;
  if (sgn(top) != 0) {
    for (std::size_t i = 0; i < d; ++i) out[i] -= top * m[i];
  }
  return FieldElement(field_, std::move(out));
}

RationalInterval FieldElement::enclose(const Rational& width) const {
  if (is_rational()) return RationalInterval(coeffs_[0]);
  const RationalPolynomial p = as_polynomial();
  RationalInterval cur = field_->enclosure();
  for (;;) {
    RationalInterval v = p.eval(cur);
    if (v.width() <= width) return v;
    cur = field_->generator().refine_from(cur, cur.width() / 16);
  }
}

double FieldElement::approx() const { return enclose(dyadic_width(64)).midpoint().get_d(); }

std::string FieldElement::to_decimal(int digits) const {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::max(digits, 0) + 4));
  return triexp::to_decimal(enclose(Rational(BigInt(1), scale)).midpoint(), digits);
}

std::string FieldElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    const Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << triexp::to_string(mag);
      continue;
    }
    if (mag != 1) os << triexp::to_string(mag) << "*";
    os << "q";
    if (i >= 2) os << "^" << i;
  }
  return first ? "0" : os.str();
}

std::size_t FieldElement::hash() const noexcept {
  std::size_t h = coeffs_.size();
  for (const auto& c : coeffs_) h ^= hash_value(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  std::vector<Rational> v(a.coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeffs_[i] + b.coeffs_[i];
  return FieldElement(a.field_, std::move(v));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  std::vector<Rational> v(a.coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeffs_[i] - b.coeffs_[i];
  return FieldElement(a.field_, std::move(v));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  if (a.is_rational()) return b * a.coeffs_[0];
  if (b.is_rational()) return a * b.coeffs_[0];
  return FieldElement(a.field_, a.field_->reduce(a.as_polynomial() * b.as_polynomial()));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  if (b.is_rational()) return a * (1 / b.coeffs_[0]);
  return a * b.inverse();
}

FieldElement operator-(const FieldElement& a) { return a * Rational(-1); }

FieldElement operator+(const FieldElement& a, const Rational& r) {
  std::vector<Rational> v = a.coeffs_;
  v[0] += r;
  return FieldElement(a.field_, std::move(v));
}

FieldElement operator-(const FieldElement& a, const Rational& r) { return a + Rational(-r); }

FieldElement operator*(const FieldElement& a, const Rational& r) {
  std::vector<Rational> v = a.coeffs_;
  for (auto& c : v) c *= r;
  return FieldElement(a.field_, std::move(v));
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return a.coeffs_ == b.coeffs_;
}

std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
  switch ((a - b).sign()) {
    case Sign::Negative: return std::strong_ordering::less;
    case Sign::Zero: return std::strong_ordering::equal;
    case Sign::Positive: return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

FieldElement field_arith(const FieldElement& a, const FieldElement& b, FieldOp op) {
  switch (op) {
    case FieldOp::Add: return a + b;
    case FieldOp::Sub: return a - b;
    case FieldOp::Mul: return a * b;
    case FieldOp::Div: return a / b;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown field operation");
}

std::strong_ordering compare(const FieldElement& a, const FieldElement& b) { return a <=> b; }

}  // namespace triexp
