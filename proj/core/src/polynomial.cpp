#include "triexp/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "triexp/error.hpp"

namespace triexp {

// ---- RationalPolynomial ---------------------------------------------------

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RationalPolynomial::RationalPolynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

RationalPolynomial RationalPolynomial::constant(const Rational& c) { return RationalPolynomial({c}); }

RationalPolynomial RationalPolynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return RationalPolynomial(std::move(v));
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational RationalPolynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& RationalPolynomial::leading() const {
  if (coeffs_.empty()) throw Error(ErrorKind::InvalidArgument, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

RationalPolynomial RationalPolynomial::monic() const {
  if (is_zero()) return {};
  const Rational lc = leading();
  std::vector<Rational> v = coeffs_;
  for (auto& c : v) c /= lc;
  return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<long>(i);
  return RationalPolynomial(std::move(v));
}

Rational RationalPolynomial::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalInterval RationalPolynomial::eval(const RationalInterval& x) const {
  if (coeffs_.empty()) return RationalInterval(Rational(0));
  RationalInterval acc(coeffs_.back());
  for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return RationalPolynomial(std::move(v));
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
  return RationalPolynomial(std::move(v));
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RationalPolynomial(std::move(v));
}

RationalPolynomial operator*(const RationalPolynomial& a, const Rational& s) {
  std::vector<Rational> v = a.coeffs_;
  for (auto& c : v) c *= s;
  return RationalPolynomial(std::move(v));
}

RationalPolynomial operator-(const RationalPolynomial& a) { return a * Rational(-1); }

std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {RationalPolynomial{}, a};
  std::vector<Rational> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<Rational> quot(rem.size() - db);
  const Rational lb = bc.back();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (sgn(rem[k]) == 0) continue;
    const Rational f = rem[k] / lb;
    quot[k - db] = f;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= f * bc[j];
  }
  rem.resize(db);
  return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b) {
  RationalPolynomial x = a;
  RationalPolynomial y = b;
  while (!y.is_zero()) {
    RationalPolynomial r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

BezoutResult extended_gcd(const RationalPolynomial& a, const RationalPolynomial& b) {
  RationalPolynomial r0 = a, r1 = b;
  RationalPolynomial s0 = RationalPolynomial::constant(1), s1;
  RationalPolynomial t0, t1 = RationalPolynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    RationalPolynomial s2 = s0 - q * s1;
    RationalPolynomial t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Rational lc = r0.leading();
  const Rational inv = 1 / lc;
  return {r0 * inv, s0 * inv, t0 * inv};
}

// ---- IntPolynomial --------------------------------------------------------

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::primitive_of(const RationalPolynomial& p) {
  if (p.is_zero()) return {};
  BigInt lcm_den = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigInt> v;
  v.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) v.emplace_back(c.get_num() * (lcm_den / c.get_den()));
  return IntPolynomial(std::move(v)).primitive();
}

BigInt IntPolynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

const BigInt& IntPolynomial::leading() const {
  if (coeffs_.empty()) throw Error(ErrorKind::InvalidArgument, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPolynomial IntPolynomial::primitive() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (sgn(coeffs_.back()) < 0) g = -g;
  std::vector<BigInt> v = coeffs_;
  for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<long>(i);
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::squarefree_part() const {
  if (degree() <= 0) return primitive();
  const RationalPolynomial p = to_rational();
  const RationalPolynomial g = gcd(p, p.derivative());
  return primitive_of(divmod(p, g).first);
}

RationalPolynomial IntPolynomial::to_rational() const {
  std::vector<Rational> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.emplace_back(c);
  return RationalPolynomial(std::move(v));
}

Rational IntPolynomial::eval(const Rational& x) const {
  if (coeffs_.empty()) return Rational(0);
  // Homogenised Horner: sum c_i n^i d^(k-i), divided by d^k once at the end.
  const BigInt& n = x.get_num();
  const BigInt& d = x.get_den();
  BigInt acc = coeffs_.back();
  BigInt dpow = 1;
  for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) {
    dpow *= d;
    acc = acc * n + *it * dpow;
  }
  Rational r(acc, dpow);
  r.canonicalize();
  return r;
}

std::string IntPolynomial::to_string(char var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigInt& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    const BigInt mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

// ---- Sturm ----------------------------------------------------------------

SturmSequence::SturmSequence(const IntPolynomial& squarefree) {
  if (squarefree.is_zero()) throw Error(ErrorKind::InvalidArgument, "Sturm chain of zero polynomial");
  chain_.push_back(squarefree);
  if (squarefree.degree() == 0) return;
  chain_.push_back(squarefree.derivative().primitive());
  RationalPolynomial a = chain_[0].to_rational();
  RationalPolynomial b = chain_[1].to_rational();
  while (b.degree() > 0) {
    RationalPolynomial r = -divmod(a, b).second;
    if (r.is_zero()) break;
    // primitive_of normalises the leading sign; keep the true sign instead.
    IntPolynomial ir = IntPolynomial::primitive_of(r);
    if (sgn(r.leading()) < 0) {
      std::vector<BigInt> v = ir.coefficients();
      for (auto& c : v) c = -c;
      ir = IntPolynomial(std::move(v));
    }
    chain_.push_back(ir);
    a = std::move(b);
    b = std::move(r);
  }
}

std::size_t SturmSequence::sign_changes(const Rational& x) const {
  std::size_t changes = 0;
  int prev = 0;
  for (const auto& p : chain_) {
    const int s = sgn(p.eval(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

std::size_t SturmSequence::count_roots(const Rational& lo, const Rational& hi) const {
  if (!(lo < hi)) throw Error(ErrorKind::InvalidArgument, "Sturm count needs lo < hi");
  const std::size_t a = sign_changes(lo);
  const std::size_t b = sign_changes(hi);
  return a >= b ? a - b : 0;
}

Rational root_bound(const IntPolynomial& p) {
  if (p.degree() <= 0) return Rational(1);
  const BigInt lc = abs(p.leading());
  BigInt mx = 0;
  for (int i = 0; i < p.degree(); ++i) mx = std::max(mx, BigInt(abs(p.coefficients()[static_cast<std::size_t>(i)])));
  // Cauchy: |z| <= 1 + max|a_i|/|a_n|; +1 keeps the bound strict.
  return make_rational(mx, lc) + 2;
}

}  // namespace triexp
