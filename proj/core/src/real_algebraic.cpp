#include "triexp/real_algebraic.hpp"

#include <algorithm>

#include "triexp/error.hpp"

namespace triexp {

namespace {

// A point strictly inside (lo, hi) that is not a root of p. Tries 1/2, 1/3,
// 2/3, 1/4, ... of the way across; p has finitely many roots so this stops.
Rational split_point(const IntPolynomial& p, const Rational& lo, const Rational& hi) {
  const Rational w = hi - lo;
  for (long k = 2;; ++k) {
    for (long j = 1; j < k; ++j) {
      const Rational m = lo + w * make_rational(j, k);
      if (sgn(p.eval(m)) != 0) return m;
    }
  }
}

struct RawRoot {
  Rational lo;
  Rational hi;
  bool rational = false;
  Rational value;
};

void isolate_in(const IntPolynomial& p, const SturmSequence& sturm, const Rational& lo, const Rational& hi,
                std::size_t count, std::vector<RawRoot>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.push_back({lo, hi, false, Rational(0)});
    return;
  }
  const Rational m = split_point(p, lo, hi);
  const std::size_t left = sturm.count_roots(lo, m);
  isolate_in(p, sturm, lo, m, left, out);
  isolate_in(p, sturm, m, hi, count - left, out);
}

// A rational root a/b of a primitive p has b | lc(p), so lc * root is an
// integer. Once the interval is narrower than 1/lc at most one candidate remains.
void detect_rational_root(const IntPolynomial& p, RawRoot& root) {
  const BigInt lc = abs(p.leading());
  const Sign slo = p.sign_at(root.lo);
  Rational lo = root.lo, hi = root.hi;
  const Rational limit(BigInt(1), lc);
  while (hi - lo >= limit) {
    const Rational m = (lo + hi) / 2;
    const Sign sm = p.sign_at(m);
    if (sm == Sign::Zero) {
      root.rational = true;
      root.value = m;
      return;
    }
    if (sm == slo) {
      lo = m;
    } else {
      hi = m;
    }
  }
  const Rational scaled_lo = lo * Rational(lc);
  BigInt candidate;
  mpz_fdiv_q(candidate.get_mpz_t(), scaled_lo.get_num_mpz_t(), scaled_lo.get_den_mpz_t());
  candidate += 1;
  Rational r(candidate, lc);
  r.canonicalize();
  if (r < hi && p.sign_at(r) == Sign::Zero) {
    root.rational = true;
    root.value = r;
  }
}

}  // namespace

RealAlgebraic RealAlgebraic::rational(const Rational& r) {
  auto d = std::make_shared<Data>();
  d->defining = IntPolynomial(std::vector<BigInt>{-r.get_num(), r.get_den()});
  d->sturm = SturmSequence(d->defining);
  d->lo = r;
  d->hi = r;
  d->is_rational = true;
  d->value = r;
  return RealAlgebraic(std::move(d));
}

RealAlgebraic RealAlgebraic::irrational(IntPolynomial defining, Rational lo, Rational hi) {
  auto d = std::make_shared<Data>();
  d->defining = std::move(defining);
  d->sturm = SturmSequence(d->defining);
  d->lo = std::move(lo);
  d->hi = std::move(hi);
  d->sign_at_lo = d->defining.sign_at(d->lo);
  return RealAlgebraic(std::move(d));
}

RealAlgebraic RealAlgebraic::from_isolating(const IntPolynomial& p, const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw Error(ErrorKind::InvalidArgument, "isolating interval needs lo < hi");
  if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "zero polynomial has no isolated root");
  std::vector<RealAlgebraic> inside;
  for (auto& root : isolate_real_roots(p)) {
    if (root.compare(lo) == std::strong_ordering::greater && root.compare(hi) == std::strong_ordering::less) {
      inside.push_back(std::move(root));
    }
  }
  if (inside.size() != 1) {
    throw Error(ErrorKind::InvalidArgument, p.to_string() + " has " + std::to_string(inside.size()) +
                                                " real roots in (" + to_string(lo) + ", " + to_string(hi) +
                                                "), expected exactly one");
  }
  return inside.front();
}

const Rational& RealAlgebraic::rational_value() const {
  if (!data_->is_rational) throw Error(ErrorKind::InvalidArgument, "value is irrational: " + describe());
  return data_->value;
}

RationalInterval RealAlgebraic::refine(const Rational& width) const {
  return refine_from(isolating(), width);
}

RationalInterval RealAlgebraic::refine_from(RationalInterval start, const Rational& width) const {
  if (sgn(width) <= 0) throw Error(ErrorKind::InvalidArgument, "refinement width must be positive");
  if (data_->is_rational) return RationalInterval(data_->value);
  Rational lo = std::max(start.lo, data_->lo);
  Rational hi = std::min(start.hi, data_->hi);
  if (!(lo < hi)) throw Error(ErrorKind::InvalidArgument, "enclosure does not meet the isolating interval");
  const Sign slo = data_->defining.sign_at(lo);
  while (hi - lo > width) {
    const Rational m = (lo + hi) / 2;
    if (data_->defining.sign_at(m) == slo) {
      lo = m;
    } else {
      hi = m;
    }
  }
  return {lo, hi};
}

std::strong_ordering RealAlgebraic::compare(const Rational& r) const {
  if (data_->is_rational) {
    const int c = cmp(data_->value, r);
    return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  if (r <= data_->lo) return std::strong_ordering::greater;
  if (r >= data_->hi) return std::strong_ordering::less;
  // No rational roots, so the sign at r is nonzero.
  return data_->defining.sign_at(r) == data_->sign_at_lo ? std::strong_ordering::greater
                                                          : std::strong_ordering::less;
}

double RealAlgebraic::approx() const {
  if (data_->is_rational) return data_->value.get_d();
  return refine(dyadic_width(64)).midpoint().get_d();
}

std::string RealAlgebraic::to_decimal(int digits) const {
  if (data_->is_rational) return triexp::to_decimal(data_->value, digits);
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::max(digits, 0) + 4));
  return triexp::to_decimal(refine(Rational(BigInt(1), scale)).midpoint(), digits);
}

std::string RealAlgebraic::describe() const {
  if (data_->is_rational) return to_string(data_->value);
  return "root of " + data_->defining.to_string() + " in (" + to_string(data_->lo) + ", " + to_string(data_->hi) +
         ")";
}

bool operator==(const RealAlgebraic& a, const RealAlgebraic& b) {
  if (a.data_ == b.data_) return true;
  if (a.is_rational() || b.is_rational()) {
    return a.is_rational() && b.is_rational() && a.data_->value == b.data_->value;
  }
  const RationalPolynomial g = gcd(a.defining().to_rational(), b.defining().to_rational());
  if (g.degree() < 1) return false;
  const Rational lo = std::max(a.data_->lo, b.data_->lo);
  const Rational hi = std::min(a.data_->hi, b.data_->hi);
  if (!(lo < hi)) return false;
  return SturmSequence(IntPolynomial::primitive_of(g)).count_roots(lo, hi) > 0;
}

std::strong_ordering operator<=>(const RealAlgebraic& a, const RealAlgebraic& b) {
  if (a.is_rational()) return 0 <=> b.compare(a.data_->value);
  if (b.is_rational()) return a.compare(b.data_->value);
  if (a == b) return std::strong_ordering::equal;
  RationalInterval ia = a.isolating();
  RationalInterval ib = b.isolating();
  while (!(ia.hi < ib.lo || ib.hi < ia.lo)) {
    ia = a.refine_from(ia, ia.width() / 4);
    ib = b.refine_from(ib, ib.width() / 4);
  }
  return ia.hi < ib.lo ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::vector<RealAlgebraic> isolate_real_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "cannot isolate the roots of the zero polynomial");
  const IntPolynomial sq = p.squarefree_part();
  if (sq.degree() <= 0) return {};
  const SturmSequence sturm(sq);
  const Rational bound = root_bound(sq);
  std::vector<RawRoot> raw;
  isolate_in(sq, sturm, -bound, bound, sturm.count_roots(-bound, bound), raw);

  RationalPolynomial reduced = sq.to_rational();
  for (auto& r : raw) {
    detect_rational_root(sq, r);
    if (r.rational) {
      reduced = divmod(reduced, RationalPolynomial{-r.value, Rational(1)}).first;
    }
  }
  const IntPolynomial irreducible_part = IntPolynomial::primitive_of(reduced);

  std::vector<RealAlgebraic> out;
  out.reserve(raw.size());
  for (auto& r : raw) {
    if (r.rational) {
      out.push_back(RealAlgebraic::rational(r.value));
    } else {
      out.push_back(RealAlgebraic::irrational(irreducible_part, r.lo, r.hi));
    }
  }
  return out;
}

Sign sign_of_poly_at(const IntPolynomial& p, const RealAlgebraic& x) {
  return sign_of_poly_at(p.to_rational(), x);
}

Sign sign_of_poly_at(const RationalPolynomial& p, const RealAlgebraic& x) {
  return sign_of_poly_at(p, x, x.isolating());
}

Sign sign_of_poly_at(const RationalPolynomial& p, const RealAlgebraic& x, const RationalInterval& enclosure) {
  if (p.is_zero()) return Sign::Zero;
  if (x.is_rational()) return sign_of(p.eval(x.rational_value()));
  if (p.degree() == 0) return sign_of(p.leading());
  RationalInterval cur = enclosure;
  {
    const RationalInterval v = p.eval(cur);
    if (sgn(v.lo) > 0) return Sign::Positive;
    if (sgn(v.hi) < 0) return Sign::Negative;
  }
  const RationalPolynomial g = gcd(p, x.defining().to_rational());
  if (g.degree() >= 1) {
    const RationalInterval iso = x.isolating();
    if (SturmSequence(IntPolynomial::primitive_of(g)).count_roots(iso.lo, iso.hi) > 0) return Sign::Zero;
  }
  for (;;) {
    cur = x.refine_from(cur, cur.width() / 256);
    const RationalInterval v = p.eval(cur);
    if (sgn(v.lo) > 0) return Sign::Positive;
    if (sgn(v.hi) < 0) return Sign::Negative;
  }
}

RationalInterval refine(const RealAlgebraic& x, const Rational& width) { return x.refine(width); }

namespace constants {

const IntPolynomial& critical_polynomial() {
  static const IntPolynomial p{-1, 2, -3, 1};
  return p;
}

const IntPolynomial& golden_square_polynomial() {
  static const IntPolynomial p{1, -3, 1};
  return p;
}

const RealAlgebraic& critical_base() {
  static const RealAlgebraic q = RealAlgebraic::from_isolating(critical_polynomial(), Rational(2), Rational(3));
  return q;
}

const RealAlgebraic& golden_square() {
  static const RealAlgebraic q = RealAlgebraic::from_isolating(golden_square_polynomial(), Rational(2), Rational(3));
  return q;
}

const RealAlgebraic& silver_ratio() {
  static const RealAlgebraic q = RealAlgebraic::from_isolating(IntPolynomial{-1, -2, 1}, Rational(2), Rational(3));
  return q;
}

}  // namespace constants

}  // namespace triexp
