#include "triexp/rational.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "triexp/error.hpp"

namespace triexp {

Sign sign_of(const Rational& r) {
  const int s = sgn(r);
  return s < 0 ? Sign::Negative : (s > 0 ? Sign::Positive : Sign::Zero);
}

Sign sign_of(const BigInt& z) {
  const int s = sgn(z);
  return s < 0 ? Sign::Negative : (s > 0 ? Sign::Positive : Sign::Zero);
}

Sign operator*(Sign a, Sign b) { return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b)); }

Sign operator-(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

BigInt parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw Error(ErrorKind::Parse, "not an integer: '" + std::string(s) + "'");
  BigInt z(std::string(s), 10);
  return negative ? BigInt(-z) : z;
}

BigInt pow10(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

Rational parse_decimal(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    const BigInt ez = parse_integer(s.substr(e + 1));
    if (!ez.fits_slong_p() || abs(ez) > 10000) throw Error(ErrorKind::Parse, "exponent out of range");
    exponent = ez.get_si();
    s = s.substr(0, e);
  }
  std::string digits;
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const auto whole = s.substr(0, dot);
    const auto frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw Error(ErrorKind::Parse, "malformed decimal");
    }
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    if (!all_digits(s)) throw Error(ErrorKind::Parse, "malformed number");
    digits = std::string(s);
  }
  Rational r{BigInt(digits, 10)};
  if (exponent > 0) r *= Rational(pow10(static_cast<unsigned long>(exponent)));
  if (exponent < 0) r /= Rational(pow10(static_cast<unsigned long>(-exponent)));
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorKind::Parse, "empty number");
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const Rational num = parse_decimal(text.substr(0, slash));
    const Rational den = parse_decimal(text.substr(slash + 1));
    if (sgn(den) == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
    Rational r = num / den;
    r.canonicalize();
    return r;
  }
  return parse_decimal(text);
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

std::string to_decimal(const Rational& r, int digits) {
  digits = std::max(digits, 0);
  const BigInt scale = pow10(static_cast<unsigned long>(digits));
  const Rational scaled = abs(r) * Rational(scale);
  // round half away from zero
  BigInt q = scaled.get_num() * 2 + scaled.get_den();
  BigInt d = scaled.get_den() * 2;
  BigInt rounded;
  mpz_fdiv_q(rounded.get_mpz_t(), q.get_mpz_t(), d.get_mpz_t());
  std::string body = rounded.get_str(10);
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  const bool negative = sgn(r) < 0 && sgn(rounded) != 0;
  return negative ? "-" + body : body;
}

Rational dyadic_width(unsigned bits) {
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, bits);
  return Rational(BigInt(1), den);
}

std::size_t hash_value(const Rational& r) noexcept {
  const auto limb_hash = [](const mpz_t z) -> std::size_t {
    const std::size_t size = mpz_size(z);
    std::size_t h = std::hash<long>{}(static_cast<long>(mpz_sgn(z)) * static_cast<long>(size));
    for (std::size_t i = 0; i < size; ++i) {
      h ^= std::hash<mp_limb_t>{}(mpz_getlimbn(z, static_cast<mp_size_t>(i))) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  };
  const std::size_t hn = limb_hash(r.get_num_mpz_t());
  const std::size_t hd = limb_hash(r.get_den_mpz_t());
  return hn ^ (hd + 0x9e3779b97f4a7c15ULL + (hn << 6) + (hn >> 2));
}

RationalInterval::RationalInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
  if (hi < lo) throw Error(ErrorKind::InvalidArgument, "interval with lo > hi");
}

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

RationalInterval operator-(const RationalInterval& a, const RationalInterval& b) {
  return {a.lo - b.hi, a.hi - b.lo};
}

RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
  if (sgn(a.lo) >= 0 && sgn(b.lo) >= 0) return {a.lo * b.lo, a.hi * b.hi};
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  const auto [mn, mx] = std::minmax_element(std::begin(p), std::end(p));
  return {*mn, *mx};
}

RationalInterval operator*(const RationalInterval& a, const Rational& s) {
  if (sgn(s) >= 0) return {a.lo * s, a.hi * s};
  return {a.hi * s, a.lo * s};
}

RationalInterval operator+(const RationalInterval& a, const Rational& s) { return {a.lo + s, a.hi + s}; }

}  // namespace triexp
