#include "parse.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <string>
#include <vector>

#include "triexp/census.hpp"
#include "triexp/error.hpp"

namespace triexp::cli {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::Parse, what); }

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = s.find(sep, start);
    out.push_back(s.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
    if (at == std::string_view::npos) return out;
    start = at + 1;
  }
}

Base parse_root(std::string_view spec) {
  const auto parts = split(spec, ':');
  if (parts.size() != 2) fail("expected root:<c0,...,cn>:<lo>,<hi>");
  std::vector<BigInt> coeffs;
  for (auto c : split(parts[0], ',')) {
    BigInt v;
    if (c.empty() || v.set_str(std::string(c), 10) != 0) fail("bad coefficient '" + std::string(c) + "'");
    coeffs.push_back(v);
  }
  const auto bounds = split(parts[1], ',');
  if (bounds.size() != 2) fail("expected isolating interval <lo>,<hi>");
  const IntPolynomial p(std::move(coeffs));
  if (p.degree() < 1) fail("root polynomial must have degree at least 1");
  return Base(RealAlgebraic::from_isolating(p, parse_rational(bounds[0]), parse_rational(bounds[1])));
}

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, const Base& base) : text_(text), base_(base) {}

  FieldElement parse() {
    FieldElement v = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "' in value");
    return v;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  FieldElement expr() {
    FieldElement v = term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      FieldElement rhs = term();
      v = c == '+' ? v + rhs : v - rhs;
    }
    return v;
  }

  FieldElement term() {
    FieldElement v = unary();
    while (true) {
      const char c = peek();
      if (c == '*' || c == '/') {
        ++pos_;
        FieldElement rhs = unary();
        if (c == '/' && rhs.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero in value");
        v = c == '*' ? v * rhs : v / rhs;
      } else if (c == '(' || c == 'q' || c == 'Q' || std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        v = v * power();
      } else {
        return v;
      }
    }
  }

  FieldElement unary() {
    const char c = peek();
    if (c == '-' || c == '+') {
      ++pos_;
      FieldElement v = unary();
      return c == '-' ? -v : v;
    }
    return power();
  }

  FieldElement power() {
    FieldElement v = atom();
    if (peek() != '^') return v;
    ++pos_;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    skip();
    long e = 0;
    const auto [end, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), e);
    if (ec != std::errc() || e > 4096) fail("exponent must be a small integer");
    pos_ = static_cast<std::size_t>(end - text_.data());
    if (negative) {
      if (v.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero to a negative power");
      v = v.inverse();
    }
    FieldElement r = base_.element(Rational(1));
    for (long i = 0; i < e; ++i) r = r * v;
    return r;
  }

  FieldElement atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      FieldElement v = expr();
      if (peek() != ')') fail("missing ')' in value");
      ++pos_;
      return v;
    }
    if (c == 'q' || c == 'Q') {
      ++pos_;
      return base_.q();
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) ++pos_;
    if (start == pos_) fail(c == '\0' ? "value ends unexpectedly" : "unexpected '" + std::string(1, c) + "' in value");
    return base_.element(parse_rational(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  const Base& base_;
  std::size_t pos_ = 0;
};

}  // namespace

Base parse_base(std::string_view text) {
  if (text == "qc") return Base(constants::critical_base());
  if (text == "qstar") return Base(constants::golden_square());
  if (text == "silver") return Base(constants::silver_ratio());
  if (text.starts_with("rat:")) return Base::rational(parse_rational(text.substr(4)));
  if (text.starts_with("root:")) return parse_root(text.substr(5));
  if (text.empty()) fail("empty base");
  return Base::rational(parse_rational(text));
}

FieldElement parse_value(std::string_view text, const Base& base) { return ExpressionParser(text, base).parse(); }

FieldElement parse_point(std::string_view text, const Base& base) {
  if (text.find(")*") != std::string_view::npos) return eval(EPWord::parse(text), base);
  return parse_value(text, base);
}

std::size_t node_cap_from_env() {
  const char* env = std::getenv("TRIEXP_NODE_CAP");
  if (env == nullptr || *env == '\0') return kDefaultNodeCap;
  std::size_t cap = 0;
  const std::string_view s(env);
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), cap);
  if (ec != std::errc() || end != s.data() + s.size() || cap == 0) {
    throw Error(ErrorKind::InvalidArgument, "TRIEXP_NODE_CAP must be a positive integer");
  }
  return cap;
}

}  // namespace triexp::cli
