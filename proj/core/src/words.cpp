#include "triexp/words.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "triexp/error.hpp"

namespace triexp {

namespace {

template <typename Seq>
Seq primitive_root(const Seq& s) {
  const std::size_t n = s.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) periodic = s[i] == s[i - p];
    if (periodic) return Seq(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(p));
  }
  return s;
}

template <typename Seq>
Seq rotate_left(const Seq& s, std::size_t k) {
  Seq out(s);
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(k % s.size()), out.end());
  return out;
}

template <typename Word>
std::strong_ordering compare_sequences(const Word& a, const Word& b, std::size_t horizon) {
  for (std::size_t i = 0; i < horizon; ++i) {
    const auto x = a.at(i);
    const auto y = b.at(i);
    if (x != y) return x < y ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

}  // namespace

char to_char(Digit d) noexcept {
  switch (d) {
    case Digit::Zero: return '0';
    case Digit::One: return '1';
    case Digit::Q: return 'q';
  }
  return '?';
}

Digit digit_from_char(char c) {
  switch (c) {
    case '0': return Digit::Zero;
    case '1': return Digit::One;
    case 'q':
    case 'Q': return Digit::Q;
    default: throw Error(ErrorKind::Parse, std::string("invalid digit '") + c + "' (expected 0, 1 or q)");
  }
}

std::string to_string(std::span<const Digit> digits) {
  std::string s;
  s.reserve(digits.size());
  for (Digit d : digits) s.push_back(to_char(d));
  return s;
}

DigitString parse_digits(std::string_view text) {
  DigitString out;
  out.reserve(text.size());
  for (char c : text) out.push_back(digit_from_char(c));
  return out;
}

EPWord::EPWord(DigitString preperiod, DigitString period) {
  if (period.empty()) throw Error(ErrorKind::EmptyPeriod, "eventually periodic word needs a nonempty period");
  per_ = primitive_root(period);
  pre_ = std::move(preperiod);
  while (!pre_.empty() && pre_.back() == per_.back()) {
    std::rotate(per_.rbegin(), per_.rbegin() + 1, per_.rend());
    pre_.pop_back();
  }
}

EPWord EPWord::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.size() < open + 3 || text.substr(text.size() - 2) != ")*") {
    throw Error(ErrorKind::Parse, "word '" + std::string(text) + "' lacks a period group '(...)*'");
  }
  const auto body = text.substr(open + 1, text.size() - open - 3);
  if (body.find_first_of("()*") != std::string_view::npos || text.substr(0, open).find_first_of("()*") != std::string_view::npos) {
    throw Error(ErrorKind::Parse, "word '" + std::string(text) + "' has more than one period group");
  }
  if (body.empty()) throw Error(ErrorKind::EmptyPeriod, "word '" + std::string(text) + "' has an empty period");
  return EPWord(parse_digits(text.substr(0, open)), parse_digits(body));
}

Digit EPWord::at(std::size_t i) const noexcept {
  return i < pre_.size() ? pre_[i] : per_[(i - pre_.size()) % per_.size()];
}

DigitString EPWord::prefix(std::size_t n) const {
  DigitString out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = at(i);
  return out;
}

std::string EPWord::to_string() const { return triexp::to_string(pre_) + "(" + triexp::to_string(per_) + ")*"; }

std::strong_ordering operator<=>(const EPWord& a, const EPWord& b) { return lex_compare(a, b); }

EPWord canonicalize(DigitString pre, DigitString per) { return EPWord(std::move(pre), std::move(per)); }

std::strong_ordering lex_compare(const EPWord& a, const EPWord& b) {
  // Past both preperiods the pair of sequences repeats with period lcm.
  const std::size_t horizon = std::max(a.preperiod().size(), b.preperiod().size()) +
                              std::lcm(a.period().size(), b.period().size());
  return compare_sequences(a, b, horizon);
}

std::optional<std::strong_ordering> compare_to_prefix(const EPWord& w, std::span<const Digit> prefix) {
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    const Digit d = w.at(i);
    if (d != prefix[i]) return d < prefix[i] ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::nullopt;
}

EPWord tail(const EPWord& w, std::size_t n) {
  const auto& pre = w.preperiod();
  if (n < pre.size()) return EPWord(DigitString(pre.begin() + static_cast<std::ptrdiff_t>(n), pre.end()), w.period());
  return EPWord({}, rotate_left(w.period(), (n - pre.size()) % w.period().size()));
}

std::vector<EPWord> distinct_tails(const EPWord& w) {
  std::vector<EPWord> out;
  const std::size_t n = w.preperiod().size() + w.period().size();
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    EPWord t = tail(w, i);
    if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(std::move(t));
  }
  return out;
}

std::uint8_t PhiWord::at(std::size_t i) const noexcept {
  return i < preperiod.size() ? preperiod[i] : period[(i - preperiod.size()) % period.size()];
}

std::string PhiWord::to_string() const {
  std::string s;
  for (auto c : preperiod) s.push_back(static_cast<char>('0' + c));
  s += "(";
  for (auto c : period) s.push_back(static_cast<char>('0' + c));
  return s + ")*";
}

std::strong_ordering operator<=>(const PhiWord& a, const PhiWord& b) {
  const std::size_t horizon =
      std::max(a.preperiod.size(), b.preperiod.size()) + std::lcm(a.period.size(), b.period.size());
  return compare_sequences(a, b, horizon);
}

std::vector<std::uint8_t> phi_map(std::span<const Digit> digits) {
  std::vector<std::uint8_t> out;
  out.reserve(digits.size());
  for (Digit d : digits) out.push_back(static_cast<std::uint8_t>(d));
  return out;
}

PhiWord phi_map(const EPWord& w) { return PhiWord{phi_map(w.preperiod()), phi_map(w.period())}; }

std::vector<EPWord> substitute_siblings(const EPWord& w, std::size_t window) {
  std::set<EPWord> out;
  for (std::size_t i = 0; i < window; ++i) {
    const Digit a = w.at(i);
    const Digit b = w.at(i + 1);
    DigitString replacement;
    if (a == Digit::One && b == Digit::Zero) {
      replacement = {Digit::Zero, Digit::Q};
    } else if (a == Digit::Zero && b == Digit::Q) {
      replacement = {Digit::One, Digit::Zero};
    } else {
      continue;
    }
    const EPWord rest = tail(w, i + 2);
    DigitString pre = w.prefix(i);
    pre.insert(pre.end(), replacement.begin(), replacement.end());
    pre.insert(pre.end(), rest.preperiod().begin(), rest.preperiod().end());
    out.insert(EPWord(std::move(pre), rest.period()));
  }
  return {out.begin(), out.end()};
}

}  // namespace triexp
