#include "triexp/expansion.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <unordered_map>

#include "triexp/error.hpp"

namespace triexp {

std::string_view to_string(Regime r) noexcept {
  switch (r) {
    case Regime::SubCritical: return "subcritical";
    case Regime::Middle: return "middle";
    case Regime::Super: return "super";
  }
  return "?";
}

std::string_view to_string(Uniqueness u) noexcept {
  switch (u) {
    case Uniqueness::Unique: return "unique";
    case Uniqueness::NotUnique: return "not-unique";
    case Uniqueness::Indeterminate: return "indeterminate";
  }
  return "?";
}

namespace {

Regime classify_regime(const RealAlgebraic& q) {
  if (sign_of_poly_at(constants::critical_polynomial(), q) != Sign::Positive) return Regime::SubCritical;
  if (sign_of_poly_at(constants::golden_square_polynomial(), q) != Sign::Positive) return Regime::Middle;
  return Regime::Super;
}

RealAlgebraic checked(RealAlgebraic q) {
  if (q.compare(Rational(1)) != std::strong_ordering::greater) {
    throw Error(ErrorKind::InvalidArgument, "base must exceed 1, got " + q.describe());
  }
  return q;
}

constexpr std::array<Digit, 3> kDescending{Digit::Q, Digit::One, Digit::Zero};

}  // namespace

struct Base::Cache {
  std::once_flag once;
  std::optional<ContinuumCertificate> certificate;
};

Base::Base(RealAlgebraic q)
    : value_(checked(std::move(q))),
      field_(NumberField::make(value_)),
      q_(FieldElement::generator(field_)),
      max_(q_ / (q_ - Rational(1))),
      regime_(classify_regime(value_)),
      cache_(std::make_shared<Cache>()) {}

FieldElement Base::digit_value(Digit d) const {
  switch (d) {
    case Digit::Zero: return element(Rational(0));
    case Digit::One: return element(Rational(1));
    case Digit::Q: return q_;
  }
  return element(Rational(0));
}

bool Base::in_hull(const FieldElement& x) const {
  return x.sign() != Sign::Negative && !(max_ < x);
}

std::string Base::describe() const { return value_.describe(); }

namespace {

// Offsets c_u = sum u_i q^-i over all 3^L words u, sorted.
std::vector<FieldElement> level_offsets(const Base& base, std::size_t length) {
  const FieldElement inv = base.q().inverse();
  std::vector<FieldElement> level{base.element(Rational(0))};
  for (std::size_t step = 0; step < length; ++step) {
    std::vector<FieldElement> next;
    next.reserve(level.size() * 3);
    for (Digit d : kDescending) {
      const FieldElement head = base.digit_value(d) * inv;
      for (const auto& c : level) next.push_back(head + c * inv);
    }
    level = std::move(next);
  }
  std::sort(level.begin(), level.end());
  return level;
}

// Every point of [lo, hi] lies in at least two of the intervals
// [c + lo s, c + hi s], s = q^-L. Coverage is constant between consecutive
// endpoints, so it suffices to inspect each open gap meeting (lo, hi).
bool double_covers(const std::vector<FieldElement>& offsets, const FieldElement& scale, const FieldElement& lo,
                   const FieldElement& hi) {
  const FieldElement lo_shift = lo * scale;
  const FieldElement hi_shift = hi * scale;
  std::size_t i = 0;
  std::size_t j = 0;
  const std::size_t n = offsets.size();
  long coverage = 0;
  auto start = [&](std::size_t k) { return offsets[k] + lo_shift; };
  auto end = [&](std::size_t k) { return offsets[k] + hi_shift; };
  if (lo < start(0)) return false;
  while (j < n) {
    const FieldElement here = (i < n && !(end(j) < start(i))) ? start(i) : end(j);
    while (i < n && start(i) == here) {
      ++coverage;
      ++i;
    }
    while (j < n && end(j) == here) {
      --coverage;
      ++j;
    }
    if (!(here < hi)) return true;
    if (j == n) return false;
    const FieldElement next = (i < n && start(i) < end(j)) ? start(i) : end(j);
    if (lo < next && coverage < 2) return false;
  }
  return false;
}

std::optional<ContinuumCertificate> search_certificate(const Base& base) {
  if (base.value().compare(Rational(2)) != std::strong_ordering::less) return std::nullopt;
  const FieldElement& m = base.attractor_max();
  const FieldElement inv = base.q().inverse();
  constexpr std::size_t kMaxLength = 8;
  std::vector<std::vector<FieldElement>> offsets;
  std::vector<FieldElement> scales{base.element(Rational(1))};
  for (long denom : {16, 8, 4}) {
    const FieldElement lo = m * Rational(1, denom);
    const FieldElement hi = m - lo;
    for (std::size_t len = 1; len <= kMaxLength; ++len) {
      if (offsets.size() < len) {
        offsets.push_back(level_offsets(base, len));
        scales.push_back(scales.back() * inv);
      }
      if (double_covers(offsets[len - 1], scales[len], lo, hi)) return ContinuumCertificate{lo, hi, len};
    }
  }
  return std::nullopt;
}

}  // namespace

const std::optional<ContinuumCertificate>& Base::continuum_certificate() const {
  std::call_once(cache_->once, [this] { cache_->certificate = search_certificate(*this); });
  return cache_->certificate;
}

FieldElement eval(std::span<const Digit> digits, const Base& base) {
  const FieldElement inv = base.q().inverse();
  FieldElement acc = base.element(Rational(0));
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    acc = (acc + base.digit_value(*it)) * inv;
  }
  return acc;
}

FieldElement eval(const EPWord& w, const Base& base) {
  const FieldElement head = eval(w.preperiod(), base);
  const FieldElement inv = base.q().inverse();
  FieldElement shift = base.element(Rational(1));
  for (std::size_t i = 0; i < w.preperiod().size(); ++i) shift = shift * inv;
  FieldElement qp = base.element(Rational(1));
  for (std::size_t i = 0; i < w.period().size(); ++i) qp = qp * base.q();
  // (per)^inf = v(per) * q^p / (q^p - 1)
  const FieldElement cycle = eval(w.period(), base) * qp / (qp - Rational(1));
  return head + shift * cycle;
}

GreedyResult greedy_digits(const FieldElement& x, const Base& base, std::size_t n) {
  if (!base.in_hull(x)) throw Error(ErrorKind::OutOfRange, "x is outside [0, M]: " + x.to_string());
  GreedyResult out{{}, x};
  out.word.digits.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const FieldElement qx = out.remainder * base.q();
    bool found = false;
    for (Digit d : kDescending) {
      FieldElement next = qx - base.digit_value(d);
      if (base.in_hull(next)) {
        out.word.digits.push_back(d);
        out.remainder = std::move(next);
        found = true;
        break;
      }
    }
    if (!found) throw Error(ErrorKind::NotInAttractor, "no admissible digit at position " + std::to_string(i));
  }
  return out;
}

namespace {

struct QuasiGreedyRun {
  DigitString digits;
  std::optional<std::pair<std::size_t, std::size_t>> cycle;  // remainders r_i == r_j
};

QuasiGreedyRun quasi_greedy_run(const FieldElement& x, const Base& base, std::size_t n, bool detect_cycle) {
  if (base.regime() == Regime::Super) {
    throw Error(ErrorKind::UnsupportedRegime, "quasi-greedy expansion requires q <= q*");
  }
  if (x.sign() != Sign::Positive || base.attractor_max() < x) {
    throw Error(ErrorKind::OutOfRange, "quasi-greedy expansion requires 0 < x <= M");
  }
  QuasiGreedyRun run;
  std::unordered_map<FieldElement, std::size_t, FieldElementHash> seen;
  FieldElement r = x;
  for (std::size_t i = 0; i < n; ++i) {
    if (detect_cycle) {
      auto [it, inserted] = seen.emplace(r, i);
      if (!inserted) {
        run.cycle = std::pair{it->second, i};
        return run;
      }
    }
    const FieldElement qr = r * base.q();
    bool found = false;
    for (Digit d : kDescending) {
      FieldElement next = qr - base.digit_value(d);
      if (next.sign() == Sign::Positive && !(base.attractor_max() < next)) {
        run.digits.push_back(d);
        r = std::move(next);
        found = true;
        break;
      }
    }
    if (!found) throw Error(ErrorKind::NotInAttractor, "no quasi-greedy digit at position " + std::to_string(i));
  }
  if (detect_cycle && !seen.contains(r)) return run;
  if (detect_cycle) run.cycle = std::pair{seen.at(r), n};
  return run;
}

}  // namespace

FiniteWord quasi_greedy_digits(const FieldElement& x, const Base& base, std::size_t n) {
  return FiniteWord{quasi_greedy_run(x, base, n, false).digits};
}

AlphaExpansion alpha(const Base& base, std::size_t n) {
  const FieldElement x = base.q() - Rational(1);
  QuasiGreedyRun run = quasi_greedy_run(x, base, std::max<std::size_t>(n, 1), true);
  AlphaExpansion out;
  if (run.cycle) {
    auto [i, j] = *run.cycle;
    DigitString pre(run.digits.begin(), run.digits.begin() + static_cast<std::ptrdiff_t>(i));
    DigitString per(run.digits.begin() + static_cast<std::ptrdiff_t>(i),
                    run.digits.begin() + static_cast<std::ptrdiff_t>(j));
    out.closure = EPWord(std::move(pre), std::move(per));
    out.prefix.digits = out.closure->prefix(n);
  } else {
    run.digits.resize(n);
    out.prefix.digits = std::move(run.digits);
  }
  return out;
}

namespace {

// Ordering of w against alpha(q), or of w against 1 alpha(q) when `lead` is set.
std::strong_ordering compare_with_alpha(const EPWord& w, const AlphaExpansion& a, std::optional<Digit> lead) {
  if (a.closure) {
    DigitString pre;
    if (lead) pre.push_back(*lead);
    pre.insert(pre.end(), a.closure->preperiod().begin(), a.closure->preperiod().end());
    return lex_compare(w, EPWord(std::move(pre), a.closure->period()));
  }
  DigitString prefix;
  if (lead) prefix.push_back(*lead);
  prefix.insert(prefix.end(), a.prefix.digits.begin(), a.prefix.digits.end());
  auto c = compare_to_prefix(w, prefix);
  if (!c) throw Error(ErrorKind::AlphaUndecided, "comparison with alpha(q) ties on " + std::to_string(prefix.size()) + " digits");
  return *c;
}

}  // namespace

std::size_t alpha_gap_index(const Base& base, std::size_t depth) {
  if (base.regime() != Regime::Middle) {
    throw Error(ErrorKind::UnsupportedRegime, "alpha gap index is defined for q_c < q <= q*");
  }
  const AlphaExpansion a = alpha(base, depth);
  for (std::size_t m = 1; m < depth; ++m) {
    DigitString pre{Digit::Q};
    pre.insert(pre.end(), m, Digit::One);
    pre.push_back(Digit::Q);
    const EPWord w(std::move(pre), {Digit::Zero});
    if (compare_with_alpha(w, a, std::nullopt) == std::strong_ordering::less) return m;
  }
  throw Error(ErrorKind::AlphaUndecided, "no gap index below depth " + std::to_string(depth));
}

SwitchRegion switch_region(const Base& base) {
  const FieldElement inv = base.q().inverse();
  const FieldElement& m = base.attractor_max();
  SwitchRegion s{Hull{inv, m * inv}, Hull{base.element(Rational(1)), (m + Rational(1)) * inv}};
  s.hull_only = base.regime() == Regime::Super;
  s.disjoint = base.value().compare(Rational(2)) == std::strong_ordering::greater;
  return s;
}

Uniqueness unique_membership_word(const EPWord& w, const Base& base, std::size_t alpha_depth) {
  const EPWord zeros = EPWord::constant(Digit::Zero);
  const EPWord ones = EPWord::constant(Digit::One);
  const EPWord qs = EPWord::constant(Digit::Q);

  if (base.regime() == Regime::SubCritical) {
    return (w == zeros || w == qs) ? Uniqueness::Unique : Uniqueness::NotUnique;
  }

  // Each (digit, following tail) pair for n >= 1; beyond pre + per they repeat.
  const std::size_t span = w.preperiod().size() + w.period().size();

  if (base.regime() == Regime::Super) {
    const EPWord q_then_zeros({Digit::Q}, {Digit::Zero});
    for (std::size_t n = 1; n <= span; ++n) {
      const Digit d = w.at(n - 1);
      const EPWord t = tail(w, n);
      if (d == Digit::Zero && lex_compare(t, q_then_zeros) != std::strong_ordering::less) return Uniqueness::NotUnique;
      if (d == Digit::One && lex_compare(t, ones) != std::strong_ordering::greater) return Uniqueness::NotUnique;
    }
    return Uniqueness::Unique;
  }

  const AlphaExpansion a = alpha(base, alpha_depth);
  const EPWord zero_then_qs({Digit::Zero}, {Digit::Q});
  bool sufficient = true;
  for (std::size_t n = 1; n <= span; ++n) {
    const Digit d = w.at(n - 1);
    const EPWord t = tail(w, n);
    switch (d) {
      case Digit::Zero:
        if (compare_with_alpha(t, a, Digit::One) != std::strong_ordering::less) return Uniqueness::NotUnique;
        break;
      case Digit::One:
        if (lex_compare(t, ones) != std::strong_ordering::greater) return Uniqueness::NotUnique;
        if (compare_with_alpha(t, a, std::nullopt) != std::strong_ordering::less) return Uniqueness::NotUnique;
        break;
      case Digit::Q:
        if (lex_compare(t, zero_then_qs) != std::strong_ordering::greater) sufficient = false;
        break;
    }
  }
  return sufficient ? Uniqueness::Unique : Uniqueness::Indeterminate;
}

}  // namespace triexp
