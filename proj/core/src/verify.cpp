#include "triexp/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

#include "triexp/census.hpp"
#include "triexp/dimension.hpp"
#include "triexp/error.hpp"
#include "triexp/expansion.hpp"

namespace triexp {

EPWord random_epword(std::mt19937_64& rng, std::size_t max_pre, std::size_t max_per) {
  std::uniform_int_distribution<std::size_t> pre_len(0, max_pre), per_len(1, std::max<std::size_t>(max_per, 1));
  std::uniform_int_distribution<int> digit(0, 2);
  DigitString pre(pre_len(rng)), per(per_len(rng));
  for (auto& d : pre) d = static_cast<Digit>(digit(rng));
  for (auto& d : per) d = static_cast<Digit>(digit(rng));
  return EPWord(std::move(pre), std::move(per));
}

namespace {

// Runs a check body, turning a library error into a failure.
CheckResult run(int id, std::string name, const std::function<bool(std::ostringstream&)>& body) {
  CheckResult r{id, std::move(name), false, {}};
  std::ostringstream detail;
  try {
    r.passed = body(detail);
  } catch (const std::exception& e) {
    detail << "error: " << e.what();
    r.passed = false;
  }
  r.detail = detail.str();
  return r;
}

Rational decimal(const char* text) { return parse_rational(text); }

bool within(double value, double target, double tol) { return std::abs(value - target) <= tol; }

FieldElement point(const char* word, const Base& base) { return eval(EPWord::parse(word), base); }

}  // namespace

CheckResult check_critical_constants() {
  return run(1, "critical constants", [](std::ostringstream& out) {
    // An enclosure well inside the target width, so containment is decided.
    const Rational width = decimal("0.0000001");
    const RationalInterval qc = constants::critical_base().refine(width);
    const RationalInterval qs = constants::golden_square().refine(width);
    out << "q_c in [" << to_decimal(qc.lo, 7) << ", " << to_decimal(qc.hi, 7) << "], q* in [" << to_decimal(qs.lo, 7)
        << ", " << to_decimal(qs.hi, 7) << "]";
    return qc.lo > decimal("2.32471") && qc.hi < decimal("2.32473") && qs.lo > decimal("2.61803") &&
           qs.hi < decimal("2.61804");
  });
}

CheckResult check_spectral_identity() {
  return run(2, "spectral identity", [](std::ostringstream& out) {
    const SFT a = super_regime_subshift();
    const IntPolynomial p = characteristic_polynomial(a);
    const IntPolynomial& target = constants::critical_polynomial();
    const bool poly_ok = p == target || p == IntPolynomial{1, -2, 3, -1};
    const bool radius_ok = spectral_radius(a) == constants::critical_base();
    out << "det(xI - A) = " << p.to_string() << "; radius " << (radius_ok ? "==" : "!=") << " q_c";
    return poly_ok && radius_ok;
  });
}

CheckResult check_dimensions_at_three() {
  return run(3, "dimensions at q = 3", [](std::ostringstream& out) {
    const Base b = Base::rational(Rational(3));
    const DimReport u = dim_univoque(b);
    const DimReport e = dim_attractor(b);
    bool multi_ok = true;
    for (std::size_t k = 2; k <= 6; ++k) multi_ok = multi_ok && dim_multi(b, k).same_exact_value(u);
    out << "dim U = " << u.decimal(u.value()) << " (" << u.formula() << "), dim E = " << e.decimal(e.value()) << " ("
        << e.formula() << "), multi k=2..6 " << (multi_ok ? "identical" : "differ");
    return within(u.value(), 0.767877, 1e-5) && within(e.value(), 0.876036, 1e-5) && multi_ok;
  });
}

CheckResult check_silver_ratio() {
  return run(4, "silver ratio", [](std::ostringstream& out) {
    const Base b(constants::silver_ratio());
    const AlphaExpansion a = alpha(b, 16);
    const bool alpha_ok = a.closure && *a.closure == EPWord::parse("(q1)*");
    const double ratio = entropy(silver_subshift()).value() / std::log(b.value().approx());
    const bool eval_ok = point("q(0)*", b) == point("1qq(0)*", b);
    out << "alpha = " << (a.closure ? a.closure->to_string() : "open " + a.prefix.to_string())
        << ", h/log q = " << std::to_string(ratio) << ", q0^inf " << (eval_ok ? "==" : "!=") << " 1qq0^inf";
    return alpha_ok && within(ratio, 0.691404, 1e-5) && eval_ok;
  });
}

CheckResult check_base_memberships() {
  return run(5, "base memberships", [](std::ostringstream& out) {
    bool ok = true;
    for (const char* text : {"3/2", "2", "23/10", "5/2", "3"}) {
      const Rational q = decimal(text);
      const BaseMembership m = classify_base(Base::rational(q));
      // Expected from the interval endpoints 1, 2 and q_c ~ 2.32472.
      const bool want_countable = q >= 2;
      const bool want_k = q > decimal("2.32472");
      const bool row_ok = m.unique && m.continuum && m.countable == want_countable && m.multiple_k == want_k;
      out << text << ":" << (m.countable ? "N0" : "") << (m.multiple_k ? "+k" : "") << (row_ok ? " " : "! ");
      ok = ok && row_ok;
    }
    return ok;
  });
}

CheckResult check_expansion_counts() {
  return run(6, "expansion counts", [](std::ostringstream& out) {
    const Base three = Base::rational(Rational(3));
    bool ok = true;
    std::string word = "0";
    for (std::size_t k = 1; k <= 6; ++k) {
      const Cardinality c = classify(point((word + "(1q)*").c_str(), three), three);
      const bool pairwise = std::adjacent_find(c.witnesses.begin(), c.witnesses.end()) == c.witnesses.end();
      const bool each = std::all_of(c.witnesses.begin(), c.witnesses.end(), [&](const EPWord& w) {
        return eval(w, three) == point((word + "(1q)*").c_str(), three);
      });
      ok = ok && c.is_finite(k) && c.witnesses.size() == k && pairwise && each;
      out << "k=" << k << ":" << describe(c) << " ";
      word += "q";
    }
    const Cardinality z = classify(point("0(q)*", three), three);
    ok = ok && z.kind == Cardinality::Kind::CountablyInfinite;
    out << "0q^inf:" << describe(z) << " ";
    for (const char* q : {"3/2", "5/2", "3"}) {
      const Base b = Base::rational(decimal(q));
      const Cardinality c = classify(point("(100)*", b), b);
      ok = ok && c.kind == Cardinality::Kind::Continuum;
      out << "(100)^inf@" << q << ":" << describe(c) << " ";
    }
    const Base silver(constants::silver_ratio());
    const Cardinality s = classify(point("0q(11q)*", silver), silver);
    ok = ok && s.is_finite(2);
    out << "0q(11q)^inf@silver:" << describe(s);
    return ok;
  });
}

namespace {

// Truncations of the four expansion families of (0^k q^inf)_2.
std::set<std::string> null_point_family(std::size_t k, std::size_t depth) {
  auto trunc = [&](const std::string& s) { return s.substr(0, depth); };
  auto repeat = [](char c, std::size_t n) { return std::string(n, c); };
  std::set<std::string> out;
  const std::size_t long_run = depth + 2;
  out.insert(trunc(repeat('0', k) + repeat('q', long_run)));
  out.insert(trunc(repeat('0', k - 1) + repeat('1', long_run)));
  for (std::size_t m = 1; m <= depth; ++m) {
    out.insert(trunc(repeat('0', k - 1) + repeat('1', m) + "0" + repeat('q', long_run)));
    out.insert(trunc(repeat('0', k - 1) + repeat('1', m - 1) + "q" + repeat('0', long_run)));
  }
  return out;
}

}  // namespace

CheckResult check_null_infinite_points() {
  return run(7, "null infinite points at q = 2", [](std::ostringstream& out) {
    const Base two = Base::rational(Rational(2));
    constexpr std::size_t kDepth = 8;
    bool ok = true;
    for (std::size_t k = 1; k <= 2; ++k) {
      const FieldElement z = eval(EPWord(DigitString(k, Digit::Zero), {Digit::Q}), two);
      const Cardinality c = classify(z, two);
      std::set<std::string> got;
      for (const auto& p : prefixes_to_depth(z, two, kDepth)) got.insert(to_string(p));
      const auto want = null_point_family(k, kDepth);
      const bool row_ok = c.kind == Cardinality::Kind::CountablyInfinite && got == want;
      out << "z_" << k << ":" << describe(c) << ", " << got.size() << " prefixes vs " << want.size() << " in family";
      for (const auto& p : got) {
        if (!want.contains(p)) out << "; extra " << p;
      }
      for (const auto& p : want) {
        if (!got.contains(p)) out << "; missing " << p;
      }
      if (k >= 2) {
        // 0^(k-2) 1 0^inf is an expansion of z_k at q = 2 that the family leaves out.
        DigitString pre(k - 2, Digit::Zero);
        pre.push_back(Digit::One);
        const EPWord extra(std::move(pre), {Digit::Zero});
        out << "; " << extra.to_string() << (eval(extra, two) == z ? " == " : " != ") << "z_" << k;
      }
      out << ". ";
      ok = ok && row_ok;
    }
    return ok;
  });
}

namespace {

struct OracleSetting {
  const char* base;
  std::size_t depth;
  std::size_t window;
};

// counts at depth - window .. depth all equal k
bool stabilizes_at(const FieldElement& x, const Base& b, std::size_t depth, std::size_t window, const BigInt& k) {
  for (std::size_t d = depth - window; d <= depth; ++d) {
    if (count_prefixes_to_depth(x, b, d) != k) return false;
  }
  return true;
}

}  // namespace

CheckResult check_oracle_equivalence(std::uint64_t seed) {
  return run(8, "oracle equivalence", [seed](std::ostringstream& out) {
    constexpr std::size_t kSamples = 100;
    const OracleSetting settings[] = {{"3/2", 14, 4}, {"2", 24, 8}, {"5/2", 24, 8}, {"3", 24, 8}};
    std::mt19937_64 rng(seed);
    bool ok = true;
    for (const auto& s : settings) {
      const Base b = Base::rational(decimal(s.base));
      std::size_t finite = 0, countable = 0, continuum = 0, unresolved = 0, mismatches = 0, dichotomy = 0;
      for (std::size_t i = 0; i < kSamples; ++i) {
        const EPWord w = random_epword(rng);
        const FieldElement x = eval(w, b);
        const Cardinality c = classify(x, b);
        bool agree;
        if (c.kind == Cardinality::Kind::Finite) {
          ++finite;
          std::size_t longest = 0;
          for (const auto& wit : c.witnesses) longest = std::max(longest, wit.preperiod().size());
          const std::size_t depth =
              std::min(kMaxExactDepth, std::max(s.depth, c.explored_nodes + longest + s.window));
          agree = stabilizes_at(x, b, depth, s.window, BigInt(static_cast<unsigned long>(c.count)));
        } else {
          countable += c.kind == Cardinality::Kind::CountablyInfinite;
          continuum += c.kind == Cardinality::Kind::Continuum;
          unresolved += c.kind == Cardinality::Kind::UnresolvedAtCap;
          // Not finite: the counts must still be growing across the window.
          agree = count_prefixes_to_depth(x, b, s.depth) > count_prefixes_to_depth(x, b, s.depth - s.window);
        }
        if (!agree) {
          ++mismatches;
          if (mismatches <= 3) out << "[mismatch " << w.to_string() << "@" << s.base << " " << describe(c) << "] ";
        }
        if (std::string_view(s.base) == "3/2" &&
            (c.kind == Cardinality::Kind::CountablyInfinite || (c.kind == Cardinality::Kind::Finite && c.count >= 2))) {
          ++dichotomy;
        }
      }
      out << s.base << ": finite " << finite << ", countable " << countable << ", continuum " << continuum
          << ", unresolved " << unresolved << ", mismatches " << mismatches;
      if (dichotomy > 0) out << ", dichotomy violations " << dichotomy;
      out << "; ";
      ok = ok && mismatches == 0 && dichotomy == 0;
    }
    return ok;
  });
}

CheckResult check_alpha_monotonicity(std::uint64_t seed) {
  return run(9, "alpha monotonicity", [seed](std::ostringstream& out) {
    constexpr int kPairs = 20;
    constexpr std::size_t kDigits = 64;
    constexpr long kScale = 10000;
    // Grid in (1.1, q*]: 2.6180 is below q* ~ 2.618034.
    constexpr long kLow = 11001, kHigh = 26180, kGap = 100;
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<long> first(kLow, kHigh - kGap);
    int failures = 0;
    for (int i = 0; i < kPairs; ++i) {
      const long a = first(rng);
      const long b = std::uniform_int_distribution<long>(a + kGap, kHigh)(rng);
      const Base q1 = Base::rational(make_rational(a, kScale));
      const Base q2 = Base::rational(make_rational(b, kScale));
      const auto p1 = phi_map(alpha(q1, kDigits).prefix.digits);
      const auto p2 = phi_map(alpha(q2, kDigits).prefix.digits);
      if (!std::lexicographical_compare(p1.begin(), p1.end(), p2.begin(), p2.end())) {
        ++failures;
        out << "[" << a << "/" << kScale << " vs " << b << "/" << kScale << "] ";
      }
    }
    out << kPairs - failures << "/" << kPairs << " pairs ordered";
    return failures == 0;
  });
}

CheckResult check_sandwich_bounds() {
  return run(10, "sandwich bounds", [](std::ostringstream& out) {
    constexpr std::size_t kDepth = 8;
    const Base silver(constants::silver_ratio());
    const DimReport s = dim_univoque_bounds(silver, kDepth);
    const DeltaBound ds = delta_lower_bound(silver);
    const Base qstar(constants::golden_square());
    const DimReport g = dim_univoque_bounds(qstar, kDepth);
    const DeltaBound dg = delta_lower_bound(qstar);
    const double boundary = std::log(constants::critical_base().approx()) / std::log(qstar.value().approx());
    out << "silver [" << s.decimal(s.lo) << ", " << s.decimal(s.hi) << "] delta m=" << ds.m << " "
        << ds.bound.decimal(ds.bound.value()) << "; q* [" << g.decimal(g.lo) << ", " << g.decimal(g.hi)
        << "] vs " << std::to_string(boundary) << " delta m=" << dg.m << " " << dg.bound.decimal(dg.bound.value());
    return s.lo <= 0.691404 && 0.691404 <= s.hi && g.lo <= boundary && boundary <= g.hi &&
           s.lo >= ds.bound.value() && g.lo >= dg.bound.value();
  });
}

std::vector<CheckResult> run_acceptance(std::uint64_t seed) {
  return {check_critical_constants(),   check_spectral_identity(),       check_dimensions_at_three(),
          check_silver_ratio(),         check_base_memberships(),        check_expansion_counts(),
          check_null_infinite_points(), check_oracle_equivalence(seed),  check_alpha_monotonicity(seed),
          check_sandwich_bounds()};
}

}  // namespace triexp
