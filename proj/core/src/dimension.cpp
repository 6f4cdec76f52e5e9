#include "triexp/dimension.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "scc.hpp"
#include "triexp/error.hpp"

namespace triexp {

void SFT::validate() const {
  const std::size_t n = states.size();
  if (adjacency.size() != n) throw Error(ErrorKind::InvalidArgument, "adjacency matrix has wrong row count");
  for (const auto& row : adjacency) {
    if (row.size() != n) throw Error(ErrorKind::InvalidArgument, "adjacency matrix is not square");
    for (auto a : row) {
      if (a < 0) throw Error(ErrorKind::InvalidArgument, "adjacency entries must be nonnegative");
    }
  }
}

SFT super_regime_subshift() {
  return SFT{{"0", "1", "q"}, {{1, 1, 0}, {0, 1, 1}, {1, 1, 1}}};
}

SFT silver_subshift() {
  return SFT{{"00", "01", "11", "1q", "q0", "q1", "qq"},
             {{1, 1, 0, 0, 0, 0, 0},
              {0, 0, 1, 1, 0, 0, 0},
              {0, 0, 1, 1, 0, 0, 0},
              {0, 0, 0, 0, 1, 1, 0},
              {0, 1, 0, 0, 0, 0, 0},
              {0, 0, 1, 1, 0, 0, 0},
              {0, 0, 0, 0, 1, 1, 1}}};
}

namespace {

using Matrix = std::vector<std::vector<BigInt>>;

// Coefficients of det(xI - A), highest degree first.
std::vector<BigInt> berkowitz(const Matrix& a) {
  const std::size_t n = a.size();
  if (n == 0) return {BigInt(1)};
  if (n == 1) return {BigInt(1), BigInt(-a[0][0])};
  Matrix sub(n - 1, std::vector<BigInt>(n - 1));
  std::vector<BigInt> row(n - 1), col(n - 1);
  for (std::size_t i = 1; i < n; ++i) {
    row[i - 1] = a[0][i];
    col[i - 1] = a[i][0];
    for (std::size_t j = 1; j < n; ++j) sub[i - 1][j - 1] = a[i][j];
  }
  const std::vector<BigInt> tail = berkowitz(sub);

  // First column of the Toeplitz factor: 1, -a11, -R C, -R S C, -R S^2 C, ...
  std::vector<BigInt> t(n + 1);
  t[0] = 1;
  t[1] = -a[0][0];
  std::vector<BigInt> v = col;  // S^k C
  for (std::size_t k = 2; k <= n; ++k) {
    BigInt dot = 0;
    for (std::size_t i = 0; i < n - 1; ++i) dot += row[i] * v[i];
    t[k] = -dot;
    std::vector<BigInt> next(n - 1, BigInt(0));
    for (std::size_t i = 0; i < n - 1; ++i) {
      for (std::size_t j = 0; j < n - 1; ++j) next[i] += sub[i][j] * v[j];
    }
    v = std::move(next);
  }
  std::vector<BigInt> p(n + 1, BigInt(0));
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= std::min(i, n - 1); ++j) p[i] += t[i - j] * tail[j];
  }
  return p;
}

std::string describe_constant(const RealAlgebraic& x) {
  if (x.is_rational()) return to_string(x.rational_value());
  if (x == constants::critical_base()) return "q_c";
  if (x == constants::golden_square()) return "q*";
  if (x == constants::silver_ratio()) return "1+sqrt(2)";
  return x.to_decimal(12) + "...";
}

double log_of(const RealAlgebraic& x) { return std::log(x.approx()); }

}  // namespace

IntPolynomial characteristic_polynomial(const SFT& m) {
  m.validate();
  Matrix a(m.size(), std::vector<BigInt>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) a[i][j] = BigInt(static_cast<long>(m.adjacency[i][j]));
  }
  std::vector<BigInt> high_first = berkowitz(a);
  std::reverse(high_first.begin(), high_first.end());
  return IntPolynomial(std::move(high_first));
}

RealAlgebraic spectral_radius(const SFT& m) {
  const IntPolynomial p = characteristic_polynomial(m);
  const auto roots = isolate_real_roots(p);
  if (roots.empty()) return RealAlgebraic::rational(Rational(0));
  // Perron-Frobenius: the radius is itself an eigenvalue, so the largest real root.
  return *std::max_element(roots.begin(), roots.end());
}

double power_iteration_radius(const SFT& m, std::size_t iterations) {
  m.validate();
  const std::size_t n = m.size();
  if (n == 0) return 0;
  // Iterating A + I avoids oscillation on periodic components.
  std::vector<double> v(n, 1.0), w(n);
  double growth = 0;
  for (std::size_t it = 0; it < iterations; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = v[i];
      for (std::size_t j = 0; j < n; ++j) s += static_cast<double>(m.adjacency[i][j]) * v[j];
      w[i] = s;
    }
    const double top = *std::max_element(w.begin(), w.end());
    growth = top / *std::max_element(v.begin(), v.end());
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / top;
  }
  return growth - 1;
}

std::vector<BigInt> path_counts(const SFT& m, std::size_t length, std::optional<std::size_t> start) {
  m.validate();
  const std::size_t n = m.size();
  if (start && *start >= n) throw Error(ErrorKind::OutOfRange, "start state out of range");
  std::vector<BigInt> ends(n, BigInt(start ? 0 : 1));
  if (start) ends[*start] = 1;
  std::vector<BigInt> out;
  for (std::size_t step = 0; step < length; ++step) {
    std::vector<BigInt> next(n, BigInt(0));
    for (std::size_t i = 0; i < n; ++i) {
      if (ends[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (m.adjacency[i][j] != 0) next[j] += ends[i] * BigInt(static_cast<long>(m.adjacency[i][j]));
      }
    }
    ends = std::move(next);
    BigInt total = 0;
    for (const auto& e : ends) total += e;
    out.push_back(total);
  }
  return out;
}

SparseSubshift to_sparse(const SFT& m) {
  m.validate();
  SparseSubshift s;
  s.successors.resize(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      for (std::int64_t k = 0; k < m.adjacency[i][j]; ++k) s.successors[i].push_back(static_cast<std::uint32_t>(j));
    }
  }
  return s;
}

RadiusBounds spectral_radius_bounds(const SparseSubshift& s) {
  constexpr double kMargin = 1e-12;
  constexpr std::size_t kMaxIterations = 20000;
  constexpr std::size_t kCheckEvery = 25;
  const auto comps = detail::strong_components(s.successors, [](std::uint32_t t) { return std::size_t{t}; });
  std::vector<std::vector<std::size_t>> members(comps.count);
  for (std::size_t v = 0; v < s.size(); ++v) members[comps.of[v]].push_back(v);

  RadiusBounds out;
  std::vector<double> v(s.size(), 0.0), w(s.size(), 0.0);
  for (std::size_t c = 0; c < comps.count; ++c) {
    const auto& nodes = members[c];
    bool cyclic = false;
    std::size_t max_degree = 0;
    for (std::size_t x : nodes) {
      std::size_t internal = 0;
      for (auto t : s.successors[x]) internal += comps.of[t] == c;
      cyclic = cyclic || internal > 0;
      max_degree = std::max(max_degree, internal);
    }
    if (!cyclic) continue;

    auto internal_sum = [&](std::size_t x, const std::vector<double>& vec) {
      double sum = 0;
      for (auto t : s.successors[x]) {
        if (comps.of[t] == c) sum += vec[t];
      }
      return sum;
    };
    for (std::size_t x : nodes) v[x] = 1.0;
    double lo = 0;
    double hi = static_cast<double>(max_degree);
    for (std::size_t it = 1; it <= kMaxIterations; ++it) {
      double top = 0;
      for (std::size_t x : nodes) {
        w[x] = v[x] + internal_sum(x, v);
        top = std::max(top, w[x]);
      }
      for (std::size_t x : nodes) v[x] = w[x] / top;
      if (it % kCheckEvery != 0 && it != kMaxIterations) continue;
      double rmin = INFINITY;
      double rmax = 0;
      bool positive = true;
      for (std::size_t x : nodes) {
        if (!(v[x] > 0) || !std::isfinite(v[x])) {
          positive = false;
          break;
        }
        const double r = internal_sum(x, v) / v[x];
        rmin = std::min(rmin, r);
        rmax = std::max(rmax, r);
      }
      if (!positive) break;
      lo = std::max(lo, rmin);
      hi = std::min(hi, rmax);
      if (hi - lo <= 1e-14 * hi) break;
    }
    out.lo = std::max(out.lo, lo * (1 - kMargin));
    out.hi = std::max(out.hi, hi * (1 + kMargin));
  }
  return out;
}

double LogRatio::value() const {
  double v = log_of(numerator);
  if (denominator) v /= log_of(*denominator);
  return v * scale.get_d();
}

std::string LogRatio::formula() const {
  std::string s = "log(" + describe_constant(numerator) + ")";
  if (denominator) s += "/log(" + describe_constant(*denominator) + ")";
  if (scale != 1) s = to_string(scale) + "*" + s;
  return s;
}

bool operator==(const LogRatio& a, const LogRatio& b) {
  return a.scale == b.scale && a.numerator == b.numerator && a.denominator.has_value() == b.denominator.has_value() &&
         (!a.denominator || *a.denominator == *b.denominator);
}

DimReport DimReport::exact(const Rational& r, int precision) {
  DimReport d;
  d.rational = r;
  d.lo = d.hi = r.get_d();
  d.precision = std::clamp(precision, 0, kMaxPrecision);
  return d;
}

DimReport DimReport::exact(LogRatio r, int precision) {
  DimReport d;
  d.lo = d.hi = r.value();
  d.log_ratio = std::move(r);
  d.precision = std::clamp(precision, 0, kMaxPrecision);
  return d;
}

DimReport DimReport::bounds(double lo, double hi, int precision) {
  if (hi < lo) throw Error(ErrorKind::InvalidArgument, "dimension bounds out of order");
  DimReport d;
  d.kind = Kind::Bounds;
  d.lo = lo;
  d.hi = hi;
  d.precision = std::clamp(precision, 0, kMaxPrecision);
  return d;
}

std::string DimReport::formula() const {
  if (rational) return to_string(*rational);
  if (log_ratio) return log_ratio->formula();
  return {};
}

std::string DimReport::decimal(double v) const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  return buf;
}

bool DimReport::same_exact_value(const DimReport& other) const {
  if (!is_exact() || !other.is_exact()) return false;
  if (rational && other.rational) return *rational == *other.rational;
  if (log_ratio && other.log_ratio) return *log_ratio == *other.log_ratio;
  return false;
}

DimReport entropy(const SFT& m, int precision) {
  const RealAlgebraic rho = spectral_radius(m);
  const auto c = rho.compare(Rational(1));
  if (c == std::strong_ordering::less) {
    throw Error(ErrorKind::DegenerateSubshift, "spectral radius below 1: " + rho.describe());
  }
  if (c == std::strong_ordering::equal) return DimReport::exact(Rational(0), precision);
  return DimReport::exact(LogRatio{rho, std::nullopt, Rational(1)}, precision);
}

DimReport dim_attractor(const Base& base, int precision) {
  if (base.regime() != Regime::Super) return DimReport::exact(Rational(1), precision);
  return DimReport::exact(LogRatio{constants::golden_square(), base.value(), Rational(1)}, precision);
}

DimReport dim_univoque(const Base& base, int precision, std::size_t depth) {
  if (base.regime() == Regime::SubCritical) return DimReport::exact(Rational(0), precision);
  if (base.value() >= constants::golden_square()) {
    return DimReport::exact(LogRatio{constants::critical_base(), base.value(), Rational(1)}, precision);
  }
  return dim_univoque_bounds(base, depth, precision);
}

namespace {

constexpr std::size_t kMaxBlockDepth = 12;

// m-digit words as base-3 integers; with 0 < 1 < q as 0, 1, 2 the integer
// order is the lexicographic order.
std::uint32_t encode(const DigitString& w) {
  std::uint32_t v = 0;
  for (Digit d : w) v = v * 3 + static_cast<std::uint32_t>(d);
  return v;
}

struct Thresholds {
  std::uint32_t one_alpha;  // (1 alpha)[0, m)
  std::uint32_t alpha;      // alpha[0, m)
  std::uint32_t ones;       // 1^m
  std::uint32_t zero_qs;    // 0 q^(m-1)
};

SparseSubshift block_subshift(std::size_t m, const Thresholds& th, bool strict) {
  std::uint32_t states = 1;
  for (std::size_t i = 0; i < m; ++i) states *= 3;
  const std::uint32_t top = states / 3;
  SparseSubshift s;
  s.successors.resize(states);
  for (std::uint32_t state = 0; state < states; ++state) {
    const auto lead = static_cast<Digit>(state / top);
    for (std::uint32_t c = 0; c < 3; ++c) {
      const std::uint32_t tail = (state % top) * 3 + c;  // the m digits after `lead`
      bool ok = true;
      switch (lead) {
        case Digit::Zero:
          ok = strict ? tail < th.one_alpha : tail <= th.one_alpha;
          break;
        case Digit::One:
          ok = strict ? (th.ones < tail && tail < th.alpha) : (th.ones <= tail && tail <= th.alpha);
          break;
        case Digit::Q:
          ok = !strict || tail > th.zero_qs;
          break;
      }
      if (ok) s.successors[state].push_back(tail);
    }
  }
  return s;
}

struct LogBase {
  double lo;
  double hi;
};

LogBase log_base(const Base& base) {
  const RationalInterval q = base.value().refine(dyadic_width(80));
  return {std::log(std::nextafter(q.lo.get_d(), 0.0)), std::log(std::nextafter(q.hi.get_d(), INFINITY))};
}

}  // namespace

DeltaBound delta_lower_bound(const Base& base, int precision) {
  const std::size_t m = alpha_gap_index(base);
  LogRatio r{RealAlgebraic::rational(Rational(2)), base.value(), Rational(1, static_cast<long>(m + 2))};
  return {m, DimReport::exact(std::move(r), precision)};
}

DimReport dim_univoque_bounds(const Base& base, std::size_t m, int precision) {
  if (base.regime() != Regime::Middle) {
    throw Error(ErrorKind::UnsupportedRegime, "block bounds apply to q_c < q <= q*");
  }
  if (m < 1 || m > kMaxBlockDepth) {
    throw Error(ErrorKind::OutOfRange, "block depth must lie in [1, " + std::to_string(kMaxBlockDepth) + "]");
  }
  const AlphaExpansion a = alpha(base, m);
  DigitString one_alpha{Digit::One};
  one_alpha.insert(one_alpha.end(), a.prefix.digits.begin(), a.prefix.digits.end() - 1);
  DigitString zero_qs(m, Digit::Q);
  zero_qs[0] = Digit::Zero;
  const Thresholds th{encode(one_alpha), encode(a.prefix.digits), encode(DigitString(m, Digit::One)),
                      encode(zero_qs)};

  const RadiusBounds upper = spectral_radius_bounds(block_subshift(m, th, false));
  const RadiusBounds lower = spectral_radius_bounds(block_subshift(m, th, true));
  const LogBase lq = log_base(base);
  constexpr double kMargin = 1e-12;
  const double hi = upper.hi > 1 ? std::log(upper.hi) / lq.lo * (1 + kMargin) : 0.0;
  double lo = lower.lo > 1 ? std::log(lower.lo) / lq.hi * (1 - kMargin) : 0.0;
  lo = std::max(lo, delta_lower_bound(base, precision).bound.value());
  return DimReport::bounds(lo, hi, precision);
}

DimReport dim_multi(const Base& base, std::size_t k, int precision, std::size_t depth) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "k must be at least 1");
  if (k >= 2 && base.regime() == Regime::SubCritical) {
    throw Error(ErrorKind::EmptySet, "no point has exactly " + std::to_string(k) + " expansions for q <= q_c");
  }
  return dim_univoque(base, precision, depth);
}

DimReport dim_continuum(const Base& base, int precision) { return dim_attractor(base, precision); }

}  // namespace triexp
