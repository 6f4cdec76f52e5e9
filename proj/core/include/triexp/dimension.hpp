#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "triexp/expansion.hpp"
#include "triexp/polynomial.hpp"
#include "triexp/real_algebraic.hpp"

namespace triexp {

/// Subshift of finite type given by a nonnegative integer adjacency matrix.
struct SFT {
  std::vector<std::string> states;
  std::vector<std::vector<std::int64_t>> adjacency;

  [[nodiscard]] std::size_t size() const noexcept { return states.size(); }
  /// Throws InvalidArgument on a non-square, mislabelled or negative matrix.
  void validate() const;
};

/// Three states 0, 1, q; contains the unique expansions for every q > q*.
[[nodiscard]] SFT super_regime_subshift();
/// The seven-state system for q = 1 + sqrt 2 over 00, 01, 11, 1q, q0, q1, qq.
[[nodiscard]] SFT silver_subshift();

/// det(xI - A), computed division-free (Berkowitz).
[[nodiscard]] IntPolynomial characteristic_polynomial(const SFT& m);
/// Largest real root of the characteristic polynomial; 0 for nilpotent A.
[[nodiscard]] RealAlgebraic spectral_radius(const SFT& m);
/// Floating power-iteration estimate, kept as an independent cross-check.
[[nodiscard]] double power_iteration_radius(const SFT& m, std::size_t iterations = 5000);

/// N_1 .. N_length: number of paths with n edges, from `start` or from any state.
[[nodiscard]] std::vector<BigInt> path_counts(const SFT& m, std::size_t length,
                                              std::optional<std::size_t> start = std::nullopt);

/// 0/1 transition graph, for subshifts too large for a dense matrix.
struct SparseSubshift {
  std::vector<std::vector<std::uint32_t>> successors;
  [[nodiscard]] std::size_t size() const noexcept { return successors.size(); }
};

[[nodiscard]] SparseSubshift to_sparse(const SFT& m);

struct RadiusBounds {
  double lo = 0;
  double hi = 0;
};

/// Enclosure of the spectral radius from Collatz-Wielandt ratios on each
/// strongly connected component, widened by a relative 1e-12 to absorb
/// rounding in the ratios.
[[nodiscard]] RadiusBounds spectral_radius_bounds(const SparseSubshift& s);

/// scale * log(numerator) / log(denominator), or scale * log(numerator)
/// when there is no denominator.
struct LogRatio {
  RealAlgebraic numerator;
  std::optional<RealAlgebraic> denominator;
  Rational scale{1};

  [[nodiscard]] double value() const;
  [[nodiscard]] std::string formula() const;
  friend bool operator==(const LogRatio& a, const LogRatio& b);
};

inline constexpr int kDefaultPrecision = 6;
inline constexpr int kMaxPrecision = 15;
inline constexpr std::size_t kDefaultBlockDepth = 8;

struct DimReport {
  enum class Kind { Exact, Bounds };
  Kind kind = Kind::Exact;
  std::optional<Rational> rational;    // exact rational value
  std::optional<LogRatio> log_ratio;   // exact symbolic value
  double lo = 0;
  double hi = 0;
  int precision = kDefaultPrecision;

  static DimReport exact(const Rational& r, int precision = kDefaultPrecision);
  static DimReport exact(LogRatio r, int precision = kDefaultPrecision);
  static DimReport bounds(double lo, double hi, int precision = kDefaultPrecision);

  [[nodiscard]] bool is_exact() const noexcept { return kind == Kind::Exact; }
  [[nodiscard]] double value() const noexcept { return kind == Kind::Exact ? lo : (lo + hi) / 2; }
  /// Symbolic form of an exact value ("1", "log(r)/log(q)"), empty for bounds.
  [[nodiscard]] std::string formula() const;
  /// Decimal rendering at `precision` digits.
  [[nodiscard]] std::string decimal(double v) const;
  /// True when both are exact and carry the same symbolic value.
  [[nodiscard]] bool same_exact_value(const DimReport& other) const;
};

/// log of the spectral radius. Throws DegenerateSubshift when it is below 1.
[[nodiscard]] DimReport entropy(const SFT& m, int precision = kDefaultPrecision);

[[nodiscard]] DimReport dim_attractor(const Base& base, int precision = kDefaultPrecision);
/// Exact below q_c and from q* on; bounds in between.
[[nodiscard]] DimReport dim_univoque(const Base& base, int precision = kDefaultPrecision,
                                     std::size_t depth = kDefaultBlockDepth);

/// Bounds on (q_c, q*] from block subshifts over the words of length m:
/// the upper one keeps windows that respect the necessary lexicographic
/// conditions truncated to m digits, the lower one only windows that
/// already force the sufficient ones.
[[nodiscard]] DimReport dim_univoque_bounds(const Base& base, std::size_t m, int precision = kDefaultPrecision);

struct DeltaBound {
  std::size_t m = 0;
  DimReport bound;  // log 2 / ((m + 2) log q)
};

[[nodiscard]] DeltaBound delta_lower_bound(const Base& base, int precision = kDefaultPrecision);

/// Throws EmptySet for k >= 2 when q <= q_c.
[[nodiscard]] DimReport dim_multi(const Base& base, std::size_t k, int precision = kDefaultPrecision,
                                  std::size_t depth = kDefaultBlockDepth);
[[nodiscard]] DimReport dim_continuum(const Base& base, int precision = kDefaultPrecision);

}  // namespace triexp
