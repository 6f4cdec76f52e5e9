#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "triexp/field.hpp"
#include "triexp/real_algebraic.hpp"
#include "triexp/words.hpp"

namespace triexp {

/// Position of q relative to the two critical bases:
///   SubCritical  q <= q_c
///   Middle       q_c < q <= q*
///   Super        q > q*
enum class Regime { SubCritical, Middle, Super };

[[nodiscard]] std::string_view to_string(Regime r) noexcept;

/// A closed interval I and a length L such that every point of I lies in at
/// least two of the images phi_u(I), |u| = L, phi_d(y) = (y + d) / q. Every
/// point of I then has a continuum of expansions.
struct ContinuumCertificate {
  FieldElement lo;
  FieldElement hi;
  std::size_t length;
};

/// A base q > 1 bound to its field Q(q). Digits are 0, 1 and q itself, and
/// every expansion value lies in [0, M] with M = q / (q - 1).
class Base {
 public:
  explicit Base(RealAlgebraic q);
  static Base rational(const Rational& q) { return Base(RealAlgebraic::rational(q)); }

  [[nodiscard]] const RealAlgebraic& value() const noexcept { return value_; }
  [[nodiscard]] const FieldPtr& field() const noexcept { return field_; }
  [[nodiscard]] const FieldElement& q() const noexcept { return q_; }
  /// M = q / (q - 1), the right end of the attractor hull.
  [[nodiscard]] const FieldElement& attractor_max() const noexcept { return max_; }
  [[nodiscard]] Regime regime() const noexcept { return regime_; }

  [[nodiscard]] FieldElement element(const Rational& r) const { return FieldElement::from_rational(field_, r); }
  [[nodiscard]] FieldElement digit_value(Digit d) const;
  /// Closed-interval membership x in [0, M].
  [[nodiscard]] bool in_hull(const FieldElement& x) const;
  [[nodiscard]] std::string describe() const;

  /// Searched once per base (shared between copies) and only for q < 2,
  /// where the first-level images overlap enough for one to exist.
  [[nodiscard]] const std::optional<ContinuumCertificate>& continuum_certificate() const;

 private:
  struct Cache;
  RealAlgebraic value_;
  FieldPtr field_;
  FieldElement q_;
  FieldElement max_;
  Regime regime_;
  std::shared_ptr<Cache> cache_;
};

/// Exact value of sum d_i q^-i for the infinite word.
[[nodiscard]] FieldElement eval(const EPWord& w, const Base& base);
/// Exact value of the finite word d_1 ... d_n (as if followed by 0^inf).
[[nodiscard]] FieldElement eval(std::span<const Digit> digits, const Base& base);

struct GreedyResult {
  FiniteWord word;
  FieldElement remainder;  // x = (word)_q + remainder * q^-n
};

/// n greedy digits: each step takes the largest d with 0 <= q x - d <= M.
/// Throws OutOfRange when x is outside [0, M] and NotInAttractor when no digit
/// fits (only possible above q*).
[[nodiscard]] GreedyResult greedy_digits(const FieldElement& x, const Base& base, std::size_t n);

/// n quasi-greedy digits: largest d with 0 < q x - d <= M, so the expansion
/// never terminates. Defined for q <= q* and 0 < x <= M.
[[nodiscard]] FiniteWord quasi_greedy_digits(const FieldElement& x, const Base& base, std::size_t n);

/// The quasi-greedy expansion of q - 1.
struct AlphaExpansion {
  FiniteWord prefix;
  /// Set when the remainders provably cycle within the computed digits.
  std::optional<EPWord> closure;
};

inline constexpr std::size_t kAlphaDepthCap = 512;

[[nodiscard]] AlphaExpansion alpha(const Base& base, std::size_t n);

/// Least m >= 1 with alpha(q) > Q 1^m Q 0^inf. Middle regime only. Throws
/// AlphaUndecided when the comparison ties through `depth` digits.
[[nodiscard]] std::size_t alpha_gap_index(const Base& base, std::size_t depth = kAlphaDepthCap);

struct Hull {
  FieldElement lo;
  FieldElement hi;
  [[nodiscard]] bool empty() const { return hi < lo; }
};

/// Overlaps of the first-level images phi_0, phi_1, phi_q of [0, M]:
///   zero_one = [1/q, M/q],  one_q = [1, (1+M)/q].
/// Above q* the attractor is a Cantor set and these are only hulls.
struct SwitchRegion {
  Hull zero_one;
  Hull one_q;
  bool hull_only = false;
  bool disjoint = false;  // q > 2
};

[[nodiscard]] SwitchRegion switch_region(const Base& base);

enum class Uniqueness { Unique, NotUnique, Indeterminate };

[[nodiscard]] std::string_view to_string(Uniqueness u) noexcept;

/// Lexicographic test of whether the sequence w is the only expansion of its
/// value. Indeterminate arises only for q in (q_c, q*], where the available
/// characterisation is a sandwich.
[[nodiscard]] Uniqueness unique_membership_word(const EPWord& w, const Base& base,
                                                std::size_t alpha_depth = kAlphaDepthCap);

}  // namespace triexp
