#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace triexp {

/// One letter of the alphabet {0, 1, Q}; Q stands for the digit whose value
/// is the base itself. Ordered 0 < 1 < Q.
enum class Digit : std::uint8_t { Zero = 0, One = 1, Q = 2 };

using DigitString = std::vector<Digit>;

inline constexpr Digit kDigits[] = {Digit::Zero, Digit::One, Digit::Q};

[[nodiscard]] char to_char(Digit d) noexcept;
[[nodiscard]] Digit digit_from_char(char c);
[[nodiscard]] std::string to_string(std::span<const Digit> digits);
[[nodiscard]] DigitString parse_digits(std::string_view text);

/// A finite word d_1 ... d_n.
struct FiniteWord {
  DigitString digits;

  [[nodiscard]] std::size_t size() const noexcept { return digits.size(); }
  [[nodiscard]] std::string to_string() const { return triexp::to_string(digits); }
  friend bool operator==(const FiniteWord&, const FiniteWord&) = default;
};

/// An eventually periodic infinite word pre (period)^inf, always held in
/// canonical form: the period is primitive and the preperiod is as short as
/// possible. Two words denote the same sequence iff their representations
/// are identical.
class EPWord {
 public:
  /// Throws EmptyPeriod when `period` is empty.
  EPWord(DigitString preperiod, DigitString period);

  /// Text form: digits 0, 1, q with the period as "(...)*", e.g. "0qq(1q)*".
  static EPWord parse(std::string_view text);
  static EPWord constant(Digit d) { return EPWord({}, {d}); }

  [[nodiscard]] const DigitString& preperiod() const noexcept { return pre_; }
  [[nodiscard]] const DigitString& period() const noexcept { return per_; }
  /// i-th symbol of the infinite sequence (0-based).
  [[nodiscard]] Digit at(std::size_t i) const noexcept;
  /// The first n symbols.
  [[nodiscard]] DigitString prefix(std::size_t n) const;
  [[nodiscard]] bool is_purely_periodic() const noexcept { return pre_.empty(); }
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const EPWord&, const EPWord&) = default;
  friend std::strong_ordering operator<=>(const EPWord& a, const EPWord& b);

 private:
  DigitString pre_;
  DigitString per_;
};

/// Canonical word for pre (per)^inf.
[[nodiscard]] EPWord canonicalize(DigitString pre, DigitString per);

/// Lexicographic order of the infinite sequences.
[[nodiscard]] std::strong_ordering lex_compare(const EPWord& a, const EPWord& b);

/// Compares the infinite word against a finite prefix of another sequence.
/// Returns nullopt when the two agree on every symbol of `prefix`.
[[nodiscard]] std::optional<std::strong_ordering> compare_to_prefix(const EPWord& w,
                                                                    std::span<const Digit> prefix);

/// The shifted sequence d_{n+1} d_{n+2} ...
[[nodiscard]] EPWord tail(const EPWord& w, std::size_t n);

/// All shifts of w, in order of first appearance (n = 0, 1, ...).
[[nodiscard]] std::vector<EPWord> distinct_tails(const EPWord& w);

/// Symbol-wise image under 0 -> 0, 1 -> 1, Q -> 2.
struct PhiWord {
  std::vector<std::uint8_t> preperiod;
  std::vector<std::uint8_t> period;

  [[nodiscard]] std::uint8_t at(std::size_t i) const noexcept;
  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const PhiWord&, const PhiWord&) = default;
  friend std::strong_ordering operator<=>(const PhiWord& a, const PhiWord& b);
};

[[nodiscard]] PhiWord phi_map(const EPWord& w);
/// The same map on finite words.
[[nodiscard]] std::vector<std::uint8_t> phi_map(std::span<const Digit> digits);

/// Every word obtained from w by rewriting a single factor 10 as 0Q, or 0Q as
/// 10, starting at a position < window. All results denote the same number
/// as w in every base. Sorted, without duplicates.
[[nodiscard]] std::vector<EPWord> substitute_siblings(const EPWord& w, std::size_t window);

}  // namespace triexp
