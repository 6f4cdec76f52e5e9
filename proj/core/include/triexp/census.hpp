#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "triexp/expansion.hpp"
#include "triexp/rational.hpp"

namespace triexp {

inline constexpr std::size_t kDefaultNodeCap = 10000;

/// Follower graph of a point: nodes are the remainders q^n x - (d_1...d_n)_q
/// that stay inside [0, M], edges are labelled by the digit used.
struct ExpansionGraph {
  struct Edge {
    Digit digit;
    std::size_t target;
  };
  std::vector<FieldElement> nodes;
  std::vector<std::vector<Edge>> edges;  // per node, in digit order 0, 1, q
  std::size_t root = 0;                  // meaningless when empty
  bool pruned = false;

  [[nodiscard]] bool empty() const noexcept { return nodes.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return nodes.size(); }
  [[nodiscard]] std::size_t edge_count() const;
  [[nodiscard]] std::optional<std::size_t> find(const FieldElement& v) const;
};

/// Breadth-first closure of {x}, then removal of everything that cannot
/// reach a cycle. Throws CapExceeded when more than node_cap nodes appear.
[[nodiscard]] ExpansionGraph build_graph(const FieldElement& x, const Base& base,
                                         std::size_t node_cap = kDefaultNodeCap);

struct Cardinality {
  enum class Kind { Zero, Finite, CountablyInfinite, Continuum, UnresolvedAtCap };
  Kind kind = Kind::Zero;
  std::size_t count = 0;  // Finite only
  std::vector<EPWord> witnesses;
  std::size_t explored_nodes = 0;
  /// How the verdict was reached: "graph", "two-cycle component" or
  /// "double-cover interval".
  std::string evidence;

  [[nodiscard]] bool is_finite(std::size_t k) const noexcept { return kind == Kind::Finite && count == k; }
};

[[nodiscard]] std::string_view to_string(Cardinality::Kind k) noexcept;
/// "zero", "finite 3", "countably-infinite", "continuum", "unresolved".
[[nodiscard]] std::string describe(const Cardinality& c);

/// Cardinality of the set of expansions of x. When the follower graph is
/// too large to close, two sound shortcuts are tried on the explored part
/// before giving up with UnresolvedAtCap: a reachable strongly connected
/// component with two cycles, and the base's continuum certificate.
[[nodiscard]] Cardinality classify(const FieldElement& x, const Base& base,
                                   std::size_t node_cap = kDefaultNodeCap);

struct BranchDiagnostic {
  Digit digit;
  bool usable = false;  // q v - d in E_q
  Cardinality::Kind kind = Cardinality::Kind::Zero;
  std::size_t count = 0;
};

struct NodeDiagnostic {
  FieldElement value;
  std::vector<BranchDiagnostic> branches;  // one per digit
};

struct NullInfiniteReport {
  bool null_infinite = false;
  /// One entry per node with at least two usable digits.
  std::vector<NodeDiagnostic> switch_nodes;
};

/// Throws CapExceeded when the graph does not close within node_cap.
[[nodiscard]] NullInfiniteReport null_infinite_check(const FieldElement& x, const Base& base,
                                                     std::size_t node_cap = kDefaultNodeCap);

struct BkWitness {
  EPWord word;
  std::optional<std::size_t> gap_index;  // the m of the middle-regime family
  Cardinality verification;
  [[nodiscard]] bool verified() const noexcept { return verification.kind == Cardinality::Kind::Finite; }
};

/// A point with exactly k expansions. The result is checked with classify:
/// a different finite count throws WitnessMismatch, an unresolved
/// classification is reported through `verification`.
[[nodiscard]] BkWitness witness_for_Bk(const Base& base, std::size_t k, std::size_t node_cap = kDefaultNodeCap);

struct BaseMembership {
  bool unique = true;          // B_1
  bool multiple_k = false;     // B_k for every k >= 2
  bool countable = false;      // B_aleph0
  bool continuum = false;      // B_continuum
};

[[nodiscard]] BaseMembership classify_base(const Base& base);

inline constexpr std::size_t kMaxExactDepth = 64;

/// Number of digit strings of length `depth` that extend to an expansion
/// of x. Exact; throws OutOfRange for depth > kMaxExactDepth.
[[nodiscard]] BigInt count_prefixes_to_depth(const FieldElement& x, const Base& base, std::size_t depth);
/// Interval variant: strings whose remainder interval still meets [0, M].
/// An over-approximation of the exact count for any point of `x`.
[[nodiscard]] BigInt count_prefixes_to_depth(const RationalInterval& x, const Base& base, std::size_t depth);

/// All length-`depth` prefixes that extend to an expansion of x.
[[nodiscard]] std::vector<DigitString> prefixes_to_depth(const FieldElement& x, const Base& base, std::size_t depth);

}  // namespace triexp
