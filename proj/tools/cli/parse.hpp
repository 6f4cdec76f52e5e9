#pragma once

#include <cstddef>
#include <string_view>

#include "triexp/expansion.hpp"

namespace triexp::cli {

/// rat:<n>/<d>, root:<c0,...,cn>:<lo>,<hi> (lowest degree first), qc, qstar,
/// silver, or a bare decimal/fraction such as 2.5 or 7/3.
[[nodiscard]] Base parse_base(std::string_view text);

/// Arithmetic in q: numbers, q, + - * / ^ (integer exponents), parentheses
/// and implicit multiplication ("2q", "q(q-1)").
[[nodiscard]] FieldElement parse_value(std::string_view text, const Base& base);

/// A word "pre(per)*" when the text has a period group, otherwise a value.
[[nodiscard]] FieldElement parse_point(std::string_view text, const Base& base);

/// TRIEXP_NODE_CAP when set to a positive integer, else the library default.
[[nodiscard]] std::size_t node_cap_from_env();

}  // namespace triexp::cli
