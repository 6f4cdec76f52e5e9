#pragma once

#include <ostream>
#include <random>

#include "triexp/expansion.hpp"
#include "triexp/rational.hpp"

namespace triexp {

// Readable gtest failure messages.
inline void PrintTo(const EPWord& w, std::ostream* os) { *os << w.to_string(); }
inline void PrintTo(const FieldElement& x, std::ostream* os) { *os << x.to_string(); }

}  // namespace triexp

namespace triexp::test {

inline Rational Q(const char* text) { return parse_rational(text); }

inline Base silver() { return Base(constants::silver_ratio()); }
inline Base qstar() { return Base(constants::golden_square()); }
inline Base qcrit() { return Base(constants::critical_base()); }

// Small random rational with denominator up to 12.
inline Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-30, 30), den(1, 12);
  return make_rational(num(rng), den(rng));
}

// Random element c0 + c1 q + ... of the base's field.
inline FieldElement random_element(std::mt19937_64& rng, const Base& b) {
  std::vector<Rational> c(b.field()->degree());
  for (auto& x : c) x = random_rational(rng);
  return FieldElement(b.field(), c);
}

}  // namespace triexp::test
