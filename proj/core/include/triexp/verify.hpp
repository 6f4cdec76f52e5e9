#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "triexp/words.hpp"

namespace triexp {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

inline constexpr std::uint64_t kDefaultCheckSeed = 20120917;

/// Preperiod of length 0..max_pre and period of length 1..max_per, digits uniform.
[[nodiscard]] EPWord random_epword(std::mt19937_64& rng, std::size_t max_pre = 4, std::size_t max_per = 4);

/// The acceptance checks, one per criterion, in order 1..10.
[[nodiscard]] std::vector<CheckResult> run_acceptance(std::uint64_t seed = kDefaultCheckSeed);

[[nodiscard]] CheckResult check_critical_constants();
[[nodiscard]] CheckResult check_spectral_identity();
[[nodiscard]] CheckResult check_dimensions_at_three();
[[nodiscard]] CheckResult check_silver_ratio();
[[nodiscard]] CheckResult check_base_memberships();
[[nodiscard]] CheckResult check_expansion_counts();
[[nodiscard]] CheckResult check_null_infinite_points();
[[nodiscard]] CheckResult check_oracle_equivalence(std::uint64_t seed = kDefaultCheckSeed);
[[nodiscard]] CheckResult check_alpha_monotonicity(std::uint64_t seed = kDefaultCheckSeed);
[[nodiscard]] CheckResult check_sandwich_bounds();

}  // namespace triexp
