#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dtknot::checks {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // counterexample description when failed
};

inline constexpr std::uint64_t kDefaultSeed = 0x9e3779b97f4a7c15ull;
inline constexpr int kDefaultCases = 1000;

/// Ring kernel and q-symbol properties; randomized parts draw `cases`
/// samples from a deterministic generator seeded with `seed`.
std::vector<CheckResult> run_core_checks(std::uint64_t seed = kDefaultSeed,
                                         int cases = kDefaultCases);

/// Twist-coefficient identities (divisibility, the T/t/C relations, closed
/// forms, basis-change inverses).
std::vector<CheckResult> run_coefficient_checks();

/// Invariant-level identities and the cyclotomic expansion grid.
std::vector<CheckResult> run_cyclotomic_checks();

/// All of the above, in order.
std::vector<CheckResult> run_all_checks(std::uint64_t seed = kDefaultSeed,
                                        int cases = kDefaultCases);

}  // namespace dtknot::checks
