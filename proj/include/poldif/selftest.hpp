#pragma once

// Randomized property suite behind `poldif selftest`. Fully determined by
// the seed and case count.

#include <cstdint>
#include <string>
#include <vector>

namespace poldif {

inline constexpr std::uint64_t kDefaultSelftestSeed = 20240607;

struct PropertyTally {
  std::string name;
  long passed = 0;
  long failed = 0;
  std::vector<std::string> first_failures;  // at most a few, for diagnostics
};

struct SelftestReport {
  std::uint64_t seed = 0;
  long cases = 0;
  std::vector<PropertyTally> properties;

  long failures() const;
  /// Stable multi-line text; identical for identical (seed, cases).
  std::string to_text() const;
};

SelftestReport run_selftest(std::uint64_t seed, long cases);

}  // namespace poldif
