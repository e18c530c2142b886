#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hardyq/hardy.hpp"

namespace hardyq {

/// Counts per (setting pair, outcome pair) bucket, indexed by index_of.
/// Bucket counts sum to total; buckets whose Born weight is below
/// zero_tolerance stay at exactly zero by construction of the sampler.
struct Tally {
  MeasurementFamily family;
  std::uint64_t seed;
  std::uint64_t total;
  std::array<std::array<std::uint64_t, 4>, 4> counts;  // [settings][outcomes]
};

/// Draws n runs: settings uniform and independent per side, outcomes from
/// the Born distribution for the drawn settings. The stream is produced by
/// std::mt19937_64 seeded with `seed` (one draw per side for the settings
/// via the low bit, one 53-bit uniform for the outcome), so a seed fully
/// determines the tally on every platform. Outcome weights below
/// zero_tolerance are clamped to exact zero before sampling.
/// Requires n >= 1.
Tally sample_runs(const HardyState& state, std::uint64_t n, std::uint64_t seed);

struct BucketStats {
  SettingPair settings;
  OutcomePair outcomes;
  std::uint64_t count;
  std::uint64_t setting_total;  // runs that drew this setting pair
  double empirical;             // count / setting_total
  double analytic;              // Born probability
  double z;                     // standardized deviation of the conditional frequency
  bool forbidden;               // analytic weight below zero_tolerance
  bool pass;
};

struct EmpiricalReport {
  std::array<BucketStats, 16> buckets;
  bool pass;                          // all |z| <= 4 and forbidden buckets exactly 0
  std::vector<std::string> failures;  // labels of failing buckets
};

/// Compares the tally against the analytic probabilities bucket by bucket.
/// Throws std::invalid_argument if the tally was produced from a different
/// family or its counts do not sum to its total.
EmpiricalReport empirical_report(const Tally& tally, const HardyState& state);

}  // namespace hardyq
