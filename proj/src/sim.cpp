#include "hardyq/sim.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace hardyq {

namespace {

// [0,1) from the top 53 bits, independent of any library distribution's
// implementation details.
double uniform53(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

// Born weights per setting pair with sub-tolerance entries clamped to
// exact zero, renormalized over the remainder.
std::array<std::array<double, 4>, 4> clamped_outcome_table(const HardyState& state) {
  std::array<std::array<double, 4>, 4> table{};
  for (const auto& settings : all_setting_pairs()) {
    double sum = 0.0;
    for (const auto& outcomes : all_outcome_pairs()) {
      double p = joint_probability(state, settings, outcomes);
      if (p <= zero_tolerance) p = 0.0;
      table[index_of(settings)][index_of(outcomes)] = p;
      sum += p;
    }
    for (auto& p : table[index_of(settings)]) p /= sum;
  }
  return table;
}

}  // namespace

Tally sample_runs(const HardyState& state, std::uint64_t n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample size must be at least 1");

  const auto table = clamped_outcome_table(state);
  std::mt19937_64 engine(seed);
  Tally tally{state.family, seed, n, {}};

  for (std::uint64_t run = 0; run < n; ++run) {
    const int left = static_cast<int>(engine() & 1u);
    const int right = static_cast<int>(engine() & 1u);
    const int settings_index = 2 * left + right;
    const double u = uniform53(engine);

    const auto& weights = table[settings_index];
    int picked = -1;
    double cumulative = 0.0;
    for (int k = 0; k < 4; ++k) {
      if (weights[k] == 0.0) continue;  // clamped events are never drawn
      picked = k;                       // fallback for u at the rounding edge
      cumulative += weights[k];
      if (u < cumulative) break;
    }
    ++tally.counts[settings_index][picked];
  }
  return tally;
}

EmpiricalReport empirical_report(const Tally& tally, const HardyState& state) {
  if (!(tally.family == state.family)) {
    throw std::invalid_argument("tally was sampled from a different measurement family");
  }
  std::uint64_t sum = 0;
  for (const auto& row : tally.counts)
    for (const auto c : row) sum += c;
  if (sum != tally.total) {
    throw std::invalid_argument("tally counts do not sum to its total");
  }

  EmpiricalReport report{{}, true, {}};
  int i = 0;
  for (const auto& settings : all_setting_pairs()) {
    std::uint64_t setting_total = 0;
    for (const auto c : tally.counts[index_of(settings)]) setting_total += c;
    for (const auto& outcomes : all_outcome_pairs()) {
      const std::uint64_t count = tally.counts[index_of(settings)][index_of(outcomes)];
      const double analytic = joint_probability(state, settings, outcomes);
      const bool forbidden = analytic <= zero_tolerance;
      const double empirical =
          setting_total == 0 ? 0.0 : static_cast<double>(count) / static_cast<double>(setting_total);

      double z = 0.0;
      bool pass = true;
      if (forbidden) {
        pass = count == 0;
      } else if (analytic >= 1.0 - zero_tolerance) {
        pass = count == setting_total;
      } else if (setting_total > 0) {
        const double se = std::sqrt(analytic * (1.0 - analytic) / static_cast<double>(setting_total));
        z = (empirical - analytic) / se;
        pass = std::abs(z) <= 4.0;
      }
      report.buckets[i++] =
          BucketStats{settings, outcomes, count, setting_total, empirical, analytic, z, forbidden, pass};
      if (!pass) {
        report.pass = false;
        report.failures.push_back(label(settings, outcomes));
      }
    }
  }
  return report;
}

}  // namespace hardyq
