#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "hardyq/hardy.hpp"

namespace hardyq {

/// A local deterministic strategy: one pre-assigned outcome per local
/// setting. Locality is structural — the value at a setting on one side
/// cannot reference the setting chosen on the other side.
struct DeterministicStrategy {
  Outcome l1, l2, r1, r2;

  Outcome at(Side side, Setting setting) const {
    if (side == Side::left) return setting == Setting::one ? l1 : l2;
    return setting == Setting::one ? r1 : r2;
  }

  bool operator==(const DeterministicStrategy&) const = default;
};

/// Compact form, e.g. "L1+ L2+ R1- R2+".
std::string label(const DeterministicStrategy& s);

/// A joint (settings, outcomes) event that never occurs. A strategy is
/// incompatible with the pattern iff it produces both of its outcomes.
struct ForbiddenPattern {
  SettingPair settings;
  OutcomePair outcomes;
  bool operator==(const ForbiddenPattern&) const = default;
};

/// The three impossible joint events, in fixed order: 12--, 22-+, 21++.
/// These abstract zero-patterns are all the no-go needs; they are decoupled
/// from any particular state realizing them.
std::array<ForbiddenPattern, 3> zero_constraints();

bool matches(const DeterministicStrategy& s, const ForbiddenPattern& pattern);

/// All 2^4 strategies, each exactly once. Index i maps bit 3 to L1, bit 2
/// to L2, bit 1 to R1, bit 0 to R2, with a clear bit meaning +; element 0
/// is therefore (L1+, L2+, R1+, R2+).
std::array<DeterministicStrategy, 16> enumerate_strategies();

/// Strategies compatible with every pattern, in enumeration order.
std::vector<DeterministicStrategy> feasible_strategies(
    std::span<const ForbiddenPattern> patterns);
std::vector<DeterministicStrategy> feasible_strategies();

/// Probability that a mixture of strategies produces the given outcomes
/// when the given settings are measured. Weights must be non-negative.
double mixture_probability(std::span<const DeterministicStrategy> strategies,
                           std::span<const double> weights, SettingPair settings,
                           OutcomePair outcomes);

struct Elimination {
  DeterministicStrategy strategy;
  int violated_constraint;  // lowest matching index into the pattern list
};

/// One forcing step: within the premise's context, the cited constraint
/// leaves only one outcome open on the other side.
struct DeductionStep {
  int constraint;
  Side premise_side;
  Setting premise_setting;
  Outcome premise_outcome;
  Side forced_side;
  Setting forced_setting;
  Outcome forced_outcome;
};

/// Machine-checkable evidence that no mixture of local deterministic
/// strategies reproduces the four defining probabilities: the survivor
/// list, the constraint each eliminated strategy violates, the three-step
/// deduction showing (L1-, R1+) is unreachable, and a quantum witness
/// state giving that event positive probability.
struct NoGoCertificate {
  std::array<ForbiddenPattern, 3> constraints;
  std::vector<DeterministicStrategy> survivors;
  std::vector<Elimination> eliminated;
  Setting assumed_left_setting;
  Outcome assumed_left_outcome;  // L1 = -
  Setting assumed_right_setting;
  Outcome assumed_right_outcome;  // R1 = +
  std::array<DeductionStep, 3> chain;
  MeasurementFamily witness_family;
  double quantum_witness;  // p(11-+) for the witness family
};

NoGoCertificate nogo_certificate(
    const MeasurementFamily& witness_family = MeasurementFamily(std::asin(1.0) / 2.0,
                                                                std::asin(1.0) / 2.0));

struct RecheckReport {
  bool valid;
  std::vector<std::string> failures;
};

/// Re-verifies every part of a certificate from scratch: the constraint
/// list, the survivor/elimination partition, each deduction step against
/// the raw patterns, the chain linkage and contradiction, the absence of
/// (L1-, R1+) survivors, and the quantum witness value.
RecheckReport recheck_certificate(const NoGoCertificate& certificate);

}  // namespace hardyq
