#include "hardyq/lhv.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hardyq {

std::string label(const DeterministicStrategy& s) {
  std::string out;
  out += "L1";
  out += symbol_of(s.l1);
  out += " L2";
  out += symbol_of(s.l2);
  out += " R1";
  out += symbol_of(s.r1);
  out += " R2";
  out += symbol_of(s.r2);
  return out;
}

std::array<ForbiddenPattern, 3> zero_constraints() {
  using S = Setting;
  using O = Outcome;
  return {{
      {{S::one, S::two}, {O::minus, O::minus}},
      {{S::two, S::two}, {O::minus, O::plus}},
      {{S::two, S::one}, {O::plus, O::plus}},
  }};
}

bool matches(const DeterministicStrategy& s, const ForbiddenPattern& pattern) {
  return s.at(Side::left, pattern.settings.left) == pattern.outcomes.left &&
         s.at(Side::right, pattern.settings.right) == pattern.outcomes.right;
}

std::array<DeterministicStrategy, 16> enumerate_strategies() {
  std::array<DeterministicStrategy, 16> all{};
  for (int i = 0; i < 16; ++i) {
    auto bit = [i](int b) { return ((i >> b) & 1) == 0 ? Outcome::plus : Outcome::minus; };
    all[i] = DeterministicStrategy{bit(3), bit(2), bit(1), bit(0)};
  }
  return all;
}

std::vector<DeterministicStrategy> feasible_strategies(
    std::span<const ForbiddenPattern> patterns) {
  std::vector<DeterministicStrategy> survivors;
  for (const auto& s : enumerate_strategies()) {
    const bool eliminated = std::any_of(patterns.begin(), patterns.end(),
                                        [&](const auto& p) { return matches(s, p); });
    if (!eliminated) survivors.push_back(s);
  }
  return survivors;
}

std::vector<DeterministicStrategy> feasible_strategies() {
  const auto patterns = zero_constraints();
  return feasible_strategies(std::span<const ForbiddenPattern>(patterns));
}

double mixture_probability(std::span<const DeterministicStrategy> strategies,
                           std::span<const double> weights, SettingPair settings,
                           OutcomePair outcomes) {
  if (strategies.size() != weights.size()) {
    throw std::invalid_argument("mixture needs one weight per strategy");
  }
  double p = 0.0;
  for (std::size_t i = 0; i < strategies.size(); ++i) {
    if (weights[i] < 0.0) throw std::invalid_argument("mixture weights must be non-negative");
    if (strategies[i].at(Side::left, settings.left) == outcomes.left &&
        strategies[i].at(Side::right, settings.right) == outcomes.right) {
      p += weights[i];
    }
  }
  return p;
}

namespace {

// Builds the step forced by `constraint` once `premise` is fixed: the
// pattern's event is impossible, so on the other side the pattern's
// outcome (at the pattern's setting there) is ruled out.
DeductionStep force_step(int constraint_index, const ForbiddenPattern& pattern, Side premise_side,
                         Outcome premise_outcome) {
  const Side forced_side = other_side(premise_side);
  const Setting premise_setting =
      premise_side == Side::left ? pattern.settings.left : pattern.settings.right;
  const Setting forced_setting =
      forced_side == Side::left ? pattern.settings.left : pattern.settings.right;
  const Outcome ruled_out =
      forced_side == Side::left ? pattern.outcomes.left : pattern.outcomes.right;
  return DeductionStep{constraint_index, premise_side,   premise_setting, premise_outcome,
                       forced_side,      forced_setting, flip(ruled_out)};
}

}  // namespace

NoGoCertificate nogo_certificate(const MeasurementFamily& witness_family) {
  const auto patterns = zero_constraints();

  NoGoCertificate cert{patterns,
                       {},
                       {},
                       Setting::one,
                       Outcome::minus,
                       Setting::one,
                       Outcome::plus,
                       {},
                       witness_family,
                       0.0};

  for (const auto& s : enumerate_strategies()) {
    int violated = -1;
    for (std::size_t i = 0; i < patterns.size(); ++i) {
      if (matches(s, patterns[i])) {
        violated = static_cast<int>(i);
        break;
      }
    }
    if (violated < 0) {
      cert.survivors.push_back(s);
    } else {
      cert.eliminated.push_back(Elimination{s, violated});
    }
  }

  // Assume L1 = - and R1 = +; each constraint in turn forces the next
  // far-side value until the assumption on the right is contradicted.
  cert.chain[0] = force_step(0, patterns[0], Side::left, Outcome::minus);   // L1- forces R2+
  cert.chain[1] = force_step(1, patterns[1], Side::right, Outcome::plus);   // R2+ forces L2+
  cert.chain[2] = force_step(2, patterns[2], Side::left, Outcome::plus);    // L2+ forces R1-

  cert.quantum_witness = joint_probability(build_hardy_state(witness_family),
                                           {Setting::one, Setting::one},
                                           {Outcome::minus, Outcome::plus});
  return cert;
}

RecheckReport recheck_certificate(const NoGoCertificate& cert) {
  RecheckReport report{true, {}};
  auto fail = [&](std::string why) {
    report.valid = false;
    report.failures.push_back(std::move(why));
  };

  if (cert.constraints != zero_constraints()) {
    fail("constraint list does not match the raw zero-patterns");
  }

  // Partition: every strategy appears exactly once, survivors clean,
  // eliminations justified.
  if (cert.survivors.size() + cert.eliminated.size() != 16) {
    fail("survivors and eliminations do not partition the 16 strategies");
  }
  std::vector<DeterministicStrategy> seen;
  for (const auto& s : cert.survivors) seen.push_back(s);
  for (const auto& e : cert.eliminated) seen.push_back(e.strategy);
  for (const auto& s : enumerate_strategies()) {
    if (std::count(seen.begin(), seen.end(), s) != 1) {
      fail("strategy " + label(s) + " is not listed exactly once");
    }
  }
  for (const auto& s : cert.survivors) {
    for (const auto& p : cert.constraints) {
      if (matches(s, p)) fail("listed survivor " + label(s) + " violates a constraint");
    }
  }
  for (const auto& e : cert.eliminated) {
    if (e.violated_constraint < 0 ||
        e.violated_constraint >= static_cast<int>(cert.constraints.size())) {
      fail("elimination cites an out-of-range constraint");
    } else if (!matches(e.strategy, cert.constraints[e.violated_constraint])) {
      fail("elimination of " + label(e.strategy) + " cites a constraint it does not violate");
    }
  }

  // Deduction chain: starts at the assumed left record, each step is the
  // forcing its cited constraint licenses, consecutive steps link up, and
  // the last step contradicts the assumed right record.
  if (cert.chain[0].premise_side != Side::left ||
      cert.chain[0].premise_setting != cert.assumed_left_setting ||
      cert.chain[0].premise_outcome != cert.assumed_left_outcome) {
    fail("chain does not start from the assumed left record");
  }
  for (std::size_t k = 0; k < cert.chain.size(); ++k) {
    const auto& step = cert.chain[k];
    if (step.constraint < 0 || step.constraint >= static_cast<int>(cert.constraints.size())) {
      fail("chain step cites an out-of-range constraint");
      continue;
    }
    const auto& pattern = cert.constraints[step.constraint];
    const DeductionStep expected =
        force_step(step.constraint, pattern, step.premise_side, step.premise_outcome);
    const bool premise_in_pattern =
        (step.premise_side == Side::left ? pattern.settings.left : pattern.settings.right) ==
            step.premise_setting &&
        (step.premise_side == Side::left ? pattern.outcomes.left : pattern.outcomes.right) ==
            step.premise_outcome;
    if (!premise_in_pattern) {
      fail("chain step premise does not appear in its cited constraint");
    }
    if (step.forced_side != expected.forced_side || step.forced_setting != expected.forced_setting ||
        step.forced_outcome != expected.forced_outcome) {
      fail("chain step forces a value its cited constraint does not license");
    }
    if (k + 1 < cert.chain.size()) {
      const auto& next = cert.chain[k + 1];
      if (next.premise_side != step.forced_side || next.premise_setting != step.forced_setting ||
          next.premise_outcome != step.forced_outcome) {
        fail("chain steps do not link up");
      }
    }
  }
  const auto& last = cert.chain.back();
  if (last.forced_side != Side::right || last.forced_setting != cert.assumed_right_setting ||
      last.forced_outcome != flip(cert.assumed_right_outcome)) {
    fail("chain does not contradict the assumed right record");
  }

  // No survivor realizes the assumed joint record, so every mixture of
  // survivors gives it probability zero.
  for (const auto& s : cert.survivors) {
    if (s.at(Side::left, cert.assumed_left_setting) == cert.assumed_left_outcome &&
        s.at(Side::right, cert.assumed_right_setting) == cert.assumed_right_outcome) {
      fail("survivor " + label(s) + " realizes the assumed joint record");
    }
  }

  // Quantum witness: the same event has positive probability in the state.
  const double recomputed = joint_probability(
      build_hardy_state(cert.witness_family),
      {cert.assumed_left_setting, cert.assumed_right_setting},
      {cert.assumed_left_outcome, cert.assumed_right_outcome});
  if (!(cert.quantum_witness > zero_tolerance)) {
    fail("quantum witness is not positive");
  }
  if (std::abs(recomputed - cert.quantum_witness) > 1e-12) {
    fail("quantum witness does not match a recomputation from the witness family");
  }

  return report;
}

}  // namespace hardyq
