#pragma once

#include <array>
#include <string>

#include "hardyq/measurement.hpp"

namespace hardyq {

/// Two-particle state engineered so that the joint events 12--, 22-+ and
/// 21++ are strictly impossible while 11-+ has positive probability.
struct HardyState {
  Vec4 vector;               // unit norm
  MeasurementFamily family;  // bases it was built from
  double raw_squared_norm;   // squared norm of the defining vector before scaling
};

/// Overlap <L2-,R2+|L1+,R1-> between the two defining product terms.
cplx term_overlap(const MeasurementFamily& family);

/// Normalized |L1+,R1-> - <L2-,R2+|L1+,R1->|L2-,R2+>.
/// Throws ImproperFamilyError if the family is degenerate on either side,
/// DegenerateStateError if the defining vector has norm below tolerance.
HardyState build_hardy_state(const MeasurementFamily& family);

/// <La,Rb|state> for the product eigenvector selected by settings/outcomes,
/// computed directly in the 4-dimensional product space.
cplx amplitude(const HardyState& state, SettingPair settings, OutcomePair outcomes);

/// Born probability |amplitude|^2.
double joint_probability(const HardyState& state, SettingPair settings, OutcomePair outcomes);

struct ConstraintCheck {
  SettingPair settings;
  OutcomePair outcomes;
  double probability;
  bool must_vanish;  // three vanishing events; the fourth must be positive
  bool pass;
};

struct ConstraintReport {
  MeasurementFamily family;
  std::array<ConstraintCheck, 4> checks;  // 12--, 22-+, 21++, 11-+
  bool pass;
};

/// Checks the four defining probabilities: the three zeros within zero_tol
/// and p(11-+) above positivity. Propagates family/state construction errors.
ConstraintReport verify_constraints(const MeasurementFamily& family,
                                    double zero_tol = zero_tolerance,
                                    double positivity = positivity_threshold);

/// One single-context implication between far-apart outcomes (or, for the
/// final table entry, the assertion that no such implication holds).
/// The antecedent's setting is the context's setting on the antecedent side.
struct Implication {
  SettingPair context;
  Side antecedent_side;
  Outcome antecedent_outcome;
  Side consequent_side;
  Outcome consequent_outcome;
  bool holds;                // false for the non-implication entry
  double check_probability;  // p(context, antecedent and not consequent)
};

Setting antecedent_setting(const Implication& imp);
Setting consequent_setting(const Implication& imp);
std::string label(const Implication& imp);  // e.g. "L1- => R2+ [in context 12]"

/// The four single-context facts the state enforces, each validated
/// numerically from the probability table:
///   (12) L1- => R2+, (22) R2+ => L2+, (21) L2+ => R1-,
///   (11) L1- does not imply R1-.
/// An implication A => B under settings s holds iff p(s, A and not B) = 0;
/// the non-implication holds iff p(11-+) > 0.
std::array<Implication, 4> implication_table(const MeasurementFamily& family);

struct OptimizeResult {
  double theta_left;
  double theta_right;
  double value;  // p(11-+) at the returned angles
};

/// Maximizes p(11-+) over proper families with phi = 0 by deterministic
/// grid search (theta_i = i*(pi/2)/resolution, i = 1..resolution-1, so the
/// diagonal pi/4 point is on every even grid) followed by golden-section
/// refinement rounds, one sweep per coordinate per round. Ties in the grid
/// scan break toward the lexicographically smallest (theta_left, theta_right).
/// Requires resolution >= 8.
OptimizeResult optimize_hardy_fraction(int grid_resolution, int refinement_steps);

}  // namespace hardyq
