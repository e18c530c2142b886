#include "hardyq/counterfactuals.hpp"

#include <stdexcept>

namespace hardyq {

std::string label(const Run& run) {
  return label(SettingPair{run.left_setting, run.right_setting},
               OutcomePair{run.left_outcome, run.right_outcome});
}

std::vector<Run> possible_runs(const HardyState& state) {
  std::vector<Run> runs;
  runs.reserve(16);
  for (const auto& settings : all_setting_pairs()) {
    for (const auto& outcomes : all_outcome_pairs()) {
      runs.push_back(Run{settings.left, outcomes.left, settings.right, outcomes.right,
                         joint_probability(state, settings, outcomes)});
    }
  }
  return runs;
}

bool quantum_possible(const HardyState& state, SettingPair settings, OutcomePair outcomes) {
  return joint_probability(state, settings, outcomes) > zero_tolerance;
}

std::string to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::necessarily_plus: return "necessarily+";
    case VerdictKind::necessarily_minus: return "necessarily-";
    case VerdictKind::undetermined: return "undetermined";
    case VerdictKind::inconsistent: return "inconsistent";
  }
  return "?";
}

namespace {

// The verdict is a function of the far-side record and the alternative
// setting alone; the queried side's actual outcome never reaches this point.
Verdict grounded_verdict(const HardyState& state, Side queried_side, Setting alternative,
                         const Grounding& far) {
  Verdict verdict{VerdictKind::inconsistent, {}};
  bool saw_plus = false, saw_minus = false;
  for (Outcome o : {Outcome::plus, Outcome::minus}) {
    Run world{};
    if (queried_side == Side::left) {
      world = Run{alternative, o, far.setting, far.outcome, 0.0};
    } else {
      world = Run{far.setting, far.outcome, alternative, o, 0.0};
    }
    world.weight = joint_probability(state, {world.left_setting, world.right_setting},
                                     {world.left_outcome, world.right_outcome});
    if (world.weight > zero_tolerance) {
      verdict.feasible.push_back(world);
      (o == Outcome::plus ? saw_plus : saw_minus) = true;
    }
  }
  if (saw_plus && saw_minus) {
    verdict.kind = VerdictKind::undetermined;
  } else if (saw_plus) {
    verdict.kind = VerdictKind::necessarily_plus;
  } else if (saw_minus) {
    verdict.kind = VerdictKind::necessarily_minus;
  }
  return verdict;
}

}  // namespace

Verdict evaluate_counterfactual(const HardyState& state, const Run& actual,
                                const CounterfactualQuery& query, const Grounding& grounding) {
  const Side far_side = other_side(query.side);
  if (grounding.setting != actual.setting(far_side) ||
      grounding.outcome != actual.outcome(far_side)) {
    throw std::invalid_argument(
        "counterfactual grounding must be the actual far-side record, not a substitute");
  }
  if (query.alternative == actual.setting(query.side)) {
    throw std::invalid_argument("alternative setting must differ from the actual one");
  }
  if (!quantum_possible(state, {actual.left_setting, actual.right_setting},
                        {actual.left_outcome, actual.right_outcome})) {
    throw std::invalid_argument("actual run is not quantum-possible");
  }
  return grounded_verdict(state, query.side, query.alternative, grounding);
}

Verdict evaluate_counterfactual(const HardyState& state, const Run& actual,
                                const CounterfactualQuery& query) {
  const Side far_side = other_side(query.side);
  return evaluate_counterfactual(state, actual, query,
                                 Grounding{actual.setting(far_side), actual.outcome(far_side)});
}

PropositionSchema proposition_one() {
  return PropositionSchema{Setting::two,  std::nullopt, Setting::two,
                           Outcome::plus, Setting::one, Outcome::minus};
}

PropositionSchema proposition_two() {
  return PropositionSchema{Setting::one,  std::nullopt, Setting::two,
                           Outcome::plus, Setting::one, Outcome::minus};
}

PropositionResult evaluate_proposition(const HardyState& state, const PropositionSchema& schema) {
  if (schema.alternative_right_setting == schema.right_setting) {
    throw std::invalid_argument("schema must query a setting other than the conditioned one");
  }
  PropositionResult result{schema, true, {}, {}};
  const VerdictKind required = schema.claimed == Outcome::plus ? VerdictKind::necessarily_plus
                                                               : VerdictKind::necessarily_minus;
  for (const Run& run : possible_runs(state)) {
    if (run.weight <= zero_tolerance) continue;
    if (run.left_setting != schema.left_setting) continue;
    if (schema.left_outcome && run.left_outcome != *schema.left_outcome) continue;
    if (run.right_setting != schema.right_setting) continue;
    if (run.right_outcome != schema.right_outcome) continue;

    Verdict verdict = evaluate_counterfactual(
        state, run, CounterfactualQuery{Side::right, schema.alternative_right_setting});
    const bool conforms = verdict.kind == required;
    if (!conforms) {
      result.derivable = false;
      result.witnesses.push_back(run);
    }
    result.evaluated.push_back(EvaluatedRun{run, std::move(verdict), conforms});
  }
  return result;
}

ChainReport detect_context_mixing(const HardyState& state, std::span<const Implication> chain) {
  ChainReport report{true, {}, std::nullopt, 0.0};
  if (chain.empty()) return report;

  for (const auto& imp : chain) {
    if (!imp.holds) {
      throw std::invalid_argument("chain elements must be implications that hold");
    }
  }
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    const auto& cur = chain[k];
    const auto& next = chain[k + 1];
    if (cur.consequent_side != next.antecedent_side ||
        consequent_setting(cur) != antecedent_setting(next) ||
        cur.consequent_outcome != next.antecedent_outcome) {
      throw std::invalid_argument("chain links must match consequent to antecedent");
    }
    const bool left_changed = cur.context.left != next.context.left;
    const bool right_changed = cur.context.right != next.context.right;
    if (left_changed || right_changed) {
      report.switches.push_back(ContextSwitch{k, left_changed, right_changed});
    }
  }

  const auto& first = chain.front();
  const auto& last = chain.back();
  if (first.antecedent_side == last.consequent_side) {
    throw std::invalid_argument("composed conclusion needs antecedent and consequent on opposite sides");
  }

  // Read the composed conclusion as a claim about one experiment: both
  // stations set as the endpoints require, antecedent holding, consequent
  // failing. Its probability is the counterexample weight.
  Implication composed{};
  composed.antecedent_side = first.antecedent_side;
  composed.antecedent_outcome = first.antecedent_outcome;
  composed.consequent_side = last.consequent_side;
  composed.consequent_outcome = last.consequent_outcome;
  if (first.antecedent_side == Side::left) {
    composed.context = SettingPair{antecedent_setting(first), consequent_setting(last)};
  } else {
    composed.context = SettingPair{consequent_setting(last), antecedent_setting(first)};
  }
  OutcomePair violating{};
  if (composed.antecedent_side == Side::left) {
    violating = {composed.antecedent_outcome, flip(composed.consequent_outcome)};
  } else {
    violating = {flip(composed.consequent_outcome), composed.antecedent_outcome};
  }
  composed.check_probability = joint_probability(state, composed.context, violating);
  composed.holds = composed.check_probability <= zero_tolerance;

  report.counterexample_probability = composed.check_probability;
  report.valid = composed.holds;
  report.composed = composed;
  return report;
}

std::string to_string(Frame frame) {
  switch (frame) {
    case Frame::left_first: return "left-first";
    case Frame::right_first: return "right-first";
    case Frame::atemporal: return "atemporal";
  }
  return "?";
}

namespace {

std::string side_name(Side s) { return s == Side::left ? "left" : "right"; }

std::string outcome_word(Outcome o) { return std::string(1, symbol_of(o)); }

std::string setting_word(Setting s) { return std::string(1, static_cast<char>('0' + number_of(s))); }

}  // namespace

std::string narrate(const PropositionSchema& schema, Frame frame) {
  const std::string l = setting_word(schema.left_setting);
  const std::string r = setting_word(schema.right_setting);
  const std::string q = setting_word(schema.alternative_right_setting);
  const std::string o = outcome_word(schema.right_outcome);
  const std::string c = outcome_word(schema.claimed);
  const std::string lo =
      schema.left_outcome ? " with result " + outcome_word(*schema.left_outcome) : "";

  switch (frame) {
    case Frame::atemporal:
      return "Whenever measurement " + l + " is chosen on the left" + lo +
             ", if measurement " + r + " on the right gives " + o + ", then if " + q +
             " were performed on the right instead, the result would be " + c + ".";
    case Frame::left_first:
      return "Whenever the choice of measurement on the left was " + l + lo +
             ", if measurement " + r + " done later on the right gives " + o + ", then if " + q +
             " were instead done later on the right, the result would have to be " + c + ".";
    case Frame::right_first:
      return "Whenever the choice of measurement on the left is " + l + lo +
             ", if measurement " + r + " done earlier on the right gave " + o + ", then if " + q +
             " had instead been done earlier on the right, the result would necessarily have been " +
             c + ".";
  }
  return "";
}

std::string narrate(const Run& actual, const CounterfactualQuery& query, const Verdict& verdict,
                    Frame frame) {
  const Side far = other_side(query.side);
  const std::string far_name = side_name(far);
  const std::string near_name = side_name(query.side);
  const std::string fs = setting_word(actual.setting(far));
  const std::string fo = outcome_word(actual.outcome(far));
  const std::string as = setting_word(actual.setting(query.side));
  const std::string alt = setting_word(query.alternative);

  std::string conclusion;
  switch (verdict.kind) {
    case VerdictKind::necessarily_plus:
      conclusion = "the result would necessarily have been +";
      break;
    case VerdictKind::necessarily_minus:
      conclusion = "the result would necessarily have been -";
      break;
    case VerdictKind::undetermined:
      conclusion = "the result is undetermined: both outcomes remain possible";
      break;
    case VerdictKind::inconsistent:
      conclusion = "the question is inconsistent: no possible world fits the record";
      break;
  }

  // The first-measured station per frame; the record kept fixed is always
  // the far side's, whichever frame the story is told in.
  switch (frame) {
    case Frame::atemporal:
      return "Measurement " + fs + " on the " + far_name + " gives " + fo + " and measurement " +
             as + " is chosen on the " + near_name + ". If " + alt + " were measured on the " +
             near_name + " instead, " + conclusion + ".";
    case Frame::left_first: {
      if (far == Side::left) {
        return "Measurement " + fs + " was done first on the left and gave " + fo + ". Had " +
               alt + " been measured later on the right instead of " + as + ", " + conclusion +
               ".";
      }
      return "Measurement " + as + " was chosen first on the left; measurement " + fs +
             " done later on the right gives " + fo + ". Had " + alt +
             " been chosen first on the left instead, " + conclusion + ".";
    }
    case Frame::right_first: {
      if (far == Side::right) {
        return "Measurement " + fs + " was done earlier on the right and gave " + fo + ". Had " +
               alt + " been measured later on the left instead of " + as + ", " + conclusion + ".";
      }
      return "Measurement " + fs + " on the left gives " + fo + " after measurement " + as +
             " was done earlier on the right. Had " + alt +
             " instead been done earlier on the right, " + conclusion + ".";
    }
  }
  return "";
}

}  // namespace hardyq
