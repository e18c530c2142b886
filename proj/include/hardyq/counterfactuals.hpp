#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hardyq/hardy.hpp"

namespace hardyq {

/// One possible world: a complete setting/outcome record for both stations
/// with its Born weight. Only one such world is ever actual.
struct Run {
  Setting left_setting;
  Outcome left_outcome;
  Setting right_setting;
  Outcome right_outcome;
  double weight;

  Setting setting(Side s) const { return s == Side::left ? left_setting : right_setting; }
  Outcome outcome(Side s) const { return s == Side::left ? left_outcome : right_outcome; }
};

std::string label(const Run& run);  // e.g. "12-+"

/// All 16 worlds (4 setting pairs x 4 outcome pairs) with Born weights.
/// The impossible worlds carry weight at or below zero_tolerance.
std::vector<Run> possible_runs(const HardyState& state);

bool quantum_possible(const HardyState& state, SettingPair settings, OutcomePair outcomes);

/// "What would the queried side have shown, had the alternative setting
/// been measured there?" The alternative must differ from the setting
/// actually chosen on that side.
struct CounterfactualQuery {
  Side side;
  Setting alternative;
};

enum class VerdictKind { necessarily_plus, necessarily_minus, undetermined, inconsistent };

std::string to_string(VerdictKind kind);

/// Result of a counterfactual query together with the feasible worlds that
/// ground it: necessarily +/- when all feasible worlds agree, undetermined
/// when both outcomes remain, inconsistent when no world is feasible.
struct Verdict {
  VerdictKind kind;
  std::vector<Run> feasible;
};

/// The far-side record a counterfactual inference is grounded in. It must
/// be the record of the actual run; the evaluator refuses substitutes.
struct Grounding {
  Setting setting;
  Outcome outcome;
};

/// Evaluates the query against the actual run: the feasible worlds are the
/// quantum-possible runs that keep the other side's actual setting and
/// outcome fixed and use the alternative setting on the queried side. The
/// verdict is grounded in the actual far-side record plus the state,
/// nothing else; in particular it never depends on the outcome actually
/// recorded on the queried side.
/// Preconditions (std::invalid_argument): the actual run is
/// quantum-possible, and the alternative differs from the actual setting
/// on the queried side.
Verdict evaluate_counterfactual(const HardyState& state, const Run& actual,
                                const CounterfactualQuery& query);

/// Same, with the grounding spelled out. Throws std::invalid_argument if it
/// differs from the actual far-side record.
Verdict evaluate_counterfactual(const HardyState& state, const Run& actual,
                                const CounterfactualQuery& query, const Grounding& grounding);

/// "Whenever the left choice is <left_setting> (and, if given, its outcome
/// is <left_outcome>), if the right measurement is <right_setting> with
/// outcome <right_outcome>, then measuring <alternative_right_setting>
/// instead would give <claimed>."
struct PropositionSchema {
  Setting left_setting;
  std::optional<Outcome> left_outcome;  // optional strengthening of the conditioning
  Setting right_setting;
  Outcome right_outcome;
  Setting alternative_right_setting;
  Outcome claimed;
};

/// The two propositions under study: they differ only in the left setting
/// they fix (2 versus 1); both condition on the right record (R2, +) and
/// claim R1 would have given -.
PropositionSchema proposition_one();
PropositionSchema proposition_two();

struct EvaluatedRun {
  Run actual;
  Verdict verdict;
  bool conforms;  // verdict is Necessarily(claimed)
};

struct PropositionResult {
  PropositionSchema schema;
  bool derivable;
  std::vector<EvaluatedRun> evaluated;  // every matching quantum-possible run
  std::vector<Run> witnesses;           // the matching runs that fail the claim
};

/// Derivable iff every quantum-possible actual run matching the schema's
/// conditioning yields Necessarily(claimed) for the alternative right
/// setting; otherwise NotDerivable with the failing runs as witnesses.
PropositionResult evaluate_proposition(const HardyState& state, const PropositionSchema& schema);

struct ContextSwitch {
  std::size_t position;  // between chain[position] and chain[position+1]
  bool left_changed;
  bool right_changed;
};

struct ChainReport {
  bool valid;  // the composed conclusion holds in its own single context
  std::vector<ContextSwitch> switches;
  std::optional<Implication> composed;    // first antecedent => last consequent
  double counterexample_probability;      // p(composed context, antecedent and not consequent)
};

/// Inspects a chain of single-context implications as if they concerned one
/// experiment: reports every adjacent context switch and checks the
/// composed conclusion numerically in its own context. Chaining the three
/// vanishing-probability implications flags two switches and refutes the
/// composed "L1- => R1-" with the positive weight of 11-+.
/// Preconditions (std::invalid_argument): all elements hold as
/// implications, consecutive elements link consequent-to-antecedent, and a
/// non-empty chain starts and ends on opposite sides.
ChainReport detect_context_mixing(const HardyState& state, std::span<const Implication> chain);

/// Tense structure used to narrate one and the same fact pattern: from the
/// frame where the left event happens first, from the frame where the right
/// event happens first, or without any time order. Frames change prose
/// only, never the evaluated content.
enum class Frame { left_first, right_first, atemporal };

std::string to_string(Frame frame);

std::string narrate(const PropositionSchema& schema, Frame frame);
std::string narrate(const Run& actual, const CounterfactualQuery& query, const Verdict& verdict,
                    Frame frame);

}  // namespace hardyq
