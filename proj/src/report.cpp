#include "hardyq/report.hpp"

#include <cstdio>
#include <cstdlib>

namespace hardyq::report {

double sig12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

namespace {

json num(double x) { return json(sig12(x)); }

std::string side_name(Side s) { return s == Side::left ? "left" : "right"; }

std::string outcome_name(Outcome o) { return std::string(1, symbol_of(o)); }

json station(Side side, Setting setting, Outcome outcome) {
  return json{{"side", side_name(side)}, {"setting", number_of(setting)},
              {"outcome", outcome_name(outcome)}};
}

}  // namespace

json to_json(const MeasurementFamily& family) {
  return json{{"theta_left", num(family.theta_left)},
              {"theta_right", num(family.theta_right)},
              {"phi_left", num(family.phi_left)},
              {"phi_right", num(family.phi_right)}};
}

json to_json(const ConstraintReport& report) {
  json checks = json::array();
  for (const auto& check : report.checks) {
    checks.push_back(json{{"event", label(check.settings, check.outcomes)},
                          {"probability", num(check.probability)},
                          {"requirement", check.must_vanish ? "zero" : "positive"},
                          {"pass", check.pass}});
  }
  return json{{"family", to_json(report.family)}, {"checks", checks}, {"pass", report.pass}};
}

json to_json(const Implication& implication) {
  return json{{"context", label(implication.context)},
              {"antecedent", station(implication.antecedent_side, antecedent_setting(implication),
                                     implication.antecedent_outcome)},
              {"consequent", station(implication.consequent_side, consequent_setting(implication),
                                     implication.consequent_outcome)},
              {"holds", implication.holds},
              {"check_probability", num(implication.check_probability)},
              {"statement", label(implication)}};
}

json to_json(const OptimizeResult& result) {
  return json{{"theta_left", num(result.theta_left)},
              {"theta_right", num(result.theta_right)},
              {"value", num(result.value)}};
}

json to_json(const DeterministicStrategy& strategy) {
  return json{{"L1", outcome_name(strategy.l1)},
              {"L2", outcome_name(strategy.l2)},
              {"R1", outcome_name(strategy.r1)},
              {"R2", outcome_name(strategy.r2)}};
}

json to_json(const NoGoCertificate& certificate) {
  json constraints = json::array();
  for (const auto& pattern : certificate.constraints) {
    constraints.push_back(json{{"event", label(pattern.settings, pattern.outcomes)}});
  }
  json survivors = json::array();
  for (const auto& s : certificate.survivors) survivors.push_back(to_json(s));
  json eliminated = json::array();
  for (const auto& e : certificate.eliminated) {
    eliminated.push_back(json{{"strategy", to_json(e.strategy)},
                              {"violated_constraint", e.violated_constraint}});
  }
  json chain = json::array();
  for (const auto& step : certificate.chain) {
    chain.push_back(json{{"constraint", step.constraint},
                         {"premise", station(step.premise_side, step.premise_setting,
                                             step.premise_outcome)},
                         {"forced", station(step.forced_side, step.forced_setting,
                                            step.forced_outcome)}});
  }
  return json{{"constraints", constraints},
              {"survivors", survivors},
              {"eliminated", eliminated},
              {"assumed", json{{"left", station(Side::left, certificate.assumed_left_setting,
                                                certificate.assumed_left_outcome)},
                               {"right", station(Side::right, certificate.assumed_right_setting,
                                                 certificate.assumed_right_outcome)}}},
              {"chain", chain},
              {"witness_family", to_json(certificate.witness_family)},
              {"quantum_witness", num(certificate.quantum_witness)}};
}

json to_json(const RecheckReport& recheck) {
  return json{{"valid", recheck.valid}, {"failures", recheck.failures}};
}

json to_json(const Run& run) {
  return json{{"event", label(run)}, {"weight", num(run.weight)}};
}

json to_json(const Verdict& verdict) {
  json feasible = json::array();
  for (const auto& world : verdict.feasible) feasible.push_back(to_json(world));
  return json{{"kind", to_string(verdict.kind)}, {"feasible_worlds", feasible}};
}

json to_json(const PropositionResult& result) {
  json evaluated = json::array();
  for (const auto& entry : result.evaluated) {
    evaluated.push_back(json{{"actual", to_json(entry.actual)},
                             {"verdict", to_json(entry.verdict)},
                             {"conforms", entry.conforms}});
  }
  json witnesses = json::array();
  for (const auto& run : result.witnesses) witnesses.push_back(to_json(run));
  const auto& schema = result.schema;
  json schema_json{{"left_setting", number_of(schema.left_setting)},
                   {"right_setting", number_of(schema.right_setting)},
                   {"right_outcome", outcome_name(schema.right_outcome)},
                   {"alternative_right_setting", number_of(schema.alternative_right_setting)},
                   {"claimed", outcome_name(schema.claimed)}};
  if (schema.left_outcome) schema_json["left_outcome"] = outcome_name(*schema.left_outcome);
  return json{{"schema", schema_json},
              {"derivable", result.derivable},
              {"evaluated", evaluated},
              {"witnesses", witnesses}};
}

json to_json(const ChainReport& report) {
  json switches = json::array();
  for (const auto& s : report.switches) {
    switches.push_back(json{{"position", s.position},
                            {"left_changed", s.left_changed},
                            {"right_changed", s.right_changed}});
  }
  json out{{"valid", report.valid},
           {"context_switches", switches},
           {"counterexample_probability", num(report.counterexample_probability)}};
  if (report.composed) out["composed"] = to_json(*report.composed);
  return out;
}

json to_json(const Tally& tally) {
  json buckets = json::array();
  for (const auto& settings : all_setting_pairs()) {
    for (const auto& outcomes : all_outcome_pairs()) {
      buckets.push_back(json{{"event", label(settings, outcomes)},
                             {"count", tally.counts[index_of(settings)][index_of(outcomes)]}});
    }
  }
  return json{{"family", to_json(tally.family)},
              {"seed", tally.seed},
              {"total", tally.total},
              {"buckets", buckets}};
}

json to_json(const EmpiricalReport& report) {
  json buckets = json::array();
  for (const auto& b : report.buckets) {
    buckets.push_back(json{{"event", label(b.settings, b.outcomes)},
                           {"count", b.count},
                           {"setting_total", b.setting_total},
                           {"empirical", num(b.empirical)},
                           {"analytic", num(b.analytic)},
                           {"z", num(b.z)},
                           {"forbidden", b.forbidden},
                           {"pass", b.pass}});
  }
  return json{{"buckets", buckets}, {"pass", report.pass}, {"failures", report.failures}};
}

json counterfactual_record(const Run& actual, const CounterfactualQuery& query,
                           const Verdict& verdict, Frame frame) {
  return json{{"actual", to_json(actual)},
              {"query", json{{"side", query.side == Side::left ? "left" : "right"},
                             {"alternative", number_of(query.alternative)}}},
              {"verdict", to_json(verdict)},
              {"frame", to_string(frame)},
              {"narration", narrate(actual, query, verdict, frame)}};
}

json document(const std::string& command, json payload) {
  json doc{{"schema_version", schema_version}, {"command", command}};
  doc.update(payload);
  return doc;
}

}  // namespace hardyq::report
