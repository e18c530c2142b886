#include <doctest.h>

#include <cmath>
#include <random>

#include "hardyq/counterfactuals.hpp"
#include "hardyq/report.hpp"

using namespace hardyq;

namespace {

constexpr double kPi = 3.14159265358979323846;

HardyState pi4_state() { return build_hardy_state(MeasurementFamily(kPi / 4, kPi / 4)); }

Run find_run(const HardyState& state, Setting ls, Outcome lo, Setting rs, Outcome ro) {
  for (const Run& run : possible_runs(state)) {
    if (run.left_setting == ls && run.left_outcome == lo && run.right_setting == rs &&
        run.right_outcome == ro) {
      return run;
    }
  }
  FAIL("run not found");
  return Run{};
}

}  // namespace

TEST_CASE("possible runs carry Born weights") {
  const HardyState state = pi4_state();
  const auto runs = possible_runs(state);
  CHECK(runs.size() == 16);

  CHECK(find_run(state, Setting::two, Outcome::minus, Setting::two, Outcome::plus).weight <=
        1e-10);
  CHECK(find_run(state, Setting::one, Outcome::minus, Setting::one, Outcome::plus).weight ==
        doctest::Approx(1.0 / 12.0).epsilon(1e-12));

  double sum = 0.0;
  for (const Run& run : runs) {
    if (run.left_setting == Setting::one && run.right_setting == Setting::one) sum += run.weight;
  }
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("counterfactual verdicts at pi/4") {
  const HardyState state = pi4_state();

  // actual L2+, R2+: had R1 been measured instead, the 21++ zero forces -
  const Run l2r2 = find_run(state, Setting::two, Outcome::plus, Setting::two, Outcome::plus);
  const Verdict forced =
      evaluate_counterfactual(state, l2r2, CounterfactualQuery{Side::right, Setting::one});
  CHECK(forced.kind == VerdictKind::necessarily_minus);
  CHECK(forced.feasible.size() == 1);

  // actual L1-, R2+: with the left choice at 1 nothing pins the right outcome
  const Run l1r2 = find_run(state, Setting::one, Outcome::minus, Setting::two, Outcome::plus);
  const Verdict open =
      evaluate_counterfactual(state, l1r2, CounterfactualQuery{Side::right, Setting::one});
  CHECK(open.kind == VerdictKind::undetermined);
  CHECK(open.feasible.size() == 2);
}

TEST_CASE("evaluator rejects bad queries and substituted records") {
  const HardyState state = pi4_state();
  const Run l1r2 = find_run(state, Setting::one, Outcome::minus, Setting::two, Outcome::plus);

  // alternative equal to the actual setting
  CHECK_THROWS_AS(
      evaluate_counterfactual(state, l1r2, CounterfactualQuery{Side::right, Setting::two}),
      std::invalid_argument);

  // impossible actual run
  const Run impossible{Setting::two, Outcome::minus, Setting::two, Outcome::plus, 0.0};
  CHECK_THROWS_AS(
      evaluate_counterfactual(state, impossible, CounterfactualQuery{Side::right, Setting::one}),
      std::invalid_argument);

  // grounding on a left setting of 2 when the actual left choice was 1
  CHECK_THROWS_AS(
      evaluate_counterfactual(state, l1r2, CounterfactualQuery{Side::right, Setting::one},
                              Grounding{Setting::two, Outcome::minus}),
      std::invalid_argument);

  // the explicit grounding is accepted when it is the actual record
  const Verdict ok =
      evaluate_counterfactual(state, l1r2, CounterfactualQuery{Side::right, Setting::one},
                              Grounding{Setting::one, Outcome::minus});
  CHECK(ok.kind == VerdictKind::undetermined);
}

TEST_CASE("verdicts never depend on the queried side's actual outcome") {
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> angle(0.2, 1.3);
  for (int trial = 0; trial < 50; ++trial) {
    const HardyState state = build_hardy_state(MeasurementFamily(angle(rng), angle(rng)));
    for (const Run& run : possible_runs(state)) {
      if (run.weight <= zero_tolerance) continue;
      Run twin = run;
      twin.right_outcome = flip(run.right_outcome);
      const double twin_weight = joint_probability(
          state, {twin.left_setting, twin.right_setting}, {twin.left_outcome, twin.right_outcome});
      if (twin_weight <= zero_tolerance) continue;
      twin.weight = twin_weight;

      const CounterfactualQuery query{Side::right, other_setting(run.right_setting)};
      const Verdict a = evaluate_counterfactual(state, run, query);
      const Verdict b = evaluate_counterfactual(state, twin, query);
      CHECK(a.kind == b.kind);
      CHECK(report::to_json(a) == report::to_json(b));
    }
  }
}

TEST_CASE("proposition one derivable, proposition two not") {
  const HardyState state = pi4_state();

  const PropositionResult one = evaluate_proposition(state, proposition_one());
  CHECK(one.derivable);
  CHECK(one.witnesses.empty());

  const PropositionResult two = evaluate_proposition(state, proposition_two());
  CHECK_FALSE(two.derivable);
  bool witnessed = false;
  for (const Run& run : two.witnesses) {
    if (run.left_setting == Setting::one && run.left_outcome == Outcome::minus &&
        run.right_setting == Setting::two && run.right_outcome == Outcome::plus) {
      witnessed = true;
    }
  }
  CHECK(witnessed);

  // claiming + instead of - contradicts the forced outcome
  PropositionSchema wrong = proposition_one();
  wrong.claimed = Outcome::plus;
  CHECK_FALSE(evaluate_proposition(state, wrong).derivable);
}

TEST_CASE("the asymmetry holds across the angle sweep") {
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> angle(0.2, 1.3);
  for (int trial = 0; trial < 100; ++trial) {
    const HardyState state = build_hardy_state(MeasurementFamily(angle(rng), angle(rng)));
    CHECK(evaluate_proposition(state, proposition_one()).derivable);
    CHECK_FALSE(evaluate_proposition(state, proposition_two()).derivable);
  }
}

TEST_CASE("derivability survives strengthening the conditioning") {
  std::mt19937_64 rng(31337);
  std::uniform_real_distribution<double> angle(0.2, 1.3);
  for (int trial = 0; trial < 50; ++trial) {
    const HardyState state = build_hardy_state(MeasurementFamily(angle(rng), angle(rng)));
    const PropositionResult base = evaluate_proposition(state, proposition_one());
    REQUIRE(base.derivable);
    // add the far-side outcome the schema's verdicts already forced
    PropositionSchema strengthened = proposition_one();
    strengthened.left_outcome = Outcome::plus;
    CHECK(evaluate_proposition(state, strengthened).derivable);
  }
}

TEST_CASE("context mixing across the implication chain") {
  const MeasurementFamily family(kPi / 4, kPi / 4);
  const HardyState state = build_hardy_state(family);
  const auto table = implication_table(family);

  SUBCASE("the full three-step chain is invalid with two switches") {
    const std::array<Implication, 3> chain{table[0], table[1], table[2]};
    const ChainReport report = detect_context_mixing(state, chain);
    CHECK_FALSE(report.valid);
    CHECK(report.switches.size() == 2);
    CHECK(report.switches[0].left_changed);       // 12 -> 22
    CHECK_FALSE(report.switches[0].right_changed);
    CHECK(report.switches[1].right_changed);      // 22 -> 21
    CHECK_FALSE(report.switches[1].left_changed);
    CHECK(report.counterexample_probability == doctest::Approx(1.0 / 12.0).epsilon(1e-12));

    REQUIRE(report.composed.has_value());
    CHECK(report.composed->context == SettingPair{Setting::one, Setting::one});
    CHECK(report.composed->antecedent_outcome == Outcome::minus);
    CHECK(report.composed->consequent_outcome == Outcome::minus);
    CHECK_FALSE(report.composed->holds);

    // the counterexample pattern is exactly the 11-+ event
    CHECK(report.composed->check_probability ==
          doctest::Approx(joint_probability(state, {Setting::one, Setting::one},
                                            {Outcome::minus, Outcome::plus}))
              .epsilon(1e-15));
  }

  SUBCASE("a single implication is valid within its context") {
    const std::array<Implication, 1> chain{table[1]};
    const ChainReport report = detect_context_mixing(state, chain);
    CHECK(report.valid);
    CHECK(report.switches.empty());
  }

  SUBCASE("the empty chain is trivially valid") {
    const ChainReport report = detect_context_mixing(state, {});
    CHECK(report.valid);
    CHECK(report.switches.empty());
    CHECK_FALSE(report.composed.has_value());
  }

  SUBCASE("non-linking chains are rejected") {
    const std::array<Implication, 2> chain{table[0], table[2]};
    CHECK_THROWS_AS(detect_context_mixing(state, chain), std::invalid_argument);
  }
}

TEST_CASE("narration exhibits the tense structure of each frame") {
  const PropositionSchema schema = proposition_one();

  const std::string left_first = narrate(schema, Frame::left_first);
  CHECK(left_first.find("on the left was") != std::string::npos);

  const std::string right_first = narrate(schema, Frame::right_first);
  CHECK(right_first.find("earlier on the right") != std::string::npos);

  const std::string atemporal = narrate(schema, Frame::atemporal);
  CHECK(atemporal.find("were performed") != std::string::npos);

  CHECK(left_first != right_first);
  CHECK(left_first != atemporal);
}

TEST_CASE("frames change prose, never the verdict payload") {
  const HardyState state = pi4_state();
  const Run actual = find_run(state, Setting::two, Outcome::plus, Setting::two, Outcome::plus);
  const CounterfactualQuery query{Side::right, Setting::one};
  const Verdict verdict = evaluate_counterfactual(state, actual, query);

  const auto a = report::counterfactual_record(actual, query, verdict, Frame::left_first);
  const auto b = report::counterfactual_record(actual, query, verdict, Frame::right_first);
  const auto c = report::counterfactual_record(actual, query, verdict, Frame::atemporal);

  CHECK(a["verdict"].dump() == b["verdict"].dump());
  CHECK(b["verdict"].dump() == c["verdict"].dump());
  CHECK(a["narration"] != b["narration"]);
}
