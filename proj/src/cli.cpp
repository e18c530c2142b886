#include "hardyq/cli.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "hardyq/report.hpp"

namespace hardyq::cli {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Radians by default; a "deg" suffix converts from degrees.
double parse_angle(const std::string& text) {
  std::string body = text;
  double scale = 1.0;
  if (body.size() > 3 && body.substr(body.size() - 3) == "deg") {
    body = body.substr(0, body.size() - 3);
    scale = kPi / 180.0;
  }
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(body, &used);
  } catch (const std::exception&) {
    throw CLI::ValidationError("angle", "could not parse '" + text + "' as an angle");
  }
  while (used < body.size() && std::isspace(static_cast<unsigned char>(body[used]))) ++used;
  if (used != body.size()) {
    throw CLI::ValidationError("angle", "could not parse '" + text + "' as an angle");
  }
  return value * scale;
}

std::string fmt12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

struct AngleFlags {
  std::string theta_left, theta_right, phi_left, phi_right;
};

void add_family_flags(CLI::App* cmd, AngleFlags& flags) {
  cmd->add_option("--theta-left", flags.theta_left,
                  "Left rotation angle (radians, or e.g. '45deg') [default pi/4]");
  cmd->add_option("--theta-right", flags.theta_right,
                  "Right rotation angle (radians, or e.g. '45deg') [default pi/4]");
  cmd->add_option("--phi-left", flags.phi_left, "Left relative phase [default 0]");
  cmd->add_option("--phi-right", flags.phi_right, "Right relative phase [default 0]");
}

void add_format_flag(CLI::App* cmd, Config& config) {
  cmd->add_option("--format", config.format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
}

void apply_angles(const AngleFlags& flags, Config& config) {
  config.theta_left = flags.theta_left.empty() ? kPi / 4.0 : parse_angle(flags.theta_left);
  config.theta_right = flags.theta_right.empty() ? kPi / 4.0 : parse_angle(flags.theta_right);
  config.phi_left = flags.phi_left.empty() ? 0.0 : parse_angle(flags.phi_left);
  config.phi_right = flags.phi_right.empty() ? 0.0 : parse_angle(flags.phi_right);
}

MeasurementFamily family_of(const Config& config) {
  return MeasurementFamily(config.theta_left, config.theta_right, config.phi_left,
                           config.phi_right);
}

void emit(const report::json& doc, std::ostream& out) { out << doc.dump(2) << "\n"; }

// ---- verify ---------------------------------------------------------------

int cmd_verify(const Config& config, std::ostream& out) {
  const ConstraintReport result =
      verify_constraints(family_of(config), config.zero_tol, config.positivity);
  if (config.format == "structured") {
    emit(report::document("verify", report::to_json(result)), out);
  } else {
    const auto& f = result.family;
    out << "family: theta_left=" << fmt12(f.theta_left) << " theta_right=" << fmt12(f.theta_right)
        << " phi_left=" << fmt12(f.phi_left) << " phi_right=" << fmt12(f.phi_right) << "\n";
    for (const auto& check : result.checks) {
      out << "p(" << label(check.settings, check.outcomes) << ") = " << fmt12(check.probability)
          << "  requirement: " << (check.must_vanish ? "zero    " : "positive")
          << "  " << (check.pass ? "PASS" : "FAIL") << "\n";
    }
    out << "overall: " << (result.pass ? "PASS" : "FAIL") << "\n";
  }
  return result.pass ? 0 : 1;
}

// ---- optimize --------------------------------------------------------------

int cmd_optimize(const Config& config, std::ostream& out) {
  const OptimizeResult result = optimize_hardy_fraction(config.grid, config.refine);
  if (config.format == "structured") {
    report::json payload = report::to_json(result);
    payload["grid"] = config.grid;
    payload["refine"] = config.refine;
    emit(report::document("optimize", payload), out);
  } else {
    out << "grid " << config.grid << "x" << config.grid << " with " << config.refine
        << " refinement round(s)\n";
    out << "best angles: theta_left=" << fmt12(result.theta_left)
        << " theta_right=" << fmt12(result.theta_right) << "\n";
    out << "maximum p(11-+) = " << fmt12(result.value) << "\n";
  }
  return 0;
}

// ---- lhv -------------------------------------------------------------------

int cmd_lhv(const Config& config, std::ostream& out) {
  const NoGoCertificate cert = nogo_certificate(family_of(config));
  RecheckReport recheck{true, {}};
  if (config.recheck) recheck = recheck_certificate(cert);

  if (config.format == "structured") {
    report::json payload = report::to_json(cert);
    if (config.recheck) payload["recheck"] = report::to_json(recheck);
    emit(report::document("lhv", payload), out);
  } else {
    out << "events that never occur: ";
    for (std::size_t i = 0; i < cert.constraints.size(); ++i) {
      out << (i ? ", " : "")
          << label(cert.constraints[i].settings, cert.constraints[i].outcomes);
    }
    out << "\n";
    out << "surviving strategies (" << cert.survivors.size() << " of 16):\n";
    for (const auto& s : cert.survivors) out << "  " << label(s) << "\n";
    out << "eliminated strategies (" << cert.eliminated.size() << "):\n";
    for (const auto& e : cert.eliminated) {
      const auto& p = cert.constraints[e.violated_constraint];
      out << "  " << label(e.strategy) << "  violates " << label(p.settings, p.outcomes) << "\n";
    }
    out << "deduction for any strategy with L1- and R1+:\n";
    auto station = [](Side side, Setting setting, Outcome outcome) {
      std::string s = side == Side::left ? "L" : "R";
      s += static_cast<char>('0' + number_of(setting));
      s += symbol_of(outcome);
      return s;
    };
    for (std::size_t i = 0; i < cert.chain.size(); ++i) {
      const auto& step = cert.chain[i];
      const auto& p = cert.constraints[step.constraint];
      out << "  step " << i + 1 << ": "
          << station(step.premise_side, step.premise_setting, step.premise_outcome) << " forces "
          << station(step.forced_side, step.forced_setting, step.forced_outcome) << "  ["
          << label(p.settings, p.outcomes) << " never occurs]\n";
    }
    out << "  contradiction: "
        << station(Side::right, cert.chain.back().forced_setting,
                   cert.chain.back().forced_outcome)
        << " conflicts with the assumed "
        << station(Side::right, cert.assumed_right_setting, cert.assumed_right_outcome) << "\n";
    out << "quantum witness: p(11-+) = " << fmt12(cert.quantum_witness)
        << " at theta_left=" << fmt12(cert.witness_family.theta_left)
        << " theta_right=" << fmt12(cert.witness_family.theta_right) << "\n";
    if (config.recheck) {
      out << "recheck: " << (recheck.valid ? "valid" : "INVALID") << "\n";
      for (const auto& failure : recheck.failures) out << "  " << failure << "\n";
    }
  }
  return recheck.valid ? 0 : 1;
}

// ---- argue -----------------------------------------------------------------

int cmd_argue(const Config& config, const std::string& proposition, std::ostream& out) {
  const HardyState state = build_hardy_state(family_of(config));
  const bool is_first = proposition == "I";
  const PropositionSchema schema = is_first ? proposition_one() : proposition_two();
  const PropositionResult result = evaluate_proposition(state, schema);

  const bool with_frame = !config.frame.empty();
  Frame frame = Frame::atemporal;
  if (config.frame == "left-first") frame = Frame::left_first;
  if (config.frame == "right-first") frame = Frame::right_first;

  if (config.format == "structured") {
    report::json payload{{"proposition", proposition}};
    payload.update(report::to_json(result));
    if (with_frame) {
      payload["frame"] = to_string(frame);
      payload["narration"] = narrate(schema, frame);
      report::json records = report::json::array();
      for (const auto& entry : result.evaluated) {
        records.push_back(report::counterfactual_record(
            entry.actual, CounterfactualQuery{Side::right, schema.alternative_right_setting},
            entry.verdict, frame));
      }
      payload["records"] = records;
    }
    emit(report::document("argue", payload), out);
  } else {
    out << "proposition " << proposition << ": "
        << narrate(schema, with_frame ? frame : Frame::atemporal) << "\n";
    out << "actual runs matching the conditioning:\n";
    for (const auto& entry : result.evaluated) {
      out << "  " << label(entry.actual) << " (weight " << fmt12(entry.actual.weight)
          << "): querying right -> " << number_of(schema.alternative_right_setting) << ": "
          << to_string(entry.verdict.kind) << "  " << (entry.conforms ? "ok" : "FAILS THE CLAIM")
          << "\n";
      if (with_frame) {
        out << "    "
            << narrate(entry.actual,
                       CounterfactualQuery{Side::right, schema.alternative_right_setting},
                       entry.verdict, frame)
            << "\n";
      }
    }
    out << "result: " << (result.derivable ? "Derivable" : "NotDerivable") << "\n";
    if (!result.derivable) {
      out << "witnesses:";
      for (const auto& run : result.witnesses) out << " " << label(run);
      out << "\n";
    }
  }
  return 0;
}

// ---- sample ----------------------------------------------------------------

int cmd_sample(const Config& config, std::ostream& out) {
  const HardyState state = build_hardy_state(family_of(config));
  const Tally tally = sample_runs(state, config.runs, config.seed);
  const EmpiricalReport result = empirical_report(tally, state);

  if (config.format == "structured") {
    report::json payload{{"tally", report::to_json(tally)},
                         {"report", report::to_json(result)}};
    emit(report::document("sample", payload), out);
  } else {
    out << "sampled " << tally.total << " runs with seed " << tally.seed << "\n";
    for (const auto& b : result.buckets) {
      out << label(b.settings, b.outcomes) << "  " << b.count << "  empirical="
          << fmt12(b.empirical) << "  analytic=" << fmt12(b.analytic) << "  z=" << fmt12(b.z)
          << (b.forbidden ? "  [forbidden]" : "") << (b.pass ? "" : "  FAIL") << "\n";
    }
    out << "overall: " << (result.pass ? "PASS" : "FAIL") << "\n";
  }
  return result.pass ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hardy-state analysis toolkit: exact constraint checks, a local"
               " hidden-variable no-go certificate, counterfactual evaluation,"
               " and seeded sampling"};
  app.require_subcommand(1);

  Config config;
  AngleFlags verify_angles, lhv_angles, argue_angles, sample_angles;
  std::string proposition;

  CLI::App* verify = app.add_subcommand("verify", "Check the four defining probabilities");
  add_family_flags(verify, verify_angles);
  add_format_flag(verify, config);

  CLI::App* optimize = app.add_subcommand("optimize", "Maximize p(11-+) over proper families");
  optimize->add_option("--grid", config.grid, "Grid resolution per axis (>= 8)")
      ->capture_default_str();
  optimize->add_option("--refine", config.refine, "Golden-section refinement rounds")
      ->capture_default_str();
  add_format_flag(optimize, config);

  CLI::App* lhv = app.add_subcommand("lhv", "Certify that no local deterministic model fits");
  add_family_flags(lhv, lhv_angles);
  lhv->add_flag("--recheck", config.recheck, "Re-verify the certificate with the independent checker");
  add_format_flag(lhv, config);

  CLI::App* argue = app.add_subcommand("argue", "Evaluate proposition I or II");
  argue->add_option("proposition", proposition, "Which proposition to evaluate (I or II)")
      ->required()
      ->check(CLI::IsMember({"I", "II", "i", "ii", "1", "2"}));
  argue->add_option("--frame", config.frame, "Narrate in this time order")
      ->check(CLI::IsMember({"left-first", "right-first", "atemporal"}));
  add_family_flags(argue, argue_angles);
  add_format_flag(argue, config);

  CLI::App* sample = app.add_subcommand("sample", "Seeded Monte Carlo runs and z-score report");
  sample->add_option("--runs", config.runs, "Number of runs (>= 1)")->capture_default_str();
  sample->add_option("--seed", config.seed, "64-bit sampler seed")->capture_default_str();
  add_family_flags(sample, sample_angles);
  add_format_flag(sample, config);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("hardyq");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());

    if (verify->parsed()) {
      apply_angles(verify_angles, config);
      return cmd_verify(config, out);
    }
    if (optimize->parsed()) {
      return cmd_optimize(config, out);
    }
    if (lhv->parsed()) {
      apply_angles(lhv_angles, config);
      return cmd_lhv(config, out);
    }
    if (argue->parsed()) {
      apply_angles(argue_angles, config);
      if (proposition == "i" || proposition == "1") proposition = "I";
      if (proposition == "ii" || proposition == "2") proposition = "II";
      return cmd_argue(config, proposition, out);
    }
    if (sample->parsed()) {
      apply_angles(sample_angles, config);
      if (config.runs < 1) throw std::invalid_argument("run count must be at least 1");
      return cmd_sample(config, out);
    }
    err << "no command given\n";
    return 2;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ImproperFamilyError& e) {
    err << "invalid configuration: " << e.what() << "\n";
    return 2;
  } catch (const DegenerateStateError& e) {
    err << "invalid configuration: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "invalid configuration: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace hardyq::cli
