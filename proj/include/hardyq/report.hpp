#pragma once

#include <string>

#include <json.hpp>

#include "hardyq/counterfactuals.hpp"
#include "hardyq/lhv.hpp"
#include "hardyq/sim.hpp"

// Structured (JSON) views of every result type. The command-line front end
// renders text and JSON from the same result values; tests compare the
// JSON forms directly. All floating-point values are rounded to 12
// significant digits before serialization.

namespace hardyq::report {

inline constexpr int schema_version = 1;

using json = nlohmann::ordered_json;

/// x rounded to 12 significant digits.
double sig12(double x);

json to_json(const MeasurementFamily& family);
json to_json(const ConstraintReport& report);
json to_json(const Implication& implication);
json to_json(const OptimizeResult& result);
json to_json(const DeterministicStrategy& strategy);
json to_json(const NoGoCertificate& certificate);
json to_json(const RecheckReport& recheck);
json to_json(const Run& run);
json to_json(const Verdict& verdict);
json to_json(const PropositionResult& result);
json to_json(const ChainReport& report);
json to_json(const Tally& tally);
json to_json(const EmpiricalReport& report);

/// One evaluated counterfactual with its narration in the given frame. The
/// "verdict" member is frame-independent; only "narration" varies.
json counterfactual_record(const Run& actual, const CounterfactualQuery& query,
                           const Verdict& verdict, Frame frame);

/// Single self-describing top-level document: schema_version, command,
/// then the payload fields.
json document(const std::string& command, json payload);

}  // namespace hardyq::report
