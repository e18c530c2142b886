#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hardyq/tolerances.hpp"

namespace hardyq::cli {

/// Everything a command invocation can configure. Angles are radians;
/// the front end also accepts values with a "deg" suffix.
struct Config {
  double theta_left = 0.0;   // defaults to pi/4, set at parse time
  double theta_right = 0.0;  // defaults to pi/4, set at parse time
  double phi_left = 0.0;
  double phi_right = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t runs = 100000;
  int grid = 64;
  int refine = 3;
  std::string frame;           // empty unless --frame given
  std::string format = "text"; // "text" or "structured"
  bool recheck = false;
  double zero_tol = hardyq::zero_tolerance;      // tolerance overrides, not
  double positivity = hardyq::positivity_threshold;  // exposed as flags
};

/// Exit codes: 0 success (a NotDerivable finding is a success), 1 internal
/// error or failed check, 2 invalid configuration.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hardyq::cli
