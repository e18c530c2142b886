#include "hardyq/hardy.hpp"

#include <cmath>
#include <stdexcept>

namespace hardyq {

namespace {

Vec4 product_eigenvector(const MeasurementFamily& family, SettingPair settings,
                         OutcomePair outcomes) {
  return tensor(family.basis_vector(Side::left, settings.left, outcomes.left),
                family.basis_vector(Side::right, settings.right, outcomes.right));
}

const SettingPair kSettings11{Setting::one, Setting::one};
const OutcomePair kOutcomesMP{Outcome::minus, Outcome::plus};

}  // namespace

cplx term_overlap(const MeasurementFamily& family) {
  const Vec4 first = product_eigenvector(
      family, {Setting::one, Setting::one}, {Outcome::plus, Outcome::minus});
  const Vec4 second = product_eigenvector(
      family, {Setting::two, Setting::two}, {Outcome::minus, Outcome::plus});
  return inner(second, first);
}

HardyState build_hardy_state(const MeasurementFamily& family) {
  if (!family.proper()) {
    throw ImproperFamilyError("bases 1 and 2 coincide (up to relabeling) on at least one side");
  }
  const Vec4 first = product_eigenvector(
      family, {Setting::one, Setting::one}, {Outcome::plus, Outcome::minus});
  const Vec4 second = product_eigenvector(
      family, {Setting::two, Setting::two}, {Outcome::minus, Outcome::plus});
  const cplx overlap = inner(second, first);
  const Vec4 raw = first - overlap * second;
  return HardyState{normalize(raw, zero_tolerance), family, squared_norm(raw)};
}

cplx amplitude(const HardyState& state, SettingPair settings, OutcomePair outcomes) {
  return inner(product_eigenvector(state.family, settings, outcomes), state.vector);
}

double joint_probability(const HardyState& state, SettingPair settings, OutcomePair outcomes) {
  return std::norm(amplitude(state, settings, outcomes));
}

ConstraintReport verify_constraints(const MeasurementFamily& family, double zero_tol,
                                    double positivity) {
  const HardyState state = build_hardy_state(family);
  using S = Setting;
  using O = Outcome;
  const std::array<std::pair<SettingPair, OutcomePair>, 3> vanishing = {{
      {{S::one, S::two}, {O::minus, O::minus}},
      {{S::two, S::two}, {O::minus, O::plus}},
      {{S::two, S::one}, {O::plus, O::plus}},
  }};

  ConstraintReport report{family, {}, true};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& [settings, outcomes] = vanishing[i];
    const double p = joint_probability(state, settings, outcomes);
    report.checks[i] = ConstraintCheck{settings, outcomes, p, true, p <= zero_tol};
  }
  const double p11 = joint_probability(state, kSettings11, kOutcomesMP);
  report.checks[3] = ConstraintCheck{kSettings11, kOutcomesMP, p11, false, p11 > positivity};
  for (const auto& check : report.checks) report.pass = report.pass && check.pass;
  return report;
}

Setting antecedent_setting(const Implication& imp) {
  return imp.antecedent_side == Side::left ? imp.context.left : imp.context.right;
}

Setting consequent_setting(const Implication& imp) {
  return imp.consequent_side == Side::left ? imp.context.left : imp.context.right;
}

std::string label(const Implication& imp) {
  auto station = [](Side s, Setting k, Outcome o) {
    std::string out = s == Side::left ? "L" : "R";
    out += static_cast<char>('0' + number_of(k));
    out += symbol_of(o);
    return out;
  };
  std::string text = station(imp.antecedent_side, antecedent_setting(imp), imp.antecedent_outcome);
  text += imp.holds ? " => " : " =/=> ";
  text += station(imp.consequent_side, consequent_setting(imp), imp.consequent_outcome);
  text += " [in context ";
  text += static_cast<char>('0' + number_of(imp.context.left));
  text += static_cast<char>('0' + number_of(imp.context.right));
  text += "]";
  return text;
}

std::array<Implication, 4> implication_table(const MeasurementFamily& family) {
  const HardyState state = build_hardy_state(family);
  using S = Setting;
  using O = Outcome;
  std::array<Implication, 4> table = {{
      {{S::one, S::two}, Side::left, O::minus, Side::right, O::plus, true, 0.0},
      {{S::two, S::two}, Side::right, O::plus, Side::left, O::plus, true, 0.0},
      {{S::two, S::one}, Side::left, O::plus, Side::right, O::minus, true, 0.0},
      {{S::one, S::one}, Side::left, O::minus, Side::right, O::minus, false, 0.0},
  }};
  for (auto& imp : table) {
    // p(context, antecedent holds and consequent fails)
    OutcomePair violating{};
    if (imp.antecedent_side == Side::left) {
      violating = {imp.antecedent_outcome, flip(imp.consequent_outcome)};
    } else {
      violating = {flip(imp.consequent_outcome), imp.antecedent_outcome};
    }
    imp.check_probability = joint_probability(state, imp.context, violating);
    const bool validated = imp.holds ? imp.check_probability <= zero_tolerance
                                     : imp.check_probability > zero_tolerance;
    if (!validated) {
      throw std::logic_error("implication table entry failed numeric validation: " + label(imp));
    }
  }
  return table;
}

namespace {

double hardy_fraction(double theta_left, double theta_right) {
  const HardyState state = build_hardy_state(MeasurementFamily(theta_left, theta_right));
  return joint_probability(state, kSettings11, kOutcomesMP);
}

// Golden-section maximization; the bracket shrinks by ~0.618 per iteration.
double golden_max(const auto& f, double lo, double hi, int iterations) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int k = 0; k < iterations; ++k) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

OptimizeResult optimize_hardy_fraction(int grid_resolution, int refinement_steps) {
  if (grid_resolution < 8) {
    throw std::invalid_argument("grid resolution must be at least 8");
  }
  if (refinement_steps < 0) {
    throw std::invalid_argument("refinement steps must be non-negative");
  }

  const double half_pi = std::asin(1.0);
  const double spacing = half_pi / grid_resolution;

  OptimizeResult best{0.0, 0.0, -1.0};
  for (int i = 1; i < grid_resolution; ++i) {
    for (int j = 1; j < grid_resolution; ++j) {
      const double tl = i * spacing;
      const double tr = j * spacing;
      const double p = hardy_fraction(tl, tr);
      if (p > best.value) best = {tl, tr, p};
    }
  }

  // Coordinate-wise golden-section refinement around the grid winner.
  const double lo_bound = 1e-4;
  const double hi_bound = half_pi - 1e-4;
  auto clamp = [&](double x) { return std::min(hi_bound, std::max(lo_bound, x)); };
  for (int round = 0; round < refinement_steps; ++round) {
    best.theta_left = golden_max(
        [&](double t) { return hardy_fraction(t, best.theta_right); },
        clamp(best.theta_left - spacing), clamp(best.theta_left + spacing), 60);
    best.theta_right = golden_max(
        [&](double t) { return hardy_fraction(best.theta_left, t); },
        clamp(best.theta_right - spacing), clamp(best.theta_right + spacing), 60);
    best.value = hardy_fraction(best.theta_left, best.theta_right);
  }
  return best;
}

}  // namespace hardyq
