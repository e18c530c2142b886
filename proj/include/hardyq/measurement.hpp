#pragma once

#include <array>
#include <string>

#include "hardyq/qcore.hpp"

namespace hardyq {

enum class Side { left, right };
enum class Setting { one, two };
enum class Outcome { plus, minus };

constexpr Side other_side(Side s) {
  return s == Side::left ? Side::right : Side::left;
}
constexpr Setting other_setting(Setting s) {
  return s == Setting::one ? Setting::two : Setting::one;
}
constexpr Outcome flip(Outcome o) {
  return o == Outcome::plus ? Outcome::minus : Outcome::plus;
}

// Index conventions shared with the product-space component ordering:
// setting 1 -> 0, setting 2 -> 1; outcome + -> 0, outcome - -> 1.
constexpr int index_of(Setting s) { return s == Setting::one ? 0 : 1; }
constexpr int index_of(Outcome o) { return o == Outcome::plus ? 0 : 1; }

constexpr int number_of(Setting s) { return s == Setting::one ? 1 : 2; }
constexpr char symbol_of(Outcome o) { return o == Outcome::plus ? '+' : '-'; }

struct SettingPair {
  Setting left;
  Setting right;
  bool operator==(const SettingPair&) const = default;
};

struct OutcomePair {
  Outcome left;
  Outcome right;
  bool operator==(const OutcomePair&) const = default;
};

constexpr std::array<SettingPair, 4> all_setting_pairs() {
  using S = Setting;
  return {{{S::one, S::one}, {S::one, S::two}, {S::two, S::one}, {S::two, S::two}}};
}

constexpr std::array<OutcomePair, 4> all_outcome_pairs() {
  using O = Outcome;
  return {{{O::plus, O::plus}, {O::plus, O::minus}, {O::minus, O::plus}, {O::minus, O::minus}}};
}

constexpr int index_of(SettingPair s) { return 2 * index_of(s.left) + index_of(s.right); }
constexpr int index_of(OutcomePair o) { return 2 * index_of(o.left) + index_of(o.right); }

/// Compact event label, e.g. "21+-": setting 2 on the left and 1 on the
/// right, with results + on the left and - on the right.
std::string label(SettingPair settings, OutcomePair outcomes);
std::string label(SettingPair settings);  // e.g. "21"

/// The two measurement bases per station. Basis 1 is the standard basis;
/// basis 2 is rotated by theta with an optional relative phase phi:
///   |2+> = cos(theta)|1+> + e^{i phi} sin(theta)|1->
///   |2-> = -e^{-i phi} sin(theta)|1+> + cos(theta)|1->
struct MeasurementFamily {
  double theta_left;
  double theta_right;
  double phi_left;
  double phi_right;

  /// Throws std::invalid_argument on non-finite angles.
  MeasurementFamily(double theta_left, double theta_right, double phi_left = 0.0,
                    double phi_right = 0.0);

  double theta(Side s) const { return s == Side::left ? theta_left : theta_right; }
  double phi(Side s) const { return s == Side::left ? phi_left : phi_right; }

  /// A side is proper iff |sin(theta)*cos(theta)| > properness_threshold,
  /// i.e. its two bases are non-trivially different.
  bool proper_side(Side s) const;
  bool proper() const { return proper_side(Side::left) && proper_side(Side::right); }

  /// Unit eigenvector of the given observable for the given outcome.
  Vec2 basis_vector(Side side, Setting setting, Outcome outcome) const;

  bool operator==(const MeasurementFamily&) const = default;
};

}  // namespace hardyq
