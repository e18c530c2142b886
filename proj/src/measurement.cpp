#include "hardyq/measurement.hpp"

#include <cmath>
#include <stdexcept>

namespace hardyq {

std::string label(SettingPair settings) {
  std::string s;
  s += static_cast<char>('0' + number_of(settings.left));
  s += static_cast<char>('0' + number_of(settings.right));
  return s;
}

std::string label(SettingPair settings, OutcomePair outcomes) {
  std::string s = label(settings);
  s += symbol_of(outcomes.left);
  s += symbol_of(outcomes.right);
  return s;
}

MeasurementFamily::MeasurementFamily(double tl, double tr, double pl, double pr)
    : theta_left(tl), theta_right(tr), phi_left(pl), phi_right(pr) {
  if (!std::isfinite(tl) || !std::isfinite(tr) || !std::isfinite(pl) || !std::isfinite(pr)) {
    throw std::invalid_argument("measurement family angles must be finite");
  }
}

bool MeasurementFamily::proper_side(Side s) const {
  const double t = theta(s);
  return std::abs(std::sin(t) * std::cos(t)) > properness_threshold;
}

Vec2 MeasurementFamily::basis_vector(Side side, Setting setting, Outcome outcome) const {
  if (setting == Setting::one) {
    return outcome == Outcome::plus ? Vec2{{cplx{1.0}, cplx{0.0}}}
                                    : Vec2{{cplx{0.0}, cplx{1.0}}};
  }
  const double c = std::cos(theta(side));
  const double s = std::sin(theta(side));
  const cplx phase = std::polar(1.0, phi(side));
  if (outcome == Outcome::plus) return Vec2{{cplx{c}, phase * s}};
  return Vec2{{-std::conj(phase) * s, cplx{c}}};
}

}  // namespace hardyq
