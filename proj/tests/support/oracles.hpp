#pragma once

// Independent reference computations for the test suites. Everything here
// works on raw std::complex arrays and plain loops, sharing no code with
// the library under test: the state is expanded in the standard product
// basis, inner products are taken component by component, and the strategy
// search is a bitmask scan.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace oracle {

using cx = std::complex<double>;

// setting: 1 or 2; outcome: '+' or '-'
inline std::array<cx, 2> eigvec(double theta, double phi, int setting, char outcome) {
  if (setting == 1) {
    if (outcome == '+') return {cx{1.0, 0.0}, cx{0.0, 0.0}};
    return {cx{0.0, 0.0}, cx{1.0, 0.0}};
  }
  const double c = std::cos(theta), s = std::sin(theta);
  const cx e_ip{std::cos(phi), std::sin(phi)};
  const cx e_im{std::cos(phi), -std::sin(phi)};
  if (outcome == '+') return {cx{c, 0.0}, e_ip * s};
  return {-e_im * s, cx{c, 0.0}};
}

struct Expansion {
  std::array<cx, 4> psi;  // normalized, standard product basis, left-major
  double raw_norm_sq;
  cx overlap;
};

// Expands the defining vector in the standard product basis by explicit
// component enumeration and normalizes it.
inline Expansion expand_state(double tl, double tr, double pl = 0.0, double pr = 0.0) {
  const auto l1p = eigvec(tl, pl, 1, '+');
  const auto r1m = eigvec(tr, pr, 1, '-');
  const auto l2m = eigvec(tl, pl, 2, '-');
  const auto r2p = eigvec(tr, pr, 2, '+');

  std::array<cx, 4> first{}, second{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      first[2 * i + j] = l1p[i] * r1m[j];
      second[2 * i + j] = l2m[i] * r2p[j];
    }

  cx overlap{0.0, 0.0};
  for (int k = 0; k < 4; ++k) overlap += std::conj(second[k]) * first[k];

  Expansion out{};
  out.overlap = overlap;
  double n2 = 0.0;
  for (int k = 0; k < 4; ++k) {
    out.psi[k] = first[k] - overlap * second[k];
    n2 += std::norm(out.psi[k]);
  }
  out.raw_norm_sq = n2;
  const double n = std::sqrt(n2);
  for (auto& a : out.psi) a /= n;
  return out;
}

// <eigL, eigR | psi> by direct componentwise summation.
inline cx amplitude(double tl, double tr, double pl, double pr, int sl, int sr, char ol, char orr) {
  const Expansion e = expand_state(tl, tr, pl, pr);
  const auto left = eigvec(tl, pl, sl, ol);
  const auto right = eigvec(tr, pr, sr, orr);
  cx a{0.0, 0.0};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) a += std::conj(left[i] * right[j]) * e.psi[2 * i + j];
  return a;
}

inline double joint(double tl, double tr, int sl, int sr, char ol, char orr) {
  return std::norm(amplitude(tl, tr, 0.0, 0.0, sl, sr, ol, orr));
}

struct GridMax {
  double theta_left;
  double theta_right;
  double value;
};

// Dense scan of p(11-+) over an n x n grid of proper angle pairs.
inline GridMax dense_grid_max(int n) {
  GridMax best{0.0, 0.0, -1.0};
  const double lo = 1e-3, hi = std::asin(1.0) - 1e-3;
  for (int i = 0; i < n; ++i) {
    const double a = lo + (hi - lo) * i / (n - 1);
    for (int j = 0; j < n; ++j) {
      const double b = lo + (hi - lo) * j / (n - 1);
      const double p = joint(a, b, 1, 1, '-', '+');
      if (p > best.value) best = {a, b, p};
    }
  }
  return best;
}

// Strategies as 4-bit masks, bit 3 = L1 ... bit 0 = R2, set bit meaning '-'.
inline char strat_value(int mask, int bit) { return ((mask >> bit) & 1) ? '-' : '+'; }

// Survivors of the three forbidden conjunctions, as masks in ascending order.
inline std::vector<int> brute_force_survivors() {
  std::vector<int> out;
  for (int m = 0; m < 16; ++m) {
    const char l1 = strat_value(m, 3), l2 = strat_value(m, 2);
    const char r1 = strat_value(m, 1), r2 = strat_value(m, 0);
    if (l1 == '-' && r2 == '-') continue;
    if (l2 == '-' && r2 == '+') continue;
    if (l2 == '+' && r1 == '+') continue;
    out.push_back(m);
  }
  return out;
}

}  // namespace oracle
