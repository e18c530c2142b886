#include <doctest.h>

#include <algorithm>
#include <random>

#include "hardyq/lhv.hpp"
#include "support/oracles.hpp"

using namespace hardyq;

namespace {

DeterministicStrategy from_mask(int mask) {
  auto bit = [mask](int b) { return ((mask >> b) & 1) ? Outcome::minus : Outcome::plus; };
  return DeterministicStrategy{bit(3), bit(2), bit(1), bit(0)};
}

struct Transform {
  bool swap_sides;
  bool relabel_settings;
  bool flip_outcomes;
};

Outcome maybe_flip(Outcome o, bool on) { return on ? flip(o) : o; }
Setting maybe_relabel(Setting s, bool on) { return on ? other_setting(s) : s; }

DeterministicStrategy apply(const Transform& t, const DeterministicStrategy& s) {
  auto value = [&](Side side, Setting k) {
    const Side src = t.swap_sides ? other_side(side) : side;
    return maybe_flip(s.at(src, maybe_relabel(k, t.relabel_settings)), t.flip_outcomes);
  };
  return DeterministicStrategy{value(Side::left, Setting::one), value(Side::left, Setting::two),
                               value(Side::right, Setting::one), value(Side::right, Setting::two)};
}

ForbiddenPattern apply(const Transform& t, const ForbiddenPattern& p) {
  const Setting a = maybe_relabel(p.settings.left, t.relabel_settings);
  const Setting b = maybe_relabel(p.settings.right, t.relabel_settings);
  const Outcome x = maybe_flip(p.outcomes.left, t.flip_outcomes);
  const Outcome y = maybe_flip(p.outcomes.right, t.flip_outcomes);
  if (t.swap_sides) return ForbiddenPattern{{b, a}, {y, x}};
  return ForbiddenPattern{{a, b}, {x, y}};
}

bool same_set(std::vector<DeterministicStrategy> a, std::vector<DeterministicStrategy> b) {
  auto key = [](const DeterministicStrategy& s) {
    return (index_of(s.l1) << 3) | (index_of(s.l2) << 2) | (index_of(s.r1) << 1) | index_of(s.r2);
  };
  auto by_key = [&](const auto& x, const auto& y) { return key(x) < key(y); };
  std::sort(a.begin(), a.end(), by_key);
  std::sort(b.begin(), b.end(), by_key);
  return a == b;
}

}  // namespace

TEST_CASE("strategy enumeration") {
  const auto all = enumerate_strategies();
  CHECK(all.size() == 16);
  CHECK(all[0] == DeterministicStrategy{Outcome::plus, Outcome::plus, Outcome::plus, Outcome::plus});
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) CHECK(!(all[i] == all[j]));
  }
}

TEST_CASE("feasible strategies match the brute-force scan") {
  const auto survivors = feasible_strategies();
  CHECK(survivors.size() == 5);

  std::vector<DeterministicStrategy> expected;
  for (int mask : oracle::brute_force_survivors()) expected.push_back(from_mask(mask));
  CHECK(same_set(survivors, expected));

  // (L1-, L2+, R1+, R2+) falls to the 21++ pattern
  const DeterministicStrategy eliminated{Outcome::minus, Outcome::plus, Outcome::plus,
                                         Outcome::plus};
  CHECK(std::find(survivors.begin(), survivors.end(), eliminated) == survivors.end());
  CHECK(matches(eliminated, zero_constraints()[2]));

  const DeterministicStrategy survivor{Outcome::plus, Outcome::plus, Outcome::minus,
                                       Outcome::plus};
  CHECK(std::find(survivors.begin(), survivors.end(), survivor) != survivors.end());
}

TEST_CASE("feasibility depends only on the four local values") {
  // calling with the same strategy values always gives the same answer,
  // whatever else varies: feasibility is a pure function of the assignment
  const auto patterns = zero_constraints();
  for (const auto& s : enumerate_strategies()) {
    const bool first = std::none_of(patterns.begin(), patterns.end(),
                                    [&](const auto& p) { return matches(s, p); });
    const bool second = std::none_of(patterns.begin(), patterns.end(),
                                     [&](const auto& p) { return matches(s, p); });
    CHECK(first == second);
  }
}

TEST_CASE("no mixture of survivors reaches the 11-+ event") {
  const auto survivors = feasible_strategies();
  std::mt19937_64 rng(5150);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> weights(survivors.size());
    double total = 0.0;
    for (auto& w : weights) total += (w = unit(rng));
    for (auto& w : weights) w /= total;
    const double p = mixture_probability(survivors, weights, {Setting::one, Setting::one},
                                         {Outcome::minus, Outcome::plus});
    CHECK(p == 0.0);  // exactly: no survivor contributes
  }

  // sanity: an eliminated strategy with L1=- and R1=+ does contribute
  const std::vector<DeterministicStrategy> bad{from_mask(0b1000)};
  const std::vector<double> w{1.0};
  CHECK(mixture_probability(bad, w, {Setting::one, Setting::one},
                            {Outcome::minus, Outcome::plus}) == 1.0);
}

TEST_CASE("survivor set transforms exactly as the constraint set does") {
  const auto patterns = zero_constraints();
  const auto base = feasible_strategies();

  for (int bits = 0; bits < 8; ++bits) {
    const Transform t{(bits & 4) != 0, (bits & 2) != 0, (bits & 1) != 0};

    std::vector<ForbiddenPattern> transformed_patterns;
    for (const auto& p : patterns) transformed_patterns.push_back(apply(t, p));

    std::vector<DeterministicStrategy> transformed_survivors;
    for (const auto& s : base) transformed_survivors.push_back(apply(t, s));

    // equivariance: survivors of transformed constraints are the transformed survivors
    CHECK(same_set(feasible_strategies(transformed_patterns), transformed_survivors));

    // closure of the survivor set holds exactly when the constraint set is closed
    auto pattern_set_closed = [&] {
      std::vector<ForbiddenPattern> a(patterns.begin(), patterns.end());
      auto b = transformed_patterns;
      auto key = [](const ForbiddenPattern& p) {
        return (index_of(p.settings) << 2) | index_of(p.outcomes);
      };
      auto by_key = [&](const auto& x, const auto& y) { return key(x) < key(y); };
      std::sort(a.begin(), a.end(), by_key);
      std::sort(b.begin(), b.end(), by_key);
      return a == b;
    };
    CHECK(same_set(transformed_survivors, base) == pattern_set_closed());
  }
}

TEST_CASE("no-go certificate") {
  const NoGoCertificate cert = nogo_certificate();

  CHECK(cert.survivors.size() == 5);
  CHECK(cert.eliminated.size() == 11);
  for (const auto& s : cert.survivors) {
    CHECK_FALSE((s.at(Side::left, Setting::one) == Outcome::minus &&
                 s.at(Side::right, Setting::one) == Outcome::plus));
  }

  CHECK(cert.chain.size() == 3);
  CHECK(cert.chain[0].constraint == 0);
  CHECK(cert.chain[0].forced_setting == Setting::two);   // R2+
  CHECK(cert.chain[0].forced_outcome == Outcome::plus);
  CHECK(cert.chain[1].constraint == 1);
  CHECK(cert.chain[1].forced_side == Side::left);        // L2+
  CHECK(cert.chain[2].constraint == 2);
  CHECK(cert.chain[2].forced_side == Side::right);       // R1-
  CHECK(cert.chain[2].forced_outcome == Outcome::minus);

  CHECK(cert.quantum_witness == doctest::Approx(1.0 / 12.0).epsilon(1e-12));

  const RecheckReport recheck = recheck_certificate(cert);
  CHECK(recheck.valid);
  CHECK(recheck.failures.empty());
}

TEST_CASE("recheck rejects tampered certificates") {
  NoGoCertificate cert = nogo_certificate();
  cert.survivors.push_back(cert.eliminated.front().strategy);
  cert.eliminated.erase(cert.eliminated.begin());
  CHECK_FALSE(recheck_certificate(cert).valid);

  cert = nogo_certificate();
  cert.chain[1].constraint = 2;
  CHECK_FALSE(recheck_certificate(cert).valid);

  cert = nogo_certificate();
  cert.chain[2].forced_outcome = Outcome::plus;
  CHECK_FALSE(recheck_certificate(cert).valid);

  cert = nogo_certificate();
  cert.quantum_witness = 0.0;
  CHECK_FALSE(recheck_certificate(cert).valid);
}
