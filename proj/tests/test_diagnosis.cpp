#include <doctest.h>

#include <cmath>

#include "pego/diagnosis.hpp"
#include "pego/families.hpp"

using namespace pego;
using HF = HalfLineFunction;

namespace {
const TimeGrid kFine;
const TimeGrid kCoarse(0.01, 20.0);
}  // namespace

TEST_CASE("epsilon net: repeated members collapse to one") {
  std::vector<HF> repeated(10, HF::indicator(0.0, 1.0));
  const PegoFamily family(repeated, Order(0.0), kCoarse);
  const auto net = epsilon_net_oracle(family, 0.5);
  for (auto s : net.net_sizes) CHECK(s == 1);
  CHECK(net.saturated);
}

TEST_CASE("epsilon net: integer translates are sqrt(2) apart and never saturate") {
  std::vector<HF> ray;
  for (int s = 0; s <= 8; ++s) ray.push_back(HF::translate(HF::indicator(0.0, 1.0), s));
  const PegoFamily family(ray, Order(0.0), kFine);

  // Pairwise distance oracle: disjoint unit supports give exactly sqrt(2).
  const auto a = sample_weighted(family.members[0], family.order, kFine);
  const auto b = sample_weighted(family.members[3], family.order, kFine);
  double d = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) d += std::norm(a[j] - b[j]);
  CHECK(std::sqrt(d * kFine.dt) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));

  const auto net = epsilon_net_oracle(family, 0.5);
  CHECK(net.net_sizes.front() < net.net_sizes.back());
  CHECK(net.net_sizes.back() == 9);
  CHECK_FALSE(net.saturated);
}

TEST_CASE("epsilon net: a sampled compact parameter range saturates") {
  std::vector<HF> members;
  for (int i = 0; i <= 10; ++i) members.push_back(HF::exponential(1.0 + 0.1 * i));
  const PegoFamily family(members, Order(0.0), kCoarse);
  const auto net = epsilon_net_oracle(family, 0.5);
  CHECK(net.saturated);
  CHECK(net.net_sizes.back() == 1);  // family diameter 0.2887 < eps
}

TEST_CASE("diagnose: trivially compact families") {
  const PegoFamily zero({HF::zero()}, Order(0.0), kFine);
  const auto vz = diagnose(zero, 1e-2);
  CHECK(vz.verdict == Verdict::Compact);
  CHECK(vz.agreement);

  const PegoFamily single({HF::exponential(1.0)}, Order(0.0), kFine);
  const auto vs = diagnose(single, 1e-2, {}, std::nullopt, 2);
  CHECK(vs.verdict == Verdict::Compact);
  CHECK(vs.agreement);
}

TEST_CASE("diagnose refuses families outside weighted L2") {
  std::vector<Complex> huge(kCoarse.n, Complex(std::numeric_limits<double>::max(), 0.0));
  const PegoFamily family({HF::sampled(kCoarse, huge)}, Order(0.0), kCoarse);
  CHECK_THROWS_AS(diagnose(family, 1e-2), Error);
}

TEST_CASE("scaling members and the tolerance together leaves the verdict unchanged") {
  const auto spec = catalog_family("exp-scale");
  const auto family = instantiate(spec, kFine);
  const Complex c(3.0, 0.0);
  std::vector<HF> scaled;
  for (const auto& f : family.members) scaled.push_back(HF::scale(f, c));
  const PegoFamily scaled_family(scaled, family.order, kFine);

  const double eps = 1e-2;
  const auto base = diagnose(family, eps, {}, std::nullopt, 2);
  const auto rescaled = diagnose(scaled_family, std::norm(c) * eps, {}, std::nullopt, 2);

  CHECK(base.verdict == rescaled.verdict);
  CHECK(base.agreement == rescaled.agreement);
  CHECK(rescaled.oracle.net_sizes == base.oracle.net_sizes);

  // Quadratic criteria scale by |c|^2, the root-scale shift modulus by |c|.
  for (std::size_t r = 0; r < base.laplace_route.criteria.size(); ++r) {
    const auto& b = base.laplace_route.criteria[r];
    const auto& s = rescaled.laplace_route.criteria[r];
    for (std::size_t i = 0; i < b.reports.size(); ++i) {
      CHECK(s.reports[i].supremum == doctest::Approx(std::norm(c) * b.reports[i].supremum).epsilon(1e-12));
    }
  }
  const auto& b5 = base.rk_route.criteria[0];
  const auto& s5 = rescaled.rk_route.criteria[0];
  for (std::size_t i = 0; i < b5.reports.size(); ++i) {
    CHECK(s5.reports[i].supremum == doctest::Approx(std::abs(c) * b5.reports[i].supremum).epsilon(1e-12));
  }
}

TEST_CASE("chain checks hold on simple families") {
  const PegoFamily zero({HF::zero()}, Order(0.0), kFine);
  for (const auto& check : run_chain_checks(zero, 1e-2)) {
    CHECK(check.holds);
  }

  const PegoFamily single({HF::exponential(1.0)}, Order(0.0), kFine);
  const auto checks = run_chain_checks(single, 1e-2, {}, std::nullopt, 2);
  CHECK(checks.size() == 5);
  for (const auto& check : checks) {
    CHECK(check.holds);
    CHECK_FALSE(check.vacuous);
    if (!check.vacuous) CHECK(check.conclusion_value <= check.constant * check.eps + check.slack);
  }
}

TEST_CASE("equicont-to-equivanish picks T from the half-crossing and bounds the tail") {
  const PegoFamily single({HF::exponential(1.0)}, Order(0.0), kFine);
  const auto check = check_thm_equicont_to_equivanish(single, 1e-2, 0.16);
  CHECK_FALSE(check.vacuous);
  CHECK(check.holds);
  // |e^{-delta T} - 1|^2 >= 1/2 at the chosen T, and not at the node before.
  CHECK(std::pow(1.0 - std::exp(-check.delta * check.T), 2) >= 0.5);
  CHECK(std::pow(1.0 - std::exp(-check.delta * (check.T - kFine.dt)), 2) < 0.5);
  // Conclusion matches the analytic tail e^{-2T}/2.
  CHECK(check.conclusion_value == doctest::Approx(std::exp(-2.0 * check.T) / 2.0).epsilon(1e-3));
}

TEST_CASE("bounded-reverse respects the delta selection rule") {
  const PegoFamily single({HF::exponential(1.0)}, Order(0.0), kFine);
  const auto check = check_thm_bounded_reverse(single, 1e-2, 2.0);
  CHECK_FALSE(check.vacuous);
  CHECK(check.holds);
  const double m = 0.5;
  CHECK(std::pow(1.0 - std::exp(-check.delta * check.T), 2) * m < 1e-2);
  CHECK(std::pow(1.0 - std::exp(-(check.delta + kFine.dt) * check.T), 2) * m >= 1e-2);
}

TEST_CASE("lemma check runs both directions") {
  const PegoFamily single({HF::indicator(0.0, 1.0)}, Order(0.0), kFine);
  const auto check = check_lemma_exp_equicont(single, 1e-2);
  CHECK(check.holds);
  CHECK(check.parts.size() == 2);
  CHECK_FALSE(check.parts[0].vacuous);
  CHECK_FALSE(check.parts[1].vacuous);
  // Direction A's conclusion is the exact sqrt(2 delta) shift modulus.
  CHECK(check.parts[0].conclusion_value == doctest::Approx(std::sqrt(2.0 * check.delta)).epsilon(1e-6));
}

TEST_CASE("laplace-vanish-reverse is vacuous on the modulated family") {
  const auto spec = catalog_family("modulation-ray");
  const auto family = instantiate(spec, kFine);
  const auto check = check_thm_laplace_vanish_reverse(family, 1e-2, 100.0, std::nullopt, 2);
  CHECK(check.vacuous);
  CHECK(check.holds);
}

TEST_CASE("verdict invariants") {
  const auto spec = catalog_family("translate-ray");
  const auto family = instantiate(spec, kFine);
  const auto v = diagnose(family, 1e-2, {}, std::nullopt, 2);
  CHECK(v.verdict == Verdict::NonCompact);
  CHECK(v.agreement);
  // compact only when the routes agree on it
  if (v.verdict == Verdict::Compact) {
    CHECK(v.laplace_route.verdict == Verdict::Compact);
    CHECK(v.rk_route.verdict == Verdict::Compact);
    CHECK(v.oracle.saturated);
  }
}
