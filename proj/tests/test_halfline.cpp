#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "pego/halfline.hpp"

using namespace pego;
using HF = HalfLineFunction;

namespace {
const TimeGrid kFine;                 // dt 1e-3, t_max 40
const TimeGrid kCoarse(0.01, 20.0);
}  // namespace

TEST_CASE("weight evaluates f(t) e^{-xt} with zero extension") {
  CHECK(weight(HF::indicator(1.0, 2.0), Order(0.0))(1.5).real() == doctest::Approx(1.0));
  CHECK(weight(HF::exponential(1.0), Order(1.0))(1.0).real() == doctest::Approx(std::exp(-2.0)).epsilon(1e-12));
  CHECK(weight(HF::exponential(1.0), Order(1.0))(-0.5) == Complex(0.0, 0.0));
  CHECK(weight(HF::indicator(1.0, 2.0), Order(3.0))(-0.5) == Complex(0.0, 0.0));
}

TEST_CASE("every kind is exactly zero for negative arguments") {
  std::vector<HF> kinds = {
      HF::exponential(1.0),
      HF::indicator(0.0, 1.0),
      HF::poly_bump(0.5),
      HF::sampled(kCoarse, std::vector<Complex>(kCoarse.n, Complex(1.0, 1.0))),
      HF::translate(HF::exponential(1.0), 2.0),
      HF::modulate(HF::exponential(1.0), 10.0),
      HF::scale(HF::exponential(1.0), Complex(2.0, -1.0)),
      HF::damp(HF::exponential(1.0), 0.5),
      HF::sum({HF::exponential(1.0), HF::indicator(0.0, 2.0)}),
  };
  for (const auto& f : kinds) {
    for (double t : {-1e-9, -0.5, -3.0}) {
      CHECK(f(t) == Complex(0.0, 0.0));
    }
  }
}

TEST_CASE("weighted L2 norm against analytic values") {
  CHECK(weighted_l2_norm_sq(HF::exponential(1.0), Order(0.0), kFine) == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(weighted_l2_norm_sq(HF::zero(), Order(0.0), kFine) == 0.0);
  CHECK(weighted_l2_norm_sq(HF::indicator(0.0, 1.0), Order(0.0), kFine) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("norm scales by |c|^2 under member scaling") {
  const auto f = HF::sum({HF::exponential(1.0), HF::indicator(0.5, 1.5)});
  const Complex c(1.7, -2.3);
  const double base = weighted_l2_norm_sq(f, Order(0.5), kCoarse);
  const double scaled = weighted_l2_norm_sq(HF::scale(f, c), Order(0.5), kCoarse);
  CHECK(scaled == doctest::Approx(std::norm(c) * base).epsilon(1e-12));
}

TEST_CASE("translate consistency at nodes around the shift") {
  const auto f = HF::exponential(2.0);
  const double s = 0.25;
  const auto shifted = HF::translate(f, s);
  for (double t : {0.0, 0.1, 0.2499, 0.25, 0.2501, 1.0, 5.0}) {
    CHECK(shifted(t) == f(t - s));
  }
}

TEST_CASE("grid refinement changes the norm within the error model bound") {
  const auto f = HF::exponential(1.0);
  const TimeGrid g1(2e-3, 30.0);
  const TimeGrid g2(1e-3, 60.0);
  const double q1 = weighted_l2_norm_sq(f, Order(0.0), g1);
  const double q2 = weighted_l2_norm_sq(f, Order(0.0), g2);
  const double bound = norm_sq_error_bound(f, Order(0.0), g1) + norm_sq_error_bound(f, Order(0.0), g2);
  CHECK(std::abs(q1 - q2) <= bound);
}

TEST_CASE("verify_pego returns the truncated L1 and L2 norms") {
  const auto exp_norms = verify_pego(HF::exponential(1.0), Order(0.0), kFine);
  CHECK(exp_norms.l1 == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(exp_norms.l2 == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-6));

  const auto ind_norms = verify_pego(HF::indicator(1.0, 2.0), Order(0.0), kFine);
  CHECK(ind_norms.l1 == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(ind_norms.l2 == doctest::Approx(1.0).epsilon(1e-6));

  const auto zero_norms = verify_pego(HF::zero(), Order(1.0), kFine);
  CHECK(zero_norms.l1 == 0.0);
  CHECK(zero_norms.l2 == 0.0);
}

TEST_CASE("non-finite samples raise an evaluation error naming the node") {
  std::vector<Complex> values(kCoarse.n, Complex(1.0, 0.0));
  values[17] = Complex(std::nan(""), 0.0);
  const auto f = HF::sampled(kCoarse, values);
  try {
    weighted_l2_norm_sq(f, Order(0.0), kCoarse);
    FAIL("expected an evaluation error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Evaluation);
    CHECK(std::string(e.what()).find("node 17") != std::string::npos);
  }
}

TEST_CASE("sampled evaluation hits nodes exactly and interpolates between") {
  std::vector<Complex> values(kCoarse.n);
  for (int j = 0; j < kCoarse.n; ++j) values[j] = Complex(j, 0.0);
  const auto f = HF::sampled(kCoarse, values);
  CHECK(f(kCoarse.node(5)) == Complex(5.0, 0.0));
  CHECK(f(0.5 * (kCoarse.node(5) + kCoarse.node(6))).real() == doctest::Approx(5.5));
  CHECK(f(kCoarse.t_max + 1.0) == Complex(0.0, 0.0));
}

TEST_CASE("support and modulation hints") {
  const auto f = HF::translate(HF::indicator(0.5, 1.5), 2.0);
  CHECK(f.support().lo == doctest::Approx(2.5));
  CHECK(f.support().hi == doctest::Approx(3.5));
  CHECK(HF::modulate(HF::sum({HF::modulate(HF::exponential(1.0), -30.0)}), 10.0).max_modulation() ==
        doctest::Approx(30.0));
}

TEST_CASE("closed-form evaluation is deterministic") {
  const auto f = HF::modulate(HF::sum({HF::exponential(1.3), HF::poly_bump(0.7)}), 11.0);
  for (double t : {0.1, 0.33, 2.7}) {
    const Complex a = f(t);
    const Complex b = f(t);
    CHECK(a.real() == b.real());
    CHECK(a.imag() == b.imag());
  }
}

TEST_CASE("constructor validation") {
  CHECK_THROWS_AS(HF::exponential(0.0), Error);
  CHECK_THROWS_AS(HF::indicator(2.0, 1.0), Error);
  CHECK_THROWS_AS(HF::indicator(-1.0, 1.0), Error);
  CHECK_THROWS_AS(HF::translate(HF::exponential(1.0), -0.1), Error);
  CHECK_THROWS_AS(TimeGrid(0.0, 1.0), Error);
  CHECK_THROWS_AS(TimeGrid(1.0, 0.5), Error);
  CHECK_THROWS_AS(FrequencyGrid(1.0, 5.0), Error);  // y_max < 10 dy
  CHECK_THROWS_AS(Order(-1.0), Error);
}
