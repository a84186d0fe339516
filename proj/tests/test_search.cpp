#include <doctest.h>

#include <cmath>

#include "phigrad/families.hpp"
#include "phigrad/search.hpp"

using namespace phigrad;

TEST_CASE("constant function") {
  const auto r = numeric_inf_sup([](double) { return 0.25; }, 0.25, 0.25);
  CHECK(r.inf == 0.25);
  CHECK(r.sup == 0.25);
}

TEST_CASE("monotone function reports its limits as witnesses") {
  // degree function of 1 + t: (q-2) - (q-p)/(1 + t) with p=2, q=4
  const auto r = numeric_inf_sup(
      [](double t) { return 2.0 - 2.0 / (1.0 + t); }, 0.0, 2.0);
  CHECK(r.inf == doctest::Approx(0.0));
  CHECK(r.sup == doctest::Approx(2.0));
  CHECK(r.inf_witness.kind == Witness::Kind::AtZeroLimit);
  CHECK(r.sup_witness.kind == Witness::Kind::AtInfinityLimit);
}

TEST_CASE("interior extrema are refined to high accuracy") {
  // 2t/(1+t)^2 has maximum 1/2 at t = 1
  const auto r = numeric_inf_sup(
      [](double t) { return 2.0 * t / ((1.0 + t) * (1.0 + t)); }, 0.0, 0.0);
  CHECK(r.sup == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(r.sup_witness.kind == Witness::Kind::AtPoint);
  CHECK(r.sup_witness.t == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(r.inf == 0.0);

  // (t+1)^2/4 - 2t has minimum -2 at t = 3
  const auto r2 = numeric_inf_sup(
      [](double t) { return (t + 1.0) * (t + 1.0) / 4.0 - 2.0 * t; }, 0.25,
      std::numeric_limits<double>::infinity());
  CHECK(r2.inf == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(r2.inf_witness.t == doctest::Approx(3.0).epsilon(1e-6));
  CHECK(std::isinf(r2.sup));
}

TEST_CASE("fast variant sees the precomputed log") {
  const auto r = numeric_inf_sup_fast(
      [](double t, double log_t) {
        CHECK(log_t == doctest::Approx(std::log(t)).epsilon(1e-12));
        return std::exp(-log_t * log_t);  // peak 1 at t = 1
      },
      0.0, 0.0);
  CHECK(r.sup == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("golden section in log space") {
  const auto [argmin, value] = golden_min_log(
      [](double t) { return (std::log(t) - 2.0) * (std::log(t) - 2.0); }, 1.0, 1e4,
      1e-12);
  CHECK(argmin == doctest::Approx(std::exp(2.0)).epsilon(1e-9));
  CHECK(value == doctest::Approx(0.0));
}
