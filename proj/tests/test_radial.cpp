#include <doctest.h>

#include <cmath>

#include "phigrad/radial.hpp"

using namespace phigrad;

namespace {
double sinc(double r) { return r == 0.0 ? 1.0 : std::sin(r) / r; }
}  // namespace

TEST_CASE("zero reaction keeps the center value") {
  const ModelSpace space{3, 0.0};
  const auto sol = solve_radial(PhiSpec::constant_one(), PsiSpec::zero(), space,
                                1.0, 4.0, 1e-3);
  CHECK(sol.diagnostics.positive_ok);
  CHECK(sol.diagnostics.c_hat == 0.0);
  CHECK(sol.diagnostics.harnack_log == doctest::Approx(0.0));
  for (std::size_t j = 0; j < sol.u.size(); j += 500) {
    CHECK(sol.u[j] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(sol.h_hat[j] == 0.0);
  }
}

TEST_CASE("linear reaction reproduces sin(r)/r") {
  const ModelSpace space{3, 0.0};
  const auto sol = solve_radial(PhiSpec::constant_one(), PsiSpec::power(1.0, 1.0),
                                space, 1.0, 1.0, 1e-3);
  REQUIRE(sol.diagnostics.positive_ok);
  double max_err = 0.0;
  for (std::size_t j = 0; j < sol.grid.size(); ++j)
    max_err = std::max(max_err, std::abs(sol.u[j] - sinc(sol.grid[j])));
  CHECK(max_err < 1e-9);
  // the quoted sample value
  const std::size_t mid = 1000;  // r = 1
  CHECK(sol.grid[mid] == doctest::Approx(1.0));
  CHECK(sol.u[mid] == doctest::Approx(0.8414709848).epsilon(1e-8));
  CHECK(sol.diagnostics.residual_max < 1e-8);
}

TEST_CASE("fourth-order convergence against the closed form") {
  const ModelSpace space{3, 0.0};
  std::vector<double> errs;
  for (double h : {4e-3, 2e-3, 1e-3}) {
    const auto sol = solve_radial(PhiSpec::constant_one(), PsiSpec::power(1.0, 1.0),
                                  space, 1.0, 1.0, h);
    double max_err = 0.0;
    for (std::size_t j = 0; j < sol.grid.size(); ++j)
      max_err = std::max(max_err, std::abs(sol.u[j] - sinc(sol.grid[j])));
    errs.push_back(max_err);
  }
  CHECK(std::log2(errs[0] / errs[1]) >= 3.5);
  CHECK(std::log2(errs[1] / errs[2]) >= 3.5);
}

TEST_CASE("constant-root reaction is an exact fixed point") {
  const ModelSpace space{3, 0.0};
  const auto sol = solve_radial(PhiSpec::constant_one(),
                                PsiSpec::double_power(1.0, 3.0), space, 1.0, 8.0, 1e-3);
  CHECK(sol.diagnostics.positive_ok);
  CHECK(sol.diagnostics.c_hat <= 1e-12);
}

TEST_CASE("degenerate operator solves cleanly") {
  const ModelSpace space{3, 0.0};
  const auto sol = solve_radial(PhiSpec::power_law(3.0), PsiSpec::power(1.0, 1.0),
                                space, 1.0, 1.0, 1e-3);
  CHECK(sol.diagnostics.positive_ok);
  CHECK(sol.diagnostics.residual_max < 1e-8);
  CHECK(sol.u.back() < 1.0);
}

TEST_CASE("hyperbolic warp") {
  const ModelSpace space{3, 1.0};
  CHECK(space.K() == doctest::Approx(2.0));
  CHECK(space.warp(1.0) == doctest::Approx(std::sinh(1.0)));
  const auto sol = solve_radial(PhiSpec::constant_one(), PsiSpec::zero(), space,
                                2.0, 2.0, 1e-3);
  CHECK(sol.diagnostics.c_hat == 0.0);
}

TEST_CASE("positivity loss is reported, not hidden") {
  const ModelSpace space{3, 0.0};
  // below the stable root, the solution of the bistable equation crosses zero
  const auto sol = solve_radial(PhiSpec::constant_one(),
                                PsiSpec::double_power(1.0, 3.0), space, 0.5, 4.0, 1e-3);
  CHECK(!sol.diagnostics.positive_ok);
  CHECK(sol.grid.back() < 8.0);
  CHECK_THROWS_AS(verify_estimate(sol, space, 4.0), precondition_error);
}

TEST_CASE("sweep retains flagged rows") {
  const ModelSpace space{3, 0.0};
  const auto rows = sweep_radii(PhiSpec::constant_one(),
                                PsiSpec::double_power(1.0, 3.0), space, 0.5,
                                {1.0, 2.0, 4.0}, 1e-3);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].positive_ok);   // 2R = 2 is inside the positivity radius
  CHECK(!rows[2].positive_ok);  // 2R = 8 is beyond it
}

TEST_CASE("preconditions") {
  const ModelSpace space{3, 0.0};
  CHECK_THROWS_AS(solve_radial(PhiSpec::constant_one(), PsiSpec::zero(), space,
                               -1.0, 1.0, 1e-3),
                  precondition_error);
  CHECK_THROWS_AS(solve_radial(PhiSpec::constant_one(), PsiSpec::zero(), space,
                               1.0, 1.0, 0.1),
                  precondition_error);
  CHECK_THROWS_AS(solve_radial(PhiSpec::mean_curvature(), PsiSpec::zero(), space,
                               1.0, 1.0, 1e-3),
                  precondition_error);
  CHECK_THROWS_AS(sweep_radii(PhiSpec::constant_one(), PsiSpec::zero(), space, 1.0,
                              {2.0, 1.0}, 1e-3),
                  precondition_error);
}
