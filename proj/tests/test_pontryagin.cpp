#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"

#include "wade/pontryagin.hpp"

using namespace wade;

namespace {

PriceContext constant_context(const TimeGrid& grid, double price, double w) {
  return PriceContext(constant_series(grid, price), constant_series(grid, w));
}

} // namespace

TEST_CASE("hamiltonian assembles profit and reserve terms") {
  ModelParams params;
  params.alpha = 0.2;
  // S = (39 - 29) * 1 = 10; H = 10^2 + 0.5 * (-(1 + 0) + 0.2 * 2).
  CHECK(hamiltonian(2.0, 1.0, 0.5, 39.0, 0.0, params) ==
        doctest::Approx(99.7).epsilon(1e-14));
  // Adding rest-of-world demand only strengthens the depletion term.
  CHECK(hamiltonian(2.0, 1.0, 0.5, 39.0, 3.0, params) ==
        doctest::Approx(98.2).epsilon(1e-14));
}

TEST_CASE("control gradient of the hamiltonian, exact and differenced") {
  ModelParams params;
  // dH/da = 2 S (p - p0) - lambda = 2 * 10 * 10 - 0.5.
  CHECK(hamiltonian_demand_gradient(1.0, 0.5, 39.0, params) ==
        doctest::Approx(199.5).epsilon(1e-14));

  const double fd = hamiltonian_demand_gradient_fd(2.0, 1.0, 0.5, 39.0, 0.0,
                                                   params, 1e-6);
  CHECK(fd == doctest::Approx(199.5).epsilon(1e-9));

  CHECK_THROWS_AS(
      hamiltonian_demand_gradient_fd(2.0, 1.0, 0.5, 39.0, 0.0, params, 0.0),
      std::invalid_argument);
}

TEST_CASE("finite-difference gradient tracks the exact one at random points") {
  std::mt19937 rng(77001);
  std::uniform_real_distribution<double> demand(0.1, 5.0);
  std::uniform_real_distribution<double> costate(0.05, 2.0);
  std::uniform_real_distribution<double> price(31.0, 130.0);
  std::uniform_real_distribution<double> reserves(0.0, 200.0);
  std::uniform_int_distribution<int> exponent(2, 4);
  int checked = 0;
  while (checked < 200) {
    ModelParams params;
    params.m = exponent(rng);
    const double a = demand(rng);
    const double lam = costate(rng);
    const double p = price(rng);
    const double r = reserves(rng);
    const double exact = hamiltonian_demand_gradient(a, lam, p, params);
    if (std::abs(exact) < 1.0) {
      continue;
    }
    const double step = 3e-6 * std::max(1.0, std::abs(a));
    const double fd =
        hamiltonian_demand_gradient_fd(r, a, lam, p, 1.0, params, step);
    CHECK(std::abs(fd - exact) / std::abs(exact) < 1e-6);
    ++checked;
  }
}

TEST_CASE("stationary super profit closed forms") {
  ModelParams params; // m = 2
  // S* = lambda / (m (p - p0)) = 0.2 / (2 * 10).
  CHECK(optimal_superprofit(0.2, 39.0, params) ==
        doctest::Approx(0.01).epsilon(1e-14));

  params.m = 3; // square root branch
  CHECK(optimal_superprofit(0.6, 31.0, params) ==
        doctest::Approx(std::sqrt(0.1)).epsilon(1e-14));
  // A negative radicand has no real square root.
  CHECK_THROWS_AS(optimal_superprofit(0.6, 27.0, params), NonRealRootError);

  params.m = 4; // cube root branch keeps the sign
  CHECK(optimal_superprofit(-0.4, 39.0, params) ==
        doctest::Approx(-std::cbrt(0.01)).epsilon(1e-12));
}

TEST_CASE("optimal demand closed form for the quadratic objective") {
  ModelParams params; // alpha 0.2, c0 0.2, m 2, p0 29
  // a* = c0 e^(-alpha t) / (2 (p - 29)^2)
  CHECK(optimal_demand(0.0, 39.0, params) ==
        doctest::Approx(0.001).epsilon(1e-14));
  CHECK(optimal_demand(5.0, 39.0, params) ==
        doctest::Approx(0.2 * std::exp(-1.0) / 200.0).epsilon(1e-14));

  params.alpha = 0.0;
  params.c0 = 2.0;
  CHECK(optimal_demand(7.0, 30.0, params) == doctest::Approx(1.0));
}

TEST_CASE("prices too close to the pivot are rejected pointwise") {
  ModelParams params;
  CHECK_THROWS_AS(optimal_demand(0.0, 29.2, params), SingularPriceError);
  CHECK_THROWS_AS(optimal_superprofit(0.2, 28.7, params), SingularPriceError);
  // The band edge itself is admissible.
  CHECK_NOTHROW(optimal_demand(0.0, 29.5, params));
  // A wider band widens the exclusion zone.
  CHECK_THROWS_AS(optimal_demand(0.0, 31.0, params, 2.5), SingularPriceError);
}

TEST_CASE("band clamping moves interior prices to the nearer edge") {
  CHECK(detail::clamp_to_band(29.2, 29.0, 0.5) == 29.5);
  CHECK(detail::clamp_to_band(28.8, 29.0, 0.5) == 28.5);
  CHECK(detail::clamp_to_band(29.0, 29.0, 0.5) == 29.5);
  CHECK(detail::clamp_to_band(35.0, 29.0, 0.5) == 35.0);
  CHECK(detail::clamp_to_band(29.5, 29.0, 0.5) == 29.5);
}

TEST_CASE("calibration inverts the demand formula") {
  ModelParams params;
  params.alpha = 0.2;
  const double c0 = calibrate_c0(0.001, 39.0, 0.0, params);
  CHECK(c0 == doctest::Approx(0.2).epsilon(1e-14));

  std::mt19937 rng(424242);
  std::uniform_real_distribution<double> demand(1e-4, 10.0);
  std::uniform_real_distribution<double> price(31.0, 130.0);
  std::uniform_real_distribution<double> time(0.0, 40.0);
  std::uniform_real_distribution<double> alpha(0.0, 0.95);
  for (int trial = 0; trial < 200; ++trial) {
    ModelParams p;
    p.alpha = alpha(rng);
    const double a_obs = demand(rng);
    const double price_obs = price(rng);
    const double t0 = time(rng);
    p.c0 = calibrate_c0(a_obs, price_obs, t0, p);
    const double reproduced = optimal_demand(t0, price_obs, p);
    CHECK(reproduced == doctest::Approx(a_obs).epsilon(1e-12));
  }
}

TEST_CASE("calibration requires the quadratic objective and sane inputs") {
  ModelParams params;
  params.m = 3;
  CHECK_THROWS_AS(calibrate_c0(1.0, 39.0, 0.0, params), std::invalid_argument);
  params.m = 2;
  CHECK_THROWS_AS(calibrate_c0(-1.0, 39.0, 0.0, params), std::invalid_argument);
  CHECK_THROWS_AS(calibrate_c0(1.0, 29.1, 0.0, params), SingularPriceError);
}

TEST_CASE("constant-price solve yields unit demand and linear depletion") {
  ModelParams params;
  params.alpha = 0.0;
  params.c0 = 2.0;
  const TimeGrid grid(0.0, 10.0, 100);
  const Trajectory traj =
      solve_pmp(params, constant_context(grid, 30.0, 0.0), 100.0, grid);

  for (std::size_t i = 0; i < traj.demand.size(); ++i) {
    CHECK(traj.demand[i] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(traj.super_profit[i] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(traj.costate[i] == 2.0);
  }
  CHECK(traj.reserves[0] == 100.0);
  CHECK(traj.reserves[100] == doctest::Approx(90.0).epsilon(1e-10));
  // H = S^2 + lambda * (-v) = 1 - 2 along the whole path.
  CHECK(traj.hamiltonian[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(traj.hamiltonian[100] == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("solved trajectories satisfy the stationarity condition") {
  ModelParams params;
  const TimeGrid grid(0.0, 10.0, 50);
  std::vector<double> prices(grid.node_count());
  for (std::size_t i = 0; i < prices.size(); ++i) {
    prices[i] = 35.0 + 9.0 * grid.node(i); // ramp 35 -> 125
  }
  const PriceContext ctx(Series(grid, std::move(prices)),
                         constant_series(grid, 1.5));
  const Trajectory traj = solve_pmp(params, ctx, 500.0, grid);

  CHECK(stationarity_residual(traj, ctx, params) < 1e-10);
  CHECK(stationarity_residual(traj, ctx, params,
                              GradientMode::finite_difference) < 1e-6);
  // The stored super profit is exactly (p - p0) * a at every node.
  for (std::size_t i = 0; i < traj.super_profit.size(); ++i) {
    CHECK(traj.super_profit[i] ==
          (ctx.price[i] - params.p0_base) * traj.demand[i]);
  }
}

TEST_CASE("a price inside the band aborts the solve naming the node") {
  ModelParams params;
  const TimeGrid grid(0.0, 4.0, 4);
  const PriceContext ctx(Series(grid, {35.0, 33.0, 31.0, 29.2, 35.0}),
                         constant_series(grid, 0.0));
  try {
    solve_pmp(params, ctx, 10.0, grid);
    FAIL("expected SingularPriceError");
  } catch (const SingularPriceError& e) {
    CHECK(e.node() == 3);
    CHECK(e.time() == doctest::Approx(3.0));
    CHECK(std::string(e.what()).find("node 3") != std::string::npos);
  }
}

TEST_CASE("the clip policy clamps banded prices instead of failing") {
  ModelParams params;
  const TimeGrid grid(0.0, 4.0, 4);
  const PriceContext ctx(Series(grid, {35.0, 33.0, 31.0, 29.2, 35.0}),
                         constant_series(grid, 0.0));
  const Trajectory traj =
      solve_pmp(params, ctx, 10.0, grid, BandPolicy::clip);
  // Node 3 is clamped to 29.5, so S = 0.5 * a there.
  const double lam = traj.costate[3];
  CHECK(traj.demand[3] == doctest::Approx(lam / (2.0 * 0.25)).epsilon(1e-12));
  CHECK(traj.super_profit[3] ==
        doctest::Approx(0.5 * traj.demand[3]).epsilon(1e-14));
}

TEST_CASE("a time-varying pivot shifts the whole solution") {
  ModelParams params;
  const TimeGrid grid(0.0, 5.0, 10);
  const PriceContext ctx(constant_series(grid, 40.0),
                         constant_series(grid, 0.0));

  const Series same_pivot = constant_series(grid, params.p0_base);
  const Trajectory base = solve_pmp(params, ctx, 50.0, grid);
  const Trajectory pinned =
      solve_pmp(params, ctx, 50.0, grid, BandPolicy::reject, &same_pivot);
  for (std::size_t i = 0; i < base.demand.size(); ++i) {
    CHECK(pinned.demand[i] == base.demand[i]);
    CHECK(pinned.super_profit[i] == base.super_profit[i]);
  }

  const Series lower_pivot = constant_series(grid, 25.0);
  const Trajectory shifted =
      solve_pmp(params, ctx, 50.0, grid, BandPolicy::reject, &lower_pivot);
  // A wider gap means less demand for the quadratic objective.
  for (std::size_t i = 0; i < shifted.demand.size(); ++i) {
    CHECK(shifted.demand[i] < base.demand[i]);
  }
  CHECK(stationarity_residual(shifted, ctx, params, GradientMode::exact,
                              &lower_pivot) < 1e-10);
}

TEST_CASE("objective integrates the super profit power") {
  ModelParams params;
  params.alpha = 0.0;
  params.c0 = 2.0;
  const TimeGrid grid(0.0, 10.0, 100);
  const Trajectory traj =
      solve_pmp(params, constant_context(grid, 30.0, 0.0), 100.0, grid);
  // S = 1 along the path, so the integral of S^2 over [0, 10] is 10.
  CHECK(trajectory_objective(traj, params) ==
        doctest::Approx(10.0).epsilon(1e-12));

  const Series running = cumulative_objective(traj, params);
  CHECK(running[0] == 0.0);
  CHECK(running[100] == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(running.interp(5.0) == doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("randomized solves stay stationary across parameter draws") {
  std::mt19937 rng(190283);
  std::uniform_real_distribution<double> alpha(0.0, 0.9);
  std::uniform_real_distribution<double> c0(0.05, 3.0);
  std::uniform_real_distribution<double> base_price(31.0, 120.0);
  std::uniform_real_distribution<double> stock(10.0, 1000.0);
  for (int trial = 0; trial < 50; ++trial) {
    ModelParams params;
    params.alpha = alpha(rng);
    params.c0 = c0(rng);
    const TimeGrid grid(0.0, 8.0, 40);
    std::vector<double> prices(grid.node_count());
    const double p0 = base_price(rng);
    const double p1 = base_price(rng);
    for (std::size_t i = 0; i < prices.size(); ++i) {
      prices[i] = std::lerp(
          p0, p1, static_cast<double>(i) / static_cast<double>(grid.n_steps));
    }
    const PriceContext ctx(Series(grid, std::move(prices)),
                           constant_series(grid, 0.5));
    const Trajectory traj = solve_pmp(params, ctx, stock(rng), grid);
    CHECK(stationarity_residual(traj, ctx, params) < 1e-10);
  }
}
