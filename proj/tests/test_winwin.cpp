#include <cmath>
#include <stdexcept>

#include "doctest.h"

#include "wade/winwin.hpp"

using namespace wade;

namespace {

Series zero_investment(const TimeGrid& grid) {
  return constant_series(grid, 0.0);
}

} // namespace

TEST_CASE("named investment responses") {
  CHECK(make_investment_response("linear", 2.0)(3.0) == 6.0);
  CHECK(make_investment_response("saturating", 2.0)(1.0) == 1.0);
  CHECK(make_investment_response("saturating", 2.0)(0.0) == 0.0);
  CHECK(make_investment_response("constant", 5.0)(123.0) == 5.0);
  CHECK_THROWS_AS(make_investment_response("cubic", 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_investment_response(
                      "linear", std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
}

TEST_CASE("win-win parameters are validated") {
  const TimeGrid grid(0.0, 1.0, 2);
  const Series inv = zero_investment(grid);
  const auto f = make_investment_response("linear", 1.0);
  CHECK_NOTHROW(WinWinParams(0.1, 1.0, inv, f));
  CHECK_THROWS_AS(WinWinParams(-0.1, 1.0, inv, f), std::invalid_argument);
  CHECK_THROWS_AS(WinWinParams(1.0, 1.0, inv, f), std::invalid_argument);
  CHECK_THROWS_AS(WinWinParams(0.1, -1.0, inv, f), std::invalid_argument);
  CHECK_THROWS_AS(WinWinParams(0.1, 1.0, inv, nullptr),
                  std::invalid_argument);
}

TEST_CASE("no response and no depreciation freeze the reference price") {
  const TimeGrid grid(0.0, 10.0, 100);
  const WinWinParams ww(0.0, 0.0, zero_investment(grid),
                        make_investment_response("constant", 0.0));
  const Series p0 = evolve_winwin_price(ww, 29.0, grid);
  for (std::size_t i = 0; i < p0.size(); ++i) {
    CHECK(p0[i] == 29.0);
  }
}

TEST_CASE("pure depreciation decays the reference price exponentially") {
  const TimeGrid grid(0.0, 50.0, 5000);
  const WinWinParams ww(0.1, 0.0, zero_investment(grid),
                        make_investment_response("constant", 0.0));
  const Series p0 = evolve_winwin_price(ww, 29.0, grid);
  double worst = 0.0;
  for (std::size_t i = 0; i < p0.size(); ++i) {
    const double ref = 29.0 * std::exp(-0.1 * grid.node(i));
    worst = std::max(worst, std::abs(p0[i] - ref));
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("constant response drives the price to its equilibrium") {
  // dP0/dt = F - mu P0 settles at F / mu; with F = 2.9, mu = 0.1 the
  // equilibrium is the familiar 29.
  const TimeGrid grid(0.0, 80.0, 1600);
  const WinWinParams ww(0.1, 0.0, zero_investment(grid),
                        make_investment_response("constant", 2.9));
  const Series p0 = evolve_winwin_price(ww, 50.0, grid);
  double worst = 0.0;
  for (std::size_t i = 0; i < p0.size(); ++i) {
    const double t = grid.node(i);
    const double ref = 29.0 + (50.0 - 29.0) * std::exp(-0.1 * t);
    worst = std::max(worst, std::abs(p0[i] - ref));
  }
  CHECK(worst < 1e-6);
  // After five time constants the gap to equilibrium is below 1%.
  CHECK(std::abs(p0.interp(50.0) - 29.0) / 29.0 < 0.01);
}

TEST_CASE("starting at the equilibrium stays there exactly") {
  const TimeGrid grid(0.0, 10.0, 100);
  const WinWinParams ww(0.1, 0.0, zero_investment(grid),
                        make_investment_response("constant", 2.9));
  const Series p0 = evolve_winwin_price(ww, 29.0, grid);
  for (std::size_t i = 0; i < p0.size(); ++i) {
    CHECK(p0[i] == doctest::Approx(29.0).epsilon(1e-13));
  }
}

TEST_CASE("linear response to a ramped investment matches the exact solve") {
  // dP0/dt = kappa i(t) - mu P0 with i(t) = t has the particular solution
  // (kappa / mu) (t - 1 / mu) plus a homogeneous decay fixed by P0(0).
  const double kappa = 0.5;
  const double mu = 0.2;
  const double p_init = 10.0;
  const TimeGrid grid(0.0, 20.0, 2000);
  std::vector<double> ramp(grid.node_count());
  for (std::size_t i = 0; i < ramp.size(); ++i) {
    ramp[i] = grid.node(i);
  }
  const WinWinParams ww(mu, 0.0, Series(grid, std::move(ramp)),
                        make_investment_response("linear", kappa));
  const Series p0 = evolve_winwin_price(ww, p_init, grid);

  const double scale = kappa / mu;
  const double offset = scale / mu;
  double worst = 0.0;
  for (std::size_t i = 0; i < p0.size(); ++i) {
    const double t = grid.node(i);
    const double particular = scale * t - offset;
    const double homogeneous = (p_init + offset) * std::exp(-mu * t);
    worst = std::max(worst, std::abs(p0[i] - (particular + homogeneous)));
  }
  CHECK(worst < 1e-7);
}

TEST_CASE("consistency residual measures the win-win identity") {
  const TimeGrid grid(0.0, 2.0, 2);
  const WinWinParams ww(0.0, 24.0, constant_series(grid, 5.0),
                        make_investment_response("linear", 1.0));
  const Series pivot = constant_series(grid, 29.0);
  const Series residual = winwin_consistency(pivot, ww);
  for (std::size_t i = 0; i < residual.size(); ++i) {
    CHECK(residual[i] == 0.0);
  }

  const Series high = constant_series(grid, 30.5);
  const Series off = winwin_consistency(high, ww);
  for (std::size_t i = 0; i < off.size(); ++i) {
    CHECK(off[i] == 1.5);
  }
}

TEST_CASE("consistency requires matching grids") {
  const TimeGrid g1(0.0, 2.0, 2);
  const TimeGrid g2(0.0, 2.0, 4);
  const WinWinParams ww(0.0, 0.0, constant_series(g1, 1.0),
                        make_investment_response("linear", 1.0));
  CHECK_THROWS_AS(winwin_consistency(constant_series(g2, 29.0), ww),
                  GridMismatchError);
  CHECK_THROWS_AS(evolve_winwin_price(ww, 29.0, g2), GridMismatchError);
}

TEST_CASE("a non-finite response value is rejected") {
  const TimeGrid grid(0.0, 1.0, 2);
  const WinWinParams ww(
      0.1, 0.0, constant_series(grid, 1.0),
      [](double) { return std::numeric_limits<double>::infinity(); });
  CHECK_THROWS_AS(evolve_winwin_price(ww, 29.0, grid), std::invalid_argument);
}
