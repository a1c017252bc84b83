#include "wade/winwin.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wade/dynamics.hpp"

namespace wade {

WinWinParams::WinWinParams(double depreciation_rate_, double reasonable_profit_,
                           Series investment_,
                           std::function<double(double)> investment_response_)
    : depreciation_rate(depreciation_rate_),
      reasonable_profit(reasonable_profit_),
      investment(std::move(investment_)),
      investment_response(std::move(investment_response_)) {
  if (!(depreciation_rate >= 0.0 && depreciation_rate < 1.0)) {
    throw std::invalid_argument("WinWinParams: mu must lie in [0, 1)");
  }
  if (!(reasonable_profit >= 0.0) || !std::isfinite(reasonable_profit)) {
    throw std::invalid_argument("WinWinParams: pr must be >= 0");
  }
  if (!investment_response) {
    throw std::invalid_argument(
        "WinWinParams: an investment-response function is required");
  }
}

std::function<double(double)> make_investment_response(const std::string& name,
                                                       double parameter) {
  if (!std::isfinite(parameter)) {
    throw std::invalid_argument(
        "make_investment_response: parameter must be finite");
  }
  if (name == "linear") {
    return [parameter](double i) { return parameter * i; };
  }
  if (name == "saturating") {
    return [parameter](double i) { return parameter * i / (1.0 + i); };
  }
  if (name == "constant") {
    return [parameter](double) { return parameter; };
  }
  throw std::invalid_argument("make_investment_response: unknown choice '" +
                              name + "'");
}

Series evolve_winwin_price(const WinWinParams& ww, double initial_price,
                           const TimeGrid& grid) {
  detail::require_same_grid(ww.investment.grid, grid, "evolve_winwin_price");
  if (!std::isfinite(initial_price)) {
    throw std::invalid_argument(
        "evolve_winwin_price: initial price must be finite");
  }
  // f is sampled at the nodes and linearly interpolated mid-step, matching
  // how node-sampled demand enters the reserves integrator.
  std::vector<double> forcing(grid.node_count());
  for (std::size_t i = 0; i < forcing.size(); ++i) {
    forcing[i] = ww.investment_response(ww.investment[i]);
    if (!std::isfinite(forcing[i])) {
      throw std::invalid_argument(
          "evolve_winwin_price: f produced a non-finite value");
    }
  }
  return integrate_linear_scalar_ode(
      Series(grid, std::move(forcing)),
      constant_series(grid, -ww.depreciation_rate), initial_price);
}

Series winwin_consistency(const Series& pivot, const WinWinParams& ww) {
  detail::require_same_grid(pivot.grid, ww.investment.grid,
                            "winwin_consistency");
  std::vector<double> residual(pivot.size());
  for (std::size_t i = 0; i < residual.size(); ++i) {
    residual[i] = pivot[i] - ww.investment[i] - ww.reasonable_profit;
  }
  return Series(pivot.grid, std::move(residual));
}

} // namespace wade
