#include "wade/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace wade {

namespace {

// Reflects node values: out[j] = in[n - j] laid on the s-grid.
Series reflect_onto(const Series& forward, const TimeGrid& s_grid) {
  const std::size_t n = forward.size();
  std::vector<double> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    out[j] = forward[n - 1 - j];
  }
  return Series(s_grid, std::move(out));
}

Series resolve_alpha(const ModelParams& params, const TimeGrid& grid,
                     const Series* alpha_series) {
  if (alpha_series == nullptr) {
    return constant_series(grid, params.alpha);
  }
  detail::require_same_grid(alpha_series->grid, grid, "alpha series");
  return *alpha_series;
}

} // namespace

Series integrate_linear_scalar_ode(const Series& forcing, const Series& rate,
                                   double y0) {
  detail::require_same_grid(forcing.grid, rate.grid,
                            "integrate_linear_scalar_ode");
  if (!std::isfinite(y0)) {
    throw std::invalid_argument(
        "integrate_linear_scalar_ode: initial value must be finite");
  }
  const TimeGrid& grid = forcing.grid;
  const double h = grid.step();
  std::vector<double> y(grid.node_count());
  y[0] = y0;
  for (std::size_t i = 0; i + 1 < y.size(); ++i) {
    const double f0 = forcing[i];
    const double f1 = forcing[i + 1];
    const double fm = 0.5 * (f0 + f1);
    const double r0 = rate[i];
    const double r1 = rate[i + 1];
    const double rm = 0.5 * (r0 + r1);
    const double yi = y[i];
    const double k1 = f0 + r0 * yi;
    const double k2 = fm + rm * (yi + 0.5 * h * k1);
    const double k3 = fm + rm * (yi + 0.5 * h * k2);
    const double k4 = f1 + r1 * (yi + h * k3);
    y[i + 1] = yi + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return Series(grid, std::move(y));
}

ReservesState integrate_reserves(const ModelParams& params,
                                 const Series& demand, double initial_stock,
                                 const TimeGrid& grid,
                                 const Series* alpha_series) {
  params.validate();
  detail::require_same_grid(demand.grid, grid, "integrate_reserves");
  if (!std::isfinite(initial_stock)) {
    throw std::invalid_argument(
        "integrate_reserves: initial stock must be finite");
  }
  std::vector<double> forcing(demand.size());
  for (std::size_t i = 0; i < forcing.size(); ++i) {
    forcing[i] = -demand[i];
  }
  Series rate = resolve_alpha(params, grid, alpha_series);
  Series reserves = integrate_linear_scalar_ode(
      Series(grid, std::move(forcing)), rate, initial_stock);
  return ReservesState{initial_stock, std::move(reserves)};
}

Series integrate_costate(const ModelParams& params, const TimeGrid& grid,
                         CostateMethod method, const Series* alpha_series) {
  params.validate();
  if (method == CostateMethod::numeric) {
    Series alpha = resolve_alpha(params, grid, alpha_series);
    std::vector<double> rate(alpha.size());
    for (std::size_t i = 0; i < rate.size(); ++i) {
      rate[i] = -alpha[i];
    }
    return integrate_linear_scalar_ode(constant_series(grid, 0.0),
                                       Series(grid, std::move(rate)),
                                       params.c0);
  }
  std::vector<double> lambda(grid.node_count());
  if (alpha_series == nullptr) {
    for (std::size_t i = 0; i < lambda.size(); ++i) {
      lambda[i] = params.c0 * std::exp(-params.alpha * grid.elapsed(i));
    }
  } else {
    // lambda(t) = c0 * exp(-integral of alpha); cumulative trapezoid is
    // exact for the piecewise-linear alpha the series represents.
    detail::require_same_grid(alpha_series->grid, grid, "alpha series");
    const double h = grid.step();
    double integral = 0.0;
    lambda[0] = params.c0;
    for (std::size_t i = 1; i < lambda.size(); ++i) {
      integral += 0.5 * h * ((*alpha_series)[i - 1] + (*alpha_series)[i]);
      lambda[i] = params.c0 * std::exp(-integral);
    }
  }
  return Series(grid, std::move(lambda));
}

ReversedState integrate_reversed(const ModelParams& params,
                                 const Series& demand, double terminal_value,
                                 const TimeGrid& grid, ReversalForm form,
                                 const Series* alpha_series) {
  params.validate();
  detail::require_same_grid(demand.grid, grid, "integrate_reversed");
  if (!std::isfinite(terminal_value)) {
    throw std::invalid_argument(
        "integrate_reversed: terminal value must be finite");
  }
  const TimeGrid s_grid(0.0, grid.t_end - grid.t_start, grid.n_steps);
  const Series reflected_demand = reflect_onto(demand, s_grid);
  const Series alpha = resolve_alpha(params, grid, alpha_series);
  const Series reflected_alpha = reflect_onto(alpha, s_grid);

  const double forcing_sign = (form == ReversalForm::exact) ? 1.0 : -1.0;
  const double rate_sign = (form == ReversalForm::exact) ? -1.0 : 1.0;
  std::vector<double> forcing(reflected_demand.size());
  std::vector<double> rate(reflected_alpha.size());
  for (std::size_t j = 0; j < forcing.size(); ++j) {
    forcing[j] = forcing_sign * reflected_demand[j];
    rate[j] = rate_sign * reflected_alpha[j];
  }
  Series profile = integrate_linear_scalar_ode(
      Series(s_grid, std::move(forcing)), Series(s_grid, std::move(rate)),
      terminal_value);
  return ReversedState{terminal_value, std::move(profile)};
}

} // namespace wade
