#include "wade/pontryagin.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace wade {

namespace detail {

double ipow(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) {
    r *= x;
  }
  return r;
}

double clamp_to_band(double price, double pivot, double band) {
  if (std::abs(price - pivot) >= band) {
    return price;
  }
  return price >= pivot ? pivot + band : pivot - band;
}

} // namespace detail

namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument(std::string(what) + " must be finite");
  }
}

void require_admissible(double price, double pivot, double band) {
  if (std::abs(price - pivot) < band) {
    throw SingularPriceError(price, pivot, band);
  }
}

// (m-1)-th real root of the stationarity radicand.
double stationary_root(double radicand, int m) {
  const int root = m - 1;
  if (root == 1) {
    return radicand;
  }
  if (root % 2 == 0) {
    if (radicand < 0.0) {
      throw NonRealRootError(
          "optimal_superprofit: even root of a negative radicand (m = " +
          std::to_string(m) + ")");
    }
    return std::pow(radicand, 1.0 / root);
  }
  return std::copysign(std::pow(std::abs(radicand), 1.0 / root), radicand);
}

double optimal_demand_at_pivot(double t, double price, double pivot,
                               const ModelParams& params, double band) {
  ModelParams local = params;
  local.p0_base = pivot;
  const double costate = params.c0 * std::exp(-params.alpha * t);
  const double s = optimal_superprofit(costate, price, local, band);
  return s / (price - pivot);
}

} // namespace

PriceContext::PriceContext(Series price_, Series rest_of_world_,
                           double epsilon_band_)
    : price(std::move(price_)), rest_of_world(std::move(rest_of_world_)),
      epsilon_band(epsilon_band_) {
  detail::require_same_grid(price.grid, rest_of_world.grid, "PriceContext");
  if (!(epsilon_band > 0.0) || !std::isfinite(epsilon_band)) {
    throw std::invalid_argument("PriceContext: epsilon_band must be > 0");
  }
}

double hamiltonian(double reserves, double demand, double costate,
                   double price, double rest_of_world,
                   const ModelParams& params) {
  params.validate();
  require_finite(reserves, "hamiltonian: reserves");
  require_finite(demand, "hamiltonian: demand");
  require_finite(costate, "hamiltonian: costate");
  require_finite(price, "hamiltonian: price");
  require_finite(rest_of_world, "hamiltonian: rest-of-world demand");
  const double s = (price - params.p0_base) * demand;
  const double v = demand + rest_of_world;
  return detail::ipow(s, params.m) +
         costate * (-v + params.alpha * reserves);
}

double hamiltonian_demand_gradient(double demand, double costate, double price,
                                   const ModelParams& params) {
  params.validate();
  const double gap = price - params.p0_base;
  const double s = gap * demand;
  return params.m * detail::ipow(s, params.m - 1) * gap - costate;
}

double hamiltonian_demand_gradient_fd(double reserves, double demand,
                                      double costate, double price,
                                      double rest_of_world,
                                      const ModelParams& params, double step) {
  if (!(step > 0.0)) {
    throw std::invalid_argument("hamiltonian_demand_gradient_fd: step <= 0");
  }
  const double hi = hamiltonian(reserves, demand + step, costate, price,
                                rest_of_world, params);
  const double lo = hamiltonian(reserves, demand - step, costate, price,
                                rest_of_world, params);
  return (hi - lo) / (2.0 * step);
}

double optimal_superprofit(double costate, double price,
                           const ModelParams& params, double epsilon_band) {
  params.validate();
  require_finite(costate, "optimal_superprofit: costate");
  require_finite(price, "optimal_superprofit: price");
  require_admissible(price, params.p0_base, epsilon_band);
  const double radicand = costate / (params.m * (price - params.p0_base));
  return stationary_root(radicand, params.m);
}

double optimal_demand(double t, double price, const ModelParams& params,
                      double epsilon_band) {
  params.validate();
  require_finite(t, "optimal_demand: t");
  return optimal_demand_at_pivot(t, price, params.p0_base, params,
                                 epsilon_band);
}

double calibrate_c0(double observed_demand, double price_at_t0, double t0,
                    const ModelParams& params, double epsilon_band) {
  params.validate();
  if (params.m != 2) {
    throw std::invalid_argument("calibrate_c0: only m = 2 is invertible");
  }
  if (!(observed_demand > 0.0) || !std::isfinite(observed_demand)) {
    throw std::invalid_argument(
        "calibrate_c0: observed demand must be positive");
  }
  require_finite(price_at_t0, "calibrate_c0: price");
  require_finite(t0, "calibrate_c0: t0");
  require_admissible(price_at_t0, params.p0_base, epsilon_band);
  const double gap = price_at_t0 - params.p0_base;
  return 2.0 * observed_demand * gap * gap * std::exp(params.alpha * t0);
}

Trajectory solve_pmp(const ModelParams& params, const PriceContext& ctx,
                     double initial_stock, const TimeGrid& grid,
                     BandPolicy policy, const Series* pivot) {
  params.validate();
  detail::require_same_grid(ctx.price.grid, grid, "solve_pmp price");
  if (pivot != nullptr) {
    detail::require_same_grid(pivot->grid, grid, "solve_pmp pivot");
  }
  require_finite(initial_stock, "solve_pmp: initial stock");

  Series costate = integrate_costate(params, grid);

  const std::size_t n = grid.node_count();
  std::vector<double> demand(n);
  std::vector<double> super(n);
  std::vector<double> total(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double pivot_i = pivot ? (*pivot)[i] : params.p0_base;
    double price_i = ctx.price[i];
    if (std::abs(price_i - pivot_i) < ctx.epsilon_band) {
      if (policy == BandPolicy::reject) {
        throw SingularPriceError(price_i, pivot_i, ctx.epsilon_band, i,
                                 grid.node(i));
      }
      price_i = detail::clamp_to_band(price_i, pivot_i, ctx.epsilon_band);
    }
    demand[i] = optimal_demand_at_pivot(grid.elapsed(i), price_i, pivot_i,
                                        params, ctx.epsilon_band);
    super[i] = (price_i - pivot_i) * demand[i];
    total[i] = demand[i] + ctx.rest_of_world[i];
  }

  ReservesState reserves = integrate_reserves(
      params, Series(grid, std::move(total)), initial_stock, grid);

  std::vector<double> ham(n);
  for (std::size_t i = 0; i < n; ++i) {
    ModelParams local = params;
    local.p0_base = pivot ? (*pivot)[i] : params.p0_base;
    const double price_i =
        detail::clamp_to_band(ctx.price[i], local.p0_base, ctx.epsilon_band);
    ham[i] = hamiltonian(reserves.reserves[i], demand[i], costate[i], price_i,
                         ctx.rest_of_world[i], local);
  }

  return Trajectory{grid,
                    std::move(reserves.reserves),
                    std::move(costate),
                    Series(grid, std::move(demand)),
                    Series(grid, std::move(super)),
                    Series(grid, std::move(ham))};
}

double stationarity_residual(const Trajectory& traj, const PriceContext& ctx,
                             const ModelParams& params, GradientMode mode,
                             const Series* pivot) {
  params.validate();
  detail::require_same_grid(traj.grid, ctx.price.grid,
                            "stationarity_residual");
  if (pivot != nullptr) {
    detail::require_same_grid(pivot->grid, traj.grid,
                              "stationarity_residual pivot");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < traj.grid.node_count(); ++i) {
    ModelParams local = params;
    local.p0_base = pivot ? (*pivot)[i] : params.p0_base;
    const double price_i =
        detail::clamp_to_band(ctx.price[i], local.p0_base, ctx.epsilon_band);
    double residual;
    if (mode == GradientMode::exact) {
      const double gap = price_i - local.p0_base;
      residual = params.m * detail::ipow(traj.super_profit[i], params.m - 1) *
                     gap -
                 traj.costate[i];
    } else {
      const double step = 1e-6 * std::max(1.0, std::abs(traj.demand[i]));
      residual = hamiltonian_demand_gradient_fd(
          traj.reserves[i], traj.demand[i], traj.costate[i], price_i,
          ctx.rest_of_world[i], local, step);
    }
    worst = std::max(worst, std::abs(residual));
  }
  return worst;
}

double trajectory_objective(const Trajectory& traj,
                            const ModelParams& params) {
  params.validate();
  const double h = traj.grid.step();
  const Series& s = traj.super_profit;
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    sum += 0.5 * h *
           (detail::ipow(s[i], params.m) + detail::ipow(s[i + 1], params.m));
  }
  return sum;
}

Series cumulative_objective(const Trajectory& traj,
                            const ModelParams& params) {
  params.validate();
  const double h = traj.grid.step();
  const Series& s = traj.super_profit;
  std::vector<double> acc(s.size());
  acc[0] = 0.0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    acc[i] = acc[i - 1] +
             0.5 * h *
                 (detail::ipow(s[i - 1], params.m) +
                  detail::ipow(s[i], params.m));
  }
  return Series(traj.grid, std::move(acc));
}

} // namespace wade
