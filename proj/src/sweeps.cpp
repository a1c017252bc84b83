#include "wade/sweeps.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wade {

namespace {

std::vector<int> sorted_ks(const SweepSpec& spec) {
  std::vector<int> ks = spec.k_values;
  std::sort(ks.begin(), ks.end());
  return ks;
}

// Trapezoid integral of the reflected integrand S(T-s)^m over s.
double reversed_objective(const Series& super, int m, double h) {
  const std::size_t n = super.size();
  double sum = 0.0;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    sum += 0.5 * h *
           (detail::ipow(super[n - 1 - j], m) +
            detail::ipow(super[n - 2 - j], m));
  }
  return sum;
}

} // namespace

void SweepSpec::validate() const {
  if (!(horizon > 0.0) || !std::isfinite(horizon)) {
    throw std::invalid_argument("SweepSpec: horizon must be > 0");
  }
  if (!(window_start >= 0.0) || !std::isfinite(window_start)) {
    throw std::invalid_argument("SweepSpec: window start must be >= 0");
  }
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw std::invalid_argument("SweepSpec: lo and hi must be finite");
  }
  if (k_values.empty()) {
    throw std::invalid_argument("SweepSpec: k_values must be non-empty");
  }
  if (indexing == SweepIndexing::normalized && k_max < 1) {
    throw std::invalid_argument(
        "SweepSpec: normalized indexing needs k_max >= 1");
  }
}

double qk(int k, const SweepSpec& spec) {
  spec.validate();
  double weight;
  if (spec.indexing == SweepIndexing::absolute) {
    const double denom = spec.window_start + spec.horizon;
    if (k < 0 || static_cast<double>(k) > denom) {
      throw std::invalid_argument("qk: k = " + std::to_string(k) +
                                  " outside [0, t0 + h]");
    }
    weight = static_cast<double>(k) / denom;
  } else {
    if (k < 0 || k > spec.k_max) {
      throw std::invalid_argument("qk: k = " + std::to_string(k) +
                                  " outside [0, k_max]");
    }
    weight = static_cast<double>(k) / spec.k_max;
  }
  return std::lerp(spec.lo, spec.hi, weight);
}

SweepResult run_initial_sweep(const SweepSpec& spec, const ModelParams& params,
                              const PriceContext& ctx, const TimeGrid& grid,
                              BandPolicy policy) {
  spec.validate();
  if (spec.mode != SweepMode::initial) {
    throw std::invalid_argument("run_initial_sweep: spec mode is not initial");
  }
  SweepResult result;
  for (int k : sorted_ks(spec)) {
    const double start = qk(k, spec);
    try {
      Trajectory traj = solve_pmp(params, ctx, start, grid, policy);
      const double objective = trajectory_objective(traj, params);
      result.entries.push_back(SweepEntry{k, start, std::move(traj), objective});
    } catch (const Error& e) {
      throw Error("initial sweep entry k = " + std::to_string(k) + ": " +
                  e.what());
    }
  }
  return result;
}

SweepResult run_terminal_sweep(const SweepSpec& spec, const ModelParams& params,
                               const PriceContext& ctx, const TimeGrid& grid,
                               ReversalForm form, BandPolicy policy) {
  spec.validate();
  if (spec.mode != SweepMode::terminal) {
    throw std::invalid_argument(
        "run_terminal_sweep: spec mode is not terminal");
  }
  // The control law is state-independent, so costate, demand and S come
  // from a single forward solve; only the reserve profile varies with k.
  Trajectory base = solve_pmp(params, ctx, 0.0, grid, policy);
  const std::size_t n = grid.node_count();
  std::vector<double> total(n);
  for (std::size_t i = 0; i < n; ++i) {
    total[i] = base.demand[i] + ctx.rest_of_world[i];
  }
  const Series total_demand_series(grid, std::move(total));
  const double objective =
      reversed_objective(base.super_profit, params.m, grid.step());

  SweepResult result;
  for (int k : sorted_ks(spec)) {
    const double terminal = qk(k, spec);
    try {
      ReversedState rev =
          integrate_reversed(params, total_demand_series, terminal, grid, form);
      std::vector<double> forward_profile(n);
      for (std::size_t i = 0; i < n; ++i) {
        forward_profile[i] = rev.profile[n - 1 - i];
      }
      std::vector<double> ham(n);
      for (std::size_t i = 0; i < n; ++i) {
        const double price_i = detail::clamp_to_band(
            ctx.price[i], params.p0_base, ctx.epsilon_band);
        ham[i] = hamiltonian(forward_profile[i], base.demand[i],
                             base.costate[i], price_i, ctx.rest_of_world[i],
                             params);
      }
      Trajectory traj{grid,
                      Series(grid, std::move(forward_profile)),
                      base.costate,
                      base.demand,
                      base.super_profit,
                      Series(grid, std::move(ham))};
      result.entries.push_back(
          SweepEntry{k, terminal, std::move(traj), objective});
    } catch (const Error& e) {
      throw Error("terminal sweep entry k = " + std::to_string(k) + ": " +
                  e.what());
    }
  }
  return result;
}

} // namespace wade
