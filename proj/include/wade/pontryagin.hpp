#pragma once

#include "wade/dynamics.hpp"
#include "wade/model.hpp"

namespace wade {

/// Half-width of the exclusion zone around the pivot price. The optimal
/// demand scales like (p - p0)^(-2), so prices inside the band are either
/// rejected or clamped to its edge.
inline constexpr double kDefaultEpsilonBand = 0.5;

/// Price and rest-of-world demand inputs for a control solve.
struct PriceContext {
  PriceContext(Series price, Series rest_of_world,
               double epsilon_band = kDefaultEpsilonBand);

  Series price;         ///< p(t), USD/barrel
  Series rest_of_world; ///< w(t), barrels/year
  double epsilon_band;  ///< exclusion half-width, USD/barrel; > 0
};

/// What to do with a price that falls inside the epsilon band.
enum class BandPolicy {
  reject, ///< raise SingularPriceError naming the offending node
  clip    ///< clamp the price to the nearer band edge
};

enum class GradientMode { exact, finite_difference };

/// Joint solution paths of one control solve. All series share the grid;
/// S = (p - p0) * a_star holds pointwise and the costate follows its
/// closed form.
struct Trajectory {
  TimeGrid grid;
  Series reserves;     ///< R, barrels
  Series costate;      ///< lambda
  Series demand;       ///< a*, barrels/year
  Series super_profit; ///< S, USD/year
  Series hamiltonian;  ///< H along the trajectory
};

/// H = S^m + lambda * (-(a + w) + alpha * R) with S = (p - p0) * a.
double hamiltonian(double reserves, double demand, double costate,
                   double price, double rest_of_world,
                   const ModelParams& params);

/// Exact control derivative dH/da = m * S^(m-1) * (p - p0) - lambda.
double hamiltonian_demand_gradient(double demand, double costate, double price,
                                   const ModelParams& params);

/// Centered finite-difference of H in the control, for cross-checking the
/// exact derivative.
double hamiltonian_demand_gradient_fd(double reserves, double demand,
                                      double costate, double price,
                                      double rest_of_world,
                                      const ModelParams& params, double step);

/// Stationary super profit S = (lambda / (m (p - p0)))^(1/(m-1)).
/// Odd roots of negative radicands return the signed real root; even roots
/// raise NonRealRootError.
double optimal_superprofit(double costate, double price,
                           const ModelParams& params,
                           double epsilon_band = kDefaultEpsilonBand);

/// Demand of the non-producing countries that makes the Hamiltonian
/// stationary: a* = S* / (p - p0); for m = 2 this is
/// c0 * exp(-alpha t) / (2 (p - p0)^2). t counts from the problem start.
double optimal_demand(double t, double price, const ModelParams& params,
                      double epsilon_band = kDefaultEpsilonBand);

/// Inverts the m = 2 demand formula at t0 so that
/// optimal_demand(t0, price_at_t0) reproduces the observed demand:
/// c0 = 2 * a_obs * (p - p0)^2 * exp(alpha * t0).
double calibrate_c0(double observed_demand, double price_at_t0, double t0,
                    const ModelParams& params,
                    double epsilon_band = kDefaultEpsilonBand);

/// Full solve: costate closed form, stationary demand per node,
/// S = (p - p0) a*, total demand a* + w, reserves integration, and the
/// Hamiltonian recorded along the way. An optional pivot series replaces
/// the constant params.p0_base node by node.
Trajectory solve_pmp(const ModelParams& params, const PriceContext& ctx,
                     double initial_stock, const TimeGrid& grid,
                     BandPolicy policy = BandPolicy::reject,
                     const Series* pivot = nullptr);

/// Max over nodes of |m S^(m-1) (p - p0) - lambda| along a trajectory.
/// Prices inside the band are evaluated at the clamped value, matching the
/// clip policy. finite_difference mode replaces the exact derivative with
/// a centered difference of H in the control.
double stationarity_residual(const Trajectory& traj, const PriceContext& ctx,
                             const ModelParams& params,
                             GradientMode mode = GradientMode::exact,
                             const Series* pivot = nullptr);

/// Trapezoid integral of S^m over the trajectory grid.
double trajectory_objective(const Trajectory& traj, const ModelParams& params);

/// Running trapezoid integral of S^m, one value per node (first node 0).
Series cumulative_objective(const Trajectory& traj, const ModelParams& params);

namespace detail {
/// x^n for small non-negative integer n, by repeated multiplication.
double ipow(double x, int n);
/// Clamps a price inside the band to the nearer band edge (identity
/// outside the band); prices at the pivot move to the upper edge.
double clamp_to_band(double price, double pivot, double band);
} // namespace detail

} // namespace wade
