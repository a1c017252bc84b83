#pragma once

#include "wade/model.hpp"

namespace wade {

/// Reserve path R(t) from a forward integration; R(t_start) = Q.
struct ReservesState {
  double initial_stock; ///< Q, barrels
  Series reserves;      ///< R on the forward grid
};

/// Reserve profile Y(s) in reversed time s = T - t; Y(0) = R_T.
struct ReversedState {
  double terminal_value; ///< R_T, barrels
  Series profile;        ///< Y on the grid s in [0, t_end - t_start]
};

enum class CostateMethod {
  closed_form, ///< lambda(t) = c0 * exp(-alpha * (t - t_start))
  numeric      ///< fixed-step integration of lambda' = -alpha * lambda
};

/// How the reversed reserves problem treats the dynamic law.
enum class ReversalForm {
  /// True change of variables: dY/ds = +v(T-s) - alpha * Y. Reversing a
  /// forward solution reproduces it, Y(s) = R(T-s).
  exact,
  /// The reversed problem re-posed under the forward law against the
  /// reflected demand: dY/ds = -v(T-s) + alpha * Y.
  forward_law
};

/// Classical fixed-step 4th-order integration of the scalar linear ODE
/// dy/dt = forcing(t) + rate(t) * y, with forcing and rate sampled on the
/// grid nodes and linearly interpolated at half steps.
Series integrate_linear_scalar_ode(const Series& forcing, const Series& rate,
                                   double y0);

/// Integrates dR/dt = -v(t) + alpha * R(t) with R(t_start) = Q.
/// The optional alpha series overrides the constant params.alpha.
ReservesState integrate_reserves(const ModelParams& params,
                                 const Series& demand, double initial_stock,
                                 const TimeGrid& grid,
                                 const Series* alpha_series = nullptr);

/// Costate lambda(t) on the grid. Closed form by default; the numeric
/// method re-derives it from lambda' = -alpha * lambda as a cross-check.
Series integrate_costate(const ModelParams& params, const TimeGrid& grid,
                         CostateMethod method = CostateMethod::closed_form,
                         const Series* alpha_series = nullptr);

/// Integrates the reversed reserves problem on s in [0, t_end - t_start]
/// with Y(0) = R_T. The demand series is given on the forward grid and is
/// reflected internally.
ReversedState integrate_reversed(const ModelParams& params,
                                 const Series& demand, double terminal_value,
                                 const TimeGrid& grid,
                                 ReversalForm form = ReversalForm::exact,
                                 const Series* alpha_series = nullptr);

} // namespace wade
