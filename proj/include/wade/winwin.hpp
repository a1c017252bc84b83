#pragma once

#include <functional>
#include <string>

#include "wade/model.hpp"

namespace wade {

/// Inputs for evolving the win-win reference price P0(t).
struct WinWinParams {
  WinWinParams(double depreciation_rate, double reasonable_profit,
               Series investment,
               std::function<double(double)> investment_response);

  double depreciation_rate; ///< mu, 1/year; in [0, 1)
  double reasonable_profit; ///< pr, USD/barrel; >= 0
  Series investment;        ///< i(t), USD/barrel
  /// f: response of the reference price to investment; left open by the
  /// model, so callers plug in their own (see make_investment_response).
  std::function<double(double)> investment_response;
};

/// Named investment-response choices:
///   "linear"     f(i) = parameter * i
///   "saturating" f(i) = parameter * i / (1 + i)
///   "constant"   f(i) = parameter
std::function<double(double)> make_investment_response(const std::string& name,
                                                       double parameter);

/// Fixed-step 4th-order integration of dP0/dt = f(i(t)) - mu * P0(t).
/// The result is usable as a time-varying pivot by the rest of the model.
Series evolve_winwin_price(const WinWinParams& ww, double initial_price,
                           const TimeGrid& grid);

/// Residual of the win-win identity, P0(t) - i(t) - pr, per node. The model
/// asserts the identity; this measures how far a given P0 is from it.
Series winwin_consistency(const Series& pivot, const WinWinParams& ww);

} // namespace wade
