#pragma once

#include <vector>

#include "wade/pontryagin.hpp"

namespace wade {

enum class SweepMode { initial, terminal };

/// How an index k maps onto the [lo, hi] span.
enum class SweepIndexing {
  /// Weight k / (window_start + horizon): the window-end value is reached
  /// at k = window_start + horizon.
  absolute,
  /// Weight k / k_max: the window-end value is reached at k = k_max.
  normalized
};

/// A family of solves over reserve values interpolated between lo and hi.
struct SweepSpec {
  double window_start = 0.0; ///< t0, years
  double horizon = 1.0;      ///< h > 0, years
  double lo = 0.0;           ///< reserve value at the window start
  double hi = 0.0;           ///< reserve value at the window end
  std::vector<int> k_values;
  SweepMode mode = SweepMode::initial;
  SweepIndexing indexing = SweepIndexing::absolute;
  int k_max = 0; ///< declared top index; required by normalized indexing

  void validate() const;
};

/// Interpolated reserve value for index k:
///   absolute:   lo + (k / (t0 + h)) * (hi - lo)
///   normalized: lo + (k / k_max)    * (hi - lo)
/// Exact at the endpoints: qk(0) == lo and qk at the top index == hi.
double qk(int k, const SweepSpec& spec);

struct SweepEntry {
  int k;
  double start_value;    ///< qk(k): initial stock Q_k or terminal value R_T(k)
  Trajectory trajectory; ///< terminal-mode profiles are mapped to forward time
  double objective;      ///< trapezoid integral of S^m over the horizon
};

struct SweepResult {
  std::vector<SweepEntry> entries; ///< ordered by k
};

/// One forward solve per k with initial stock Q = qk(k).
SweepResult run_initial_sweep(const SweepSpec& spec, const ModelParams& params,
                              const PriceContext& ctx, const TimeGrid& grid,
                              BandPolicy policy = BandPolicy::reject);

/// One reversed solve per k with terminal value R_T = qk(k), against the
/// reflected price and demand series. The per-entry objective integrates
/// the reflected S^m by the trapezoid rule.
SweepResult run_terminal_sweep(const SweepSpec& spec, const ModelParams& params,
                               const PriceContext& ctx, const TimeGrid& grid,
                               ReversalForm form = ReversalForm::exact,
                               BandPolicy policy = BandPolicy::reject);

} // namespace wade
