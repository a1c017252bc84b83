#pragma once

#include <cstddef>
#include <vector>

#include "wade/errors.hpp"

namespace wade {

/// Constants of the super-profit control problem.
struct ModelParams {
  double alpha = 0.2;    ///< reserve growth rate, 1/year; must lie in [0, 1)
  int m = 2;             ///< objective exponent; integer >= 2
  double c0 = 0.2;       ///< costate scale constant
  double p0_base = 29.0; ///< win-win reference price, USD/barrel

  /// Throws std::invalid_argument if any field is out of its domain.
  void validate() const;
};

/// Uniform discretization of [t_start, t_end] into n_steps steps
/// (n_steps + 1 nodes).
struct TimeGrid {
  TimeGrid(double t_start, double t_end, int n_steps);

  double t_start;
  double t_end;
  int n_steps;

  double step() const { return (t_end - t_start) / n_steps; }
  std::size_t node_count() const {
    return static_cast<std::size_t>(n_steps) + 1;
  }
  /// Node i sits at t_start + i * step().
  double node(std::size_t i) const {
    return t_start + static_cast<double>(i) * step();
  }
  /// Time since the start of the grid at node i.
  double elapsed(std::size_t i) const {
    return static_cast<double>(i) * step();
  }

  bool operator==(const TimeGrid&) const = default;
};

TimeGrid make_grid(double t_start, double t_end, int n_steps);

/// One real value per grid node. Values are finite by construction;
/// treat instances as immutable once built.
struct Series {
  Series(TimeGrid grid, std::vector<double> values);

  TimeGrid grid;
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
  double operator[](std::size_t i) const { return values[i]; }

  /// Linear interpolation between nodes; t clamped to the grid span.
  double interp(double t) const;
};

Series constant_series(const TimeGrid& grid, double value);

/// World demand split into the non-producing countries' share a and the
/// rest-of-world share w; total demand is v = a + w.
struct DemandSplit {
  DemandSplit(Series nonproducer, Series rest_of_world);

  Series nonproducer;   ///< a, barrels/year
  Series rest_of_world; ///< w, barrels/year
};

/// Super profit S = (price - pivot) * quantity. Negative S means the price
/// sits below the win-win pivot (a super cost reversal).
double super_profit(double price, double quantity, double pivot);

Series super_profit_series(const Series& price, const Series& quantity,
                           double pivot);
Series super_profit_series(const Series& price, const Series& quantity,
                           const Series& pivot);

/// Pointwise v = a + w on the shared grid.
Series total_demand(const DemandSplit& split);

namespace detail {
/// Throws GridMismatchError unless the two grids are identical.
void require_same_grid(const TimeGrid& a, const TimeGrid& b, const char* what);
} // namespace detail

} // namespace wade
