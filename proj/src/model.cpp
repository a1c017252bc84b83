#include "wade/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace wade {

void ModelParams::validate() const {
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("ModelParams: alpha must lie in [0, 1), got " +
                                std::to_string(alpha));
  }
  if (m < 2) {
    throw std::invalid_argument(
        "ModelParams: m must be an integer >= 2, got " + std::to_string(m));
  }
  if (!(p0_base > 0.0) || !std::isfinite(p0_base)) {
    throw std::invalid_argument("ModelParams: p0_base must be positive");
  }
  if (!std::isfinite(c0)) {
    throw std::invalid_argument("ModelParams: c0 must be finite");
  }
}

TimeGrid::TimeGrid(double t_start_, double t_end_, int n_steps_)
    : t_start(t_start_), t_end(t_end_), n_steps(n_steps_) {
  if (!std::isfinite(t_start) || !std::isfinite(t_end)) {
    throw std::invalid_argument("TimeGrid: endpoints must be finite");
  }
  if (!(t_end > t_start)) {
    throw std::invalid_argument("TimeGrid: t_end must exceed t_start");
  }
  if (n_steps < 1) {
    throw std::invalid_argument("TimeGrid: n_steps must be >= 1");
  }
}

TimeGrid make_grid(double t_start, double t_end, int n_steps) {
  return TimeGrid(t_start, t_end, n_steps);
}

Series::Series(TimeGrid grid_, std::vector<double> values_)
    : grid(grid_), values(std::move(values_)) {
  if (values.size() != grid.node_count()) {
    throw std::invalid_argument(
        "Series: expected " + std::to_string(grid.node_count()) +
        " values, got " + std::to_string(values.size()));
  }
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("Series: values must be finite");
    }
  }
}

double Series::interp(double t) const {
  const double h = grid.step();
  double u = (t - grid.t_start) / h;
  if (u <= 0.0) return values.front();
  if (u >= static_cast<double>(grid.n_steps)) return values.back();
  const auto i = static_cast<std::size_t>(u);
  const double frac = u - static_cast<double>(i);
  return values[i] * (1.0 - frac) + values[i + 1] * frac;
}

Series constant_series(const TimeGrid& grid, double value) {
  return Series(grid, std::vector<double>(grid.node_count(), value));
}

DemandSplit::DemandSplit(Series nonproducer_, Series rest_of_world_)
    : nonproducer(std::move(nonproducer_)),
      rest_of_world(std::move(rest_of_world_)) {
  detail::require_same_grid(nonproducer.grid, rest_of_world.grid,
                            "DemandSplit");
}

double super_profit(double price, double quantity, double pivot) {
  if (!std::isfinite(price) || !std::isfinite(quantity) ||
      !std::isfinite(pivot)) {
    throw std::invalid_argument("super_profit: inputs must be finite");
  }
  if (quantity < 0.0) {
    throw std::invalid_argument("super_profit: quantity must be >= 0");
  }
  return (price - pivot) * quantity;
}

Series super_profit_series(const Series& price, const Series& quantity,
                           double pivot) {
  detail::require_same_grid(price.grid, quantity.grid, "super_profit_series");
  std::vector<double> s(price.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    s[i] = super_profit(price[i], quantity[i], pivot);
  }
  return Series(price.grid, std::move(s));
}

Series super_profit_series(const Series& price, const Series& quantity,
                           const Series& pivot) {
  detail::require_same_grid(price.grid, quantity.grid, "super_profit_series");
  detail::require_same_grid(price.grid, pivot.grid, "super_profit_series");
  std::vector<double> s(price.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    s[i] = super_profit(price[i], quantity[i], pivot[i]);
  }
  return Series(price.grid, std::move(s));
}

Series total_demand(const DemandSplit& split) {
  const Series& a = split.nonproducer;
  const Series& w = split.rest_of_world;
  std::vector<double> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = a[i] + w[i];
  }
  return Series(a.grid, std::move(v));
}

namespace detail {

void require_same_grid(const TimeGrid& a, const TimeGrid& b,
                       const char* what) {
  if (!(a == b)) {
    throw GridMismatchError(std::string(what) +
                            ": series do not share a grid");
  }
}

} // namespace detail

} // namespace wade
