#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "wade/model.hpp"
#include "wade/pontryagin.hpp"
#include "wade/sweeps.hpp"

namespace wade {

/// One annual observation: USD/barrel for prices, barrels/year for demand,
/// barrels for reserves.
struct AnnualRecord {
  int year;
  double value;
};

/// Parses `year,value` CSV: UTF-8, LF or CRLF, a mandatory header line,
/// optional comment lines starting with '#'. Years must be strictly
/// increasing and values finite.
std::vector<AnnualRecord> load_annual_csv(std::istream& in);
std::vector<AnnualRecord> load_annual_csv_file(const std::string& path);

enum class ResampleMode {
  step,  ///< each annual value held constant over its year
  linear ///< linear interpolation between the annual values
};

/// Samples the records onto the grid. The grid must lie inside the span
/// covered by the records (each record covers [year, year + 1)).
Series resample(const std::vector<AnnualRecord>& records, const TimeGrid& grid,
                ResampleMode mode);

/// Columns t,R,lambda,a_star,S,H; one row per node. Values are written in
/// the shortest decimal form that parses back to the identical double.
void write_trajectory_csv(const Trajectory& traj, std::ostream& out);

/// Same columns prefixed by k; entries concatenated in k order.
void write_sweep_csv(const SweepResult& sweep, std::ostream& out);

/// Shortest decimal representation that round-trips to the same double.
std::string format_double(double v);
/// Fixed number of significant digits (general format).
std::string format_double(double v, int significant_digits);

struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

/// Reference line across the plot area with a caption, like the crisis
/// price levels drawn on the historical charts.
struct MarkerLine {
  enum class Axis { horizontal, vertical };
  Axis axis = Axis::horizontal;
  double value = 0.0;
  std::string caption;
};

struct PlotSpec {
  std::string x_label;
  std::string y_label;
  std::vector<PlotSeries> series;
  std::vector<MarkerLine> markers;
};

/// Standalone SVG 1.1 document; coordinates carry 6 significant digits and
/// the byte output is identical for identical input.
void write_svg_plot(const PlotSpec& spec, std::ostream& out);

PlotSeries to_plot_series(const Series& series, std::string label);

} // namespace wade
