#include "wade/data_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>

namespace wade {

namespace {

bool parse_full_int(std::string_view text, int& out) {
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

bool parse_full_double(std::string_view text, double& out) {
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') {
    line.remove_suffix(1);
  }
  return line;
}

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

} // namespace

std::vector<AnnualRecord> load_annual_csv(std::istream& in) {
  std::vector<AnnualRecord> records;
  std::string raw;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = strip_cr(raw);
    if (is_blank(line) || line.front() == '#') {
      continue;
    }
    if (!header_seen) {
      if (line != "year,value") {
        throw CsvError("expected header 'year,value', got '" +
                           std::string(line) + "'",
                       line_no);
      }
      header_seen = true;
      continue;
    }
    const std::size_t comma = line.find(',');
    if (comma == std::string_view::npos ||
        line.find(',', comma + 1) != std::string_view::npos) {
      throw CsvError("expected exactly two fields", line_no);
    }
    int year = 0;
    if (!parse_full_int(line.substr(0, comma), year)) {
      throw CsvError("bad year '" + std::string(line.substr(0, comma)) + "'",
                     line_no);
    }
    double value = 0.0;
    if (!parse_full_double(line.substr(comma + 1), value)) {
      throw CsvError("bad value '" + std::string(line.substr(comma + 1)) + "'",
                     line_no);
    }
    if (!std::isfinite(value)) {
      throw CsvError("non-finite value", line_no);
    }
    if (!records.empty()) {
      if (records.back().year == year) {
        throw DuplicateYearError(year, line_no);
      }
      if (records.back().year > year) {
        throw CsvError("years not strictly increasing", line_no);
      }
    }
    records.push_back(AnnualRecord{year, value});
  }
  if (!header_seen) {
    throw CsvError("missing 'year,value' header", line_no);
  }
  return records;
}

std::vector<AnnualRecord> load_annual_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw CsvError("cannot open '" + path + "'", 0);
  }
  return load_annual_csv(in);
}

Series resample(const std::vector<AnnualRecord>& records, const TimeGrid& grid,
                ResampleMode mode) {
  if (records.empty()) {
    throw std::invalid_argument("resample: no records");
  }
  const double first = records.front().year;
  const double last = records.back().year;
  if (grid.t_start < first || grid.t_end >= last + 1.0) {
    throw std::invalid_argument(
        "resample: grid spans [" + std::to_string(grid.t_start) + ", " +
        std::to_string(grid.t_end) + "], outside the data span [" +
        std::to_string(records.front().year) + ", " +
        std::to_string(records.back().year + 1) + ")");
  }
  std::vector<double> values(grid.node_count());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double t = grid.node(i);
    // index of the last record with year <= t
    auto it = std::upper_bound(
        records.begin(), records.end(), t,
        [](double lhs, const AnnualRecord& r) { return lhs < r.year; });
    const std::size_t idx = static_cast<std::size_t>(it - records.begin()) - 1;
    if (mode == ResampleMode::step) {
      values[i] = records[idx].value;
    } else {
      if (idx + 1 >= records.size()) {
        values[i] = records.back().value;
      } else {
        const AnnualRecord& a = records[idx];
        const AnnualRecord& b = records[idx + 1];
        const double frac = (t - a.year) / (b.year - a.year);
        values[i] = std::lerp(a.value, b.value, frac);
      }
    }
  }
  return Series(grid, std::move(values));
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, ptr);
}

std::string format_double(double v, int significant_digits) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v,
                                 std::chars_format::general,
                                 significant_digits);
  (void)ec;
  return std::string(buf, ptr);
}

namespace {

void write_trajectory_row(const Trajectory& traj, std::size_t i,
                          std::ostream& out) {
  out << format_double(traj.grid.node(i)) << ','
      << format_double(traj.reserves[i]) << ','
      << format_double(traj.costate[i]) << ','
      << format_double(traj.demand[i]) << ','
      << format_double(traj.super_profit[i]) << ','
      << format_double(traj.hamiltonian[i]) << '\n';
}

} // namespace

void write_trajectory_csv(const Trajectory& traj, std::ostream& out) {
  out << "t,R,lambda,a_star,S,H\n";
  for (std::size_t i = 0; i < traj.grid.node_count(); ++i) {
    write_trajectory_row(traj, i, out);
  }
}

void write_sweep_csv(const SweepResult& sweep, std::ostream& out) {
  out << "k,t,R,lambda,a_star,S,H\n";
  for (const SweepEntry& entry : sweep.entries) {
    for (std::size_t i = 0; i < entry.trajectory.grid.node_count(); ++i) {
      out << entry.k << ',';
      write_trajectory_row(entry.trajectory, i, out);
    }
  }
}

PlotSeries to_plot_series(const Series& series, std::string label) {
  PlotSeries ps;
  ps.label = std::move(label);
  ps.x.resize(series.size());
  ps.y = series.values;
  for (std::size_t i = 0; i < ps.x.size(); ++i) {
    ps.x[i] = series.grid.node(i);
  }
  return ps;
}

} // namespace wade
