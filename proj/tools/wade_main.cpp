// wade: command-line front end for the super-profit control model.
//
// Subcommands compose the library into reproducible runs: every command
// writes its artifacts plus a manifest.txt (flat key=value, no timestamps)
// into one output directory, so identical invocations produce identical
// bytes.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "wade/data_io.hpp"
#include "wade/dynamics.hpp"
#include "wade/model.hpp"
#include "wade/pontryagin.hpp"
#include "wade/sweeps.hpp"
#include "wade/winwin.hpp"

namespace {

struct RunConfig {
  // model parameters
  double alpha = 0.2;
  int m = 2;
  double c0 = 0.2;
  double p0 = 29.0;
  double epsilon_band = wade::kDefaultEpsilonBand;
  bool clip = false;
  std::vector<double> calibrate; // observed demand, year

  // run plumbing
  std::string grid_spec;
  std::string out_dir;
  bool plot = false;

  // inputs
  std::string prices_path;
  std::string synthetic_price; // LO:HI ramp over the grid
  std::string quantity_path;
  double quantity_const = 1.0;
  std::string w_path;
  double w_const = 0.0;
  double initial_stock = 100.0;

  // sweep
  std::string sweep_mode = "initial";
  double sweep_lo = 0.0;
  double sweep_hi = 0.0;
  std::vector<int> k_values;
  double window_start = 0.0;
  double horizon = 0.0; // 0 = whole grid span
  std::string indexing = "absolute";
  int k_max = 0;
  bool roundtrip = false;
  std::string reversal = "exact";

  // winwin
  double mu = 0.1;
  double pr = 0.0;
  std::string investment_path;
  double investment_const = 0.0;
  std::string response_name = "linear";
  double response_param = 1.0;
  double p0_init = 29.0;
  bool chain_optimal = false;
};

using Manifest = std::map<std::string, std::string>;

void put(Manifest& m, const std::string& key, double v) {
  m[key] = wade::format_double(v);
}
void put(Manifest& m, const std::string& key, int v) {
  m[key] = std::to_string(v);
}
void put(Manifest& m, const std::string& key, bool v) {
  m[key] = v ? "true" : "false";
}
void put(Manifest& m, const std::string& key, const std::string& v) {
  m[key] = v;
}

double parse_double(const std::string& text, const char* what) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end || !std::isfinite(v)) {
    throw std::invalid_argument(std::string(what) + ": bad number '" + text +
                                "'");
  }
  return v;
}

int parse_int(const std::string& text, const char* what) {
  int v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    throw std::invalid_argument(std::string(what) + ": bad integer '" + text +
                                "'");
  }
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = text.find(sep, pos);
    if (next == std::string::npos) {
      parts.push_back(text.substr(pos));
      return parts;
    }
    parts.push_back(text.substr(pos, next - pos));
    pos = next + 1;
  }
}

wade::TimeGrid parse_grid_spec(const std::string& text) {
  const std::vector<std::string> parts = split(text, ':');
  if (parts.size() != 3) {
    throw std::invalid_argument("--grid expects START:END:STEPS, got '" +
                                text + "'");
  }
  return wade::TimeGrid(parse_double(parts[0], "--grid START"),
                        parse_double(parts[1], "--grid END"),
                        parse_int(parts[2], "--grid STEPS"));
}

std::pair<double, double> parse_range(const std::string& text,
                                      const char* what) {
  const std::vector<std::string> parts = split(text, ':');
  if (parts.size() != 2) {
    throw std::invalid_argument(std::string(what) + " expects LO:HI, got '" +
                                text + "'");
  }
  return {parse_double(parts[0], what), parse_double(parts[1], what)};
}

// Yearly grid spanning the records; each record covers [year, year + 1).
wade::TimeGrid grid_from_records(const std::vector<wade::AnnualRecord>& recs) {
  if (recs.size() < 2) {
    throw std::invalid_argument(
        "the input covers fewer than two years; pass --grid START:END:STEPS");
  }
  const int first = recs.front().year;
  const int last = recs.back().year;
  return wade::TimeGrid(first, last, last - first);
}

std::filesystem::path resolve_out_dir(const RunConfig& cfg,
                                      const std::string& command) {
  std::filesystem::path dir;
  if (!cfg.out_dir.empty()) {
    dir = cfg.out_dir;
  } else if (const char* env = std::getenv("WADE_OUT_DIR")) {
    dir = std::filesystem::path(env) / command;
  } else {
    dir = std::filesystem::path("wade_out") / command;
  }
  std::filesystem::create_directories(dir);
  return dir;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out.is_open()) {
    throw wade::Error("cannot write " + path.string());
  }
  return out;
}

void write_manifest(const Manifest& manifest,
                    const std::filesystem::path& dir) {
  std::ofstream out = open_output(dir / "manifest.txt");
  for (const auto& [key, value] : manifest) {
    out << key << '=' << value << '\n';
  }
}

void write_plot(const wade::PlotSpec& spec, const std::filesystem::path& dir,
                const std::string& name) {
  std::ofstream out = open_output(dir / name);
  wade::write_svg_plot(spec, out);
}

wade::ModelParams make_params(const RunConfig& cfg) {
  wade::ModelParams params;
  params.alpha = cfg.alpha;
  params.m = cfg.m;
  params.c0 = cfg.c0;
  params.p0_base = cfg.p0;
  params.validate();
  return params;
}

wade::BandPolicy band_policy(const RunConfig& cfg) {
  return cfg.clip ? wade::BandPolicy::clip : wade::BandPolicy::reject;
}

void record_model(Manifest& manifest, const wade::ModelParams& params,
                  const RunConfig& cfg, const wade::TimeGrid& grid) {
  put(manifest, "alpha", params.alpha);
  put(manifest, "m", params.m);
  put(manifest, "c0", params.c0);
  put(manifest, "c0_mode",
      std::string(cfg.calibrate.empty() ? "explicit" : "calibrated"));
  put(manifest, "p0", params.p0_base);
  put(manifest, "epsilon_band", cfg.epsilon_band);
  put(manifest, "band_policy", std::string(cfg.clip ? "clip" : "reject"));
  put(manifest, "grid.t_start", grid.t_start);
  put(manifest, "grid.t_end", grid.t_end);
  put(manifest, "grid.n_steps", grid.n_steps);
  put(manifest, "plot", cfg.plot);
}

// Price input: annual CSV held stepwise (a posted price stands for its
// year), or a synthetic LO:HI ramp across the grid nodes.
struct PriceInput {
  wade::TimeGrid grid;
  wade::Series price;
};

PriceInput load_price_input(const RunConfig& cfg, Manifest& manifest) {
  if (!cfg.prices_path.empty()) {
    const auto records = wade::load_annual_csv_file(cfg.prices_path);
    const wade::TimeGrid grid = cfg.grid_spec.empty()
                                    ? grid_from_records(records)
                                    : parse_grid_spec(cfg.grid_spec);
    put(manifest, "prices", cfg.prices_path);
    return {grid, wade::resample(records, grid, wade::ResampleMode::step)};
  }
  if (!cfg.synthetic_price.empty()) {
    if (cfg.grid_spec.empty()) {
      throw std::invalid_argument("--synthetic-price requires --grid");
    }
    const wade::TimeGrid grid = parse_grid_spec(cfg.grid_spec);
    const auto [lo, hi] = parse_range(cfg.synthetic_price, "--synthetic-price");
    std::vector<double> values(grid.node_count());
    for (std::size_t i = 0; i < values.size(); ++i) {
      values[i] = std::lerp(
          lo, hi, static_cast<double>(i) / static_cast<double>(grid.n_steps));
    }
    put(manifest, "synthetic_price", cfg.synthetic_price);
    return {grid, wade::Series(grid, std::move(values))};
  }
  throw std::invalid_argument("pass --prices FILE or --synthetic-price LO:HI");
}

wade::Series load_rest_of_world(const RunConfig& cfg,
                                const wade::TimeGrid& grid,
                                Manifest& manifest) {
  if (!cfg.w_path.empty()) {
    const auto records = wade::load_annual_csv_file(cfg.w_path);
    put(manifest, "w", cfg.w_path);
    return wade::resample(records, grid, wade::ResampleMode::linear);
  }
  put(manifest, "w_const", cfg.w_const);
  return wade::constant_series(grid, cfg.w_const);
}

// Resolves the c0 mode: --calibrate OBSERVED_DEMAND YEAR inverts the m = 2
// demand formula against the price input at that year.
void apply_calibration(wade::ModelParams& params, const RunConfig& cfg,
                       const PriceInput& input, Manifest& manifest) {
  if (cfg.calibrate.empty()) {
    return;
  }
  const double observed = cfg.calibrate[0];
  const double year = cfg.calibrate[1];
  const double t0 = year - input.grid.t_start;
  params.c0 = wade::calibrate_c0(observed, input.price.interp(year), t0,
                                 params, cfg.epsilon_band);
  put(manifest, "c0", params.c0);
  put(manifest, "calibrate.observed_demand", observed);
  put(manifest, "calibrate.year", year);
}

const std::vector<wade::MarkerLine> kCrisisMarkers = {
    {wade::MarkerLine::Axis::horizontal, 146.0, "subprime crisis peak"},
    {wade::MarkerLine::Axis::horizontal, 124.0, "Russo-Ukrainian war peak"},
    {wade::MarkerLine::Axis::horizontal, 85.0, "covid-19 pre-war high"},
};

void cmd_superprofit(const RunConfig& cfg) {
  Manifest manifest;
  put(manifest, "command", std::string("superprofit"));
  const wade::ModelParams params = make_params(cfg);

  const auto records = wade::load_annual_csv_file(cfg.prices_path);
  const wade::TimeGrid grid = cfg.grid_spec.empty()
                                  ? grid_from_records(records)
                                  : parse_grid_spec(cfg.grid_spec);
  const wade::Series price =
      wade::resample(records, grid, wade::ResampleMode::step);
  put(manifest, "prices", cfg.prices_path);

  wade::Series quantity = wade::constant_series(grid, cfg.quantity_const);
  if (!cfg.quantity_path.empty()) {
    const auto qrecords = wade::load_annual_csv_file(cfg.quantity_path);
    quantity = wade::resample(qrecords, grid, wade::ResampleMode::linear);
    put(manifest, "quantity", cfg.quantity_path);
  } else {
    put(manifest, "quantity_const", cfg.quantity_const);
  }

  const wade::Series profit =
      wade::super_profit_series(price, quantity, params.p0_base);

  const std::filesystem::path dir = resolve_out_dir(cfg, "superprofit");
  {
    std::ofstream out = open_output(dir / "super_profit.csv");
    out << "t,price,quantity,super_profit\n";
    for (std::size_t i = 0; i < profit.size(); ++i) {
      out << wade::format_double(grid.node(i)) << ','
          << wade::format_double(price[i]) << ','
          << wade::format_double(quantity[i]) << ','
          << wade::format_double(profit[i]) << '\n';
    }
  }

  if (cfg.plot) {
    wade::PlotSpec spec;
    spec.x_label = "t (years)";
    spec.y_label = "S (USD/year)";
    spec.series.push_back(wade::to_plot_series(profit, "S"));
    spec.markers.push_back(
        {wade::MarkerLine::Axis::horizontal, 0.0, "break-even"});
    write_plot(spec, dir, "super_profit.svg");

    wade::PlotSpec pspec;
    pspec.x_label = "t (years)";
    pspec.y_label = "p (USD/barrel)";
    pspec.series.push_back(wade::to_plot_series(price, "p"));
    pspec.markers = kCrisisMarkers;
    write_plot(pspec, dir, "price.svg");
  }

  record_model(manifest, params, cfg, grid);
  put(manifest, "out_dir", dir.string());
  write_manifest(manifest, dir);
}

void cmd_optimal(const RunConfig& cfg) {
  Manifest manifest;
  put(manifest, "command", std::string("optimal"));
  wade::ModelParams params = make_params(cfg);

  const PriceInput input = load_price_input(cfg, manifest);
  const wade::Series w = load_rest_of_world(cfg, input.grid, manifest);
  apply_calibration(params, cfg, input, manifest);

  const wade::PriceContext ctx(input.price, w, cfg.epsilon_band);
  const wade::Trajectory traj = wade::solve_pmp(
      params, ctx, cfg.initial_stock, input.grid, band_policy(cfg));
  put(manifest, "initial_stock", cfg.initial_stock);

  const std::filesystem::path dir = resolve_out_dir(cfg, "optimal");
  {
    std::ofstream out = open_output(dir / "trajectory.csv");
    wade::write_trajectory_csv(traj, out);
  }

  // Demand-vs-price section at t = t_start, over the observed price values.
  std::vector<std::pair<double, double>> section;
  section.reserve(input.price.size());
  for (std::size_t i = 0; i < input.price.size(); ++i) {
    double p = input.price[i];
    if (std::abs(p - params.p0_base) <= cfg.epsilon_band) {
      if (!cfg.clip) {
        continue; // unreachable after a reject-mode solve
      }
      p = wade::detail::clamp_to_band(p, params.p0_base, cfg.epsilon_band);
    }
    section.emplace_back(p,
                         wade::optimal_demand(0.0, p, params, cfg.epsilon_band));
  }
  std::stable_sort(section.begin(), section.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  {
    std::ofstream out = open_output(dir / "a_star_vs_price.csv");
    out << "p,a_star\n";
    for (const auto& [p, a] : section) {
      out << wade::format_double(p) << ',' << wade::format_double(a) << '\n';
    }
  }

  const wade::Series objective = wade::cumulative_objective(traj, params);
  {
    std::ofstream out = open_output(dir / "objective.csv");
    out << "t,J\n";
    for (std::size_t i = 0; i < objective.size(); ++i) {
      out << wade::format_double(input.grid.node(i)) << ','
          << wade::format_double(objective[i]) << '\n';
    }
  }

  if (cfg.plot) {
    wade::PlotSpec pspec;
    pspec.x_label = "t (years)";
    pspec.y_label = "p (USD/barrel)";
    pspec.series.push_back(wade::to_plot_series(input.price, "p"));
    pspec.markers = kCrisisMarkers;
    write_plot(pspec, dir, "price.svg");

    wade::PlotSpec rspec;
    rspec.x_label = "t (years)";
    rspec.y_label = "R (barrels)";
    rspec.series.push_back(wade::to_plot_series(traj.reserves, "R"));
    write_plot(rspec, dir, "reserves.svg");

    if (!section.empty()) {
      wade::PlotSpec aspec;
      aspec.x_label = "p (USD/barrel)";
      aspec.y_label = "a* (barrels/year)";
      wade::PlotSeries s;
      s.label = "a*";
      for (const auto& [p, a] : section) {
        s.x.push_back(p);
        s.y.push_back(a);
      }
      aspec.series.push_back(std::move(s));
      write_plot(aspec, dir, "a_star_vs_price.svg");
    }

    wade::PlotSpec ospec;
    ospec.x_label = "t (years)";
    ospec.y_label = "J";
    ospec.series.push_back(wade::to_plot_series(objective, "J"));
    write_plot(ospec, dir, "objective.svg");
  }

  record_model(manifest, params, cfg, input.grid);
  put(manifest, "out_dir", dir.string());
  write_manifest(manifest, dir);
}

void cmd_sweep(const RunConfig& cfg) {
  Manifest manifest;
  put(manifest, "command", std::string("sweep"));
  wade::ModelParams params = make_params(cfg);

  const PriceInput input = load_price_input(cfg, manifest);
  const wade::Series w = load_rest_of_world(cfg, input.grid, manifest);
  apply_calibration(params, cfg, input, manifest);
  const wade::PriceContext ctx(input.price, w, cfg.epsilon_band);

  wade::SweepSpec spec;
  spec.window_start = cfg.window_start;
  spec.horizon = cfg.horizon > 0.0 ? cfg.horizon
                                   : input.grid.t_end - input.grid.t_start;
  spec.lo = cfg.sweep_lo;
  spec.hi = cfg.sweep_hi;
  spec.k_values = cfg.k_values;
  spec.mode = cfg.sweep_mode == "terminal" ? wade::SweepMode::terminal
                                           : wade::SweepMode::initial;
  spec.indexing = cfg.indexing == "normalized" ? wade::SweepIndexing::normalized
                                               : wade::SweepIndexing::absolute;
  spec.k_max = cfg.k_max;
  spec.validate();

  const wade::ReversalForm form = cfg.reversal == "forward-law"
                                      ? wade::ReversalForm::forward_law
                                      : wade::ReversalForm::exact;

  const wade::SweepResult result =
      spec.mode == wade::SweepMode::initial
          ? wade::run_initial_sweep(spec, params, ctx, input.grid,
                                    band_policy(cfg))
          : wade::run_terminal_sweep(spec, params, ctx, input.grid, form,
                                     band_policy(cfg));

  const std::filesystem::path dir = resolve_out_dir(cfg, "sweep");
  {
    std::ofstream out = open_output(dir / "sweep.csv");
    wade::write_sweep_csv(result, out);
  }
  {
    std::ofstream out = open_output(dir / "sweep_summary.csv");
    out << "k,start_value,objective\n";
    for (const wade::SweepEntry& entry : result.entries) {
      out << entry.k << ',' << wade::format_double(entry.start_value) << ','
          << wade::format_double(entry.objective) << '\n';
    }
  }

  if (cfg.roundtrip) {
    if (spec.mode != wade::SweepMode::terminal) {
      throw std::invalid_argument("--roundtrip requires --mode terminal");
    }
    // Forward solve, then reverse from its endpoint: the reversed profile
    // must retrace the forward path node for node.
    const wade::Trajectory traj = wade::solve_pmp(
        params, ctx, cfg.initial_stock, input.grid, band_policy(cfg));
    std::vector<double> total(traj.demand.size());
    for (std::size_t i = 0; i < total.size(); ++i) {
      total[i] = traj.demand[i] + w[i];
    }
    const wade::Series v(input.grid, std::move(total));
    const wade::ReversedState rev = wade::integrate_reversed(
        params, v, traj.reserves.values.back(), input.grid, form);
    double max_rel = 0.0;
    const std::size_t n = traj.reserves.size();
    for (std::size_t j = 0; j < n; ++j) {
      const double ref = traj.reserves[n - 1 - j];
      const double rel =
          std::abs(rev.profile[j] - ref) / std::max(1.0, std::abs(ref));
      max_rel = std::max(max_rel, rel);
    }
    std::cout << "roundtrip_max_rel_error=" << wade::format_double(max_rel)
              << '\n';
    put(manifest, "roundtrip_max_rel_error", max_rel);
    put(manifest, "initial_stock", cfg.initial_stock);
  }

  if (cfg.plot) {
    wade::PlotSpec spec_plot;
    spec_plot.x_label = "t (years)";
    spec_plot.y_label = "R (barrels)";
    for (const wade::SweepEntry& entry : result.entries) {
      spec_plot.series.push_back(wade::to_plot_series(
          entry.trajectory.reserves, "k=" + std::to_string(entry.k)));
    }
    write_plot(spec_plot, dir, "sweep.svg");
  }

  put(manifest, "sweep.mode", cfg.sweep_mode);
  put(manifest, "sweep.lo", spec.lo);
  put(manifest, "sweep.hi", spec.hi);
  put(manifest, "sweep.window_start", spec.window_start);
  put(manifest, "sweep.horizon", spec.horizon);
  put(manifest, "sweep.indexing", cfg.indexing);
  if (spec.indexing == wade::SweepIndexing::normalized) {
    put(manifest, "sweep.k_max", spec.k_max);
  }
  if (spec.mode == wade::SweepMode::terminal) {
    put(manifest, "sweep.reversal", cfg.reversal);
  }
  std::string ks;
  for (std::size_t i = 0; i < spec.k_values.size(); ++i) {
    if (i) {
      ks += ',';
    }
    ks += std::to_string(spec.k_values[i]);
  }
  put(manifest, "sweep.k", ks);
  record_model(manifest, params, cfg, input.grid);
  put(manifest, "out_dir", dir.string());
  write_manifest(manifest, dir);
}

void cmd_winwin(const RunConfig& cfg) {
  Manifest manifest;
  put(manifest, "command", std::string("winwin"));
  wade::ModelParams params = make_params(cfg);

  wade::TimeGrid grid(0.0, 1.0, 1);
  wade::Series investment = wade::constant_series(grid, 0.0);
  if (!cfg.investment_path.empty()) {
    const auto records = wade::load_annual_csv_file(cfg.investment_path);
    grid = cfg.grid_spec.empty() ? grid_from_records(records)
                                 : parse_grid_spec(cfg.grid_spec);
    investment = wade::resample(records, grid, wade::ResampleMode::linear);
    put(manifest, "investment", cfg.investment_path);
  } else {
    if (cfg.grid_spec.empty()) {
      throw std::invalid_argument("--i-const requires --grid");
    }
    grid = parse_grid_spec(cfg.grid_spec);
    investment = wade::constant_series(grid, cfg.investment_const);
    put(manifest, "investment_const", cfg.investment_const);
  }

  const wade::WinWinParams ww(
      cfg.mu, cfg.pr, investment,
      wade::make_investment_response(cfg.response_name, cfg.response_param));
  const wade::Series pivot = wade::evolve_winwin_price(ww, cfg.p0_init, grid);
  const wade::Series residual = wade::winwin_consistency(pivot, ww);

  const std::filesystem::path dir = resolve_out_dir(cfg, "winwin");
  {
    std::ofstream out = open_output(dir / "p0_series.csv");
    out << "t,P0\n";
    for (std::size_t i = 0; i < pivot.size(); ++i) {
      out << wade::format_double(grid.node(i)) << ','
          << wade::format_double(pivot[i]) << '\n';
    }
  }
  {
    std::ofstream out = open_output(dir / "consistency.csv");
    out << "t,residual\n";
    for (std::size_t i = 0; i < residual.size(); ++i) {
      out << wade::format_double(grid.node(i)) << ','
          << wade::format_double(residual[i]) << '\n';
    }
  }

  if (cfg.chain_optimal) {
    // Feed P0(t) into a control solve as the time-varying pivot.
    if (cfg.prices_path.empty()) {
      throw std::invalid_argument("--chain-optimal requires --prices");
    }
    const auto records = wade::load_annual_csv_file(cfg.prices_path);
    const wade::Series price =
        wade::resample(records, grid, wade::ResampleMode::step);
    const wade::Series w = load_rest_of_world(cfg, grid, manifest);
    const wade::PriceContext ctx(price, w, cfg.epsilon_band);
    const wade::Trajectory traj = wade::solve_pmp(
        params, ctx, cfg.initial_stock, grid, band_policy(cfg), &pivot);
    std::ofstream out = open_output(dir / "trajectory.csv");
    wade::write_trajectory_csv(traj, out);
    put(manifest, "prices", cfg.prices_path);
    put(manifest, "initial_stock", cfg.initial_stock);
  }

  if (cfg.plot) {
    wade::PlotSpec spec;
    spec.x_label = "t (years)";
    spec.y_label = "P0 (USD/barrel)";
    spec.series.push_back(wade::to_plot_series(pivot, "P0"));
    spec.markers.push_back(
        {wade::MarkerLine::Axis::horizontal, params.p0_base, "static pivot"});
    write_plot(spec, dir, "p0.svg");
  }

  put(manifest, "winwin.mu", cfg.mu);
  put(manifest, "winwin.pr", cfg.pr);
  put(manifest, "winwin.f", cfg.response_name);
  put(manifest, "winwin.f_param", cfg.response_param);
  put(manifest, "winwin.p0_init", cfg.p0_init);
  put(manifest, "winwin.chain_optimal", cfg.chain_optimal);
  record_model(manifest, params, cfg, grid);
  put(manifest, "out_dir", dir.string());
  write_manifest(manifest, dir);
}

void add_model_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--alpha", cfg.alpha, "reserve growth rate, 1/year")
      ->capture_default_str();
  cmd->add_option("--m", cfg.m, "objective exponent, integer >= 2")
      ->capture_default_str();
  auto* c0 =
      cmd->add_option("--c0", cfg.c0, "costate scale constant")
          ->capture_default_str();
  auto* cal = cmd->add_option(
                     "--calibrate", cfg.calibrate,
                     "fit c0 from OBSERVED_DEMAND YEAR against the price input")
                  ->expected(2);
  c0->excludes(cal);
  cal->excludes(c0);
  cmd->add_option("--p0", cfg.p0, "win-win pivot price, USD/barrel")
      ->capture_default_str();
  cmd->add_option("--epsilon-band", cfg.epsilon_band,
                  "exclusion half-width around the pivot, USD")
      ->capture_default_str();
  cmd->add_flag("--clip", cfg.clip,
                "clamp prices inside the band instead of rejecting the run");
  cmd->add_option("--grid", cfg.grid_spec,
                  "time grid START:END:STEPS (default: yearly over the input)");
  cmd->add_option(
      "--out", cfg.out_dir,
      "output directory (default: $WADE_OUT_DIR/<command> or ./wade_out/<command>)");
  cmd->add_flag("--plot", cfg.plot, "also write SVG charts");
}

void add_price_options(CLI::App* cmd, RunConfig& cfg) {
  auto* prices = cmd->add_option("--prices", cfg.prices_path,
                                 "annual price CSV (year,value)")
                     ->check(CLI::ExistingFile);
  auto* synth = cmd->add_option("--synthetic-price", cfg.synthetic_price,
                                "linear price ramp LO:HI over the grid");
  prices->excludes(synth);
  synth->excludes(prices);
  auto* wcsv = cmd->add_option("--w-csv", cfg.w_path,
                               "rest-of-world demand CSV (year,value)")
                   ->check(CLI::ExistingFile);
  auto* wconst = cmd->add_option("--w-const", cfg.w_const,
                                 "constant rest-of-world demand")
                     ->capture_default_str();
  wcsv->excludes(wconst);
  wconst->excludes(wcsv);
  cmd->add_option("--Q", cfg.initial_stock, "initial reserve stock, barrels")
      ->capture_default_str();
}

} // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"super-profit control model of oil-price economics"};
  app.require_subcommand(1);

  CLI::App* superprofit = app.add_subcommand(
      "superprofit", "super profit S = (p - p0) q from annual series");
  add_model_options(superprofit, cfg);
  superprofit
      ->add_option("--prices", cfg.prices_path, "annual price CSV (year,value)")
      ->required()
      ->check(CLI::ExistingFile);
  auto* qcsv = superprofit
                   ->add_option("--quantity-csv", cfg.quantity_path,
                                "annual quantity CSV (year,value)")
                   ->check(CLI::ExistingFile);
  auto* qconst = superprofit
                     ->add_option("--quantity-const", cfg.quantity_const,
                                  "constant quantity, barrels/year")
                     ->capture_default_str();
  qcsv->excludes(qconst);
  qconst->excludes(qcsv);

  CLI::App* optimal = app.add_subcommand(
      "optimal", "optimal-control solve: costate, demand a*, reserves");
  add_model_options(optimal, cfg);
  add_price_options(optimal, cfg);

  CLI::App* sweep = app.add_subcommand(
      "sweep", "family of solves over initial or terminal reserve values");
  add_model_options(sweep, cfg);
  add_price_options(sweep, cfg);
  sweep->add_option("--mode", cfg.sweep_mode, "initial or terminal")
      ->check(CLI::IsMember({"initial", "terminal"}))
      ->capture_default_str();
  sweep->add_option("--lo", cfg.sweep_lo, "reserve value at the window start")
      ->required();
  sweep->add_option("--hi", cfg.sweep_hi, "reserve value at the window end")
      ->required();
  sweep->add_option("--k", cfg.k_values, "comma-separated index list")
      ->required()
      ->delimiter(',');
  sweep->add_option("--t0", cfg.window_start, "sweep window start, years")
      ->capture_default_str();
  sweep->add_option("--horizon", cfg.horizon,
                    "sweep horizon, years (default: the grid span)");
  sweep->add_option("--indexing", cfg.indexing, "absolute or normalized")
      ->check(CLI::IsMember({"absolute", "normalized"}))
      ->capture_default_str();
  sweep->add_option("--k-max", cfg.k_max,
                    "top index for normalized indexing");
  sweep->add_flag("--roundtrip", cfg.roundtrip,
                  "terminal mode: report the forward/reversed retrace error");
  sweep->add_option("--reversal", cfg.reversal, "exact or forward-law")
      ->check(CLI::IsMember({"exact", "forward-law"}))
      ->capture_default_str();

  CLI::App* winwin = app.add_subcommand(
      "winwin", "evolve the win-win reference price P0(t)");
  add_model_options(winwin, cfg);
  winwin->add_option("--mu", cfg.mu, "depreciation rate, 1/year; in [0, 1)")
      ->capture_default_str();
  winwin->add_option("--pr", cfg.pr, "reasonable profit, USD/barrel")
      ->capture_default_str();
  auto* icsv = winwin
                   ->add_option("--i-csv", cfg.investment_path,
                                "annual investment CSV (year,value)")
                   ->check(CLI::ExistingFile);
  auto* iconst = winwin
                     ->add_option("--i-const", cfg.investment_const,
                                  "constant investment, USD/barrel")
                     ->capture_default_str();
  icsv->excludes(iconst);
  iconst->excludes(icsv);
  winwin
      ->add_option("--f", cfg.response_name,
                   "investment response: linear, saturating, or constant")
      ->check(CLI::IsMember({"linear", "saturating", "constant"}))
      ->capture_default_str();
  winwin->add_option("--f-param", cfg.response_param,
                     "scale of the investment response")
      ->capture_default_str();
  winwin->add_option("--p0-init", cfg.p0_init, "initial reference price")
      ->capture_default_str();
  winwin->add_flag("--chain-optimal", cfg.chain_optimal,
                   "feed P0(t) into an optimal solve as the pivot");
  winwin
      ->add_option("--prices", cfg.prices_path,
                   "annual price CSV for the chained solve")
      ->check(CLI::ExistingFile);
  winwin->add_option("--w-const", cfg.w_const,
                     "constant rest-of-world demand for the chained solve")
      ->capture_default_str();
  winwin->add_option("--Q", cfg.initial_stock,
                     "initial reserve stock for the chained solve")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(superprofit)) {
      cmd_superprofit(cfg);
    } else if (app.got_subcommand(optimal)) {
      cmd_optimal(cfg);
    } else if (app.got_subcommand(sweep)) {
      cmd_sweep(cfg);
    } else {
      cmd_winwin(cfg);
    }
    return 0;
  } catch (const wade::CsvError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const wade::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
