#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

#include "wade/data_io.hpp"

namespace wade {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 500.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 645.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 445.0;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                "#ff7f0e", "#9467bd", "#8c564b"};
constexpr std::size_t kPaletteSize = sizeof kPalette / sizeof kPalette[0];

std::string fmt(double v) { return format_double(v, 6); }

std::string escape_xml(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
    case '&': out += "&amp;"; break;
    case '<': out += "&lt;"; break;
    case '>': out += "&gt;"; break;
    case '"': out += "&quot;"; break;
    case '\'': out += "&apos;"; break;
    default: out += c;
    }
  }
  return out;
}

struct Range {
  double lo = 0.0;
  double hi = 0.0;
  bool seen = false;

  void include(double v) {
    if (!seen) {
      lo = hi = v;
      seen = true;
    } else {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }

  void finalize() {
    if (hi - lo <= 0.0) {
      const double pad = std::max(1.0, std::abs(hi) * 0.05);
      lo -= pad;
      hi += pad;
    } else {
      const double pad = 0.04 * (hi - lo);
      lo -= pad;
      hi += pad;
    }
  }
};

void validate(const PlotSpec& spec) {
  if (spec.series.empty()) {
    throw std::invalid_argument("write_svg_plot: at least one series");
  }
  for (const PlotSeries& s : spec.series) {
    if (s.label.empty()) {
      throw std::invalid_argument("write_svg_plot: series label is empty");
    }
    if (s.x.empty() || s.x.size() != s.y.size()) {
      throw std::invalid_argument("write_svg_plot: series '" + s.label +
                                  "' has no points or mismatched x/y");
    }
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) {
        throw std::invalid_argument("write_svg_plot: series '" + s.label +
                                    "' has non-finite points");
      }
    }
  }
  for (const MarkerLine& m : spec.markers) {
    if (!std::isfinite(m.value)) {
      throw std::invalid_argument("write_svg_plot: marker value not finite");
    }
  }
}

} // namespace

void write_svg_plot(const PlotSpec& spec, std::ostream& out) {
  validate(spec);

  Range xr;
  Range yr;
  for (const PlotSeries& s : spec.series) {
    for (double v : s.x) xr.include(v);
    for (double v : s.y) yr.include(v);
  }
  for (const MarkerLine& m : spec.markers) {
    if (m.axis == MarkerLine::Axis::horizontal) {
      yr.include(m.value);
    } else {
      xr.include(m.value);
    }
  }
  xr.finalize();
  yr.finalize();

  const auto sx = [&](double v) {
    return kLeft + (v - xr.lo) / (xr.hi - xr.lo) * (kRight - kLeft);
  };
  const auto sy = [&](double v) {
    return kBottom - (v - yr.lo) / (yr.hi - yr.lo) * (kBottom - kTop);
  };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
         "width=\""
      << fmt(kWidth) << "\" height=\"" << fmt(kHeight) << "\" viewBox=\"0 0 "
      << fmt(kWidth) << ' ' << fmt(kHeight) << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << fmt(kWidth) << "\" height=\""
      << fmt(kHeight) << "\" fill=\"#ffffff\"/>\n";
  out << "<rect x=\"" << fmt(kLeft) << "\" y=\"" << fmt(kTop) << "\" width=\""
      << fmt(kRight - kLeft) << "\" height=\"" << fmt(kBottom - kTop)
      << "\" fill=\"none\" stroke=\"#333333\"/>\n";

  // ticks: five per axis, endpoints included
  for (int i = 0; i <= 4; ++i) {
    const double fx = xr.lo + (xr.hi - xr.lo) * i / 4.0;
    const double px = sx(fx);
    out << "<line x1=\"" << fmt(px) << "\" y1=\"" << fmt(kBottom)
        << "\" x2=\"" << fmt(px) << "\" y2=\"" << fmt(kBottom + 5.0)
        << "\" stroke=\"#333333\"/>\n";
    out << "<text x=\"" << fmt(px) << "\" y=\"" << fmt(kBottom + 18.0)
        << "\" font-family=\"monospace\" font-size=\"11\" "
           "text-anchor=\"middle\">"
        << escape_xml(fmt(fx)) << "</text>\n";

    const double fy = yr.lo + (yr.hi - yr.lo) * i / 4.0;
    const double py = sy(fy);
    out << "<line x1=\"" << fmt(kLeft - 5.0) << "\" y1=\"" << fmt(py)
        << "\" x2=\"" << fmt(kLeft) << "\" y2=\"" << fmt(py)
        << "\" stroke=\"#333333\"/>\n";
    out << "<text x=\"" << fmt(kLeft - 8.0) << "\" y=\"" << fmt(py + 4.0)
        << "\" font-family=\"monospace\" font-size=\"11\" "
           "text-anchor=\"end\">"
        << escape_xml(fmt(fy)) << "</text>\n";
  }

  if (!spec.x_label.empty()) {
    out << "<text x=\"" << fmt((kLeft + kRight) / 2.0) << "\" y=\""
        << fmt(kHeight - 10.0)
        << "\" font-family=\"monospace\" font-size=\"13\" "
           "text-anchor=\"middle\">"
        << escape_xml(spec.x_label) << "</text>\n";
  }
  if (!spec.y_label.empty()) {
    out << "<text x=\"" << fmt(kLeft) << "\" y=\"" << fmt(kTop - 12.0)
        << "\" font-family=\"monospace\" font-size=\"13\" "
           "text-anchor=\"middle\">"
        << escape_xml(spec.y_label) << "</text>\n";
  }

  for (const MarkerLine& m : spec.markers) {
    if (m.axis == MarkerLine::Axis::horizontal) {
      const double py = sy(m.value);
      out << "<line class=\"marker\" x1=\"" << fmt(kLeft) << "\" y1=\""
          << fmt(py) << "\" x2=\"" << fmt(kRight) << "\" y2=\"" << fmt(py)
          << "\" stroke=\"#555555\" stroke-dasharray=\"6 4\"/>\n";
      if (!m.caption.empty()) {
        out << "<text x=\"" << fmt(kRight - 4.0) << "\" y=\"" << fmt(py - 4.0)
            << "\" font-family=\"monospace\" font-size=\"11\" "
               "text-anchor=\"end\" fill=\"#555555\">"
            << escape_xml(m.caption) << "</text>\n";
      }
    } else {
      const double px = sx(m.value);
      out << "<line class=\"marker\" x1=\"" << fmt(px) << "\" y1=\""
          << fmt(kTop) << "\" x2=\"" << fmt(px) << "\" y2=\"" << fmt(kBottom)
          << "\" stroke=\"#555555\" stroke-dasharray=\"6 4\"/>\n";
      if (!m.caption.empty()) {
        out << "<text x=\"" << fmt(px + 4.0) << "\" y=\"" << fmt(kTop + 12.0)
            << "\" font-family=\"monospace\" font-size=\"11\" "
               "fill=\"#555555\">"
            << escape_xml(m.caption) << "</text>\n";
      }
    }
  }

  for (std::size_t si = 0; si < spec.series.size(); ++si) {
    const PlotSeries& s = spec.series[si];
    const char* color = kPalette[si % kPaletteSize];
    out << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (i) out << ' ';
      out << fmt(sx(s.x[i])) << ',' << fmt(sy(s.y[i]));
    }
    out << "\"/>\n";
  }

  for (std::size_t si = 0; si < spec.series.size(); ++si) {
    const PlotSeries& s = spec.series[si];
    const char* color = kPalette[si % kPaletteSize];
    const double ly = kTop + 14.0 + 18.0 * static_cast<double>(si);
    out << "<rect x=\"" << fmt(kRight + 10.0) << "\" y=\"" << fmt(ly - 9.0)
        << "\" width=\"12\" height=\"12\" fill=\"" << color << "\"/>\n";
    out << "<text x=\"" << fmt(kRight + 27.0) << "\" y=\"" << fmt(ly + 1.0)
        << "\" font-family=\"monospace\" font-size=\"12\">"
        << escape_xml(s.label) << "</text>\n";
  }

  out << "</svg>\n";
}

} // namespace wade
