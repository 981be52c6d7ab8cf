#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "bcsreps/errors.hpp"

namespace bcsreps::cli {
namespace {

constexpr double kWidth = 840.0;
constexpr double kHeight = 560.0;
constexpr double kMarginLeft = 72.0;
constexpr double kMarginRight = 24.0;
constexpr double kMarginTop = 44.0;
constexpr double kMarginBottom = 56.0;
constexpr int kTicks = 5;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                "#9467bd", "#ff7f0e", "#8c564b"};
constexpr std::size_t kPaletteSize = sizeof kPalette / sizeof kPalette[0];

std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string px(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  // Collapse the signed zero so ranges crossing zero label it as plain "0".
  if (v == 0.0) v = 0.0;
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

struct Range {
  double lo;
  double hi;
};

Range padded(Range r, double fraction) {
  double span = r.hi - r.lo;
  if (span <= 0.0) {
    // Degenerate range: open a symmetric window around the value.
    double pad = (r.lo == 0.0) ? 1.0 : std::abs(r.lo) * 0.5;
    return {r.lo - pad, r.hi + pad};
  }
  return {r.lo - fraction * span, r.hi + fraction * span};
}

}  // namespace

std::string to_svg(const CurveFile& curve, const std::string& title) {
  if (curve.header.size() < 2) {
    throw DomainError("svg: need an x column and at least one y column");
  }
  if (curve.rows.empty()) {
    throw DomainError("svg: cannot render an empty curve");
  }

  Range xr{std::numeric_limits<double>::infinity(),
           -std::numeric_limits<double>::infinity()};
  Range yr = xr;
  for (std::size_t r = 0; r < curve.rows.size(); ++r) {
    const auto& row = curve.rows[r];
    if (row.size() != curve.header.size()) {
      throw DomainError("svg: row " + std::to_string(r) +
                        " does not match the header width");
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (!std::isfinite(row[c])) {
        throw NumericError("svg: non-finite value in column '" +
                           curve.header[c] + "', row " + std::to_string(r));
      }
      Range& target = (c == 0) ? xr : yr;
      target.lo = std::min(target.lo, row[c]);
      target.hi = std::max(target.hi, row[c]);
    }
  }
  xr = padded(xr, 0.0);
  yr = padded(yr, 0.05);

  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  const auto sx = [&](double v) {
    return kMarginLeft + (v - xr.lo) / (xr.hi - xr.lo) * plot_w;
  };
  const auto sy = [&](double v) {
    return kMarginTop + (yr.hi - v) / (yr.hi - yr.lo) * plot_h;
  };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         px(kWidth) + "\" height=\"" + px(kHeight) + "\" viewBox=\"0 0 " +
         px(kWidth) + " " + px(kHeight) + "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + px(kWidth) + "\" height=\"" +
         px(kHeight) + "\" fill=\"#ffffff\"/>\n";
  out += "<text x=\"" + px(kWidth / 2) +
         "\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\" "
         "text-anchor=\"middle\" fill=\"#202020\">" +
         xml_escape(title) + "</text>\n";

  // Plot frame.
  out += "<rect x=\"" + px(kMarginLeft) + "\" y=\"" + px(kMarginTop) +
         "\" width=\"" + px(plot_w) + "\" height=\"" + px(plot_h) +
         "\" fill=\"none\" stroke=\"#404040\" stroke-width=\"1\"/>\n";

  // Ticks with grid lines and labels.
  for (int i = 0; i < kTicks; ++i) {
    const double f = static_cast<double>(i) / (kTicks - 1);
    const double xv = xr.lo + f * (xr.hi - xr.lo);
    const double yv = yr.lo + f * (yr.hi - yr.lo);
    const double xp = sx(xv);
    const double yp = sy(yv);
    out += "<line x1=\"" + px(xp) + "\" y1=\"" + px(kMarginTop) + "\" x2=\"" +
           px(xp) + "\" y2=\"" + px(kMarginTop + plot_h) +
           "\" stroke=\"#d8d8d8\" stroke-width=\"1\"/>\n";
    out += "<line x1=\"" + px(kMarginLeft) + "\" y1=\"" + px(yp) +
           "\" x2=\"" + px(kMarginLeft + plot_w) + "\" y2=\"" + px(yp) +
           "\" stroke=\"#d8d8d8\" stroke-width=\"1\"/>\n";
    out += "<text x=\"" + px(xp) + "\" y=\"" + px(kMarginTop + plot_h + 18) +
           "\" font-family=\"sans-serif\" font-size=\"12\" "
           "text-anchor=\"middle\" fill=\"#202020\">" +
           tick_label(xv) + "</text>\n";
    out += "<text x=\"" + px(kMarginLeft - 8) + "\" y=\"" + px(yp + 4) +
           "\" font-family=\"sans-serif\" font-size=\"12\" "
           "text-anchor=\"end\" fill=\"#202020\">" +
           tick_label(yv) + "</text>\n";
  }

  // X-axis label.
  out += "<text x=\"" + px(kMarginLeft + plot_w / 2) + "\" y=\"" +
         px(kHeight - 12) +
         "\" font-family=\"sans-serif\" font-size=\"13\" "
         "text-anchor=\"middle\" fill=\"#202020\">" +
         xml_escape(curve.header[0]) + "</text>\n";

  // One polyline per y column.
  for (std::size_t c = 1; c < curve.header.size(); ++c) {
    const char* color = kPalette[(c - 1) % kPaletteSize];
    std::string points;
    for (const auto& row : curve.rows) {
      if (!points.empty()) points += ' ';
      points += px(sx(row[0])) + "," + px(sy(row[c]));
    }
    out += "<polyline fill=\"none\" stroke=\"";
    out += color;
    out += "\" stroke-width=\"1.5\" points=\"" + points + "\"/>\n";
  }

  // Legend, top-right inside the frame.
  for (std::size_t c = 1; c < curve.header.size(); ++c) {
    const char* color = kPalette[(c - 1) % kPaletteSize];
    const double ly = kMarginTop + 16 + 18 * static_cast<double>(c - 1);
    const double lx = kMarginLeft + plot_w - 170;
    out += "<line x1=\"" + px(lx) + "\" y1=\"" + px(ly) + "\" x2=\"" +
           px(lx + 26) + "\" y2=\"" + px(ly) + "\" stroke=\"";
    out += color;
    out += "\" stroke-width=\"2\"/>\n";
    out += "<text x=\"" + px(lx + 32) + "\" y=\"" + px(ly + 4) +
           "\" font-family=\"sans-serif\" font-size=\"12\" "
           "text-anchor=\"start\" fill=\"#202020\">" +
           xml_escape(curve.header[c]) + "</text>\n";
  }

  out += "</svg>\n";
  return out;
}

}  // namespace bcsreps::cli
