#pragma once

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <fmt/format.h>

#include "suslib/io.hpp"
#include "suslib/scoring.hpp"
#include "suslib/stats.hpp"

namespace sus {

enum class ChartKind { Histogram, Acceptability, Grade, Adjective };

constexpr std::string_view to_string(ChartKind k) {
  switch (k) {
    case ChartKind::Histogram: return "histogram";
    case ChartKind::Acceptability: return "acceptability";
    case ChartKind::Grade: return "grade";
    case ChartKind::Adjective: return "adjective";
  }
  return {};
}

inline std::optional<ChartKind> parse_chart_kind(std::string_view s) {
  for (auto k : {ChartKind::Histogram, ChartKind::Acceptability,
                 ChartKind::Grade, ChartKind::Adjective}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

constexpr std::string_view chart_title(ChartKind k) {
  switch (k) {
    case ChartKind::Histogram: return "SUS value histogram";
    case ChartKind::Acceptability: return "Acceptability level chart";
    case ChartKind::Grade: return "Grade chart";
    case ChartKind::Adjective: return "Adjective ratings chart";
  }
  return {};
}

constexpr ChartKind chart_kind_for(Dimension d) {
  switch (d) {
    case Dimension::Acceptability: return ChartKind::Acceptability;
    case Dimension::Grade: return ChartKind::Grade;
    case Dimension::Adjective: return ChartKind::Adjective;
  }
  return ChartKind::Histogram;
}

struct ChartDocument {
  std::string svg_text;
  std::string title;
  ChartKind kind = ChartKind::Histogram;
};

namespace detail {

inline constexpr double kCanvasWidth = 800.0;
inline constexpr double kCanvasHeight = 600.0;
inline constexpr double kMarginX = 0.1 * kCanvasWidth;
inline constexpr double kMarginY = 0.1 * kCanvasHeight;
inline constexpr double kPlotWidth = kCanvasWidth - 2 * kMarginX;
inline constexpr double kPlotHeight = kCanvasHeight - 2 * kMarginY;
inline constexpr std::size_t kMaxTicks = 10;
inline constexpr std::string_view kBarFill = "#4c72b0";

inline std::string xml_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
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

struct Bar {
  std::string label;
  std::size_t count;
};

// Shared layout for both chart types. With a histogram the bars touch and the
// x-axis is labelled at bin edges (edge_labels has bars.size() + 1 entries);
// otherwise each bar is centred in its slot and labelled underneath.
inline std::string render_bars(std::string_view title,
                               const std::vector<Bar>& bars,
                               std::string_view x_caption,
                               const std::vector<std::string>& edge_labels) {
  std::size_t max_count = 0;
  for (const auto& b : bars) max_count = std::max(max_count, b.count);
  const std::size_t y_max = std::max<std::size_t>(max_count, 1);
  const std::size_t step = (y_max + kMaxTicks - 1) / kMaxTicks;
  const double baseline = kMarginY + kPlotHeight;
  const double slot = kPlotWidth / static_cast<double>(bars.size());
  const bool histogram = !edge_labels.empty();
  const double bar_width = histogram ? slot : slot * 0.7;
  const double bar_offset = (slot - bar_width) / 2.0;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
      "width=\"{0:.0f}\" height=\"{1:.0f}\" viewBox=\"0 0 {0:.0f} {1:.0f}\">\n",
      kCanvasWidth, kCanvasHeight);
  out += fmt::format("  <title>{}</title>\n", xml_escape(title));
  out += fmt::format(
      "  <rect x=\"0\" y=\"0\" width=\"{:.0f}\" height=\"{:.0f}\" "
      "fill=\"#ffffff\"/>\n",
      kCanvasWidth, kCanvasHeight);
  out += fmt::format(
      "  <text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\" "
      "font-family=\"sans-serif\" font-size=\"20\">{}</text>\n",
      kCanvasWidth / 2, kMarginY / 2, xml_escape(title));

  out += "  <g class=\"y-axis\" font-family=\"sans-serif\" font-size=\"12\">\n";
  for (std::size_t t = 0; t <= y_max; t += step) {
    const double y =
        baseline - kPlotHeight * static_cast<double>(t) / static_cast<double>(y_max);
    out += fmt::format(
        "    <line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" "
        "stroke=\"#dddddd\"/>\n",
        kMarginX, y, kMarginX + kPlotWidth, y);
    out += fmt::format(
        "    <text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"end\">{}</text>\n",
        kMarginX - 6, y + 4, t);
  }
  out += "  </g>\n";

  out += fmt::format("  <g class=\"bars\" fill=\"{}\">\n", kBarFill);
  for (std::size_t i = 0; i < bars.size(); ++i) {
    const double h = kPlotHeight * static_cast<double>(bars[i].count) /
                     static_cast<double>(y_max);
    const double x = kMarginX + slot * static_cast<double>(i) + bar_offset;
    out += fmt::format(
        "    <rect class=\"bar\" data-label=\"{}\" data-count=\"{}\" "
        "x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" "
        "stroke=\"#ffffff\"/>\n",
        xml_escape(bars[i].label), bars[i].count, x, baseline - h, bar_width,
        h);
  }
  out += "  </g>\n";

  out += "  <g class=\"x-axis\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out += fmt::format(
      "    <line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" "
      "stroke=\"#000000\"/>\n",
      kMarginX, baseline, kMarginX + kPlotWidth, baseline);
  if (histogram) {
    for (std::size_t i = 0; i < edge_labels.size(); ++i) {
      out += fmt::format(
          "    <text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">{}</text>\n",
          kMarginX + slot * static_cast<double>(i), baseline + 18,
          xml_escape(edge_labels[i]));
    }
  } else {
    for (std::size_t i = 0; i < bars.size(); ++i) {
      out += fmt::format(
          "    <text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">{}</text>\n",
          kMarginX + slot * (static_cast<double>(i) + 0.5), baseline + 18,
          xml_escape(bars[i].label));
    }
  }
  out += fmt::format(
      "    <text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">{}</text>\n",
      kCanvasWidth / 2, baseline + 40, xml_escape(x_caption));
  out += "  </g>\n";
  out += fmt::format(
      "  <line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{0:.2f}\" y2=\"{2:.2f}\" "
      "stroke=\"#000000\"/>\n",
      kMarginX, kMarginY, baseline);
  out += fmt::format(
      "  <text x=\"{0:.2f}\" y=\"{1:.2f}\" text-anchor=\"middle\" "
      "font-family=\"sans-serif\" font-size=\"12\" "
      "transform=\"rotate(-90 {0:.2f} {1:.2f})\">Count</text>\n",
      kMarginX / 3, kMarginY + kPlotHeight / 2);
  out += "</svg>\n";
  return out;
}

}  // namespace detail

/// n is the number of scores the bins were built from; it must equal the
/// bin total.
inline ChartDocument render_histogram(const HistogramBins& bins, std::size_t n) {
  if (bins.total() != n) {
    throw std::invalid_argument("histogram bins do not sum to n");
  }
  std::vector<detail::Bar> bars;
  std::vector<std::string> edges;
  for (std::size_t k = 0; k < HistogramBins::kBinCount; ++k) {
    const auto lo = static_cast<int>(HistogramBins::kBinWidth) * static_cast<int>(k);
    const auto hi = lo + static_cast<int>(HistogramBins::kBinWidth);
    const bool last = k + 1 == HistogramBins::kBinCount;
    bars.push_back({fmt::format("[{},{}{}", lo, hi, last ? "]" : ")"),
                    bins.counts[k]});
    edges.push_back(std::to_string(lo));
    if (last) edges.push_back(std::to_string(hi));
  }
  const auto kind = ChartKind::Histogram;
  return {detail::render_bars(chart_title(kind), bars, "SUS value", edges),
          std::string(chart_title(kind)), kind};
}

inline ChartDocument render_category_chart(const FrequencyTable& table) {
  std::vector<detail::Bar> bars;
  for (const auto& [label, count] : table.entries)
    bars.push_back({std::string(to_string(label)), count});
  const auto kind = chart_kind_for(table.dimension);
  std::string caption;
  switch (table.dimension) {
    case Dimension::Acceptability: caption = "Acceptability"; break;
    case Dimension::Grade: caption = "Grade"; break;
    case Dimension::Adjective: caption = "Adjective rating"; break;
  }
  return {detail::render_bars(chart_title(kind), bars, caption, {}),
          std::string(chart_title(kind)), kind};
}

/// Renders the chart of the given kind straight from scores.
inline ChartDocument render_chart(ChartKind kind, std::span<const SusScore> scores) {
  switch (kind) {
    case ChartKind::Histogram:
      return render_histogram(histogram_bins(scores), scores.size());
    case ChartKind::Acceptability:
      return render_category_chart(frequency_table(scores, Dimension::Acceptability));
    case ChartKind::Grade:
      return render_category_chart(frequency_table(scores, Dimension::Grade));
    case ChartKind::Adjective:
      return render_category_chart(frequency_table(scores, Dimension::Adjective));
  }
  throw std::invalid_argument("unknown chart kind");
}

inline void write_chart(const ChartDocument& chart,
                        const std::filesystem::path& path) {
  write_text_file(chart.svg_text, path);
}

}  // namespace sus
