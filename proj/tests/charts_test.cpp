#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "suslib/charts.hpp"
#include "svg_probe.hpp"
#include "test_support.hpp"

namespace sus {
namespace {

using testing::probe_svg;

// Heights are printed with two decimals.
constexpr double kHeightTol = 0.006;

void expect_proportional(const std::vector<testing::ProbedBar>& bars,
                         const std::vector<std::size_t>& counts) {
  ASSERT_EQ(bars.size(), counts.size());
  std::size_t max_count = 0;
  for (auto c : counts) max_count = std::max(max_count, c);
  const double full = 480.0;  // plot height of the 800x600 canvas
  for (std::size_t i = 0; i < bars.size(); ++i) {
    EXPECT_EQ(bars[i].count, counts[i]) << "bar " << i;
    const double expected =
        max_count == 0 ? 0.0 : full * static_cast<double>(counts[i]) / static_cast<double>(max_count);
    EXPECT_NEAR(bars[i].height, expected, kHeightTol) << "bar " << i;
  }
}

TEST(Charts, HistogramOfReferenceData) {
  const auto scores = testing::paper_scores();
  const auto chart = render_histogram(histogram_bins(scores), scores.size());
  EXPECT_EQ(chart.kind, ChartKind::Histogram);
  EXPECT_EQ(chart.title, "SUS value histogram");

  const auto probed = probe_svg(chart.svg_text);
  EXPECT_EQ(probed.title, "SUS value histogram");
  expect_proportional(probed.bars, {1, 0, 1, 0, 1, 0, 0, 0, 6, 11});
  EXPECT_EQ(probed.bars.front().label, "[0,10)");
  EXPECT_EQ(probed.bars.back().label, "[90,100]");
  // x-axis edge labels 0..100
  EXPECT_NE(chart.svg_text.find(">100</text>"), std::string::npos);
}

TEST(Charts, HistogramSingleBinIsFullHeight) {
  HistogramBins bins;
  bins.counts[3] = 4;
  const auto probed = probe_svg(render_histogram(bins, 4).svg_text);
  expect_proportional(probed.bars, {0, 0, 0, 4, 0, 0, 0, 0, 0, 0});
  EXPECT_NEAR(probed.bars[3].height, 480.0, 1e-9);
}

TEST(Charts, HistogramRejectsMismatchedTotal) {
  HistogramBins bins;
  bins.counts[0] = 2;
  EXPECT_THROW(render_histogram(bins, 3), std::invalid_argument);
}

TEST(Charts, CategoryChartsOfReferenceData) {
  const auto scores = testing::paper_scores();

  const auto grade = render_category_chart(frequency_table(scores, Dimension::Grade));
  EXPECT_EQ(grade.kind, ChartKind::Grade);
  const auto g = probe_svg(grade.svg_text);
  EXPECT_EQ(g.title, "Grade chart");
  expect_proportional(g.bars, {11, 6, 0, 0, 3});
  EXPECT_EQ(g.bars[0].label, "A");
  EXPECT_EQ(g.bars[4].label, "F");

  const auto acc = probe_svg(
      render_category_chart(frequency_table(scores, Dimension::Acceptability)).svg_text);
  EXPECT_EQ(acc.title, "Acceptability level chart");
  expect_proportional(acc.bars, {3, 0, 0, 17});
  EXPECT_EQ(acc.bars[0].label, "NOT ACCEPTABLE");

  const auto adj = probe_svg(
      render_category_chart(frequency_table(scores, Dimension::Adjective)).svg_text);
  EXPECT_EQ(adj.title, "Adjective ratings chart");
  expect_proportional(adj.bars, {2, 0, 1, 0, 3, 14});
  EXPECT_EQ(adj.bars[5].label, "BEST IMAGINABLE");
}

TEST(Charts, SingleCountTable) {
  const std::vector<SusScore> one{SusScore::from_value(65.0)};
  const auto probed =
      probe_svg(render_category_chart(frequency_table(one, Dimension::Acceptability)).svg_text);
  expect_proportional(probed.bars, {0, 0, 1, 0});
  EXPECT_NEAR(probed.bars[2].height, 480.0, 1e-9);
}

TEST(Charts, Deterministic) {
  const auto scores = testing::paper_scores();
  for (auto kind : {ChartKind::Histogram, ChartKind::Acceptability, ChartKind::Grade,
                    ChartKind::Adjective}) {
    EXPECT_EQ(render_chart(kind, scores).svg_text, render_chart(kind, scores).svg_text);
  }
}

TEST(Charts, CountsSumToN) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 50; ++t) {
    std::vector<SusScore> scores;
    const int n = 1 + static_cast<int>(rng() % 60);
    for (int i = 0; i < n; ++i) scores.push_back(score_response(testing::random_row(rng)));
    for (auto kind : {ChartKind::Histogram, ChartKind::Acceptability, ChartKind::Grade,
                      ChartKind::Adjective}) {
      const auto probed = probe_svg(render_chart(kind, scores).svg_text);
      std::size_t total = 0;
      for (const auto& b : probed.bars) total += b.count;
      ASSERT_EQ(total, static_cast<std::size_t>(n));
      const std::size_t expected_bars = kind == ChartKind::Histogram       ? 10
                                        : kind == ChartKind::Acceptability ? 4
                                        : kind == ChartKind::Grade         ? 5
                                                                           : 6;
      ASSERT_EQ(probed.bars.size(), expected_bars);
    }
  }
}

TEST(Charts, TickCountIsBounded) {
  HistogramBins bins;
  bins.counts[9] = 57;
  const auto svg = render_histogram(bins, 57).svg_text;
  const auto y_axis = svg.substr(svg.find("class=\"y-axis\""));
  const auto end = y_axis.find("</g>");
  std::size_t ticks = 0;
  for (auto pos = y_axis.find("<text"); pos < end; pos = y_axis.find("<text", pos + 1)) ++ticks;
  EXPECT_GE(ticks, 2u);
  EXPECT_LE(ticks, 11u);  // zero plus at most ten steps
}

TEST(Charts, KindNames) {
  EXPECT_EQ(parse_chart_kind("grade"), ChartKind::Grade);
  EXPECT_EQ(parse_chart_kind("histogram"), ChartKind::Histogram);
  EXPECT_FALSE(parse_chart_kind("pie").has_value());
  EXPECT_EQ(detail::xml_escape("a<b&\"c\""), "a&lt;b&amp;&quot;c&quot;");
}

}  // namespace
}  // namespace sus
