#pragma once

#include <array>
#include <cmath>
#include <filesystem>
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

inline constexpr std::string_view kDefaultReportPath = "results.txt";

struct ReportDocument {
  std::string text;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

class InsufficientData : public std::invalid_argument {
 public:
  InsufficientData()
      : std::invalid_argument(
            "the survey report needs at least two responses") {}
};

/// The three frequency tables in report order.
struct ReportTables {
  FrequencyTable acceptability;
  FrequencyTable grade;
  FrequencyTable adjective;
};

/// Fixed-point text with ties rounded away from zero (printf rounds ties to
/// even, which would print 0.125 as "0.12").
inline std::string format_fixed(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  const double scaled = std::round(value * scale);
  const bool negative = std::signbit(scaled) && scaled != 0.0;
  const auto units = static_cast<long long>(std::fabs(scaled));
  const auto unit_scale = static_cast<long long>(scale);
  std::string out = negative ? "-" : "";
  out += std::to_string(units / unit_scale);
  if (decimals > 0) {
    out += '.';
    out += fmt::format("{:0{}d}", units % unit_scale, decimals);
  }
  return out;
}

namespace detail {

inline constexpr int kLabelWidth = 20;
inline constexpr int kSummaryWidth = 15;

// Separator lengths as printed in the reference report.
inline constexpr std::size_t kValuesRule = 11;
inline constexpr std::size_t kStatsRule = 26;
inline constexpr std::size_t kAcceptabilityRule = 27;
inline constexpr std::size_t kGradeRule = 26;
inline constexpr std::size_t kAdjectiveRule = 26;
inline constexpr std::size_t kSummaryRule = 60;

inline void pad_row(std::string& out, std::string_view a, std::string_view b,
                    int width = kLabelWidth) {
  out += fmt::format("{:<{}}{:<{}}\n", a, width, b, width);
}

inline void rule(std::string& out, std::size_t n) {
  out.append(n, '-');
  out += '\n';
}

inline void frequency_block(std::string& out, std::string_view heading,
                            std::size_t rule_len, const FrequencyTable& t) {
  pad_row(out, heading, "Number");
  rule(out, rule_len);
  for (const auto& [label, count] : t.entries)
    pad_row(out, to_string(label), std::to_string(count));
  out += "\n\n";
}

}  // namespace detail

inline ReportDocument render_report(std::span<const SusScore> scores,
                                    const SurveyStats& stats,
                                    const ReportTables& tables,
                                    std::span<const ScoreLabels> labels) {
  using namespace detail;
  if (scores.size() < 2) throw InsufficientData();
  if (labels.size() != scores.size()) {
    throw std::invalid_argument("one label set per score is required");
  }

  std::string out;
  out += "SUS values\n";
  rule(out, kValuesRule);
  for (auto s : scores) {
    out += format_fixed(s.value(), 1);
    out += '\n';
  }
  out += "\n\n";

  pad_row(out, "Statistic", "Value");
  rule(out, kStatsRule);
  pad_row(out, "Mean", format_fixed(stats.mean, 2));
  pad_row(out, "Standard Deviation", format_fixed(stats.sample_std, 2));
  pad_row(out, "First Quartile (Q1)", format_fixed(stats.q1, 2));
  pad_row(out, "Median (Q2)", format_fixed(stats.median, 2));
  pad_row(out, "Third Quartile (Q3)", format_fixed(stats.q3, 2));
  out += "\n\n";

  frequency_block(out, "Acceptability", kAcceptabilityRule,
                  tables.acceptability);
  frequency_block(out, "Grades", kGradeRule, tables.grade);
  frequency_block(out, "Adjectives", kAdjectiveRule, tables.adjective);

  out += fmt::format("{:<{}}{:<{}}{:<{}}{:<{}}\n", "SUS Value", kSummaryWidth,
                     "Acceptability", kSummaryWidth, "Grade", kSummaryWidth,
                     "Adjective", kSummaryWidth);
  rule(out, kSummaryRule);
  for (std::size_t i = 0; i < scores.size(); ++i) {
    out += fmt::format("{:<{}}{:<{}}{:<{}}{:<{}}\n",
                       format_fixed(scores[i].value(), 2), kSummaryWidth,
                       to_string(labels[i].acceptability), kSummaryWidth,
                       to_string(labels[i].grade), kSummaryWidth,
                       to_string(labels[i].adjective), kSummaryWidth);
  }
  out += '\n';
  return {std::move(out)};
}

/// Computes statistics, tables and labels, then renders the full report.
inline ReportDocument render_report(std::span<const SusScore> scores) {
  if (scores.size() < 2) throw InsufficientData();
  const ReportTables tables{frequency_table(scores, Dimension::Acceptability),
                            frequency_table(scores, Dimension::Grade),
                            frequency_table(scores, Dimension::Adjective)};
  const auto labels = classify_all(scores);
  return render_report(scores, descriptive_stats(scores), tables, labels);
}

inline ReportDocument render_single_report(SusScore score) {
  using detail::pad_row;
  std::string out;
  pad_row(out, "SUS Value", format_fixed(score.value(), 2));
  pad_row(out, "Acceptability", to_string(classify_acceptability(score)));
  pad_row(out, "Grade", to_string(classify_grade(score)));
  pad_row(out, "Adjective", to_string(classify_adjective(score)));
  return {std::move(out)};
}

/// Writes doc.text verbatim. Parent directories are not created.
inline void write_report(const ReportDocument& doc,
                         const std::filesystem::path& path =
                             std::filesystem::path(kDefaultReportPath)) {
  write_text_file(doc.text, path);
}

}  // namespace sus
