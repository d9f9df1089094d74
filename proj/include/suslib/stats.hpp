#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "suslib/scoring.hpp"

namespace sus {

class EmptyScoreSet : public std::invalid_argument {
 public:
  EmptyScoreSet() : std::invalid_argument("score set is empty") {}
};

struct SurveyStats {
  double mean = 0.0;
  double sample_std = 0.0;  // n - 1 denominator; 0 when n == 1
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
};

/// Quantile of an ascending sample by linear interpolation at rank p*(n-1).
inline double quantile_sorted(std::span<const double> sorted, double p) {
  if (sorted.empty()) throw EmptyScoreSet();
  const double h = p * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  if (lo + 1 >= sorted.size()) return sorted.back();
  const double frac = h - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

inline std::vector<double> values_of(std::span<const SusScore> scores) {
  std::vector<double> v;
  v.reserve(scores.size());
  for (auto s : scores) v.push_back(s.value());
  return v;
}

inline SurveyStats descriptive_stats(std::span<const double> values) {
  if (values.empty()) throw EmptyScoreSet();
  const auto n = static_cast<double>(values.size());

  SurveyStats st;
  st.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  if (values.size() > 1) {
    double ss = 0.0;
    for (double x : values) ss += (x - st.mean) * (x - st.mean);
    st.sample_std = std::sqrt(ss / (n - 1.0));
  }

  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  st.q1 = quantile_sorted(sorted, 0.25);
  st.median = quantile_sorted(sorted, 0.5);
  st.q3 = quantile_sorted(sorted, 0.75);
  return st;
}

inline SurveyStats descriptive_stats(std::span<const SusScore> scores) {
  const auto v = values_of(scores);
  return descriptive_stats(std::span<const double>(v));
}

struct FrequencyTable {
  Dimension dimension = Dimension::Acceptability;
  // Every label of the dimension, canonical order, zero counts included.
  std::vector<std::pair<CategoryLabel, std::size_t>> entries;

  std::size_t total() const {
    std::size_t t = 0;
    for (const auto& [label, count] : entries) t += count;
    return t;
  }

  std::size_t count(const CategoryLabel& label) const {
    for (const auto& [l, c] : entries)
      if (l == label) return c;
    return 0;
  }
};

inline FrequencyTable frequency_table(std::span<const SusScore> scores,
                                      Dimension d) {
  if (scores.empty()) throw EmptyScoreSet();
  FrequencyTable table{d, {}};
  for (const auto& label : labels_of(d)) table.entries.emplace_back(label, 0);
  for (const auto& label : classify_each(scores, d)) {
    for (auto& [l, c] : table.entries) {
      if (l == label) {
        ++c;
        break;
      }
    }
  }
  return table;
}

/// Counts for [0,10), [10,20), ..., [80,90), [90,100].
struct HistogramBins {
  static constexpr std::size_t kBinCount = 10;
  static constexpr double kBinWidth = 10.0;
  std::array<std::size_t, kBinCount> counts{};

  std::size_t total() const {
    return std::accumulate(counts.begin(), counts.end(), std::size_t{0});
  }
};

inline HistogramBins histogram_bins(std::span<const SusScore> scores) {
  if (scores.empty()) throw EmptyScoreSet();
  HistogramBins bins;
  for (auto s : scores) {
    auto k = static_cast<std::size_t>(s.value() / HistogramBins::kBinWidth);
    bins.counts[std::min(k, HistogramBins::kBinCount - 1)]++;
  }
  return bins;
}

}  // namespace sus
