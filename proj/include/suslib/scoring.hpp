#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "suslib/ingest.hpp"

namespace sus {

/// Odd items contribute (answer - 1), even items (5 - answer).
struct ScoreBreakdown {
  int positive_sum = 0;
  int negative_sum = 0;

  int points() const noexcept { return positive_sum + negative_sum; }
};

/// A SUS value in [0, 100]. Values built from responses are always multiples
/// of 2.5, which are exact in binary floating point.
class SusScore {
 public:
  static constexpr double kStep = 2.5;
  static constexpr int kMaxPoints = 40;

  constexpr SusScore() = default;

  /// From X + Y, in [0, 40].
  static SusScore from_points(int points) {
    if (points < 0 || points > kMaxPoints) {
      throw std::out_of_range("SUS points out of range: " +
                              std::to_string(points));
    }
    return SusScore(points * kStep);
  }

  /// Checked construction from a value that must lie on the 2.5 grid.
  static SusScore from_value(double value) {
    if (!(value >= 0.0 && value <= 100.0) ||
        std::fmod(value, kStep) != 0.0) {
      throw std::out_of_range("not a valid SUS value");
    }
    return SusScore(value);
  }

  constexpr double value() const noexcept { return value_; }

  friend constexpr auto operator<=>(SusScore, SusScore) = default;

 private:
  constexpr explicit SusScore(double v) : value_(v) {}
  double value_ = 0.0;
};

enum class Dimension { Acceptability, Grade, Adjective };

enum class Acceptability { NotAcceptable, LowMarginal, HighMarginal, Acceptable };
enum class Grade { A, B, C, D, F };
enum class Adjective { WorstImaginable, Poor, Ok, Good, Excellent, BestImaginable };

using CategoryLabel = std::variant<Acceptability, Grade, Adjective>;

// Canonical (report) order of each dimension's labels.
inline constexpr std::array kAcceptabilityOrder{
    Acceptability::NotAcceptable, Acceptability::LowMarginal,
    Acceptability::HighMarginal, Acceptability::Acceptable};
inline constexpr std::array kGradeOrder{Grade::A, Grade::B, Grade::C, Grade::D,
                                        Grade::F};
inline constexpr std::array kAdjectiveOrder{
    Adjective::WorstImaginable, Adjective::Poor,      Adjective::Ok,
    Adjective::Good,            Adjective::Excellent, Adjective::BestImaginable};

constexpr std::string_view to_string(Acceptability a) {
  switch (a) {
    case Acceptability::NotAcceptable: return "NOT ACCEPTABLE";
    case Acceptability::LowMarginal: return "LOW MARGINAL";
    case Acceptability::HighMarginal: return "HIGH MARGINAL";
    case Acceptability::Acceptable: return "ACCEPTABLE";
  }
  return {};
}

constexpr std::string_view to_string(Grade g) {
  switch (g) {
    case Grade::A: return "A";
    case Grade::B: return "B";
    case Grade::C: return "C";
    case Grade::D: return "D";
    case Grade::F: return "F";
  }
  return {};
}

constexpr std::string_view to_string(Adjective a) {
  switch (a) {
    case Adjective::WorstImaginable: return "WORST IMAGINABLE";
    case Adjective::Poor: return "POOR";
    case Adjective::Ok: return "OK";
    case Adjective::Good: return "GOOD";
    case Adjective::Excellent: return "EXCELLENT";
    case Adjective::BestImaginable: return "BEST IMAGINABLE";
  }
  return {};
}

inline std::string_view to_string(const CategoryLabel& label) {
  return std::visit([](auto v) { return to_string(v); }, label);
}

constexpr std::string_view to_string(Dimension d) {
  switch (d) {
    case Dimension::Acceptability: return "acceptability";
    case Dimension::Grade: return "grade";
    case Dimension::Adjective: return "adjective";
  }
  return {};
}

/// Labels of a dimension in canonical order.
inline std::vector<CategoryLabel> labels_of(Dimension d) {
  std::vector<CategoryLabel> out;
  switch (d) {
    case Dimension::Acceptability:
      out.assign(kAcceptabilityOrder.begin(), kAcceptabilityOrder.end());
      break;
    case Dimension::Grade:
      out.assign(kGradeOrder.begin(), kGradeOrder.end());
      break;
    case Dimension::Adjective:
      out.assign(kAdjectiveOrder.begin(), kAdjectiveOrder.end());
      break;
  }
  return out;
}

inline ScoreBreakdown breakdown(const ResponseRow& row) {
  ScoreBreakdown b;
  for (std::size_t i = 0; i < kItemCount; i += 2) {
    b.positive_sum += row[i] - 1;
    b.negative_sum += 5 - row[i + 1];
  }
  return b;
}

inline SusScore score_response(const ResponseRow& row) {
  return SusScore::from_points(breakdown(row).points());
}

inline std::vector<SusScore> score_all(std::span<const ResponseRow> rows) {
  std::vector<SusScore> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(score_response(row));
  return out;
}

// Classifiers take any real so derived values (e.g. a mean) can be labelled.
// Every interval is lower-inclusive.

constexpr Acceptability classify_acceptability(double value) {
  if (value < 50.0) return Acceptability::NotAcceptable;
  if (value < 62.5) return Acceptability::LowMarginal;
  if (value < 70.0) return Acceptability::HighMarginal;
  return Acceptability::Acceptable;
}

constexpr Grade classify_grade(double value) {
  if (value < 60.0) return Grade::F;
  if (value < 70.0) return Grade::D;
  if (value < 80.0) return Grade::C;
  if (value < 90.0) return Grade::B;
  return Grade::A;
}

constexpr Adjective classify_adjective(double value) {
  if (value < 25.0) return Adjective::WorstImaginable;
  if (value < 39.0) return Adjective::Poor;
  if (value < 52.0) return Adjective::Ok;
  if (value < 73.0) return Adjective::Good;
  if (value < 85.0) return Adjective::Excellent;
  return Adjective::BestImaginable;
}

constexpr Acceptability classify_acceptability(SusScore s) {
  return classify_acceptability(s.value());
}
constexpr Grade classify_grade(SusScore s) { return classify_grade(s.value()); }
constexpr Adjective classify_adjective(SusScore s) {
  return classify_adjective(s.value());
}

inline CategoryLabel classify(SusScore s, Dimension d) {
  switch (d) {
    case Dimension::Acceptability: return classify_acceptability(s);
    case Dimension::Grade: return classify_grade(s);
    case Dimension::Adjective: return classify_adjective(s);
  }
  throw std::invalid_argument("unknown dimension");
}

inline std::vector<CategoryLabel> classify_each(std::span<const SusScore> scores,
                                                Dimension d) {
  std::vector<CategoryLabel> out;
  out.reserve(scores.size());
  for (auto s : scores) out.push_back(classify(s, d));
  return out;
}

/// All three classifications of one score.
struct ScoreLabels {
  Acceptability acceptability;
  Grade grade;
  Adjective adjective;

  friend bool operator==(const ScoreLabels&, const ScoreLabels&) = default;
};

inline ScoreLabels classify_all(SusScore s) {
  return {classify_acceptability(s), classify_grade(s), classify_adjective(s)};
}

inline std::vector<ScoreLabels> classify_all(std::span<const SusScore> scores) {
  std::vector<ScoreLabels> out;
  out.reserve(scores.size());
  for (auto s : scores) out.push_back(classify_all(s));
  return out;
}

}  // namespace sus
