#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "suslib/charts.hpp"
#include "suslib/ingest.hpp"
#include "suslib/report.hpp"
#include "suslib/scoring.hpp"
#include "suslib/stats.hpp"

namespace sus::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

enum class Subcommand { Score, Report, Chart };

struct CliConfig {
  Subcommand subcommand = Subcommand::Score;
  std::filesystem::path input_path;
  std::optional<std::filesystem::path> output_path;
  std::optional<ChartKind> chart_kind;  // set iff subcommand == Chart
  std::optional<char> delimiter_override;
};

namespace detail {

inline std::vector<SusScore> load_scores(const CliConfig& cfg) {
  const auto parsed =
      load_responses(cfg.input_path, cfg.delimiter_override.value_or(kDefaultDelimiter));
  return score_all(parsed.rows);
}

inline int execute(const CliConfig& cfg, std::ostream& out) {
  const auto scores = load_scores(cfg);
  switch (cfg.subcommand) {
    case Subcommand::Score:
      for (auto s : scores) out << format_fixed(s.value(), 1) << '\n';
      break;
    case Subcommand::Report: {
      const auto doc = scores.size() == 1 ? render_single_report(scores.front())
                                          : render_report(scores);
      out << doc.text;
      write_report(doc, cfg.output_path.value_or(kDefaultReportPath));
      break;
    }
    case Subcommand::Chart: {
      const auto kind = *cfg.chart_kind;
      const auto chart = render_chart(kind, scores);
      write_chart(chart, cfg.output_path.value_or(
                             std::string(to_string(kind)) + ".svg"));
      break;
    }
  }
  out.flush();
  return kOk;
}

}  // namespace detail

/// Command-line grammar. Usage errors surface from parse() as CLI::ParseError
/// and --help as CLI::CallForHelp.
class ArgParser {
 public:
  ArgParser() {
    app_.require_subcommand(1);
    app_.fallthrough();
    app_.add_option("--delimiter", delimiter_,
                    "Field delimiter (single character, default ';')");

    score_ = app_.add_subcommand("score", "Print one SUS value per response");
    score_->add_option("input", input_, "Response file")->required();

    report_ = app_.add_subcommand(
        "report", "Print the survey report and write it to a file");
    report_->add_option("input", input_, "Response file")->required();
    report_->add_option("-o,--output", output_,
                        "Report path (default results.txt)");

    chart_ = app_.add_subcommand("chart", "Write one SVG chart");
    chart_->add_option("kind", kind_, "histogram | acceptability | grade | adjective")
        ->required()
        ->check(CLI::IsMember({"histogram", "acceptability", "grade", "adjective"}));
    chart_->add_option("input", input_, "Response file")->required();
    chart_->add_option("-o,--output", output_, "SVG path (default <kind>.svg)");
  }

  ArgParser(const ArgParser&) = delete;
  ArgParser& operator=(const ArgParser&) = delete;

  /// args[0] is the program name.
  CliConfig parse(std::span<const std::string> args) {
    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    app_.parse(static_cast<int>(argv.size()), argv.data());

    CliConfig cfg;
    if (report_->parsed()) cfg.subcommand = Subcommand::Report;
    if (chart_->parsed()) {
      cfg.subcommand = Subcommand::Chart;
      cfg.chart_kind = parse_chart_kind(kind_);
    }
    cfg.input_path = input_;
    if (!output_.empty()) cfg.output_path = output_;
    if (app_.count("--delimiter") > 0) {
      if (delimiter_.size() != 1) {
        throw CLI::ValidationError("--delimiter", "must be a single character");
      }
      cfg.delimiter_override = delimiter_.front();
    }
    return cfg;
  }

  std::string help() const { return app_.help(); }

 private:
  CLI::App app_{"System Usability Scale scoring, reporting and charts", "sus"};
  CLI::App* score_ = nullptr;
  CLI::App* report_ = nullptr;
  CLI::App* chart_ = nullptr;
  std::string delimiter_;
  std::string input_;
  std::string output_;
  std::string kind_;
};

/// Runs the tool. Exit codes: 0 success, 1 input or write failure, 2 usage.
inline int run(std::span<const std::string> args, std::ostream& out,
               std::ostream& err) {
  ArgParser parser;
  CliConfig cfg;
  try {
    cfg = parser.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << parser.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "sus: " << e.what() << '\n';
    return kUsage;
  }

  try {
    return detail::execute(cfg, out);
  } catch (const std::exception& e) {
    err << "sus: " << e.what() << '\n';
  }
  return kFailure;
}

}  // namespace sus::cli
