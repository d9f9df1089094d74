#pragma once

#include <array>
#include <charconv>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

namespace sus {

inline constexpr std::size_t kItemCount = 10;
inline constexpr int kLikertMin = 1;
inline constexpr int kLikertMax = 5;
inline constexpr char kDefaultDelimiter = ';';

enum class IngestErrc {
  EmptyInput,
  BadFieldCount,
  NotAnInteger,
  OutOfRange,
  FileNotFound,
  ReadFailed,
};

/// Raised by the parser and the file loader. Line and field numbers are
/// 1-based; zero means "not applicable" for the error kind.
class IngestError : public std::runtime_error {
 public:
  IngestError(IngestErrc kind, std::string message, std::size_t line = 0,
              std::size_t field = 0, long long value = 0, std::string text = {},
              std::filesystem::path path = {})
      : std::runtime_error(std::move(message)),
        kind_(kind),
        line_(line),
        field_(field),
        value_(value),
        text_(std::move(text)),
        path_(std::move(path)) {}

  IngestErrc kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t field() const noexcept { return field_; }
  // Field count for BadFieldCount, offending integer for OutOfRange.
  long long value() const noexcept { return value_; }
  // Offending token for NotAnInteger.
  const std::string& text() const noexcept { return text_; }
  const std::filesystem::path& path() const noexcept { return path_; }

  IngestError with_path(const std::filesystem::path& path) const {
    return IngestError(kind_, path.string() + ": " + what(), line_, field_,
                       value_, text_, path);
  }

 private:
  IngestErrc kind_;
  std::size_t line_;
  std::size_t field_;
  long long value_;
  std::string text_;
  std::filesystem::path path_;
};

/// One participant's ten Likert answers. answers()[k] is item k+1.
class ResponseRow {
 public:
  using Answers = std::array<int, kItemCount>;

  /// Throws std::invalid_argument if any answer is outside [1, 5].
  explicit ResponseRow(const Answers& answers) : answers_(answers) {
    for (int a : answers_) {
      if (a < kLikertMin || a > kLikertMax) {
        throw std::invalid_argument("Likert answer out of range: " +
                                    std::to_string(a));
      }
    }
  }

  const Answers& answers() const noexcept { return answers_; }
  int operator[](std::size_t i) const { return answers_[i]; }

  friend bool operator==(const ResponseRow&, const ResponseRow&) = default;

 private:
  Answers answers_;
};

struct ParseReport {
  std::vector<ResponseRow> rows;
  // Number of physical lines in the input, blank ones included.
  std::size_t source_line_count = 0;
};

namespace detail {

inline std::string_view trim_ascii(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n\v\f";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split(std::string_view line, char delim) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = line.find(delim, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

inline ResponseRow parse_line(std::string_view line, std::size_t line_no,
                              char delim) {
  const auto fields = split(line, delim);
  if (fields.size() != kItemCount) {
    throw IngestError(IngestErrc::BadFieldCount,
                      "line " + std::to_string(line_no) + ": expected " +
                          std::to_string(kItemCount) + " fields, found " +
                          std::to_string(fields.size()),
                      line_no, 0, static_cast<long long>(fields.size()));
  }

  ResponseRow::Answers answers{};
  for (std::size_t i = 0; i < kItemCount; ++i) {
    const std::size_t field_no = i + 1;
    const auto token = trim_ascii(fields[i]);
    long long value = 0;
    // from_chars rejects a leading '+'; accept it as plain base-10 notation.
    auto digits = token;
    if (digits.size() > 1 && digits.front() == '+') digits.remove_prefix(1);
    const auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (token.empty() || ec == std::errc::invalid_argument ||
        ptr != digits.data() + digits.size()) {
      throw IngestError(IngestErrc::NotAnInteger,
                        "line " + std::to_string(line_no) + ", field " +
                            std::to_string(field_no) + ": '" +
                            std::string(token) + "' is not an integer",
                        line_no, field_no, 0, std::string(token));
    }
    if (ec == std::errc::result_out_of_range || value < kLikertMin ||
        value > kLikertMax) {
      const bool overflow = ec == std::errc::result_out_of_range;
      throw IngestError(
          IngestErrc::OutOfRange,
          "line " + std::to_string(line_no) + ", field " +
              std::to_string(field_no) + ": value " +
              (overflow ? std::string(token) : std::to_string(value)) +
              " is outside the Likert range [1, 5]",
          line_no, field_no, overflow ? 0 : value, std::string(token));
    }
    answers[i] = static_cast<int>(value);
  }
  return ResponseRow(answers);
}

}  // namespace detail

/// Parses delimiter-separated response lines (LF or CRLF). Blank lines are
/// skipped, there is no header row, and the first error aborts the parse.
inline ParseReport parse_responses(std::string_view text,
                                   char delimiter = kDefaultDelimiter) {
  ParseReport report;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (detail::trim_ascii(line).empty()) continue;
    report.rows.push_back(detail::parse_line(line, line_no, delimiter));
  }
  report.source_line_count = line_no;
  if (report.rows.empty()) {
    throw IngestError(IngestErrc::EmptyInput, "input contains no responses");
  }
  return report;
}

inline ParseReport load_responses(const std::filesystem::path& path,
                                  char delimiter = kDefaultDelimiter) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw IngestError(IngestErrc::FileNotFound,
                      path.string() + ": file not found", 0, 0, 0, {}, path);
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IngestError(IngestErrc::ReadFailed,
                      path.string() + ": cannot open file", 0, 0, 0, {}, path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) {
    throw IngestError(IngestErrc::ReadFailed,
                      path.string() + ": read error", 0, 0, 0, {}, path);
  }
  try {
    return parse_responses(buf.str(), delimiter);
  } catch (const IngestError& e) {
    throw e.with_path(path);
  }
}

/// Inverse of parse_responses for valid rows: one line per row, LF-terminated.
inline std::string format_responses(std::span<const ResponseRow> rows,
                                    char delimiter = kDefaultDelimiter) {
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < kItemCount; ++i) {
      if (i) out += delimiter;
      out += static_cast<char>('0' + row[i]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace sus
