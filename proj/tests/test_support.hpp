#pragma once

#include <array>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "suslib/ingest.hpp"
#include "suslib/scoring.hpp"

namespace sus::testing {

inline std::filesystem::path data_dir() { return SUSLIB_TEST_DATA_DIR; }

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string listing1_text() { return read_file(data_dir() / "listing1.csv"); }
inline std::string listing2_text() {
  return read_file(data_dir() / "listing2_report.txt");
}

// SUS values printed in the reference report, in input order.
inline const std::vector<double>& paper_values() {
  static const std::vector<double> v{90.0, 92.5, 85.0, 90.0, 82.5, 92.5, 90.0,
                                     92.5, 85.0, 90.0, 82.5, 92.5, 82.5, 22.5,
                                     92.5, 90.0, 92.5, 87.5, 40.0, 5.0};
  return v;
}

inline std::vector<SusScore> paper_scores() {
  std::vector<SusScore> out;
  for (double v : paper_values()) out.push_back(SusScore::from_value(v));
  return out;
}

inline ResponseRow random_row(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> likert(kLikertMin, kLikertMax);
  ResponseRow::Answers a{};
  for (auto& x : a) x = likert(rng);
  return ResponseRow(a);
}

// A fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("suslib-test-" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

}  // namespace sus::testing
