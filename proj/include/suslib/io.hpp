#pragma once

#include <cerrno>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sus {

class WriteFailed : public std::runtime_error {
 public:
  WriteFailed(std::filesystem::path path, const std::string& cause)
      : std::runtime_error(path.string() + ": cannot write: " + cause),
        path_(std::move(path)) {}

  const std::filesystem::path& path() const noexcept { return path_; }

 private:
  std::filesystem::path path_;
};

/// Truncates and writes text byte-for-byte. Missing parent directories are an
/// error, not created.
inline void write_text_file(std::string_view text,
                            const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw WriteFailed(path, std::strerror(errno));
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) throw WriteFailed(path, std::strerror(errno));
}

}  // namespace sus
