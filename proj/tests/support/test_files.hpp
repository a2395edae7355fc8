#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace hyperclique::testing {

/// gzip-compresses `text` in memory (for fake downloaders).
std::string gzip(std::string_view text);

/// Fresh, empty directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace hyperclique::testing
