#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace hyperclique {

/// Fetches raw bytes for a URL; throws FetchError on failure.
using Downloader = std::function<std::string(const std::string& url)>;

struct SnapDataset {
  std::string name;
  /// Path of the gzipped edge list relative to the archive base URL.
  std::string remote_path;
};

/// Datasets known to `fetch_snap`, in a stable order.
const std::vector<SnapDataset>& known_snap_datasets();

inline constexpr std::string_view kDefaultSnapBaseUrl = "https://snap.stanford.edu/data";

struct FetchOptions {
  std::string base_url = std::string(kDefaultSnapBaseUrl);
  /// Defaults to an HTTP(S) GET through libcurl.
  Downloader downloader;
  /// Download again even when cached; on checksum mismatch the cached copy
  /// is kept and a warning is reported.
  bool refresh = false;
  /// Receives warnings (for example checksum mismatches). Optional.
  std::function<void(const std::string&)> warn;
};

/// Returns the path of the decompressed edge list `<cache_dir>/<name>.txt`,
/// downloading and caching it on first use. A warm cache performs no network
/// I/O. Unknown names raise FetchError listing the known datasets.
std::filesystem::path fetch_snap(const std::string& name, const std::filesystem::path& cache_dir,
                                 const FetchOptions& options = {});

/// gunzip of an in-memory buffer; throws FetchError on corrupt input.
std::string gunzip(std::string_view compressed);

/// libcurl-backed downloader.
std::string http_get(const std::string& url);

}  // namespace hyperclique
