#include "hyperclique/snap.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <curl/curl.h>
#include <zlib.h>

#include "hyperclique/error.hpp"
#include "hyperclique/graph_io.hpp"

namespace hyperclique {
namespace {

std::string crc32_hex(std::string_view data) {
  uLong crc = crc32(0L, Z_NULL, 0);
  std::size_t pos = 0;
  while (pos < data.size()) {
    const std::size_t chunk = std::min<std::size_t>(data.size() - pos, 1u << 30);
    crc = crc32(crc, reinterpret_cast<const Bytef*>(data.data() + pos), static_cast<uInt>(chunk));
    pos += chunk;
  }
  char buf[16];
  std::snprintf(buf, sizeof buf, "%08lx", static_cast<unsigned long>(crc));
  return buf;
}

void write_atomically(const std::filesystem::path& path, std::string_view data) {
  auto tmp = path;
  tmp += ".part";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw FetchError("cannot write " + tmp.string());
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) throw FetchError("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::size_t curl_append(char* ptr, std::size_t size, std::size_t nmemb, void* userdata) {
  auto* out = static_cast<std::string*>(userdata);
  out->append(ptr, size * nmemb);
  return size * nmemb;
}

}  // namespace

const std::vector<SnapDataset>& known_snap_datasets() {
  static const std::vector<SnapDataset> datasets = {
      {"as-skitter", "as-skitter.txt.gz"},
      {"ca-AstroPh", "ca-AstroPh.txt.gz"},
      {"ca-CondMat", "ca-CondMat.txt.gz"},
      {"ca-HepPh", "ca-HepPh.txt.gz"},
      {"com-amazon", "bigdata/communities/com-amazon.ungraph.txt.gz"},
      {"com-dblp", "bigdata/communities/com-dblp.ungraph.txt.gz"},
      {"com-lj", "bigdata/communities/com-lj.ungraph.txt.gz"},
      {"com-youtube", "bigdata/communities/com-youtube.ungraph.txt.gz"},
      {"Gnutella31", "p2p-Gnutella31.txt.gz"},
      {"Slashdot0811", "soc-Slashdot0811.txt.gz"},
      {"Slashdot0902", "soc-Slashdot0902.txt.gz"},
      {"soc-Epinions1", "soc-Epinions1.txt.gz"},
      {"soc-pokec", "soc-pokec-relationships.txt.gz"},
      {"web-BerkStan", "web-BerkStan.txt.gz"},
      {"web-Google", "web-Google.txt.gz"},
      {"web-NotreDame", "web-NotreDame.txt.gz"},
      {"web-Stanford", "web-Stanford.txt.gz"},
      {"WikiTalk", "wiki-Talk.txt.gz"},
      {"Wiki-Vote", "wiki-Vote.txt.gz"},
  };
  return datasets;
}

std::string gunzip(std::string_view compressed) {
  z_stream stream{};
  if (inflateInit2(&stream, 16 + MAX_WBITS) != Z_OK) throw FetchError("gunzip: inflateInit2 failed");
  stream.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(compressed.data()));
  stream.avail_in = static_cast<uInt>(compressed.size());

  std::string out;
  char buffer[1 << 16];
  int rc = Z_OK;
  while (rc != Z_STREAM_END) {
    stream.next_out = reinterpret_cast<Bytef*>(buffer);
    stream.avail_out = sizeof buffer;
    rc = inflate(&stream, Z_NO_FLUSH);
    if (rc != Z_OK && rc != Z_STREAM_END) {
      inflateEnd(&stream);
      throw FetchError("gunzip: corrupt input (zlib error " + std::to_string(rc) + ")");
    }
    out.append(buffer, sizeof buffer - stream.avail_out);
    if (rc == Z_OK && stream.avail_in == 0 && stream.avail_out != 0) {
      inflateEnd(&stream);
      throw FetchError("gunzip: truncated input");
    }
  }
  inflateEnd(&stream);
  return out;
}

std::string http_get(const std::string& url) {
  static const bool initialized = [] { return curl_global_init(CURL_GLOBAL_DEFAULT) == CURLE_OK; }();
  if (!initialized) throw FetchError("libcurl initialization failed");

  CURL* curl = curl_easy_init();
  if (curl == nullptr) throw FetchError("curl_easy_init failed");
  std::string body;
  curl_easy_setopt(curl, CURLOPT_URL, url.c_str());
  curl_easy_setopt(curl, CURLOPT_FOLLOWLOCATION, 1L);
  curl_easy_setopt(curl, CURLOPT_FAILONERROR, 1L);
  curl_easy_setopt(curl, CURLOPT_CONNECTTIMEOUT, 20L);
  curl_easy_setopt(curl, CURLOPT_WRITEFUNCTION, curl_append);
  curl_easy_setopt(curl, CURLOPT_WRITEDATA, &body);
  const CURLcode rc = curl_easy_perform(curl);
  curl_easy_cleanup(curl);
  if (rc != CURLE_OK) throw FetchError("GET " + url + " failed: " + curl_easy_strerror(rc));
  return body;
}

std::filesystem::path fetch_snap(const std::string& name, const std::filesystem::path& cache_dir,
                                 const FetchOptions& options) {
  const auto& datasets = known_snap_datasets();
  const auto it = std::find_if(datasets.begin(), datasets.end(),
                               [&](const SnapDataset& d) { return d.name == name; });
  if (it == datasets.end()) {
    std::ostringstream msg;
    msg << "unknown SNAP dataset '" << name << "'; known datasets:";
    for (const auto& d : datasets) msg << ' ' << d.name;
    throw FetchError(msg.str());
  }

  const auto file = cache_dir / (name + ".txt");
  auto checksum_file = file;
  checksum_file += ".crc32";
  const bool cached = std::filesystem::exists(file);
  if (cached && !options.refresh) return file;

  std::error_code ec;
  std::filesystem::create_directories(cache_dir, ec);
  if (ec) throw FetchError("cannot create cache directory " + cache_dir.string() + ": " + ec.message());

  const std::string url = options.base_url + "/" + it->remote_path;
  std::string text;
  try {
    const Downloader& download = options.downloader ? options.downloader : Downloader(http_get);
    text = gunzip(download(url));
  } catch (const FetchError& e) {
    if (cached) {
      if (options.warn) options.warn(std::string("refresh of ") + name + " failed, keeping cache: " + e.what());
      return file;
    }
    throw;
  }
  const std::string checksum = crc32_hex(text);

  if (cached) {
    std::string previous;
    if (std::filesystem::exists(checksum_file)) previous = read_file(checksum_file);
    else previous = crc32_hex(read_file(file));
    if (previous != checksum && options.warn) {
      options.warn("checksum mismatch for " + name + " (cached " + previous + ", downloaded " + checksum +
                   "); keeping cached copy");
    }
    return file;
  }

  write_atomically(file, text);
  write_atomically(checksum_file, checksum);
  return file;
}

}  // namespace hyperclique
