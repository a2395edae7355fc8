#include "hyperclique/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "hyperclique/error.hpp"

namespace hyperclique {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

// Splits `text` into lines and hands each (line number, content) to `fn`.
template <class Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    fn(line_no, text.substr(pos, end - pos));
    pos = end + 1;
  }
}

// Cursor over one line.
class Tokens {
 public:
  explicit Tokens(std::string_view line) : line_(line) {}

  bool at_end() {
    skip();
    return pos_ >= line_.size();
  }

  std::string_view next() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < line_.size() && !is_space(line_[pos_])) ++pos_;
    return line_.substr(start, pos_ - start);
  }

 private:
  void skip() {
    while (pos_ < line_.size() && is_space(line_[pos_])) ++pos_;
  }

  std::string_view line_;
  std::size_t pos_ = 0;
};

template <class T>
bool parse_number(std::string_view token, T& out) {
  if (token.empty()) return false;
  const char* first = token.data();
  if (*first == '+') ++first;
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

bool is_comment_or_blank(std::string_view line) {
  for (char c : line) {
    if (is_space(c)) continue;
    return c == '#';
  }
  return true;
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return std::move(buffer).str();
}

Graph parse_edge_list(std::string_view text, const EdgeListOptions& options, std::string_view source) {
  std::vector<std::int64_t> raw;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    if (is_comment_or_blank(line)) return;
    Tokens tokens(line);
    std::int64_t a = 0;
    std::int64_t b = 0;
    const std::string_view ta = tokens.next();
    const std::string_view tb = tokens.next();
    if (!parse_number(ta, a) || !parse_number(tb, b)) {
      throw ParseError(std::string(source), line_no,
                       "expected two integer vertex ids, got '" + std::string(line) + "'");
    }
    if (!options.remap_ids) {
      for (std::int64_t id : {a, b}) {
        if (id < 0) throw ParseError(std::string(source), line_no, "negative vertex id " + std::to_string(id));
        if (options.vertex_count && static_cast<std::uint64_t>(id) >= *options.vertex_count) {
          throw ParseError(std::string(source), line_no,
                           "vertex id " + std::to_string(id) + " exceeds vertex count " +
                               std::to_string(*options.vertex_count));
        }
      }
    }
    raw.push_back(a);
    raw.push_back(b);
  });

  std::vector<Edge> edges;
  edges.reserve(raw.size() / 2);
  std::size_t n = 0;
  std::vector<std::int64_t> labels;

  if (options.remap_ids) {
    labels = raw;
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    n = labels.size();
    auto rank = [&](std::int64_t id) {
      return static_cast<Vertex>(std::lower_bound(labels.begin(), labels.end(), id) - labels.begin());
    };
    for (std::size_t i = 0; i < raw.size(); i += 2) edges.push_back({rank(raw[i]), rank(raw[i + 1])});
  } else {
    const std::int64_t max_id = raw.empty() ? -1 : *std::max_element(raw.begin(), raw.end());
    n = options.vertex_count.value_or(static_cast<std::size_t>(max_id + 1));
    for (std::size_t i = 0; i < raw.size(); i += 2) {
      edges.push_back({static_cast<Vertex>(raw[i]), static_cast<Vertex>(raw[i + 1])});
    }
  }

  Graph g = Graph::from_edges(n, edges);
  if (options.remap_ids) {
    bool identity = true;
    for (std::size_t i = 0; i < labels.size() && identity; ++i) {
      identity = labels[i] == static_cast<std::int64_t>(i);
    }
    if (!identity) g.set_labels(std::move(labels));
  }
  return g;
}

Graph load_edge_list(const std::filesystem::path& path, const EdgeListOptions& options) {
  return parse_edge_list(read_file(path), options, path.string());
}

void write_edge_list(const Graph& g, std::ostream& out) {
  std::string buffer;
  char tmp[48];
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (v <= u) continue;
      const int len = std::snprintf(tmp, sizeof tmp, "%u\t%u\n", u, v);
      buffer.append(tmp, static_cast<std::size_t>(len));
    }
    if (buffer.size() > (1u << 20)) {
      out << buffer;
      buffer.clear();
    }
  }
  out << buffer;
}

void write_edge_list(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  write_edge_list(g, out);
  if (!out) throw Error("write failed: " + path.string());
}

void write_coordinates(std::span<const PolarPoint> points, std::ostream& out) {
  char tmp[96];
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::snprintf(tmp, sizeof tmp, "%zu\t%.17g\t%.17g\n", i, points[i].r, points[i].phi);
    out << tmp;
  }
}

void write_coordinates(std::span<const PolarPoint> points, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  write_coordinates(points, out);
  if (!out) throw Error("write failed: " + path.string());
}

std::vector<PolarPoint> parse_coordinates(std::string_view text, std::string_view source) {
  struct Row {
    std::size_t id;
    double r;
    double phi;
  };
  std::vector<Row> rows;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    if (is_comment_or_blank(line)) return;
    Tokens tokens(line);
    Row row{};
    if (!parse_number(tokens.next(), row.id) || !parse_number(tokens.next(), row.r) ||
        !parse_number(tokens.next(), row.phi) || !std::isfinite(row.r) || !std::isfinite(row.phi) ||
        row.r < 0) {
      throw ParseError(std::string(source), line_no,
                       "expected 'id r phi' with r >= 0, got '" + std::string(line) + "'");
    }
    rows.push_back(row);
  });
  std::vector<PolarPoint> points(rows.size());
  std::vector<std::uint8_t> seen(rows.size(), 0);
  for (const Row& row : rows) {
    if (row.id >= rows.size() || seen[row.id]) {
      throw ParseError(std::string(source), 0,
                       "coordinate ids must be exactly 0.." + std::to_string(rows.size() - 1) +
                           " (bad or repeated id " + std::to_string(row.id) + ")");
    }
    seen[row.id] = 1;
    points[row.id] = PolarPoint(row.r, row.phi);
  }
  return points;
}

std::vector<PolarPoint> load_coordinates(const std::filesystem::path& path) {
  return parse_coordinates(read_file(path), path.string());
}

}  // namespace hyperclique
