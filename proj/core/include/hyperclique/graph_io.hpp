#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "hyperclique/graph.hpp"

namespace hyperclique {

struct EdgeListOptions {
  /// When true, arbitrary (possibly sparse) integer ids are mapped to dense
  /// ids by ascending value and kept as labels. When false, ids are taken
  /// literally and must lie in [0, vertex_count).
  bool remap_ids = true;
  /// Vertex count for literal ids; defaults to max id + 1.
  std::optional<std::size_t> vertex_count;
};

/// Parses whitespace-separated integer pairs, one per line. Blank lines and
/// lines starting with '#' are skipped; any further tokens on a line are
/// ignored. Direction is dropped, multi-edges collapsed and loops removed;
/// loop endpoints still count as vertices. `source` names the input in errors.
Graph parse_edge_list(std::string_view text, const EdgeListOptions& options = {},
                      std::string_view source = "<memory>");

Graph load_edge_list(const std::filesystem::path& path, const EdgeListOptions& options = {});

/// Writes `u<TAB>v` with u < v, one edge per line, dense ids.
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list(const Graph& g, const std::filesystem::path& path);

/// Writes `id<TAB>r<TAB>phi` with 17 significant digits.
void write_coordinates(std::span<const PolarPoint> points, std::ostream& out);
void write_coordinates(std::span<const PolarPoint> points, const std::filesystem::path& path);

/// Reads a coordinate file. Ids must be exactly 0..n-1 (in any order).
std::vector<PolarPoint> parse_coordinates(std::string_view text, std::string_view source = "<memory>");
std::vector<PolarPoint> load_coordinates(const std::filesystem::path& path);

/// Reads a whole file; throws hyperclique::Error if it cannot be opened.
std::string read_file(const std::filesystem::path& path);

}  // namespace hyperclique
