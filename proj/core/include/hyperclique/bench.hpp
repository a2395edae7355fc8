#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperclique/snap.hpp"
#include "hyperclique/solver.hpp"

namespace hyperclique {

enum class ExperimentKind { KernelSize, Runtime, RealWorld };

struct SolverConfig {
  Mode mode = Mode::Geo;
  Variant variant = Variant::Opt;
};

struct ExperimentSpec {
  ExperimentKind kind = ExperimentKind::KernelSize;
  std::vector<std::size_t> n_list;
  std::vector<double> alpha_list;
  std::vector<double> delta_list;
  std::size_t samples = 1;
  std::uint64_t seed_base = 0;
  /// Runtime experiments only.
  std::vector<SolverConfig> configs;
  /// Worker threads; 0 means hardware concurrency.
  std::size_t jobs = 1;

  /// Throws std::invalid_argument on empty grids, samples == 0 or an empty
  /// config list for runtime experiments.
  void validate() const;

  /// Instance seed: seed_base + running instance index over the grid.
  std::uint64_t instance_seed(std::size_t instance_index) const { return seed_base + instance_index; }
};

/// Default grids, reduced (desk scale) or as in the original experiments.
ExperimentSpec default_spec(ExperimentKind kind, bool full_scale);

struct KernelSizeRow {
  std::size_t n = 0;
  double alpha = 0;
  double delta = 0;
  std::size_t sample = 0;
  std::uint64_t seed = 0;
  double C = 0;
  std::size_t edges = 0;
  std::size_t omega_kernel = 0;
  std::size_t kernel_size = 0;
  std::size_t kernel_edges = 0;

  friend bool operator==(const KernelSizeRow&, const KernelSizeRow&) = default;
};

/// Cactus data: kernel sizes of one grid point sorted ascending; `accepted`
/// counts the instances with kernel size at most `kernel_size`.
struct CactusRow {
  std::size_t n = 0;
  double alpha = 0;
  double delta = 0;
  std::size_t accepted = 0;
  std::size_t kernel_size = 0;

  friend bool operator==(const CactusRow&, const CactusRow&) = default;
};

struct RuntimeRow {
  std::size_t n = 0;
  double alpha = 0;
  double delta = 0;
  Mode mode = Mode::Geo;
  Variant variant = Variant::Opt;
  /// "run" for a single instance, "median" for the aggregate over samples.
  std::string stat = "run";
  /// Sample index for runs; number of aggregated samples for medians.
  std::size_t sample = 0;
  std::uint64_t seed = 0;
  std::size_t omega_kernel = 0;
  std::size_t omega_eval = 0;
  bool exact = true;
  std::size_t kernel_size = 0;
  std::size_t v_left = 0;
  std::size_t e_left = 0;
  PhaseTimings timings;

  friend bool operator==(const RuntimeRow& a, const RuntimeRow& b);
};

struct RealWorldRow {
  std::string dataset;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t kernel_size = 0;
  std::size_t v_left = 0;
  std::size_t e_left = 0;
  double runtime_ms = 0;
  std::size_t omega_kernel = 0;
  std::size_t omega_eval = 0;
  bool exact = true;

  friend bool operator==(const RealWorldRow&, const RealWorldRow&) = default;
};

struct KernelSizeResult {
  std::vector<KernelSizeRow> rows;
  std::vector<CactusRow> cactus;
};

KernelSizeResult run_kernel_size(const ExperimentSpec& spec);
/// One "run" row per (grid point, sample, config) followed by one "median"
/// row per (grid point, config).
std::vector<RuntimeRow> run_runtime(const ExperimentSpec& spec);

using WarningSink = std::function<void(const std::string&)>;
/// Fetches (or reads from cache), normalizes and solves each dataset in
/// nogeo mode. Datasets that fail to load are skipped with a warning.
std::vector<RealWorldRow> run_realworld(const std::vector<std::string>& datasets, const std::string& cache_dir,
                                        const FetchOptions& fetch = {}, const WarningSink& warn = {});

/// Median of `values` (mean of the two middle elements for even counts).
double median(std::vector<double> values);

/// CSV with a header row; doubles are written with 17 significant digits so
/// parsing restores them exactly. Parsers throw ParseError on malformed input.
void write_csv(std::ostream& out, const std::vector<KernelSizeRow>& rows);
void write_csv(std::ostream& out, const std::vector<CactusRow>& rows);
void write_csv(std::ostream& out, const std::vector<RuntimeRow>& rows);
void write_csv(std::ostream& out, const std::vector<RealWorldRow>& rows);
std::vector<KernelSizeRow> parse_kernel_size_csv(std::string_view text);
std::vector<CactusRow> parse_cactus_csv(std::string_view text);
std::vector<RuntimeRow> parse_runtime_csv(std::string_view text);
std::vector<RealWorldRow> parse_realworld_csv(std::string_view text);

}  // namespace hyperclique
