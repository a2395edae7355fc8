#include "hyperclique/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "hyperclique/error.hpp"
#include "hyperclique/generator.hpp"
#include "hyperclique/graph_io.hpp"
#include "hyperclique/kernel.hpp"

namespace hyperclique {
namespace {

/// Runs fn(i) for i in [0, count) on `jobs` threads. The first exception is
/// rethrown after all workers stop.
template <class Fn>
void parallel_for(std::size_t count, std::size_t jobs, Fn&& fn) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min(jobs, count);
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (std::size_t w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& t : workers) t.join();
  if (failure) std::rethrow_exception(failure);
}

struct GridPoint {
  std::size_t n;
  double alpha;
  double delta;
};

std::vector<GridPoint> grid(const ExperimentSpec& spec) {
  std::vector<GridPoint> points;
  for (std::size_t n : spec.n_list) {
    for (double alpha : spec.alpha_list) {
      for (double delta : spec.delta_list) points.push_back({n, alpha, delta});
    }
  }
  return points;
}

std::vector<double> solve_grid_C(const std::vector<GridPoint>& points, std::size_t jobs) {
  std::vector<double> cs(points.size());
  parallel_for(points.size(), jobs, [&](std::size_t i) {
    cs[i] = solve_C_for_avg_degree(points[i].n, points[i].alpha, points[i].delta);
  });
  return cs;
}

GeneratedGraph make_instance(const GridPoint& p, double C, std::uint64_t seed) {
  GenerateRequest request;
  request.n = p.n;
  request.alpha = p.alpha;
  request.degree = DegreeControl{C};
  request.seed = SampleSeed{seed};
  return generate(request);
}

// ---- CSV ----

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

class CsvLine {
 public:
  template <class T>
  CsvLine& operator<<(const T& value) {
    if (!first_) text_ += ',';
    first_ = false;
    if constexpr (std::is_same_v<T, double>) {
      text_ += fmt_double(value);
    } else if constexpr (std::is_same_v<T, bool>) {
      text_ += value ? "1" : "0";
    } else if constexpr (std::is_arithmetic_v<T>) {
      text_ += std::to_string(value);
    } else {
      const std::string s(value);
      if (s.find_first_of(",\n\r\"") != std::string::npos) {
        throw std::invalid_argument("CSV field contains a separator: " + s);
      }
      text_ += s;
    }
    return *this;
  }
  void emit(std::ostream& out) const { out << text_ << '\n'; }

 private:
  std::string text_;
  bool first_ = true;
};

class CsvRecord {
 public:
  CsvRecord(std::vector<std::string_view> fields, std::size_t line) : fields_(std::move(fields)), line_(line) {}

  template <class T>
  T get(std::size_t i) const {
    const std::string_view f = fields_.at(i);
    if constexpr (std::is_same_v<T, std::string>) {
      return std::string(f);
    } else if constexpr (std::is_same_v<T, bool>) {
      if (f == "1") return true;
      if (f == "0") return false;
      fail(i);
    } else {
      T value{};
      const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), value);
      if (ec != std::errc{} || ptr != f.data() + f.size()) fail(i);
      return value;
    }
  }

 private:
  [[noreturn]] void fail(std::size_t i) const {
    throw ParseError("<csv>", line_, "bad value '" + std::string(fields_[i]) + "' in column " + std::to_string(i + 1));
  }

  std::vector<std::string_view> fields_;
  std::size_t line_;
};

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

template <class Row, class Decode>
std::vector<Row> parse_csv(std::string_view text, std::string_view header, Decode&& decode) {
  std::vector<Row> rows;
  const std::size_t columns = split(header).size();
  std::size_t line_no = 0;
  bool seen_header = false;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (!seen_header) {
      if (line != header) throw ParseError("<csv>", line_no, "unexpected header");
      seen_header = true;
      continue;
    }
    auto fields = split(line);
    if (fields.size() != columns) {
      throw ParseError("<csv>", line_no,
                       "expected " + std::to_string(columns) + " columns, got " + std::to_string(fields.size()));
    }
    rows.push_back(decode(CsvRecord(std::move(fields), line_no)));
  }
  if (!seen_header) throw ParseError("<csv>", 0, "missing header");
  return rows;
}

constexpr std::string_view kKernelHeader = "n,alpha,delta,sample,seed,C,edges,omega_kernel,kernel_size,kernel_edges";
constexpr std::string_view kCactusHeader = "n,alpha,delta,accepted,kernel_size";
constexpr std::string_view kRuntimeHeader =
    "n,alpha,delta,mode,variant,stat,sample,seed,omega_kernel,omega_eval,exact,kernel_size,v_left,e_left,"
    "init_ms,kernel_ms,cneeo_ms,const_ms,indep_ms,other_ms,total_ms";
constexpr std::string_view kRealWorldHeader =
    "dataset,vertices,edges,kernel_size,v_left,e_left,runtime_ms,omega_kernel,omega_eval,exact";

}  // namespace

void ExperimentSpec::validate() const {
  if (samples == 0) throw std::invalid_argument("samples must be at least 1");
  if (kind == ExperimentKind::RealWorld) return;
  if (n_list.empty() || alpha_list.empty() || delta_list.empty()) {
    throw std::invalid_argument("parameter grids must be non-empty");
  }
  for (std::size_t n : n_list) {
    if (n == 0) throw std::invalid_argument("n must be positive");
  }
  for (double a : alpha_list) {
    if (!(a > 0.5)) throw std::invalid_argument("alpha must exceed 1/2");
  }
  for (double d : delta_list) {
    if (!(d > 0)) throw std::invalid_argument("delta must be positive");
  }
  if (kind == ExperimentKind::Runtime && configs.empty()) {
    throw std::invalid_argument("runtime experiments need at least one solver configuration");
  }
}

ExperimentSpec default_spec(ExperimentKind kind, bool full_scale) {
  ExperimentSpec spec;
  spec.kind = kind;
  switch (kind) {
    case ExperimentKind::KernelSize:
      if (full_scale) {
        spec.n_list = {1000000, 2000000, 5000000, 10000000};
        spec.alpha_list = {0.55, 0.65, 0.75, 0.85, 0.95};
        spec.delta_list = {10};
        spec.samples = 100;
      } else {
        spec.n_list = {1u << 13, 1u << 14, 1u << 15, 1u << 16, 1u << 17};
        spec.alpha_list = {0.75};
        spec.delta_list = {10};
        spec.samples = 20;
      }
      break;
    case ExperimentKind::Runtime:
      spec.n_list = full_scale ? std::vector<std::size_t>{100000, 1000000} : std::vector<std::size_t>{100000};
      spec.alpha_list = {0.75};
      spec.delta_list = {10};
      spec.samples = full_scale ? 100 : 10;
      spec.configs = {{Mode::Baseline, Variant::Red},
                      {Mode::Geo, Variant::Red},
                      {Mode::Geo, Variant::Skip},
                      {Mode::Geo, Variant::Opt},
                      {Mode::NoGeo, Variant::Opt}};
      break;
    case ExperimentKind::RealWorld:
      break;
  }
  return spec;
}

bool operator==(const RuntimeRow& a, const RuntimeRow& b) {
  auto key = [](const RuntimeRow& r) {
    const PhaseTimings& t = r.timings;
    return std::tie(r.n, r.alpha, r.delta, r.mode, r.variant, r.stat, r.sample, r.seed, r.omega_kernel, r.omega_eval,
                    r.exact, r.kernel_size, r.v_left, r.e_left, t.init, t.kernel, t.cneeo, t.construct, t.indep,
                    t.other, t.total);
  };
  return key(a) == key(b);
}

double median(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median of an empty sample");
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 == 1 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

KernelSizeResult run_kernel_size(const ExperimentSpec& spec) {
  spec.validate();
  const auto points = grid(spec);
  const auto cs = solve_grid_C(points, spec.jobs);
  const std::size_t total = points.size() * spec.samples;

  KernelSizeResult result;
  result.rows.resize(total);
  parallel_for(total, spec.jobs, [&](std::size_t i) {
    const std::size_t p = i / spec.samples;
    const std::uint64_t seed = spec.instance_seed(i);
    const GeneratedGraph gen = make_instance(points[p], cs[p], seed);
    const KernelResult kr = kernelize(gen.graph);
    KernelSizeRow& row = result.rows[i];
    row.n = points[p].n;
    row.alpha = points[p].alpha;
    row.delta = points[p].delta;
    row.sample = i % spec.samples;
    row.seed = seed;
    row.C = cs[p];
    row.edges = gen.graph.edge_count();
    row.omega_kernel = kr.initial_clique.size();
    row.kernel_size = kr.kernel.size();
    row.kernel_edges = kr.kernel_edge_count;
  });

  for (std::size_t p = 0; p < points.size(); ++p) {
    std::vector<std::size_t> sizes;
    for (std::size_t s = 0; s < spec.samples; ++s) sizes.push_back(result.rows[p * spec.samples + s].kernel_size);
    std::sort(sizes.begin(), sizes.end());
    for (std::size_t j = 0; j < sizes.size(); ++j) {
      result.cactus.push_back({points[p].n, points[p].alpha, points[p].delta, j + 1, sizes[j]});
    }
  }
  return result;
}

std::vector<RuntimeRow> run_runtime(const ExperimentSpec& spec) {
  spec.validate();
  const auto points = grid(spec);
  const auto cs = solve_grid_C(points, spec.jobs);
  const std::size_t instances = points.size() * spec.samples;
  const std::size_t per_instance = spec.configs.size();

  std::vector<RuntimeRow> runs(instances * per_instance);
  parallel_for(instances, spec.jobs, [&](std::size_t i) {
    const std::size_t p = i / spec.samples;
    const std::uint64_t seed = spec.instance_seed(i);
    GeneratedGraph gen = make_instance(points[p], cs[p], seed);
    for (std::size_t c = 0; c < per_instance; ++c) {
      const SolverConfig& config = spec.configs[c];
      Graph input = gen.graph;
      if (config.mode == Mode::NoGeo) input.clear_coordinates();
      const CliqueOutcome out = solve(input, config.mode, config.variant);
      RuntimeRow& row = runs[i * per_instance + c];
      row.n = points[p].n;
      row.alpha = points[p].alpha;
      row.delta = points[p].delta;
      row.mode = config.mode;
      row.variant = config.variant;
      row.stat = "run";
      row.sample = i % spec.samples;
      row.seed = seed;
      row.omega_kernel = out.omega_kernel;
      row.omega_eval = out.omega_eval;
      row.exact = out.exact;
      row.kernel_size = out.kernel_size;
      row.v_left = out.residual_vertices;
      row.e_left = out.residual_edges;
      row.timings = out.timings;
    }
  });

  std::vector<RuntimeRow> rows = runs;
  for (std::size_t p = 0; p < points.size(); ++p) {
    for (std::size_t c = 0; c < per_instance; ++c) {
      std::vector<const RuntimeRow*> group;
      for (std::size_t s = 0; s < spec.samples; ++s) group.push_back(&runs[(p * spec.samples + s) * per_instance + c]);
      auto med = [&](auto field) {
        std::vector<double> values;
        for (const RuntimeRow* r : group) values.push_back(static_cast<double>(field(*r)));
        return median(std::move(values));
      };
      auto med_count = [&](auto field) { return static_cast<std::size_t>(std::floor(med(field))); };
      RuntimeRow row = *group.front();
      row.stat = "median";
      row.sample = spec.samples;
      row.seed = spec.seed_base;
      row.omega_kernel = med_count([](const RuntimeRow& r) { return r.omega_kernel; });
      row.omega_eval = med_count([](const RuntimeRow& r) { return r.omega_eval; });
      row.exact = std::all_of(group.begin(), group.end(), [](const RuntimeRow* r) { return r->exact; });
      row.kernel_size = med_count([](const RuntimeRow& r) { return r.kernel_size; });
      row.v_left = med_count([](const RuntimeRow& r) { return r.v_left; });
      row.e_left = med_count([](const RuntimeRow& r) { return r.e_left; });
      row.timings.init = med([](const RuntimeRow& r) { return r.timings.init; });
      row.timings.kernel = med([](const RuntimeRow& r) { return r.timings.kernel; });
      row.timings.cneeo = med([](const RuntimeRow& r) { return r.timings.cneeo; });
      row.timings.construct = med([](const RuntimeRow& r) { return r.timings.construct; });
      row.timings.indep = med([](const RuntimeRow& r) { return r.timings.indep; });
      row.timings.other = med([](const RuntimeRow& r) { return r.timings.other; });
      row.timings.total = med([](const RuntimeRow& r) { return r.timings.total; });
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<RealWorldRow> run_realworld(const std::vector<std::string>& datasets, const std::string& cache_dir,
                                        const FetchOptions& fetch, const WarningSink& warn) {
  std::vector<RealWorldRow> rows;
  for (const std::string& name : datasets) {
    Graph g;
    try {
      g = load_edge_list(fetch_snap(name, cache_dir, fetch));
    } catch (const std::exception& e) {
      if (warn) warn("skipping " + name + ": " + e.what());
      continue;
    }
    const CliqueOutcome out = solve_heuristic(g);
    RealWorldRow row;
    row.dataset = name;
    row.vertices = g.vertex_count();
    row.edges = g.edge_count();
    row.kernel_size = out.kernel_size;
    row.v_left = out.residual_vertices;
    row.e_left = out.residual_edges;
    row.runtime_ms = out.timings.total;
    row.omega_kernel = out.omega_kernel;
    row.omega_eval = out.omega_eval;
    row.exact = out.exact;
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<KernelSizeRow>& rows) {
  out << kKernelHeader << '\n';
  for (const auto& r : rows) {
    (CsvLine() << r.n << r.alpha << r.delta << r.sample << r.seed << r.C << r.edges << r.omega_kernel
               << r.kernel_size << r.kernel_edges)
        .emit(out);
  }
}

void write_csv(std::ostream& out, const std::vector<CactusRow>& rows) {
  out << kCactusHeader << '\n';
  for (const auto& r : rows) (CsvLine() << r.n << r.alpha << r.delta << r.accepted << r.kernel_size).emit(out);
}

void write_csv(std::ostream& out, const std::vector<RuntimeRow>& rows) {
  out << kRuntimeHeader << '\n';
  for (const auto& r : rows) {
    const PhaseTimings& t = r.timings;
    (CsvLine() << r.n << r.alpha << r.delta << to_string(r.mode) << to_string(r.variant) << r.stat << r.sample
               << r.seed << r.omega_kernel << r.omega_eval << r.exact << r.kernel_size << r.v_left << r.e_left
               << t.init << t.kernel << t.cneeo << t.construct << t.indep << t.other << t.total)
        .emit(out);
  }
}

void write_csv(std::ostream& out, const std::vector<RealWorldRow>& rows) {
  out << kRealWorldHeader << '\n';
  for (const auto& r : rows) {
    (CsvLine() << r.dataset << r.vertices << r.edges << r.kernel_size << r.v_left << r.e_left << r.runtime_ms
               << r.omega_kernel << r.omega_eval << r.exact)
        .emit(out);
  }
}

std::vector<KernelSizeRow> parse_kernel_size_csv(std::string_view text) {
  return parse_csv<KernelSizeRow>(text, kKernelHeader, [](const CsvRecord& f) {
    KernelSizeRow r;
    r.n = f.get<std::size_t>(0);
    r.alpha = f.get<double>(1);
    r.delta = f.get<double>(2);
    r.sample = f.get<std::size_t>(3);
    r.seed = f.get<std::uint64_t>(4);
    r.C = f.get<double>(5);
    r.edges = f.get<std::size_t>(6);
    r.omega_kernel = f.get<std::size_t>(7);
    r.kernel_size = f.get<std::size_t>(8);
    r.kernel_edges = f.get<std::size_t>(9);
    return r;
  });
}

std::vector<CactusRow> parse_cactus_csv(std::string_view text) {
  return parse_csv<CactusRow>(text, kCactusHeader, [](const CsvRecord& f) {
    return CactusRow{f.get<std::size_t>(0), f.get<double>(1), f.get<double>(2), f.get<std::size_t>(3),
                     f.get<std::size_t>(4)};
  });
}

std::vector<RuntimeRow> parse_runtime_csv(std::string_view text) {
  return parse_csv<RuntimeRow>(text, kRuntimeHeader, [](const CsvRecord& f) {
    RuntimeRow r;
    r.n = f.get<std::size_t>(0);
    r.alpha = f.get<double>(1);
    r.delta = f.get<double>(2);
    r.mode = parse_mode(f.get<std::string>(3));
    r.variant = parse_variant(f.get<std::string>(4));
    r.stat = f.get<std::string>(5);
    r.sample = f.get<std::size_t>(6);
    r.seed = f.get<std::uint64_t>(7);
    r.omega_kernel = f.get<std::size_t>(8);
    r.omega_eval = f.get<std::size_t>(9);
    r.exact = f.get<bool>(10);
    r.kernel_size = f.get<std::size_t>(11);
    r.v_left = f.get<std::size_t>(12);
    r.e_left = f.get<std::size_t>(13);
    r.timings.init = f.get<double>(14);
    r.timings.kernel = f.get<double>(15);
    r.timings.cneeo = f.get<double>(16);
    r.timings.construct = f.get<double>(17);
    r.timings.indep = f.get<double>(18);
    r.timings.other = f.get<double>(19);
    r.timings.total = f.get<double>(20);
    return r;
  });
}

std::vector<RealWorldRow> parse_realworld_csv(std::string_view text) {
  return parse_csv<RealWorldRow>(text, kRealWorldHeader, [](const CsvRecord& f) {
    RealWorldRow r;
    r.dataset = f.get<std::string>(0);
    r.vertices = f.get<std::size_t>(1);
    r.edges = f.get<std::size_t>(2);
    r.kernel_size = f.get<std::size_t>(3);
    r.v_left = f.get<std::size_t>(4);
    r.e_left = f.get<std::size_t>(5);
    r.runtime_ms = f.get<double>(6);
    r.omega_kernel = f.get<std::size_t>(7);
    r.omega_eval = f.get<std::size_t>(8);
    r.exact = f.get<bool>(9);
    return r;
  });
}

}  // namespace hyperclique
