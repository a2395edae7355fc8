#include "cli.hpp"

#include <CLI/CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

#include "hyperclique/bench.hpp"
#include "hyperclique/error.hpp"
#include "hyperclique/generator.hpp"
#include "hyperclique/graph_io.hpp"
#include "hyperclique/kernel.hpp"
#include "hyperclique/snap.hpp"
#include "hyperclique/solver.hpp"

namespace hyperclique::cli {
namespace {

using nlohmann::json;

/// Bad flag combination detected after parsing; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::optional<std::uint64_t> seed;
  bool json = false;
  bool quiet = false;
  std::string cache_dir;
};

struct Context {
  const Globals& globals;
  const Environment& env;
  std::ostream& out;
  std::ostream& err;

  void warn(const std::string& message) const {
    if (!globals.quiet) err << "warning: " << message << '\n';
  }

  void emit(const json& doc) const {
    if (globals.json) {
      out << doc.dump() << '\n';
      return;
    }
    for (const auto& [key, value] : doc.items()) {
      out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
  }
};

// ---- graph loading ----

struct LoadedGraph {
  Graph graph;
};

LoadedGraph load_input(const std::string& graph_path, const std::string& coords_path) {
  LoadedGraph loaded;
  if (coords_path.empty()) {
    loaded.graph = load_edge_list(graph_path);
    return loaded;
  }
  std::vector<PolarPoint> coords = load_coordinates(coords_path);
  EdgeListOptions options;
  options.remap_ids = false;
  options.vertex_count = coords.size();
  loaded.graph = load_edge_list(graph_path, options);
  loaded.graph.set_coordinates(std::move(coords));
  return loaded;
}

json labelled(const Graph& g, std::span<const Vertex> vertices) {
  json ids = json::array();
  for (Vertex v : vertices) ids.push_back(g.label(v));
  return ids;
}

json timings_json(const PhaseTimings& t) {
  return {{"init", t.init},   {"kernel", t.kernel}, {"cneeo", t.cneeo}, {"const", t.construct},
          {"indep", t.indep}, {"other", t.other},   {"total", t.total}};
}

// ---- commands ----

struct GenerateArgs {
  std::size_t n = 0;
  double alpha = 0.75;
  std::optional<double> C;
  std::optional<double> avg_deg;
  std::string out;
  std::string coords;
};

int cmd_generate(const Context& ctx, const GenerateArgs& a) {
  if (!ctx.globals.seed) throw UsageError("generate needs an explicit --seed");
  if (a.n == 0) throw UsageError("--n must be at least 1");
  if (!(a.alpha > 0.5)) throw UsageError("--alpha must exceed 0.5");
  if (a.C.has_value() == a.avg_deg.has_value()) throw UsageError("give exactly one of --C and --avg-deg");

  GenerateRequest request;
  request.n = a.n;
  request.alpha = a.alpha;
  request.seed = SampleSeed{*ctx.globals.seed};
  if (a.C) {
    request.degree = DegreeControl{*a.C};
  } else {
    if (!(*a.avg_deg > 0)) throw UsageError("--avg-deg must be positive");
    request.degree = AverageDegree{*a.avg_deg};
  }
  const GeneratedGraph gen = generate(request);
  if (!a.out.empty()) write_edge_list(gen.graph, a.out);
  if (!a.coords.empty()) write_coordinates(gen.graph.coordinates(), a.coords);
  ctx.emit({{"n", gen.params.n},
            {"m", gen.graph.edge_count()},
            {"alpha", gen.params.alpha},
            {"R", gen.params.R},
            {"C", gen.params.C},
            {"seed", *ctx.globals.seed}});
  return kExitOk;
}

struct GraphArgs {
  std::string graph;
  std::string coords;
};

int cmd_kernel(const Context& ctx, const GraphArgs& a) {
  const LoadedGraph in = load_input(a.graph, a.coords);
  const KernelResult kr = kernelize(in.graph);
  ctx.emit({{"n", in.graph.vertex_count()},
            {"m", in.graph.edge_count()},
            {"omega_kernel", kr.initial_clique.size()},
            {"initial_clique", labelled(in.graph, kr.initial_clique)},
            {"kernel_size", kr.kernel.size()},
            {"kernel_edges", kr.kernel_edge_count},
            {"timings", {{"init", kr.init_ms}, {"kernel", kr.kernel_ms}}}});
  return kExitOk;
}

struct SolveArgs {
  GraphArgs input;
  std::string mode;
  std::string variant = "opt";
};

int cmd_solve(const Context& ctx, const SolveArgs& a) {
  Mode mode = a.input.coords.empty() ? Mode::NoGeo : Mode::Geo;
  Variant variant = Variant::Opt;
  try {
    if (!a.mode.empty()) mode = parse_mode(a.mode);
    variant = parse_variant(a.variant);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (mode == Mode::Geo && a.input.coords.empty()) throw UsageError("--mode geo needs --coords");

  const LoadedGraph in = load_input(a.input.graph, a.input.coords);
  const CliqueOutcome r = solve(in.graph, mode, variant);
  ctx.emit({{"mode", to_string(r.mode)},
            {"variant", to_string(r.variant)},
            {"omega_eval", r.omega_eval},
            {"omega_kernel", r.omega_kernel},
            {"exact", r.exact},
            {"clique", labelled(in.graph, r.clique)},
            {"kernel_size", r.kernel_size},
            {"kernel_edges", r.kernel_edges},
            {"v_left", r.residual_vertices},
            {"e_left", r.residual_edges},
            {"timings", timings_json(r.timings)}});
  return r.exact ? kExitOk : kExitHeuristic;
}

int cmd_oracle(const Context& ctx, const GraphArgs& a) {
  const LoadedGraph in = load_input(a.graph, a.coords);
  const std::vector<Vertex> clique = oracle_max_clique(in.graph);
  ctx.emit({{"omega", clique.size()}, {"clique", labelled(in.graph, clique)}});
  return kExitOk;
}

struct ValidateArgs {
  GraphArgs input;
  std::string ordering;
};

int cmd_validate(const Context& ctx, const ValidateArgs& a) {
  std::string kind = a.ordering;
  if (kind.empty()) kind = a.input.coords.empty() ? "greedy" : "length";
  if (kind != "greedy" && kind != "length") throw UsageError("--ordering must be 'length' or 'greedy'");
  if (kind == "length" && a.input.coords.empty()) throw UsageError("--ordering length needs --coords");

  const LoadedGraph in = load_input(a.input.graph, a.input.coords);
  const EdgeOrdering ordering = kind == "length" ? build_cneeo_geometric(in.graph) : build_cneeo_greedy(in.graph);
  const bool valid = ordering.complete && validate_cneeo(in.graph, ordering);
  ctx.emit({{"ordering", kind},
            {"edges", in.graph.edge_count()},
            {"placed", ordering.edges.size()},
            {"complete", ordering.complete},
            {"valid", valid}});
  return kExitOk;
}

struct FetchArgs {
  std::string name;
  bool refresh = false;
  bool list = false;
};

std::string cache_dir(const Context& ctx) {
  if (!ctx.globals.cache_dir.empty()) return ctx.globals.cache_dir;
  if (ctx.env.getenv) {
    if (auto dir = ctx.env.getenv("HYPERCLIQUE_CACHE"); dir && !dir->empty()) return *dir;
  }
  return "snap-cache";
}

FetchOptions fetch_options(const Context& ctx, bool refresh) {
  FetchOptions options = ctx.env.fetch;
  options.refresh = refresh;
  options.warn = [&ctx](const std::string& m) { ctx.warn(m); };
  return options;
}

int cmd_fetch_snap(const Context& ctx, const FetchArgs& a) {
  if (a.list) {
    json names = json::array();
    for (const SnapDataset& d : known_snap_datasets()) names.push_back(d.name);
    ctx.emit({{"datasets", names}});
    return kExitOk;
  }
  if (a.name.empty()) throw UsageError("fetch-snap needs --name (or --list)");
  const auto path = fetch_snap(a.name, cache_dir(ctx), fetch_options(ctx, a.refresh));
  ctx.emit({{"name", a.name}, {"path", path.string()}});
  return kExitOk;
}

struct BenchArgs {
  std::string kind;
  std::vector<std::size_t> n_list;
  std::vector<double> alpha_list;
  std::vector<double> delta_list;
  std::optional<std::size_t> samples;
  std::optional<std::uint64_t> seed_base;
  std::vector<std::string> configs;
  std::vector<std::string> datasets;
  std::string out;
  std::size_t jobs = 1;
  bool full_scale = false;
};

void write_output(const Context& ctx, const std::string& path, const std::function<void(std::ostream&)>& body) {
  if (path.empty() || path == "-") {
    body(ctx.out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot open " + path + " for writing");
  body(file);
  if (!file) throw Error("write to " + path + " failed");
}

SolverConfig parse_config(const std::string& text) {
  const auto dash = text.find('-');
  SolverConfig c;
  c.mode = parse_mode(text.substr(0, dash));
  c.variant = dash == std::string::npos ? Variant::Opt : parse_variant(text.substr(dash + 1));
  return c;
}

int cmd_bench(const Context& ctx, const BenchArgs& a) {
  if (a.kind == "realworld") {
    std::vector<std::string> names = a.datasets;
    if (names.empty()) {
      for (const SnapDataset& d : known_snap_datasets()) names.push_back(d.name);
    }
    const auto rows = run_realworld(names, cache_dir(ctx), fetch_options(ctx, false),
                                    [&ctx](const std::string& m) { ctx.warn(m); });
    write_output(ctx, a.out, [&](std::ostream& o) { write_csv(o, rows); });
    return kExitOk;
  }

  const ExperimentKind kind = a.kind == "kernel-size" ? ExperimentKind::KernelSize : ExperimentKind::Runtime;
  ExperimentSpec spec = default_spec(kind, a.full_scale);
  if (!a.n_list.empty()) spec.n_list = a.n_list;
  if (!a.alpha_list.empty()) spec.alpha_list = a.alpha_list;
  if (!a.delta_list.empty()) spec.delta_list = a.delta_list;
  if (a.samples) spec.samples = *a.samples;
  spec.jobs = a.jobs;
  if (a.seed_base) {
    spec.seed_base = *a.seed_base;
  } else if (ctx.globals.seed) {
    spec.seed_base = *ctx.globals.seed;
  } else {
    throw UsageError("bench needs --seed-base (or --seed)");
  }
  if (!a.configs.empty()) {
    spec.configs.clear();
    try {
      for (const std::string& c : a.configs) spec.configs.push_back(parse_config(c));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  if (kind == ExperimentKind::KernelSize) {
    const KernelSizeResult result = run_kernel_size(spec);
    write_output(ctx, a.out, [&](std::ostream& o) { write_csv(o, result.rows); });
    if (!a.out.empty() && a.out != "-") {
      write_output(ctx, a.out + ".cactus.csv", [&](std::ostream& o) { write_csv(o, result.cactus); });
    }
  } else {
    const auto rows = run_runtime(spec);
    write_output(ctx, a.out, [&](std::ostream& o) { write_csv(o, rows); });
  }
  return kExitOk;
}

void add_graph_options(CLI::App* cmd, GraphArgs& a, bool coords) {
  cmd->add_option("--graph", a.graph, "Edge list (u v per line)")->required()->check(CLI::ExistingFile);
  if (coords) cmd->add_option("--coords", a.coords, "Coordinate file (id r phi per line)")->check(CLI::ExistingFile);
}

}  // namespace

Environment default_environment() {
  Environment env;
  env.getenv = [](const std::string& name) -> std::optional<std::string> {
    const char* value = std::getenv(name.c_str());
    if (value == nullptr) return std::nullopt;
    return std::string(value);
  };
  return env;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, const Environment& env) {
  CLI::App app{"Maximum clique on hyperbolic random graphs and real-world networks", "hyperclique"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  Globals globals;
  app.add_option("--seed", globals.seed, "Seed for graph generation (required by generate)");
  app.add_flag("--json", globals.json, "Print a single JSON document on stdout");
  app.add_flag("--quiet", globals.quiet, "Suppress warnings on stderr");
  app.add_option("--cache-dir", globals.cache_dir, "Dataset cache directory (env HYPERCLIQUE_CACHE)");

  GenerateArgs gen;
  auto* generate_cmd = app.add_subcommand("generate", "Sample a hyperbolic random graph");
  generate_cmd->add_option("--n", gen.n, "Number of vertices")->required();
  generate_cmd->add_option("--alpha", gen.alpha, "Radial dispersion, > 0.5");
  generate_cmd->add_option("--C", gen.C, "Radius offset: R = 2 ln n + C");
  generate_cmd->add_option("--avg-deg", gen.avg_deg, "Target expected average degree");
  generate_cmd->add_option("--out", gen.out, "Edge list output (TSV)");
  generate_cmd->add_option("--coords,--coords-out", gen.coords, "Coordinate output (TSV)");

  GraphArgs kernel_args;
  auto* kernel_cmd = app.add_subcommand("kernel", "Initial clique and kernel size");
  add_graph_options(kernel_cmd, kernel_args, true);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Maximum clique");
  add_graph_options(solve_cmd, solve_args.input, true);
  solve_cmd->add_option("--mode", solve_args.mode, "geo, nogeo or baseline (default: geo with --coords)");
  solve_cmd->add_option("--variant", solve_args.variant, "red, skip or opt (geo mode)");

  GraphArgs oracle_args;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force maximum clique (small graphs)");
  add_graph_options(oracle_cmd, oracle_args, true);

  ValidateArgs validate_args;
  auto* validate_cmd = app.add_subcommand("validate", "Build and check an edge elimination ordering");
  add_graph_options(validate_cmd, validate_args.input, true);
  validate_cmd->add_option("--ordering", validate_args.ordering, "length (needs --coords) or greedy");

  FetchArgs fetch_args;
  auto* fetch_cmd = app.add_subcommand("fetch-snap", "Download and cache a SNAP dataset");
  fetch_cmd->add_option("--name", fetch_args.name, "Dataset name");
  fetch_cmd->add_flag("--refresh", fetch_args.refresh, "Download again even if cached");
  fetch_cmd->add_flag("--list", fetch_args.list, "List known datasets");

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Run an experiment and write CSV");
  bench_cmd->add_option("kind", bench_args.kind, "kernel-size, runtime or realworld")
      ->required()
      ->check(CLI::IsMember({"kernel-size", "runtime", "realworld"}));
  bench_cmd->add_option("--n-list", bench_args.n_list, "Vertex counts")->delimiter(',');
  bench_cmd->add_option("--alpha-list", bench_args.alpha_list, "alpha values")->delimiter(',');
  bench_cmd->add_option("--delta-list", bench_args.delta_list, "Average degrees")->delimiter(',');
  bench_cmd->add_option("--samples", bench_args.samples, "Instances per grid point");
  bench_cmd->add_option("--seed-base", bench_args.seed_base, "Instance i uses seed seed-base + i");
  bench_cmd->add_option("--configs", bench_args.configs, "Runtime solvers, e.g. geo-red,geo-opt,nogeo,baseline")
      ->delimiter(',');
  bench_cmd->add_option("--datasets", bench_args.datasets, "Real-world dataset names")->delimiter(',');
  bench_cmd->add_option("--out", bench_args.out, "CSV output path (default stdout)");
  bench_cmd->add_option("--jobs", bench_args.jobs, "Worker threads (0 = all cores)");
  bench_cmd->add_flag("--paper-scale", bench_args.full_scale, "Use the full-size parameter grids");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  const Context ctx{globals, env, out, err};
  try {
    if (generate_cmd->parsed()) return cmd_generate(ctx, gen);
    if (kernel_cmd->parsed()) return cmd_kernel(ctx, kernel_args);
    if (solve_cmd->parsed()) return cmd_solve(ctx, solve_args);
    if (oracle_cmd->parsed()) return cmd_oracle(ctx, oracle_args);
    if (validate_cmd->parsed()) return cmd_validate(ctx, validate_args);
    if (fetch_cmd->parsed()) return cmd_fetch_snap(ctx, fetch_args);
    if (bench_cmd->parsed()) return cmd_bench(ctx, bench_args);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace hyperclique::cli
