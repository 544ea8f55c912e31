#include "brooks/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "brooks/bench.hpp"
#include "brooks/colouring.hpp"
#include "brooks/dimacs.hpp"
#include "brooks/generators.hpp"
#include "brooks/oracle.hpp"

namespace brooks {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return parse_dimacs(in);
  } catch (const FormatError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Colouring load_colouring(const std::string& path, std::size_t n) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return parse_colouring(in, n);
  } catch (const FormatError& e) {
    throw InputError(path + ": " + e.what());
  }
}

// Writes via `fn` to the named file, or to `fallback` when path is empty.
template <class F>
void write_to(const std::string& path, std::ostream& fallback, F&& fn) {
  if (path.empty()) {
    fn(fallback);
    return;
  }
  std::ofstream file(path);
  if (!file) throw InputError("cannot write " + path);
  fn(file);
}

int report_violations(const std::vector<Violation>& violations, std::ostream& err) {
  for (const Violation& v : violations) err << "violation: " << to_string(v) << '\n';
  return kExitVerifyFailed;
}

int cmd_color(const std::string& path, const std::string& out_path, bool report, std::ostream& out,
              std::ostream& err) {
  const Graph g = load_graph(path);
  const BrooksResult result = brooks_colour(g);
  const Colour bound = brooks_bound(g);
  const auto violations = verify_colouring(g, result.colouring, bound);
  if (!violations.empty()) return report_violations(violations, err);

  write_to(out_path, out, [&](std::ostream& os) { emit_colouring(result.colouring, os); });
  if (report) {
    for (const ComponentReport& r : result.components) {
      err << "c component " << r.lowest_vertex + 1 << " vertices " << r.vertices << " edges " << r.edges
          << " blocks " << r.blocks << " delta " << r.max_degree << " shape " << to_string(r.shape) << " colours "
          << r.colours_used << " bound " << r.bound << '\n';
    }
    err << "c total colours " << result.colouring.num_colours << " bound " << bound << '\n';
  }
  return kExitOk;
}

int cmd_verify(const std::string& graph_path, const std::string& colouring_path, std::optional<Colour> bound,
               bool brooks, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(graph_path);
  const Colouring c = load_colouring(colouring_path, g.vertex_count());
  if (brooks) bound = brooks_bound(g);
  const auto violations = verify_colouring(g, c, bound);
  if (!violations.empty()) return report_violations(violations, err);
  out << "ok " << c.num_colours << " colours";
  if (bound) out << " (bound " << *bound << ")";
  out << '\n';
  return kExitOk;
}

int cmd_gen(const std::string& kind, const std::vector<std::size_t>& params, std::uint64_t seed,
            const std::string& out_path, std::ostream& out) {
  Graph g;
  try {
    g = generate(kind, params, seed);
  } catch (const GeneratorError& e) {
    throw InputError(e.what());
  }
  write_to(out_path, out, [&](std::ostream& os) { write_dimacs(g, os); });
  return kExitOk;
}

int cmd_bench(const std::vector<std::size_t>& sizes, std::size_t repeats, std::uint64_t seed,
              const std::string& csv_path, std::ostream& out, std::ostream& err) {
  std::vector<BenchmarkRecord> records;
  try {
    records = bench(sizes, repeats, seed);
  } catch (const BenchVerificationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  write_to(csv_path, out, [&](std::ostream& os) { write_bench_csv(records, os); });
  for (const BenchmarkRecord& r : records) {
    out << "n=" << r.n << " m=" << r.m << " build_ns=" << r.build_ns << " colour_ns=" << r.colour_ns
        << " colours=" << r.colours << " delta=" << r.delta << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Brooks colouring: at most max-degree colours unless complete or an odd cycle"};
  app.require_subcommand(1);

  std::string color_file;
  std::string color_out;
  bool color_report = false;
  auto* color = app.add_subcommand("color", "Colour a DIMACS graph");
  color->add_option("file", color_file, "DIMACS edge file")->required();
  color->add_option("--out", color_out, "Write the colouring here instead of stdout");
  color->add_flag("--report", color_report, "Per-component summary on stderr");

  std::string verify_graph;
  std::string verify_colouring_file;
  std::optional<Colour> verify_bound;
  bool verify_brooks = false;
  auto* verify = app.add_subcommand("verify", "Check a colouring against a graph");
  verify->add_option("graph", verify_graph, "DIMACS edge file")->required();
  verify->add_option("colouring", verify_colouring_file, "Colouring file (s col / v lines)")->required();
  auto* bound_opt = verify->add_option("--bound", verify_bound, "Maximum number of colours");
  verify->add_flag("--brooks", verify_brooks, "Use the Brooks bound of the graph")->excludes(bound_opt);

  std::string gen_kind;
  std::vector<std::size_t> gen_params;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Generate a graph in DIMACS format");
  gen->add_option("kind", gen_kind,
                  "cycle | complete | split | petersen | theta | random_connected | block_chain")
      ->required();
  gen->add_option("params", gen_params, "Family parameters");
  gen->add_option("--seed", gen_seed, "Random seed");
  gen->add_option("--out", gen_out, "Write the graph here instead of stdout");

  std::vector<std::size_t> bench_sizes;
  std::size_t bench_repeats = 5;
  std::uint64_t bench_seed = 1;
  std::string bench_csv;
  auto* bench_cmd = app.add_subcommand("bench", "Time brooks colouring on random_connected(n, 3n)");
  bench_cmd->add_option("--sizes", bench_sizes, "Comma-separated ascending vertex counts")
      ->required()
      ->delimiter(',');
  bench_cmd->add_option("--repeats", bench_repeats, "Runs per size (median reported)");
  bench_cmd->add_option("--seed", bench_seed, "Random seed");
  bench_cmd->add_option("--csv", bench_csv, "CSV output file")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*color) return cmd_color(color_file, color_out, color_report, out, err);
    if (*verify) return cmd_verify(verify_graph, verify_colouring_file, verify_bound, verify_brooks, out, err);
    if (*gen) return cmd_gen(gen_kind, gen_params, gen_seed, gen_out, out);
    if (*bench_cmd) return cmd_bench(bench_sizes, bench_repeats, bench_seed, bench_csv, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace brooks
