#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "brooks/cli.hpp"
#include "brooks/dimacs.hpp"
#include "brooks/oracle.hpp"
#include "support/test_graphs.hpp"

using namespace brooks;
using namespace brooks::testing;

namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "brooks");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("brooks-cli-" + std::to_string(std::random_device{}()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }

  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("color writes a verified colouring") {
  TempDir dir;
  const auto graph = dir.write("c5.col", "c five-cycle\np edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n");
  const Run r = run({"color", graph});
  CHECK(r.code == kExitOk);
  std::istringstream in(r.out);
  const Colouring c = parse_colouring(in, 5);
  CHECK(c.num_colours == 3);
  CHECK(verify_colouring(cycle_graph(5), c).empty());

  const Run report = run({"color", graph, "--report", "--out", dir.file("c5.sol")});
  CHECK(report.code == kExitOk);
  CHECK(report.out.empty());
  CHECK(slurp(dir.file("c5.sol")) == r.out);
  CHECK(report.err.find("shape odd-cycle") != std::string::npos);
}

TEST_CASE("malformed input exits 1 with a line number") {
  TempDir dir;
  const auto loop = run({"color", dir.write("loop.col", "p edge 2 1\ne 1 1\n")});
  CHECK(loop.code == kExitInputError);
  CHECK(loop.err.find("line 2") != std::string::npos);

  const auto count = run({"color", dir.write("count.col", "p edge 3 2\ne 1 2\n")});
  CHECK(count.code == kExitInputError);
  CHECK(count.err.find("line 2") != std::string::npos);

  const auto problem = run({"color", dir.write("problem.col", "c header\np edge three 2\n")});
  CHECK(problem.code == kExitInputError);
  CHECK(problem.err.find("line 2") != std::string::npos);

  CHECK(run({"color", dir.file("missing.col")}).code == kExitInputError);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run({}).code == kExitInputError);
  CHECK(run({"paint"}).code == kExitInputError);
  CHECK(run({"color"}).code == kExitInputError);
  CHECK(run({"gen", "wheel", "5"}).code == kExitInputError);
  CHECK(run({"gen", "cycle", "2"}).code == kExitInputError);
  CHECK(run({"bench", "--sizes", "64"}).code == kExitInputError);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("verify") {
  TempDir dir;
  const auto graph = dir.write("k3.col", "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
  const auto good = dir.write("good.sol", "s col 3\nv 1 1\nv 2 2\nv 3 3\n");
  const auto bad = dir.write("bad.sol", "s col 2\nv 1 1\nv 2 1\nv 3 2\n");
  const auto partial = dir.write("partial.sol", "s col 2\nv 1 1\nv 2 2\n");

  const Run ok = run({"verify", graph, good});
  CHECK(ok.code == kExitOk);
  CHECK(ok.out == "ok 3 colours\n");
  CHECK(run({"verify", graph, good, "--brooks"}).code == kExitOk);

  const Run mono = run({"verify", graph, bad});
  CHECK(mono.code == kExitVerifyFailed);
  CHECK(mono.err.find("MonochromaticEdge(0,1)") != std::string::npos);

  const Run over = run({"verify", graph, good, "--bound", "2"});
  CHECK(over.code == kExitVerifyFailed);
  CHECK(over.err.find("BoundExceeded(3,2)") != std::string::npos);

  CHECK(run({"verify", graph, partial}).code == kExitVerifyFailed);
  CHECK(run({"verify", graph, good, "--bound", "3", "--brooks"}).code == kExitInputError);
}

TEST_CASE("gen writes parseable DIMACS") {
  const Run r = run({"gen", "random_connected", "30", "60", "--seed", "4"});
  CHECK(r.code == kExitOk);
  std::istringstream in(r.out);
  CHECK(parse_dimacs(in) == random_connected(30, 60, 4));

  TempDir dir;
  CHECK(run({"gen", "petersen", "--out", dir.file("p.col")}).code == kExitOk);
  std::ifstream file(dir.file("p.col"));
  CHECK(parse_dimacs(file) == petersen_graph());
}

TEST_CASE("bench writes the CSV schema") {
  TempDir dir;
  const Run r = run({"bench", "--sizes", "64,128", "--repeats", "2", "--csv", dir.file("b.csv")});
  CHECK(r.code == kExitOk);
  const std::string csv = slurp(dir.file("b.csv"));
  CHECK(csv.starts_with("n,m,build_ns,colour_ns,colours,delta\n64,192,"));
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
  CHECK(run({"bench", "--sizes", "128,64", "--csv", dir.file("c.csv")}).code == kExitInputError);
}
