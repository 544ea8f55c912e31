#include <doctest.h>

#include <algorithm>

#include "brooks/connectivity.hpp"
#include "brooks/generators.hpp"
#include "support/test_graphs.hpp"

using namespace brooks;
using namespace brooks::testing;

namespace {

std::vector<std::size_t> degrees(const Graph& g) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) out.push_back(g.degree(Vertex(v)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("named families") {
  const Graph c5 = cycle_graph(5);
  CHECK(c5.edge_count() == 5);
  CHECK(naive_odd_cycle(c5));
  CHECK(naive_complete(complete_graph(6)));
  CHECK(complete_graph(0).vertex_count() == 0);

  const Graph s = split_graph(5);
  CHECK(degrees(s) == std::vector<std::size_t>{2, 2, 2, 4, 4});
  CHECK(s == k113());

  const Graph p = petersen_graph();
  CHECK(p.vertex_count() == 10);
  CHECK(p.edge_count() == 15);
  CHECK(degrees(p) == std::vector<std::size_t>(10, 3));

  CHECK_THROWS_AS(cycle_graph(2), GeneratorError);
  CHECK_THROWS_AS(split_graph(2), GeneratorError);
}

TEST_CASE("theta graphs") {
  const Graph t = theta_graph(1, 2, 3);
  CHECK(t.vertex_count() == 8);
  CHECK(t.edge_count() == 9);
  CHECK(t.degree(0) == 3);
  CHECK(t.degree(1) == 3);
  CHECK(is_biconnected(GraphView(t)));

  const Graph direct = theta_graph(0, 1, 2);
  CHECK(direct.adjacent(0, 1));
  CHECK(direct.edge_count() == 1 + 2 + 3);
  CHECK_THROWS_AS(theta_graph(0, 0, 3), GeneratorError);
}

TEST_CASE("random_connected") {
  const Graph g = random_connected(100, 300, 7);
  CHECK(g.vertex_count() == 100);
  CHECK(g.edge_count() == 300);
  CHECK(naive_connected(g));
  CHECK(g == random_connected(100, 300, 7));
  CHECK_FALSE(g == random_connected(100, 300, 8));

  // Dense requests and the extremes.
  CHECK(naive_complete(random_connected(30, 435, 1)));
  const Graph tree = random_connected(50, 49, 3);
  CHECK(naive_connected(tree));
  CHECK(random_connected(1, 0, 1).vertex_count() == 1);

  CHECK_THROWS_AS(random_connected(10, 8, 1), GeneratorError);
  CHECK_THROWS_AS(random_connected(10, 46, 1), GeneratorError);
  CHECK_THROWS_AS(random_connected(0, 0, 1), GeneratorError);
}

TEST_CASE("block_chain") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t k = 1 + seed % 7;
    const std::size_t s = 2 + seed % 5;
    const Graph g = block_chain(k, s, seed);
    CHECK(g.vertex_count() == 1 + k * (s - 1));
    CHECK(naive_connected(g));
    const auto d = biconnected_components(GraphView(g));
    CHECK(d.blocks.size() == k);
    for (const Block& b : d.blocks) CHECK(b.vertices.size() == s);
    CHECK(g == block_chain(k, s, seed));
  }
  CHECK_THROWS_AS(block_chain(0, 3, 1), GeneratorError);
  CHECK_THROWS_AS(block_chain(2, 1, 1), GeneratorError);
}

TEST_CASE("generate dispatch") {
  const std::vector<std::size_t> five{5};
  CHECK(generate("cycle", five, 0) == cycle_graph(5));
  CHECK(generate("complete", five, 0) == complete_graph(5));
  CHECK(generate("split", five, 0) == split_graph(5));
  CHECK(generate("petersen", {}, 0) == petersen_graph());
  const std::vector<std::size_t> theta{1, 2, 3};
  CHECK(generate("theta", theta, 0) == theta_graph(1, 2, 3));
  const std::vector<std::size_t> rc{20, 40};
  CHECK(generate("random_connected", rc, 9) == random_connected(20, 40, 9));
  const std::vector<std::size_t> bc{4, 3};
  CHECK(generate("block_chain", bc, 9) == block_chain(4, 3, 9));

  CHECK_THROWS_AS(generate("cycle", {}, 0), GeneratorError);
  CHECK_THROWS_AS(generate("wheel", five, 0), GeneratorError);
}
