#include <doctest.h>

#include <random>

#include "brooks/oracle.hpp"
#include "support/checks.hpp"
#include "support/test_graphs.hpp"

using namespace brooks;
using namespace brooks::testing;

TEST_CASE("verify_colouring") {
  const Graph k3 = complete_graph(3);
  CHECK(verify_colouring(k3, {{1, 2, 3}, 3}).empty());
  CHECK(verify_colouring(k3, {{1, 2, 3}, 3}, 3U).empty());

  const auto mono = verify_colouring(k3, {{1, 1, 2}, 2});
  REQUIRE(mono.size() == 1);
  CHECK(mono[0] == Violation::monochromatic(0, 1));
  CHECK(to_string(mono[0]) == "MonochromaticEdge(0,1)");

  const Graph c5 = cycle_graph(5);
  const auto over = verify_colouring(c5, {{1, 2, 1, 2, 3}, 3}, 2U);
  REQUIRE(over.size() == 1);
  CHECK(over[0] == Violation::exceeded(3, 2));
  CHECK(to_string(over[0]) == "BoundExceeded(3,2)");

  const auto missing = verify_colouring(k3, {{1, 0, 3}, 3});
  REQUIRE(missing.size() == 1);
  CHECK(missing[0] == Violation::uncoloured(1));

  const auto short_list = verify_colouring(k3, {{1, 2}, 2});
  REQUIRE(short_list.size() == 1);
  CHECK(short_list[0] == Violation::uncoloured(2));
}

TEST_CASE("is_k_colourable_bruteforce") {
  CHECK_FALSE(is_k_colourable_bruteforce(cycle_graph(5), 2));
  CHECK(is_k_colourable_bruteforce(cycle_graph(5), 3));
  CHECK(is_k_colourable_bruteforce(petersen_graph(), 3));
  CHECK_FALSE(is_k_colourable_bruteforce(petersen_graph(), 2));
  CHECK(is_k_colourable_bruteforce(make(0, {}), 0));
  CHECK_FALSE(is_k_colourable_bruteforce(make(1, {}), 0));
  CHECK(is_k_colourable_bruteforce(make(3, {}), 1));
}

TEST_CASE("chromatic_number_bruteforce") {
  CHECK(chromatic_number_bruteforce(complete_graph(4)) == 4);
  CHECK(chromatic_number_bruteforce(cycle_graph(6)) == 2);
  CHECK(chromatic_number_bruteforce(k113()) == 3);
  CHECK(chromatic_number_bruteforce(make(0, {})) == 0);
  CHECK(chromatic_number_bruteforce(make(4, {})) == 1);
  CHECK(chromatic_number_bruteforce(complete_graph(12)) == 12);
}

TEST_CASE("brute force refuses large graphs") {
  CHECK_THROWS_AS(is_k_colourable_bruteforce(cycle_graph(13), 3), OracleError);
  CHECK_THROWS_AS(chromatic_number_bruteforce(cycle_graph(13)), OracleError);
}

TEST_CASE("symmetry pruning agrees with plain backtracking for n <= 5") {
  for (std::size_t n = 0; n <= 5; ++n) {
    const std::uint64_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      const Graph g = graph_from_mask(n, mask);
      for (Colour k = 0; k <= n; ++k) {
        CHECK(is_k_colourable_bruteforce(g, k, Pruning::Symmetry) == is_k_colourable_bruteforce(g, k, Pruning::None));
      }
    }
  }
}

TEST_CASE("chromatic number is monotone in k and matches colourability") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 9;
    const Graph g = graph_from_mask(n, rng() & rng());
    const Colour chi = chromatic_number_bruteforce(g);
    CHECK(is_k_colourable_bruteforce(g, chi));
    if (chi > 0) CHECK_FALSE(is_k_colourable_bruteforce(g, chi - 1));
    CHECK(is_k_colourable_bruteforce(g, chi + 1));
  }
}

TEST_CASE("cut_vertices_bruteforce") {
  CHECK(cut_vertices_bruteforce(path_graph(3)) == std::vector<Vertex>{1});
  CHECK(cut_vertices_bruteforce(path_graph(4)) == std::vector<Vertex>{1, 2});
  CHECK(cut_vertices_bruteforce(cycle_graph(5)).empty());
  CHECK(cut_vertices_bruteforce(bowtie()) == std::vector<Vertex>{2});
  CHECK(cut_vertices_bruteforce(star(3)) == std::vector<Vertex>{0});
  CHECK(cut_vertices_bruteforce(make(2, {{0, 1}})).empty());
}

TEST_CASE("blocks_bruteforce") {
  const auto b = blocks_bruteforce(bowtie());
  REQUIRE(b.size() == 2);
  CHECK(b[0] == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(b[1] == std::vector<Edge>{{2, 3}, {2, 4}, {3, 4}});
  CHECK(blocks_bruteforce(cycle_graph(4)).size() == 1);
  CHECK(blocks_bruteforce(path_graph(4)).size() == 3);
  CHECK(blocks_bruteforce(make(3, {})).empty());
}

TEST_CASE("distance_bruteforce") {
  const Graph g = c6_chord();
  const GraphView view(g);
  CHECK(distance_bruteforce(view, 0, 0) == std::optional<std::size_t>(0));
  CHECK(distance_bruteforce(view, 1, 5) == std::optional<std::size_t>(2));
  CHECK(distance_bruteforce(view, 1, 4) == std::optional<std::size_t>(3));
  CHECK(distance_bruteforce(view.without(0), 1, 5) == std::optional<std::size_t>(4));
  const Graph two = make(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(distance_bruteforce(GraphView(two), 0, 3).has_value());
}
