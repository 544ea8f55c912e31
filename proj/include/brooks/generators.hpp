#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "brooks/graph.hpp"

namespace brooks {

class GeneratorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);

// K_{1,1,n-2}: hubs 0 and 1 adjacent to each other and to every other vertex.
Graph split_graph(std::size_t n);

Graph petersen_graph();

// Hubs 0 and 1 joined by three internally disjoint paths with p, q and r
// inner vertices. At most one of p, q, r may be zero.
Graph theta_graph(std::size_t p, std::size_t q, std::size_t r);

// Uniformly random labelled spanning tree (random Pruefer code) plus m-n+1
// distinct random non-tree edges.
std::vector<Edge> random_connected_edges(std::size_t n, std::size_t m, std::uint64_t seed);
Graph random_connected(std::size_t n, std::size_t m, std::uint64_t seed);

// k blocks of s vertices each; block i shares one vertex with block i-1.
// Blocks with s >= 3 are a random Hamiltonian cycle plus random chords.
// Vertex labels are shuffled at the end.
Graph block_chain(std::size_t k, std::size_t s, std::uint64_t seed);

// Dispatch by name: cycle n | complete n | split n | petersen |
// theta p q r | random_connected n m | block_chain k s.
Graph generate(std::string_view kind, std::span<const std::size_t> params, std::uint64_t seed);

}  // namespace brooks
