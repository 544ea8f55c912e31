#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "brooks/connectivity.hpp"
#include "brooks/graph.hpp"

namespace brooks {

using Colour = std::uint32_t;

// Colours are 1, 2, 3, ...; 0 marks an uncoloured vertex.
struct Colouring {
  std::vector<Colour> colour;
  Colour num_colours = 0;

  static Colouring uncoloured(std::size_t n) { return {std::vector<Colour>(n, 0), 0}; }

  // Recomputes num_colours as the largest entry.
  void recount();
  bool complete() const;

  friend bool operator==(const Colouring&, const Colouring&) = default;
};

enum class BlockKind { CompleteGraph, EvenCycle, OddCycle, SplitSpecial, General };

struct Classification {
  BlockKind kind = BlockKind::General;
  // The two degree n-1 vertices of a K_{1,1,n-2}, ascending; kNoVertex otherwise.
  std::array<Vertex, 2> hubs{kNoVertex, kNoVertex};

  friend bool operator==(const Classification&, const Classification&) = default;
};

// Vertices a and b at distance 2 with common neighbour v1, such that
// removing a and b leaves the graph connected.
struct ABPair {
  Vertex a = kNoVertex;
  Vertex b = kNoVertex;
  Vertex v1 = kNoVertex;

  friend bool operator==(const ABPair&, const ABPair&) = default;
};

enum class ColouringErrc {
  NotABlock,
  NotACycle,
  NotComplete,
  PreconditionViolated,
  InvalidPair,
  ImproperLocal,
  NotAPermutation,
};

class ColouringError : public std::invalid_argument {
 public:
  ColouringError(ColouringErrc code, const std::string& what);
  ColouringErrc code() const noexcept { return code_; }

 private:
  ColouringErrc code_;
};

std::string to_string(BlockKind kind);
std::string to_string(ColouringErrc code);

// Requires a connected view that is a single block (biconnected, K1 or K2);
// throws ColouringError(NotABlock) otherwise.
Classification classify_block(const GraphView& view);

// Alternates 1, 2 around the cycle from its lowest vertex; the last vertex of
// an odd cycle gets 3.
Colouring colour_cycle(const GraphView& view);

// Distinct colours 1..n in ascending vertex order.
Colouring colour_complete(const GraphView& view);

// For a biconnected view that is neither complete nor a cycle.
ABPair find_ab(const GraphView& view);

// Colours a and b with 1, orders the rest by depth-first preorder from v1 in
// the view without a and b, and colours that order back to front greedily.
// Uses at most max_degree(view) colours.
Colouring sequential_colour(const GraphView& view, const ABPair& pair);

// Colours one block given as a standalone graph: complete blocks and cycles
// directly, everything else through find_ab and sequential_colour.
Colouring colour_block(const Graph& block, Classification* kind = nullptr);

// Local colourings, one per block; entry i of locals[b] colours
// decomp.blocks[b].vertices[i].
std::vector<Colouring> colour_blocks(const Graph& g, const BlockDecomposition& decomp,
                                     std::vector<Classification>* kinds = nullptr);

// The block as a standalone graph on local ids 0..size-1 (ascending order of
// the original ids). local_id is caller scratch of size g.vertex_count().
Graph block_subgraph(const Block& block, std::span<std::uint32_t> local_id);

// Combines per-block colourings by a pre-order walk of the block-cut forest.
// Root blocks are copied; any other block is relabelled by swapping the
// colour already fixed on its parent cut vertex with the block's own colour
// for that vertex.
Colouring merge_block_colourings(const Graph& g, const BlockDecomposition& decomp,
                                 const BlockCutForest& forest, std::span<const Colouring> locals);

// Per connected component: max degree + 1 for complete graphs and odd cycles,
// max degree otherwise; the largest of these. 0 for the empty graph.
Colour brooks_bound(const Graph& g);

// First-fit colouring in the given order; throws NotAPermutation.
Colouring greedy_colour(const Graph& g, std::span<const Vertex> order);

enum class ComponentShape { CompleteGraph, EvenCycle, OddCycle, SplitSpecial, General, Separable };

std::string to_string(ComponentShape shape);

struct ComponentReport {
  Vertex lowest_vertex = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t blocks = 0;
  std::size_t max_degree = 0;
  ComponentShape shape = ComponentShape::General;
  Colour colours_used = 0;
  Colour bound = 0;
};

struct BrooksResult {
  Colouring colouring;
  std::vector<ComponentReport> components;
};

// Linear-time colouring with at most brooks_bound(g) colours.
BrooksResult brooks_colour(const Graph& g);

}  // namespace brooks
