#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "brooks/graph.hpp"

namespace brooks {

inline constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

struct Components {
  std::vector<std::uint32_t> id;  // kNone for removed vertices
  std::size_t count = 0;
};

// Component ids are assigned in order of each component's lowest vertex.
Components connected_components(const GraphView& view);

// A biconnected component. Vertices are ascending. A block with one vertex
// and no edges stands for an isolated vertex.
struct Block {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
};

// Blocks of one connected component are contiguous and listed parent-first:
// the first block of a component contains its lowest vertex, and every later
// block hangs off a cut vertex of some earlier block.
struct BlockDecomposition {
  std::vector<Block> blocks;
  std::vector<std::uint8_t> cut_vertex;           // per base vertex
  std::vector<std::uint32_t> block_of_slot;       // per adjacency slot of the base graph; kNone if unused
  std::vector<std::uint32_t> component_of_block;  // per block
  std::size_t component_count = 0;

  bool is_cut_vertex(Vertex v) const { return cut_vertex[v] != 0; }

  // Block holding edge u-v, or kNone if the edge is absent from the view.
  std::uint32_t block_of_edge(const Graph& g, Vertex u, Vertex v) const;
};

// Lowpoint depth-first search with an explicit stack. Neighbours are explored
// in ascending id order, so the result is a deterministic function of the view.
BlockDecomposition biconnected_components(const GraphView& view);

// Connected, at least three vertices and no cut vertex.
bool is_biconnected(const GraphView& view);

// Bipartite forest: nodes [0, block_count) are blocks, node block_count + i
// is the cut vertex cut_vertices[i]. One tree per connected component.
struct BlockCutForest {
  std::size_t block_count = 0;
  std::vector<Vertex> cut_vertices;                 // ascending
  std::vector<std::vector<std::size_t>> adjacency;  // per node
  std::vector<std::size_t> roots;                   // first block node of each tree

  std::size_t node_count() const { return adjacency.size(); }
  bool is_block_node(std::size_t node) const { return node < block_count; }
  Vertex cut_vertex_of(std::size_t node) const { return cut_vertices[node - block_count]; }
};

BlockCutForest block_cut_forest(const BlockDecomposition& decomp);

struct EndBlock {
  std::size_t block;
  Vertex cut;

  friend bool operator==(const EndBlock&, const EndBlock&) = default;
};

class ConnectivityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Leaves of the block-cut tree, in block order. Throws ConnectivityError
// unless the decomposed view is connected and has at least two blocks.
std::vector<EndBlock> end_blocks(const BlockDecomposition& decomp);

}  // namespace brooks
