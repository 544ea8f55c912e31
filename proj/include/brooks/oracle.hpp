#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "brooks/colouring.hpp"
#include "brooks/graph.hpp"

namespace brooks {

struct Violation {
  enum class Kind { MonochromaticEdge, UncolouredVertex, BoundExceeded };

  Kind kind;
  Vertex u = kNoVertex;  // vertex or first edge endpoint
  Vertex v = kNoVertex;  // second edge endpoint
  Colour used = 0;
  Colour bound = 0;

  static Violation monochromatic(Vertex a, Vertex b) { return {Kind::MonochromaticEdge, a, b, 0, 0}; }
  static Violation uncoloured(Vertex a) { return {Kind::UncolouredVertex, a, kNoVertex, 0, 0}; }
  static Violation exceeded(Colour used, Colour bound) { return {Kind::BoundExceeded, kNoVertex, kNoVertex, used, bound}; }

  friend bool operator==(const Violation&, const Violation&) = default;
};

std::string to_string(const Violation& violation);

// Empty iff every vertex is coloured, no edge is monochromatic, and (when a
// bound is given) the largest colour is within it. Entries missing from a
// short colouring count as uncoloured.
std::vector<Violation> verify_colouring(const Graph& g, const Colouring& c,
                                        std::optional<Colour> bound = std::nullopt);

class OracleError : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr std::size_t kBruteForceLimit = 12;

enum class Pruning { Symmetry, None };

// Backtracking over vertices in ascending id. With symmetry pruning vertex i
// only tries colours 1..min(i+1, k). Throws OracleError for n > 12.
bool is_k_colourable_bruteforce(const Graph& g, Colour k, Pruning pruning = Pruning::Symmetry);

// Smallest k with a proper k-colouring; 0 for the empty graph.
Colour chromatic_number_bruteforce(const Graph& g);

// Vertices whose removal increases the number of connected components.
// Quadratic; meant for small graphs.
std::vector<Vertex> cut_vertices_bruteforce(const Graph& g);

// Edges grouped into blocks without depth-first search: two edges share a
// block unless some vertex separates them. Each group lists edges (u < v)
// in ascending order, and groups are ordered by their first edge.
std::vector<std::vector<Edge>> blocks_bruteforce(const Graph& g);

// Shortest-path distance by breadth-first search; nullopt if unreachable.
std::optional<std::size_t> distance_bruteforce(const GraphView& view, Vertex from, Vertex to);

}  // namespace brooks
