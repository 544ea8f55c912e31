#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace brooks {

using Vertex = std::uint32_t;
inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

enum class GraphErrc { SelfLoop, DuplicateEdge, IdOutOfRange };

class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrc code, Vertex u, Vertex v = kNoVertex);

  GraphErrc code() const noexcept { return code_; }
  Vertex u() const noexcept { return u_; }
  Vertex v() const noexcept { return v_; }

 private:
  GraphErrc code_;
  Vertex u_;
  Vertex v_;
};

// Immutable simple undirected graph in compressed adjacency form. Each
// neighbour list is strictly increasing. Every undirected edge occupies two
// adjacency slots, and twin(s) is the slot of the same edge seen from the
// other endpoint.
class Graph {
 public:
  Graph() = default;

  std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }

  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::span<const Vertex> neighbours(Vertex v) const {
    return {targets_.data() + offsets_[v], degree(v)};
  }

  // Adjacency slots of v are [first_slot(v), first_slot(v) + degree(v)).
  std::size_t first_slot(Vertex v) const { return offsets_[v]; }
  Vertex target(std::size_t slot) const { return targets_[slot]; }
  std::size_t twin(std::size_t slot) const { return twins_[slot]; }
  std::size_t slot_count() const noexcept { return targets_.size(); }

  // Slot of edge u->v, found by binary search; nullopt if not adjacent.
  std::optional<std::size_t> slot_of(Vertex u, Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const { return slot_of(u, v).has_value(); }

  std::size_t max_degree() const;

  // All edges as (u, v) with u < v, in ascending lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph build_graph(std::size_t n, std::span<const Edge> edges);

  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
  std::vector<std::size_t> twins_;
};

// Builds a graph in O(n + m). Edge order and orientation are irrelevant.
// Throws GraphError on self-loops, repeated pairs or ids >= n.
Graph build_graph(std::size_t n, std::span<const Edge> edges);

// A graph with a set of deleted vertices, standing for the induced subgraph
// on the remaining ones. The view refers to its base graph, which must
// outlive it.
class GraphView {
 public:
  explicit GraphView(const Graph& g);
  GraphView(const Graph& g, std::span<const Vertex> removed);
  GraphView(Graph&&) = delete;
  GraphView(Graph&&, std::span<const Vertex>) = delete;

  const Graph& base() const noexcept { return *graph_; }

  bool removed(Vertex v) const { return removed_count_ != 0 && removed_[v] != 0; }
  bool contains(Vertex v) const { return !removed(v); }

  std::size_t vertex_count() const noexcept { return graph_->vertex_count() - removed_count_; }
  std::size_t removed_count() const noexcept { return removed_count_; }

  // Number of non-removed neighbours of v.
  std::size_t degree(Vertex v) const;

  // Edge count of the induced subgraph; O(n + m).
  std::size_t edge_count() const;

  // Lowest-id vertex still present, or kNoVertex for an empty view.
  Vertex first_vertex() const;

  // Copy of this view with additional vertices removed. Costs O(n).
  GraphView without(std::span<const Vertex> vertices) const;
  GraphView without(Vertex v) const { return without(std::span<const Vertex>(&v, 1)); }

  template <class F>
  void for_each_neighbour(Vertex v, F&& f) const {
    for (Vertex w : graph_->neighbours(v)) {
      if (!removed(w)) f(w);
    }
  }

 private:
  const Graph* graph_;
  std::vector<std::uint8_t> removed_;
  std::size_t removed_count_ = 0;
};

// Maximum degree of the induced subgraph; 0 when it has no edges.
std::size_t max_degree(const GraphView& view);

// Some vertex at distance exactly 2 from x inside the view.
std::optional<Vertex> distance_two_vertex(const GraphView& view, Vertex x);

struct DistanceTwo {
  Vertex vertex;  // at distance 2 from the source
  Vertex via;     // lowest-id common neighbour
};

// Two-level scan behind distance_two_vertex: neighbours u of x in ascending
// order, then neighbours w of u in ascending order; the first w that is
// neither x nor adjacent to x wins.
std::optional<DistanceTwo> find_distance_two(const GraphView& view, Vertex x);

std::string to_string(GraphErrc code);

}  // namespace brooks
