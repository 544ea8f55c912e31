#include "brooks/graph.hpp"

#include <algorithm>

namespace brooks {

namespace {

std::string describe(GraphErrc code, Vertex u, Vertex v) {
  switch (code) {
    case GraphErrc::SelfLoop:
      return "self-loop at vertex " + std::to_string(u);
    case GraphErrc::DuplicateEdge:
      return "duplicate edge " + std::to_string(u) + "-" + std::to_string(v);
    case GraphErrc::IdOutOfRange:
      return "vertex id " + std::to_string(u) + " out of range";
  }
  return "graph error";
}

}  // namespace

GraphError::GraphError(GraphErrc code, Vertex u, Vertex v)
    : std::runtime_error(describe(code, u, v)), code_(code), u_(u), v_(v) {}

std::string to_string(GraphErrc code) {
  switch (code) {
    case GraphErrc::SelfLoop:
      return "SelfLoop";
    case GraphErrc::DuplicateEdge:
      return "DuplicateEdge";
    case GraphErrc::IdOutOfRange:
      return "IdOutOfRange";
  }
  return "?";
}

Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  for (const Edge& e : edges) {
    if (e.u >= n) throw GraphError(GraphErrc::IdOutOfRange, e.u);
    if (e.v >= n) throw GraphError(GraphErrc::IdOutOfRange, e.v);
    if (e.u == e.v) throw GraphError(GraphErrc::SelfLoop, e.u);
  }

  std::vector<std::size_t> offsets(n + 1, 0);
  for (const Edge& e : edges) {
    ++offsets[e.u + 1];
    ++offsets[e.v + 1];
  }
  for (std::size_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];

  // Unsorted lists first, then a transpose pass: visiting sources in
  // ascending order appends them to each target list in ascending order.
  std::vector<Vertex> unsorted(offsets[n]);
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const Edge& e : edges) {
    unsorted[cursor[e.u]++] = e.v;
    unsorted[cursor[e.v]++] = e.u;
  }

  Graph g;
  g.targets_.resize(offsets[n]);
  std::copy(offsets.begin(), offsets.end() - 1, cursor.begin());
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t s = offsets[u]; s < offsets[u + 1]; ++s) {
      g.targets_[cursor[unsorted[s]]++] = static_cast<Vertex>(u);
    }
  }

  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t s = offsets[u] + 1; s < offsets[u + 1]; ++s) {
      if (g.targets_[s] == g.targets_[s - 1]) {
        const auto a = static_cast<Vertex>(u);
        const Vertex b = g.targets_[s];
        throw GraphError(GraphErrc::DuplicateEdge, std::min(a, b), std::max(a, b));
      }
    }
  }

  g.twins_.resize(offsets[n]);
  std::copy(offsets.begin(), offsets.end() - 1, cursor.begin());
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t s = offsets[u]; s < offsets[u + 1]; ++s) {
      g.twins_[s] = cursor[g.targets_[s]]++;
    }
  }

  g.offsets_ = std::move(offsets);
  return g;
}

std::optional<std::size_t> Graph::slot_of(Vertex u, Vertex v) const {
  const auto adj = neighbours(u);
  const auto it = std::lower_bound(adj.begin(), adj.end(), v);
  if (it == adj.end() || *it != v) return std::nullopt;
  return offsets_[u] + static_cast<std::size_t>(it - adj.begin());
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (std::size_t v = 0; v < vertex_count(); ++v) best = std::max(best, degree(static_cast<Vertex>(v)));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (std::size_t u = 0; u < vertex_count(); ++u) {
    for (Vertex w : neighbours(static_cast<Vertex>(u))) {
      if (u < w) out.push_back({static_cast<Vertex>(u), w});
    }
  }
  return out;
}

GraphView::GraphView(const Graph& g) : graph_(&g) {}

GraphView::GraphView(const Graph& g, std::span<const Vertex> removed) : graph_(&g) {
  if (removed.empty()) return;
  removed_.assign(g.vertex_count(), 0);
  for (Vertex v : removed) {
    if (v >= g.vertex_count()) throw GraphError(GraphErrc::IdOutOfRange, v);
    if (removed_[v] == 0) {
      removed_[v] = 1;
      ++removed_count_;
    }
  }
}

std::size_t GraphView::degree(Vertex v) const {
  if (removed_count_ == 0) return graph_->degree(v);
  std::size_t d = 0;
  for (Vertex w : graph_->neighbours(v)) d += removed_[w] == 0 ? 1 : 0;
  return d;
}

std::size_t GraphView::edge_count() const {
  if (removed_count_ == 0) return graph_->edge_count();
  std::size_t twice = 0;
  for (std::size_t v = 0; v < graph_->vertex_count(); ++v) {
    if (removed_[v] == 0) twice += degree(static_cast<Vertex>(v));
  }
  return twice / 2;
}

Vertex GraphView::first_vertex() const {
  for (std::size_t v = 0; v < graph_->vertex_count(); ++v) {
    if (!removed(static_cast<Vertex>(v))) return static_cast<Vertex>(v);
  }
  return kNoVertex;
}

GraphView GraphView::without(std::span<const Vertex> vertices) const {
  GraphView out(*graph_);
  out.removed_ = removed_;
  out.removed_count_ = removed_count_;
  if (out.removed_.empty()) out.removed_.assign(graph_->vertex_count(), 0);
  for (Vertex v : vertices) {
    if (v >= graph_->vertex_count()) throw GraphError(GraphErrc::IdOutOfRange, v);
    if (out.removed_[v] == 0) {
      out.removed_[v] = 1;
      ++out.removed_count_;
    }
  }
  return out;
}

std::size_t max_degree(const GraphView& view) {
  if (view.removed_count() == 0) return view.base().max_degree();
  std::size_t best = 0;
  const auto n = view.base().vertex_count();
  for (std::size_t v = 0; v < n; ++v) {
    if (view.contains(static_cast<Vertex>(v))) best = std::max(best, view.degree(static_cast<Vertex>(v)));
  }
  return best;
}

std::optional<DistanceTwo> find_distance_two(const GraphView& view, Vertex x) {
  std::vector<std::uint8_t> near(view.base().vertex_count(), 0);
  near[x] = 1;
  view.for_each_neighbour(x, [&](Vertex u) { near[u] = 1; });

  std::optional<DistanceTwo> found;
  view.for_each_neighbour(x, [&](Vertex u) {
    if (found) return;
    view.for_each_neighbour(u, [&](Vertex w) {
      if (!found && near[w] == 0) found = DistanceTwo{w, u};
    });
  });
  return found;
}

std::optional<Vertex> distance_two_vertex(const GraphView& view, Vertex x) {
  if (auto hit = find_distance_two(view, x)) return hit->vertex;
  return std::nullopt;
}

}  // namespace brooks
