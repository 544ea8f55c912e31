#include "brooks/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace brooks {

std::string to_string(const Violation& violation) {
  switch (violation.kind) {
    case Violation::Kind::MonochromaticEdge:
      return "MonochromaticEdge(" + std::to_string(violation.u) + "," + std::to_string(violation.v) + ")";
    case Violation::Kind::UncolouredVertex:
      return "UncolouredVertex(" + std::to_string(violation.u) + ")";
    case Violation::Kind::BoundExceeded:
      return "BoundExceeded(" + std::to_string(violation.used) + "," + std::to_string(violation.bound) + ")";
  }
  return "?";
}

std::vector<Violation> verify_colouring(const Graph& g, const Colouring& c, std::optional<Colour> bound) {
  std::vector<Violation> out;
  const std::size_t n = g.vertex_count();
  auto colour_of = [&](Vertex v) -> Colour { return v < c.colour.size() ? c.colour[v] : 0; };

  Colour used = 0;
  for (std::size_t s = 0; s < n; ++s) {
    const auto v = static_cast<Vertex>(s);
    const Colour cv = colour_of(v);
    if (cv == 0) out.push_back(Violation::uncoloured(v));
    used = std::max(used, cv);
  }
  for (const Edge& e : g.edges()) {
    const Colour cu = colour_of(e.u);
    if (cu != 0 && cu == colour_of(e.v)) out.push_back(Violation::monochromatic(e.u, e.v));
  }
  if (bound && used > *bound) out.push_back(Violation::exceeded(used, *bound));
  return out;
}

namespace {

bool extend(const Graph& g, std::vector<Colour>& colour, Vertex v, Colour k, Pruning pruning) {
  const std::size_t n = g.vertex_count();
  if (v == n) return true;
  const Colour limit = pruning == Pruning::Symmetry ? std::min<Colour>(v + 1, k) : k;
  for (Colour c = 1; c <= limit; ++c) {
    bool clash = false;
    for (Vertex w : g.neighbours(v)) {
      if (w < v && colour[w] == c) {
        clash = true;
        break;
      }
    }
    if (clash) continue;
    colour[v] = c;
    if (extend(g, colour, v + 1, k, pruning)) return true;
  }
  colour[v] = 0;
  return false;
}

void guard(const Graph& g) {
  if (g.vertex_count() > kBruteForceLimit) {
    throw OracleError("brute-force oracle limited to " + std::to_string(kBruteForceLimit) + " vertices, got " +
                      std::to_string(g.vertex_count()));
  }
}

// Component labels with vertex `skip` deleted, by union-find over the edge
// list. Kept separate from the depth-first machinery it is used to check.
std::vector<std::size_t> component_labels(const Graph& g, Vertex skip) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : g.edges()) {
    if (e.u == skip || e.v == skip) continue;
    parent[find(e.u)] = find(e.v);
  }
  std::vector<std::size_t> label(n);
  for (std::size_t v = 0; v < n; ++v) label[v] = find(v);
  return label;
}

std::size_t count_components(const Graph& g, Vertex skip) {
  const auto label = component_labels(g, skip);
  std::size_t count = 0;
  for (std::size_t v = 0; v < label.size(); ++v) {
    if (v != skip && label[v] == v) ++count;
  }
  return count;
}

}  // namespace

bool is_k_colourable_bruteforce(const Graph& g, Colour k, Pruning pruning) {
  guard(g);
  if (g.vertex_count() == 0) return true;
  if (k == 0) return false;
  std::vector<Colour> colour(g.vertex_count(), 0);
  return extend(g, colour, 0, k, pruning);
}

Colour chromatic_number_bruteforce(const Graph& g) {
  guard(g);
  Colour k = 0;
  while (!is_k_colourable_bruteforce(g, k)) ++k;
  return k;
}

std::vector<Vertex> cut_vertices_bruteforce(const Graph& g) {
  const std::size_t base = count_components(g, kNoVertex);
  std::vector<Vertex> out;
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    const auto v = static_cast<Vertex>(s);
    if (count_components(g, v) > base) out.push_back(v);
  }
  return out;
}

std::vector<std::vector<Edge>> blocks_bruteforce(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const std::vector<Edge> edges = g.edges();
  const std::size_t m = edges.size();

  std::vector<std::vector<std::size_t>> labels;  // per deleted vertex, plus none
  labels.reserve(n + 1);
  for (std::size_t x = 0; x < n; ++x) labels.push_back(component_labels(g, static_cast<Vertex>(x)));
  labels.push_back(component_labels(g, kNoVertex));

  auto separated = [&](const Edge& e, const Edge& f, std::size_t x) {
    const Vertex pe = e.u != x ? e.u : e.v;
    const Vertex pf = f.u != x ? f.u : f.v;
    return labels[x][pe] != labels[x][pf];
  };

  std::vector<std::size_t> group(m);
  std::iota(group.begin(), group.end(), std::size_t{0});
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      bool together = true;
      for (std::size_t x = 0; x <= n && together; ++x) together = !separated(edges[i], edges[j], x);
      if (together) {
        group[i] = group[j];
        break;
      }
    }
  }

  std::vector<std::vector<Edge>> out;
  std::vector<std::size_t> slot(m, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < m; ++i) {
    if (slot[group[i]] == static_cast<std::size_t>(-1)) {
      slot[group[i]] = out.size();
      out.emplace_back();
    }
    out[slot[group[i]]].push_back(edges[i]);
  }
  return out;
}

std::optional<std::size_t> distance_bruteforce(const GraphView& view, Vertex from, Vertex to) {
  const Graph& g = view.base();
  std::vector<std::size_t> dist(g.vertex_count(), static_cast<std::size_t>(-1));
  std::queue<Vertex> queue;
  dist[from] = 0;
  queue.push(from);
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop();
    if (v == to) return dist[v];
    for (Vertex w : g.neighbours(v)) {
      if (view.removed(w) || dist[w] != static_cast<std::size_t>(-1)) continue;
      dist[w] = dist[v] + 1;
      queue.push(w);
    }
  }
  return std::nullopt;
}

}  // namespace brooks
