#pragma once

// Named graphs and random families shared by the unit and acceptance suites.

#include <algorithm>
#include <deque>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "brooks/generators.hpp"
#include "brooks/graph.hpp"

namespace brooks::testing {

// Views must not outlive their graph; this pins temporaries for the test run.
inline const Graph& keep(Graph g) {
  static std::deque<Graph> pinned;
  return pinned.emplace_back(std::move(g));
}

inline Graph make(std::size_t n, std::vector<Edge> edges) { return build_graph(n, edges); }

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({Vertex(i), Vertex(i + 1)});
  return build_graph(n, edges);
}

// Triangles {0,1,2} and {2,3,4} sharing vertex 2.
inline Graph bowtie() { return make(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}); }

// C6 on 0..5 plus the chord 0-3.
inline Graph c6_chord() { return make(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}}); }

// Hubs 0, 1; leaves 2, 3, 4.
inline Graph k113() { return make(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}); }

inline Graph star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.push_back({0, Vertex(i)});
  return build_graph(leaves + 1, edges);
}

// Graph on n vertices whose edges are the set bits of `mask` over pairs
// (i, j), i < j, in lexicographic order.
inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++bit) {
      if ((mask >> bit) & 1U) edges.push_back({Vertex(i), Vertex(j)});
    }
  }
  return build_graph(n, edges);
}

// Naive checks, independent of the library's classification.
inline bool naive_connected(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<Vertex> todo{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!todo.empty()) {
    const Vertex v = todo.back();
    todo.pop_back();
    for (Vertex w : g.neighbours(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        todo.push_back(w);
      }
    }
  }
  return count == n;
}

inline bool naive_complete(const Graph& g) {
  const std::size_t n = g.vertex_count();
  return g.edge_count() == n * (n - 1) / 2;
}

inline bool naive_odd_cycle(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 3 || n % 2 == 0 || !naive_connected(g)) return false;
  for (std::size_t v = 0; v < n; ++v) {
    if (g.degree(Vertex(v)) != 2) return false;
  }
  return true;
}

// Random biconnected graph by ear decomposition: a cycle, then ears (paths
// with fresh inner vertices, or single chords) between distinct existing
// vertices until n vertices exist; finally up to `chords` extra chords.
inline Graph random_ear_graph(std::size_t n, std::size_t chords, std::mt19937_64& rng) {
  auto pick = [&](std::size_t bound) { return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng); };
  const std::size_t start = std::min<std::size_t>(n, 3 + pick(std::max<std::size_t>(1, n / 2)));
  std::set<std::pair<Vertex, Vertex>> edges;
  auto add = [&](std::size_t a, std::size_t b) {
    edges.insert({Vertex(std::min(a, b)), Vertex(std::max(a, b))});
  };
  for (std::size_t i = 0; i < start; ++i) add(i, (i + 1) % start);
  std::size_t have = start;
  while (have < n) {
    const std::size_t a = pick(have);
    std::size_t b = pick(have - 1);
    if (b >= a) ++b;
    const std::size_t inner = 1 + pick(std::min<std::size_t>(n - have, 4));
    std::size_t prev = a;
    for (std::size_t i = 0; i < inner; ++i) {
      add(prev, have);
      prev = have++;
    }
    add(prev, b);
  }
  for (std::size_t i = 0; i < chords; ++i) {
    const std::size_t a = pick(n);
    const std::size_t b = pick(n);
    if (a != b) add(a, b);
  }
  std::vector<Edge> list;
  for (auto [u, v] : edges) list.push_back({u, v});
  // Relabel so the construction order does not leak into vertex ids.
  std::vector<Vertex> label(n);
  for (std::size_t i = 0; i < n; ++i) label[i] = Vertex(i);
  std::shuffle(label.begin(), label.end(), rng);
  for (Edge& e : list) e = {label[e.u], label[e.v]};
  return build_graph(n, list);
}

}  // namespace brooks::testing
