#include "brooks/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <unordered_set>

namespace brooks {

namespace {

std::uint64_t key(Vertex u, Vertex v) {
  const auto lo = static_cast<std::uint64_t>(std::min(u, v));
  const auto hi = static_cast<std::uint64_t>(std::max(u, v));
  return lo << 32 | hi;
}

Vertex vx(std::size_t v) { return static_cast<Vertex>(v); }

std::size_t below(std::mt19937_64& rng, std::size_t bound) {
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
}

// Tree encoded by a Pruefer sequence, decoded in linear time.
std::vector<Edge> random_tree(std::size_t n, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  if (n < 2) return edges;
  std::vector<std::size_t> code(n - 2);
  for (auto& c : code) c = below(rng, n);

  std::vector<std::size_t> degree(n, 1);
  for (std::size_t c : code) ++degree[c];
  std::size_t ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  std::size_t leaf = ptr;
  edges.reserve(n - 1);
  for (std::size_t v : code) {
    edges.push_back({vx(leaf), vx(v)});
    if (--degree[v] == 1 && v < ptr) {
      leaf = v;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.push_back({vx(leaf), vx(n - 1)});
  return edges;
}

}  // namespace

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw GeneratorError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({vx(i), vx((i + 1) % n)});
  return build_graph(n, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({vx(i), vx(j)});
  }
  return build_graph(n, edges);
}

Graph split_graph(std::size_t n) {
  if (n < 3) throw GeneratorError("split graph needs at least 3 vertices");
  std::vector<Edge> edges{{0, 1}};
  for (std::size_t i = 2; i < n; ++i) {
    edges.push_back({0, vx(i)});
    edges.push_back({1, vx(i)});
  }
  return build_graph(n, edges);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, i + 5});
    edges.push_back({i + 5, (i + 2) % 5 + 5});
  }
  return build_graph(10, edges);
}

Graph theta_graph(std::size_t p, std::size_t q, std::size_t r) {
  if ((p == 0) + (q == 0) + (r == 0) > 1) throw GeneratorError("theta graph allows at most one direct hub edge");
  std::vector<Edge> edges;
  std::size_t next = 2;
  for (std::size_t len : {p, q, r}) {
    Vertex prev = 0;
    for (std::size_t i = 0; i < len; ++i) {
      edges.push_back({prev, vx(next)});
      prev = vx(next++);
    }
    edges.push_back({prev, 1});
  }
  return build_graph(next, edges);
}

std::vector<Edge> random_connected_edges(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n == 0) throw GeneratorError("random_connected needs at least one vertex");
  const std::size_t max_edges = n * (n - 1) / 2;
  if (m + 1 < n || m > max_edges) {
    throw GeneratorError("random_connected(" + std::to_string(n) + ", " + std::to_string(m) + "): need n-1 <= m <= n(n-1)/2");
  }
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges = random_tree(n, rng);
  const std::size_t extra = m - edges.size();

  if (2 * extra > max_edges - edges.size()) {
    // Dense request: sample from the explicit complement of the tree.
    std::unordered_set<std::uint64_t> tree;
    for (const Edge& e : edges) tree.insert(key(e.u, e.v));
    std::vector<Edge> pool;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        if (!tree.contains(key(vx(u), vx(v)))) pool.push_back({vx(u), vx(v)});
      }
    }
    for (std::size_t i = 0; i < extra; ++i) {
      std::swap(pool[i], pool[i + below(rng, pool.size() - i)]);
      edges.push_back(pool[i]);
    }
    return edges;
  }

  std::unordered_set<std::uint64_t> present;
  present.reserve(m);
  for (const Edge& e : edges) present.insert(key(e.u, e.v));
  while (edges.size() < m) {
    const Vertex u = vx(below(rng, n));
    const Vertex v = vx(below(rng, n));
    if (u == v || !present.insert(key(u, v)).second) continue;
    edges.push_back({u, v});
  }
  return edges;
}

Graph random_connected(std::size_t n, std::size_t m, std::uint64_t seed) {
  return build_graph(n, random_connected_edges(n, m, seed));
}

Graph block_chain(std::size_t k, std::size_t s, std::uint64_t seed) {
  if (k == 0 || s < 2) throw GeneratorError("block_chain needs k >= 1 blocks of s >= 2 vertices");
  std::mt19937_64 rng(seed);
  const std::size_t n = 1 + k * (s - 1);
  std::vector<Edge> edges;
  std::vector<Vertex> members(s);
  std::size_t next = 0;
  for (std::size_t b = 0; b < k; ++b) {
    if (b == 0) {
      members[0] = vx(next++);
    } else {
      members[0] = members[below(rng, s)];
    }
    for (std::size_t i = 1; i < s; ++i) members[i] = vx(next++);

    if (s == 2) {
      edges.push_back({members[0], members[1]});
      continue;
    }
    std::vector<Vertex> ring = members;
    std::shuffle(ring.begin(), ring.end(), rng);
    std::unordered_set<std::uint64_t> used;
    for (std::size_t i = 0; i < s; ++i) {
      edges.push_back({ring[i], ring[(i + 1) % s]});
      used.insert(key(ring[i], ring[(i + 1) % s]));
    }
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = i + 1; j < s; ++j) {
        if (used.contains(key(members[i], members[j]))) continue;
        if (std::bernoulli_distribution(0.5)(rng)) edges.push_back({members[i], members[j]});
      }
    }
  }

  std::vector<Vertex> label(n);
  std::iota(label.begin(), label.end(), Vertex{0});
  std::shuffle(label.begin(), label.end(), rng);
  for (Edge& e : edges) e = {label[e.u], label[e.v]};
  return build_graph(n, edges);
}

Graph generate(std::string_view kind, std::span<const std::size_t> params, std::uint64_t seed) {
  auto expect = [&](std::size_t count) {
    if (params.size() != count) {
      throw GeneratorError(std::string(kind) + " takes " + std::to_string(count) + " parameter(s), got " +
                           std::to_string(params.size()));
    }
  };
  if (kind == "cycle") {
    expect(1);
    return cycle_graph(params[0]);
  }
  if (kind == "complete") {
    expect(1);
    return complete_graph(params[0]);
  }
  if (kind == "split") {
    expect(1);
    return split_graph(params[0]);
  }
  if (kind == "petersen") {
    expect(0);
    return petersen_graph();
  }
  if (kind == "theta") {
    expect(3);
    return theta_graph(params[0], params[1], params[2]);
  }
  if (kind == "random_connected") {
    expect(2);
    return random_connected(params[0], params[1], seed);
  }
  if (kind == "block_chain") {
    expect(2);
    return block_chain(params[0], params[1], seed);
  }
  throw GeneratorError("unknown graph kind '" + std::string(kind) + "'");
}

}  // namespace brooks
