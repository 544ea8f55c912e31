#include "brooks/colouring.hpp"

#include <algorithm>

#include "prefetch.hpp"

namespace brooks {

void Colouring::recount() {
  num_colours = colour.empty() ? 0 : *std::max_element(colour.begin(), colour.end());
}

bool Colouring::complete() const {
  return std::none_of(colour.begin(), colour.end(), [](Colour c) { return c == 0; });
}

ColouringError::ColouringError(ColouringErrc code, const std::string& what)
    : std::invalid_argument(to_string(code) + ": " + what), code_(code) {}

std::string to_string(BlockKind kind) {
  switch (kind) {
    case BlockKind::CompleteGraph:
      return "complete";
    case BlockKind::EvenCycle:
      return "even-cycle";
    case BlockKind::OddCycle:
      return "odd-cycle";
    case BlockKind::SplitSpecial:
      return "split-special";
    case BlockKind::General:
      return "general";
  }
  return "?";
}

std::string to_string(ComponentShape shape) {
  switch (shape) {
    case ComponentShape::CompleteGraph:
      return "complete";
    case ComponentShape::EvenCycle:
      return "even-cycle";
    case ComponentShape::OddCycle:
      return "odd-cycle";
    case ComponentShape::SplitSpecial:
      return "split-special";
    case ComponentShape::General:
      return "general";
    case ComponentShape::Separable:
      return "separable";
  }
  return "?";
}

std::string to_string(ColouringErrc code) {
  switch (code) {
    case ColouringErrc::NotABlock:
      return "NotABlock";
    case ColouringErrc::NotACycle:
      return "NotACycle";
    case ColouringErrc::NotComplete:
      return "NotComplete";
    case ColouringErrc::PreconditionViolated:
      return "PreconditionViolated";
    case ColouringErrc::InvalidPair:
      return "InvalidPair";
    case ColouringErrc::ImproperLocal:
      return "ImproperLocal";
    case ColouringErrc::NotAPermutation:
      return "NotAPermutation";
  }
  return "?";
}

namespace {

// Degree-pattern classification of a view already known to be a block.
Classification classify_degrees(const GraphView& view) {
  const Graph& g = view.base();
  const std::size_t n = view.vertex_count();
  std::size_t full = 0;
  std::size_t two = 0;
  std::array<Vertex, 2> hubs{kNoVertex, kNoVertex};
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    const auto v = static_cast<Vertex>(s);
    if (view.removed(v)) continue;
    const std::size_t d = view.degree(v);
    if (d + 1 == n) {
      if (full < 2) hubs[full] = v;
      ++full;
    } else if (d == 2) {
      ++two;
    }
  }

  Classification out;
  if (full == n) {
    out.kind = BlockKind::CompleteGraph;
  } else if (two == n && full == 0) {
    out.kind = n % 2 == 0 ? BlockKind::EvenCycle : BlockKind::OddCycle;
  } else if (n >= 4 && full == 2 && two == n - 2) {
    out.kind = BlockKind::SplitSpecial;
    out.hubs = hubs;
  }
  return out;
}

bool is_single_block(const GraphView& view) {
  const std::size_t n = view.vertex_count();
  if (n == 0) return false;
  if (n == 1) return true;
  if (n == 2) return view.edge_count() == 1;
  return is_biconnected(view);
}

ComponentShape shape_of(BlockKind kind) {
  switch (kind) {
    case BlockKind::CompleteGraph:
      return ComponentShape::CompleteGraph;
    case BlockKind::EvenCycle:
      return ComponentShape::EvenCycle;
    case BlockKind::OddCycle:
      return ComponentShape::OddCycle;
    case BlockKind::SplitSpecial:
      return ComponentShape::SplitSpecial;
    case BlockKind::General:
      break;
  }
  return ComponentShape::General;
}

Colour first_free(std::span<const std::uint8_t> used) {
  Colour c = 1;
  while (used[c] != 0) ++c;
  return c;
}

}  // namespace

Classification classify_block(const GraphView& view) {
  if (!is_single_block(view)) {
    throw ColouringError(ColouringErrc::NotABlock, "view is not a single connected block");
  }
  return classify_degrees(view);
}

Colouring colour_cycle(const GraphView& view) {
  const Graph& g = view.base();
  const std::size_t n = view.vertex_count();
  if (n < 3) throw ColouringError(ColouringErrc::NotACycle, "fewer than three vertices");
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    const auto v = static_cast<Vertex>(s);
    if (view.contains(v) && view.degree(v) != 2) {
      throw ColouringError(ColouringErrc::NotACycle, "vertex " + std::to_string(v) + " has degree != 2");
    }
  }

  Colouring out = Colouring::uncoloured(g.vertex_count());
  const Vertex start = view.first_vertex();
  Vertex prev = kNoVertex;
  Vertex cur = start;
  for (std::size_t i = 0; i < n; ++i) {
    if (cur == start && i != 0) {
      throw ColouringError(ColouringErrc::NotACycle, "view is a union of several cycles");
    }
    out.colour[cur] = (n % 2 == 1 && i + 1 == n) ? 3 : static_cast<Colour>(i % 2 + 1);
    Vertex next = kNoVertex;
    view.for_each_neighbour(cur, [&](Vertex w) {
      if (next == kNoVertex && w != prev) next = w;
    });
    prev = cur;
    cur = next;
  }
  if (cur != start) throw ColouringError(ColouringErrc::NotACycle, "walk did not close");
  out.recount();
  return out;
}

Colouring colour_complete(const GraphView& view) {
  const Graph& g = view.base();
  const std::size_t n = view.vertex_count();
  Colouring out = Colouring::uncoloured(g.vertex_count());
  Colour next = 1;
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    const auto v = static_cast<Vertex>(s);
    if (view.removed(v)) continue;
    if (view.degree(v) + 1 != n) {
      throw ColouringError(ColouringErrc::NotComplete, "vertex " + std::to_string(v) + " misses a neighbour");
    }
    out.colour[v] = next++;
  }
  out.recount();
  return out;
}

namespace {

// find_ab for a view already known to be a block of the given kind.
ABPair find_ab_in_block(const GraphView& view, const Classification& kind) {
  const Graph& g = view.base();
  const std::size_t n = view.vertex_count();

  if (kind.kind == BlockKind::SplitSpecial) {
    ABPair pair;
    for (std::size_t s = 0; s < g.vertex_count(); ++s) {
      const auto v = static_cast<Vertex>(s);
      if (view.removed(v) || view.degree(v) != 2) continue;
      if (pair.a == kNoVertex) {
        pair.a = v;
      } else {
        pair.b = v;
        break;
      }
    }
    pair.v1 = kind.hubs[0];
    return pair;
  }

  // Not complete, not a cycle, not K_{1,1,n-2}: some degree lies outside
  // {2, n-1}, and biconnectivity rules out degree <= 1.
  Vertex x = kNoVertex;
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    const auto v = static_cast<Vertex>(s);
    if (view.removed(v)) continue;
    const std::size_t d = view.degree(v);
    if (d >= 3 && d + 2 <= n) {
      x = v;
      break;
    }
  }
  if (x == kNoVertex) throw std::logic_error("find_ab: no vertex with 3 <= deg <= n-2");

  const GraphView rest = view.without(x);
  const BlockDecomposition decomp = biconnected_components(rest);
  if (decomp.component_count == 1 && decomp.blocks.size() == 1) {
    const auto hit = find_distance_two(view, x);
    if (!hit) throw std::logic_error("find_ab: no vertex at distance 2 from x");
    return {x, hit->vertex, hit->via};
  }

  const auto ends = end_blocks(decomp);
  std::vector<std::uint8_t> side(g.vertex_count(), 0);
  for (Vertex v : decomp.blocks[ends[0].block].vertices) side[v] = 1;
  for (Vertex v : decomp.blocks[ends[1].block].vertices) side[v] = 2;

  ABPair pair{kNoVertex, kNoVertex, x};
  view.for_each_neighbour(x, [&](Vertex w) {
    if (pair.a == kNoVertex && side[w] == 1 && w != ends[0].cut) pair.a = w;
    if (pair.b == kNoVertex && side[w] == 2 && w != ends[1].cut) pair.b = w;
  });
  if (pair.a == kNoVertex || pair.b == kNoVertex) {
    throw std::logic_error("find_ab: x has no private neighbour in an end-block");
  }
  return pair;
}

}  // namespace

ABPair find_ab(const GraphView& view) {
  if (!is_biconnected(view)) {
    throw ColouringError(ColouringErrc::PreconditionViolated, "view is not biconnected");
  }
  const Classification kind = classify_degrees(view);
  if (kind.kind == BlockKind::CompleteGraph || kind.kind == BlockKind::EvenCycle ||
      kind.kind == BlockKind::OddCycle) {
    throw ColouringError(ColouringErrc::PreconditionViolated, "view is a " + to_string(kind.kind));
  }
  return find_ab_in_block(view, kind);
}

Colouring sequential_colour(const GraphView& view, const ABPair& pair) {
  const Graph& g = view.base();
  const std::size_t n = g.vertex_count();
  const auto in_view = [&](Vertex v) { return v < n && view.contains(v); };
  if (!in_view(pair.a) || !in_view(pair.b) || !in_view(pair.v1)) {
    throw ColouringError(ColouringErrc::InvalidPair, "pair vertex outside the view");
  }
  if (pair.a == pair.b || pair.v1 == pair.a || pair.v1 == pair.b || g.adjacent(pair.a, pair.b) ||
      !g.adjacent(pair.v1, pair.a) || !g.adjacent(pair.v1, pair.b)) {
    throw ColouringError(ColouringErrc::InvalidPair, "a and b are not at distance 2 via v1");
  }

  // Depth-first preorder of the view without a and b, rooted at v1.
  std::vector<std::uint8_t> visited(n, 0);
  visited[pair.a] = visited[pair.b] = 1;
  std::vector<Vertex> order;
  order.reserve(view.vertex_count());
  std::vector<std::pair<Vertex, std::size_t>> stack;
  visited[pair.v1] = 1;
  order.push_back(pair.v1);
  stack.emplace_back(pair.v1, g.first_slot(pair.v1));
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const std::size_t end = g.first_slot(v) + g.degree(v);
    while (next < end && (visited[g.target(next)] != 0 || view.removed(g.target(next)))) ++next;
    if (next == end) {
      stack.pop_back();
      continue;
    }
    const Vertex w = g.target(next++);
    visited[w] = 1;
    order.push_back(w);
    detail::prefetch_neighbours(g, w, visited.data());
    stack.emplace_back(w, g.first_slot(w));
  }
  if (order.size() + 2 != view.vertex_count()) {
    throw ColouringError(ColouringErrc::InvalidPair, "view without a and b is disconnected");
  }

  const std::size_t delta = max_degree(view);
  Colouring out = Colouring::uncoloured(n);
  out.colour[pair.a] = out.colour[pair.b] = 1;

  std::vector<std::uint8_t> used(delta + 2, 0);
  constexpr std::size_t kLookahead = 4;
  for (std::size_t i = order.size(); i-- > 0;) {
    if (i >= kLookahead) detail::prefetch_neighbours(g, order[i - kLookahead], out.colour.data());
    const Vertex v = order[i];
    view.for_each_neighbour(v, [&](Vertex w) {
      if (out.colour[w] != 0 && out.colour[w] <= delta + 1) used[out.colour[w]] = 1;
    });
    const Colour c = first_free(used);
    view.for_each_neighbour(v, [&](Vertex w) {
      if (out.colour[w] <= delta + 1) used[out.colour[w]] = 0;
    });
    // Every vertex but v1 still has its preorder parent uncoloured; v1 sees
    // a and b sharing colour 1.
    if (c > delta) throw std::logic_error("sequential_colour: colour exceeds max degree");
    out.colour[v] = c;
  }
  out.recount();
  return out;
}

Graph block_subgraph(const Block& block, std::span<std::uint32_t> local_id) {
  for (std::size_t i = 0; i < block.vertices.size(); ++i) {
    local_id[block.vertices[i]] = static_cast<std::uint32_t>(i);
  }
  std::vector<Edge> edges;
  edges.reserve(block.edges.size());
  for (const Edge& e : block.edges) edges.push_back({local_id[e.u], local_id[e.v]});
  return build_graph(block.vertices.size(), edges);
}

Colouring colour_block(const Graph& block, Classification* kind) {
  const GraphView view(block);
  const Classification shape = block.vertex_count() <= 2 ? Classification{} : classify_degrees(view);
  if (kind != nullptr) {
    *kind = shape;
    if (block.vertex_count() <= 2) kind->kind = BlockKind::CompleteGraph;
  }
  if (block.vertex_count() <= 2) return colour_complete(view);
  switch (shape.kind) {
    case BlockKind::CompleteGraph:
      return colour_complete(view);
    case BlockKind::EvenCycle:
    case BlockKind::OddCycle:
      return colour_cycle(view);
    case BlockKind::SplitSpecial:
    case BlockKind::General:
      break;
  }
  return sequential_colour(view, find_ab_in_block(view, shape));
}

std::vector<Colouring> colour_blocks(const Graph& g, const BlockDecomposition& decomp,
                                     std::vector<Classification>* kinds) {
  std::vector<Colouring> locals;
  locals.reserve(decomp.blocks.size());
  if (kinds != nullptr) kinds->assign(decomp.blocks.size(), Classification{});
  std::vector<std::uint32_t> local_id(g.vertex_count(), 0);
  for (std::size_t b = 0; b < decomp.blocks.size(); ++b) {
    const Block& block = decomp.blocks[b];
    Classification* kind = kinds != nullptr ? &(*kinds)[b] : nullptr;
    // K1 and K2 are complete; skip building a graph for them.
    if (block.vertices.size() <= 2) {
      Colouring c;
      c.colour = block.vertices.size() == 1 ? std::vector<Colour>{1} : std::vector<Colour>{1, 2};
      c.num_colours = static_cast<Colour>(block.vertices.size());
      if (kind != nullptr) kind->kind = BlockKind::CompleteGraph;
      locals.push_back(std::move(c));
      continue;
    }
    locals.push_back(colour_block(block_subgraph(block, local_id), kind));
  }
  return locals;
}

Colouring merge_block_colourings(const Graph& g, const BlockDecomposition& decomp,
                                 const BlockCutForest& forest, std::span<const Colouring> locals) {
  const std::size_t n = g.vertex_count();
  if (locals.size() != decomp.blocks.size()) {
    throw ColouringError(ColouringErrc::ImproperLocal, "expected one local colouring per block");
  }

  std::vector<std::uint32_t> pos(n, 0);
  for (std::size_t b = 0; b < decomp.blocks.size(); ++b) {
    const Block& block = decomp.blocks[b];
    const auto& local = locals[b].colour;
    if (local.size() != block.vertices.size()) {
      throw ColouringError(ColouringErrc::ImproperLocal, "block " + std::to_string(b) + " has a colouring of the wrong size");
    }
    for (std::size_t i = 0; i < block.vertices.size(); ++i) {
      if (local[i] == 0) {
        throw ColouringError(ColouringErrc::ImproperLocal, "block " + std::to_string(b) + " leaves a vertex uncoloured");
      }
      pos[block.vertices[i]] = static_cast<std::uint32_t>(i);
    }
    for (const Edge& e : block.edges) {
      if (local[pos[e.u]] == local[pos[e.v]]) {
        throw ColouringError(ColouringErrc::ImproperLocal,
                             "block " + std::to_string(b) + " colours edge " + std::to_string(e.u) + "-" +
                                 std::to_string(e.v) + " monochromatically");
      }
    }
  }

  Colouring out = Colouring::uncoloured(n);
  auto write_block = [&](std::size_t b, Vertex parent_cut) {
    const Block& block = decomp.blocks[b];
    const auto& local = locals[b].colour;
    Colour fixed = 0;
    Colour own = 0;
    if (parent_cut != kNoVertex) {
      const auto it = std::lower_bound(block.vertices.begin(), block.vertices.end(), parent_cut);
      fixed = out.colour[parent_cut];
      own = local[static_cast<std::size_t>(it - block.vertices.begin())];
    }
    for (std::size_t i = 0; i < block.vertices.size(); ++i) {
      Colour c = local[i];
      if (c == own) {
        c = fixed;
      } else if (c == fixed) {
        c = own;
      }
      out.colour[block.vertices[i]] = c;
    }
  };

  constexpr std::size_t kNoNode = static_cast<std::size_t>(-1);
  std::vector<std::pair<std::size_t, std::size_t>> stack;  // (node, parent node)
  for (std::size_t root : forest.roots) {
    stack.emplace_back(root, kNoNode);
    while (!stack.empty()) {
      const auto [node, parent] = stack.back();
      stack.pop_back();
      if (forest.is_block_node(node)) {
        write_block(node, parent == kNoNode ? kNoVertex : forest.cut_vertex_of(parent));
      }
      for (auto it = forest.adjacency[node].rbegin(); it != forest.adjacency[node].rend(); ++it) {
        if (*it != parent) stack.emplace_back(*it, node);
      }
    }
  }
  out.recount();
  return out;
}

Colour brooks_bound(const Graph& g) {
  const Components comps = connected_components(GraphView(g));
  struct Stats {
    std::size_t vertices = 0;
    std::size_t twice_edges = 0;
    std::size_t max_degree = 0;
    bool all_two = true;
  };
  std::vector<Stats> stats(comps.count);
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    const auto v = static_cast<Vertex>(s);
    Stats& st = stats[comps.id[v]];
    const std::size_t d = g.degree(v);
    ++st.vertices;
    st.twice_edges += d;
    st.max_degree = std::max(st.max_degree, d);
    st.all_two = st.all_two && d == 2;
  }
  Colour bound = 0;
  for (const Stats& st : stats) {
    const bool complete = st.twice_edges == st.vertices * (st.vertices - 1);
    const bool odd_cycle = st.all_two && st.vertices % 2 == 1;
    const auto delta = static_cast<Colour>(st.max_degree);
    bound = std::max(bound, complete || odd_cycle ? delta + 1 : delta);
  }
  return bound;
}

Colouring greedy_colour(const Graph& g, std::span<const Vertex> order) {
  const std::size_t n = g.vertex_count();
  if (order.size() != n) {
    throw ColouringError(ColouringErrc::NotAPermutation, "order has " + std::to_string(order.size()) + " entries, expected " + std::to_string(n));
  }
  std::vector<std::uint8_t> seen(n, 0);
  for (Vertex v : order) {
    if (v >= n || seen[v] != 0) {
      throw ColouringError(ColouringErrc::NotAPermutation, "vertex " + std::to_string(v) + " repeated or out of range");
    }
    seen[v] = 1;
  }

  const std::size_t delta = g.max_degree();
  Colouring out = Colouring::uncoloured(n);
  std::vector<std::uint8_t> used(delta + 2, 0);
  for (Vertex v : order) {
    for (Vertex w : g.neighbours(v)) used[out.colour[w]] = 1;
    used[0] = 0;
    out.colour[v] = first_free(used);
    for (Vertex w : g.neighbours(v)) used[out.colour[w]] = 0;
  }
  out.recount();
  return out;
}

BrooksResult brooks_colour(const Graph& g) {
  const GraphView view(g);
  const BlockDecomposition decomp = biconnected_components(view);
  const BlockCutForest forest = block_cut_forest(decomp);
  std::vector<Classification> kinds;
  const std::vector<Colouring> locals = colour_blocks(g, decomp, &kinds);

  BrooksResult result;
  result.colouring = merge_block_colourings(g, decomp, forest, locals);

  auto& reports = result.components;
  reports.resize(decomp.component_count);
  std::vector<std::uint32_t> component_of(g.vertex_count(), 0);
  for (std::size_t b = 0; b < decomp.blocks.size(); ++b) {
    const std::uint32_t c = decomp.component_of_block[b];
    ComponentReport& r = reports[c];
    if (r.blocks++ == 0) {
      r.lowest_vertex = decomp.blocks[b].vertices.front();
      r.shape = shape_of(kinds[b].kind);
    } else {
      r.shape = ComponentShape::Separable;
    }
    for (Vertex v : decomp.blocks[b].vertices) component_of[v] = c;
  }
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    const auto v = static_cast<Vertex>(s);
    ComponentReport& r = reports[component_of[v]];
    ++r.vertices;
    r.edges += g.degree(v);
    r.max_degree = std::max(r.max_degree, g.degree(v));
    r.colours_used = std::max(r.colours_used, result.colouring.colour[v]);
  }
  for (ComponentReport& r : reports) {
    r.edges /= 2;
    const auto delta = static_cast<Colour>(r.max_degree);
    const bool needs_extra = r.shape == ComponentShape::CompleteGraph || r.shape == ComponentShape::OddCycle;
    r.bound = needs_extra ? delta + 1 : delta;
  }
  return result;
}

}  // namespace brooks
