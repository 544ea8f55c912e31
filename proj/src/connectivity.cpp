#include "brooks/connectivity.hpp"

#include <algorithm>

#include "prefetch.hpp"

namespace brooks {

Components connected_components(const GraphView& view) {
  const Graph& g = view.base();
  const std::size_t n = g.vertex_count();
  Components out;
  out.id.assign(n, kNone);
  std::vector<Vertex> stack;
  for (std::size_t s = 0; s < n; ++s) {
    const auto root = static_cast<Vertex>(s);
    if (view.removed(root) || out.id[root] != kNone) continue;
    const auto cid = static_cast<std::uint32_t>(out.count++);
    out.id[root] = cid;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      view.for_each_neighbour(v, [&](Vertex w) {
        if (out.id[w] == kNone) {
          out.id[w] = cid;
          stack.push_back(w);
        }
      });
    }
  }
  return out;
}

namespace {

struct Frame {
  Vertex v;
  Vertex parent;
  std::size_t next;  // next adjacency slot of v to examine
};

}  // namespace

BlockDecomposition biconnected_components(const GraphView& view) {
  const Graph& g = view.base();
  const std::size_t n = g.vertex_count();

  BlockDecomposition out;
  out.cut_vertex.assign(n, 0);
  out.block_of_slot.assign(g.slot_count(), kNone);

  // Discovery times start at 1; 0 marks an unvisited vertex.
  std::vector<std::uint32_t> disc(n, 0);
  std::vector<std::uint32_t> low(n, 0);
  std::uint32_t clock = 0;

  // owner[v]: the block holding the tree edge into v (or v's own block when
  // isolated); kNone for DFS roots. head[b]: the one vertex of block b that
  // is not owned by it.
  std::vector<std::uint32_t> owner(n, kNone);
  std::vector<Vertex> head;
  std::vector<std::uint32_t> size;

  std::vector<Frame> stack;
  std::vector<Vertex> vertex_stack;
  std::vector<Vertex> component_vertices;  // owned vertices of the current component

  for (std::size_t s = 0; s < n; ++s) {
    const auto root = static_cast<Vertex>(s);
    if (view.removed(root) || disc[root] != 0) continue;
    const auto component = static_cast<std::uint32_t>(out.component_count++);
    const std::size_t first_block = head.size();

    disc[root] = low[root] = ++clock;
    if (view.degree(root) == 0) {
      owner[root] = static_cast<std::uint32_t>(head.size());
      head.push_back(kNoVertex);
      size.push_back(1);
      out.component_of_block.push_back(component);
      continue;
    }

    detail::prefetch_neighbours(g, root, disc.data());
    stack.push_back({root, kNoVertex, g.first_slot(root)});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const Vertex v = f.v;
      if (f.next < g.first_slot(v) + g.degree(v)) {
        const Vertex w = g.target(f.next++);
        if (view.removed(w)) continue;
        if (disc[w] == 0) {
          disc[w] = low[w] = ++clock;
          vertex_stack.push_back(w);
          detail::prefetch_neighbours(g, w, disc.data());
          stack.push_back({w, v, g.first_slot(w)});
        } else if (w != f.parent && disc[w] < low[v]) {
          low[v] = disc[w];
        }
        continue;
      }

      const Vertex parent = f.parent;
      stack.pop_back();
      if (parent == kNoVertex) continue;
      low[parent] = std::min(low[parent], low[v]);
      if (low[v] >= disc[parent]) {
        const auto b = static_cast<std::uint32_t>(head.size());
        std::uint32_t count = 1;
        Vertex top;
        do {
          top = vertex_stack.back();
          vertex_stack.pop_back();
          owner[top] = b;
          component_vertices.push_back(top);
          ++count;
        } while (top != v);
        head.push_back(parent);
        size.push_back(count);
        out.component_of_block.push_back(component);
      }
    }
    // Blocks come out child-first; flip so the root block leads.
    std::reverse(head.begin() + static_cast<std::ptrdiff_t>(first_block), head.end());
    std::reverse(size.begin() + static_cast<std::ptrdiff_t>(first_block), size.end());
    const auto flip = static_cast<std::uint32_t>(first_block + head.size() - 1);
    for (Vertex w : component_vertices) owner[w] = flip - owner[w];
    component_vertices.clear();
  }

  const std::size_t block_count = head.size();

  // Vertex lists, filled in ascending vertex order so they come out sorted.
  out.blocks.resize(block_count);
  std::vector<std::uint32_t> headed_offsets(n + 1, 0);
  for (std::size_t b = 0; b < block_count; ++b) {
    out.blocks[b].vertices.reserve(size[b]);
    if (head[b] != kNoVertex) ++headed_offsets[head[b] + 1];
  }
  for (std::size_t v = 0; v < n; ++v) headed_offsets[v + 1] += headed_offsets[v];
  std::vector<std::uint32_t> headed(headed_offsets[n]);
  {
    std::vector<std::uint32_t> cursor(headed_offsets.begin(), headed_offsets.end() - 1);
    for (std::size_t b = 0; b < block_count; ++b) {
      if (head[b] != kNoVertex) headed[cursor[head[b]]++] = static_cast<std::uint32_t>(b);
    }
  }
  for (std::size_t s = 0; s < n; ++s) {
    const auto v = static_cast<Vertex>(s);
    std::size_t memberships = 0;
    for (std::size_t i = headed_offsets[v]; i < headed_offsets[v + 1]; ++i) {
      out.blocks[headed[i]].vertices.push_back(v);
      ++memberships;
    }
    if (owner[v] != kNone) {
      out.blocks[owner[v]].vertices.push_back(v);
      ++memberships;
    }
    if (memberships >= 2) out.cut_vertex[v] = 1;
  }

  // An edge belongs to the block owning its later-discovered endpoint.
  for (std::size_t b = 0; b < block_count; ++b) out.blocks[b].edges.reserve(size[b] - 1);
  for (std::size_t s = 0; s < n; ++s) {
    const auto v = static_cast<Vertex>(s);
    if (disc[v] == 0 || view.removed(v)) continue;
    for (std::size_t slot = g.first_slot(v); slot < g.first_slot(v) + g.degree(v); ++slot) {
      const Vertex w = g.target(slot);
      if (view.removed(w) || disc[w] > disc[v]) continue;
      const std::uint32_t b = owner[v];
      out.blocks[b].edges.push_back({std::min(v, w), std::max(v, w)});
      out.block_of_slot[slot] = b;
      out.block_of_slot[g.twin(slot)] = b;
    }
  }
  return out;
}

std::uint32_t BlockDecomposition::block_of_edge(const Graph& g, Vertex u, Vertex v) const {
  const auto slot = g.slot_of(u, v);
  return slot ? block_of_slot[*slot] : kNone;
}

bool is_biconnected(const GraphView& view) {
  if (view.vertex_count() < 3) return false;
  const auto decomp = biconnected_components(view);
  return decomp.component_count == 1 && decomp.blocks.size() == 1;
}

BlockCutForest block_cut_forest(const BlockDecomposition& decomp) {
  BlockCutForest forest;
  forest.block_count = decomp.blocks.size();
  const std::size_t n = decomp.cut_vertex.size();

  std::vector<std::size_t> node_of_cut(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    if (decomp.cut_vertex[v] != 0) {
      node_of_cut[v] = forest.block_count + forest.cut_vertices.size();
      forest.cut_vertices.push_back(static_cast<Vertex>(v));
    }
  }
  forest.adjacency.resize(forest.block_count + forest.cut_vertices.size());

  for (std::size_t b = 0; b < forest.block_count; ++b) {
    for (Vertex v : decomp.blocks[b].vertices) {
      if (decomp.cut_vertex[v] == 0) continue;
      forest.adjacency[b].push_back(node_of_cut[v]);
      forest.adjacency[node_of_cut[v]].push_back(b);
    }
    if (b == 0 || decomp.component_of_block[b] != decomp.component_of_block[b - 1]) {
      forest.roots.push_back(b);
    }
  }
  return forest;
}

std::vector<EndBlock> end_blocks(const BlockDecomposition& decomp) {
  if (decomp.component_count != 1) {
    throw ConnectivityError("end_blocks: view is not connected");
  }
  if (decomp.blocks.size() < 2) {
    throw ConnectivityError("end_blocks: view has a single block");
  }
  std::vector<EndBlock> out;
  for (std::size_t b = 0; b < decomp.blocks.size(); ++b) {
    Vertex cut = kNoVertex;
    std::size_t cuts = 0;
    for (Vertex v : decomp.blocks[b].vertices) {
      if (decomp.cut_vertex[v] != 0) {
        cut = v;
        ++cuts;
      }
    }
    if (cuts == 1) out.push_back({b, cut});
  }
  return out;
}

}  // namespace brooks
