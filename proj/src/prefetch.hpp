#pragma once

#include "brooks/graph.hpp"

namespace brooks::detail {

// Requests data[w] for every neighbour w of v. Traversals over randomly
// labelled graphs are latency bound; issuing the loads together when a
// vertex is entered lets the misses overlap.
template <class T>
inline void prefetch_neighbours(const Graph& g, Vertex v, const T* data) {
#if defined(__GNUC__)
  for (Vertex w : g.neighbours(v)) __builtin_prefetch(data + w);
#else
  (void)g;
  (void)v;
  (void)data;
#endif
}

}  // namespace brooks::detail
