#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "orcol/generate.hpp"
#include "orcol/oriented_graph.hpp"
#include "orcol/simple_graph.hpp"

namespace orcol::testing {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

inline SimpleGraph simple(int n, const EdgeList& edges) { return SimpleGraph(n, edges); }

inline SimpleGraph complete_graph(int n) {
  EdgeList e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return simple(n, e);
}

inline SimpleGraph cycle_graph(int n) {
  EdgeList e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return simple(n, e);
}

inline SimpleGraph k33() {
  EdgeList e;
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) e.emplace_back(a, b);
  return simple(6, e);
}

/// Triangular prism: triangles 0,1,2 and 3,4,5 with rungs i -- i+3.
inline SimpleGraph prism() {
  return simple(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

inline SimpleGraph cube() {
  EdgeList e;
  for (int v = 0; v < 8; ++v)
    for (int bit = 1; bit < 8; bit <<= 1)
      if (v < (v ^ bit)) e.emplace_back(v, v ^ bit);
  return simple(8, e);
}

inline SimpleGraph petersen() {
  EdgeList e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return simple(10, e);
}

/// Two copies of K_{3,3} minus an edge, each closed by a vertex joined to the
/// two degree-2 ends, with those two vertices joined by a bridge. Cubic,
/// triangle free, 14 vertices; the bridge is 6 -- 13.
inline SimpleGraph bridged_k33_pair() {
  EdgeList e;
  for (int base : {0, 7}) {
    for (int a = 0; a < 3; ++a)
      for (int b = 3; b < 6; ++b)
        if (a != 0 || b != 3) e.emplace_back(base + a, base + b);
    e.emplace_back(base + 0, base + 6);
    e.emplace_back(base + 3, base + 6);
  }
  e.emplace_back(6, 13);
  return simple(14, e);
}

inline OrientedGraph directed_cycle(int n) {
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n});
  return build_oriented_graph(n, arcs);
}

inline OrientedGraph directed_path(int n) {
  std::vector<Arc> arcs;
  for (int i = 0; i + 1 < n; ++i) arcs.push_back({i, i + 1});
  return build_oriented_graph(n, arcs);
}

/// 0->1, 1->2, 2->3, 3->0, 0->2, 1->3
inline OrientedGraph k4_no_source() {
  return build_oriented_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}});
}

template <class Pred>
std::vector<OrientedGraph> orientations_where(const SimpleGraph& g, Pred pred) {
  std::vector<OrientedGraph> out;
  for (const OrientedGraph& o : all_orientations(g)) {
    if (pred(o)) out.push_back(o);
  }
  return out;
}

inline std::vector<OrientedGraph> no_source_or_sink_orientations(const SimpleGraph& g) {
  return orientations_where(g, [](const OrientedGraph& o) { return !has_source_or_sink(o); });
}

/// First seeded random orientation of `g` with no source and no sink.
inline OrientedGraph balanced_orientation(const SimpleGraph& g, std::uint64_t seed) {
  Rng rng(seed);
  for (;;) {
    std::vector<Arc> arcs;
    for (auto [a, b] : g.edges()) arcs.push_back(rng.coin() ? Arc{a, b} : Arc{b, a});
    OrientedGraph o = build_oriented_graph(g.order(), arcs);
    if (!has_source_or_sink(o)) return o;
  }
}

}  // namespace orcol::testing
