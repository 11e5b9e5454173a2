#include "orcol/simple_graph.hpp"

#include <algorithm>

#include <fmt/core.h>

#include "orcol/error.hpp"

namespace orcol {

SimpleGraph::SimpleGraph(int n, std::span<const std::pair<Vertex, Vertex>> edges)
    : n_(n), adj_(n), matrix_(static_cast<std::size_t>(n) * n, 0) {
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      fail(ErrorCode::VertexOutOfRange, fmt::format("edge {{{}, {}}} outside 0..{}", u, v, n - 1));
    }
    if (u == v) fail(ErrorCode::LoopArc, fmt::format("loop at {}", u));
    if (adjacent(u, v)) continue;
    matrix_[static_cast<std::size_t>(u) * n + v] = 1;
    matrix_[static_cast<std::size_t>(v) * n + u] = 1;
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  for (auto& list : adj_) std::ranges::sort(list);
  std::ranges::sort(edges_);
}

bool SimpleGraph::is_complete() const {
  return edges_.size() == static_cast<std::size_t>(n_) * (n_ - 1) / 2;
}

bool SimpleGraph::is_regular(int k) const {
  return std::ranges::all_of(adj_, [k](const auto& list) { return static_cast<int>(list.size()) == k; });
}

std::size_t SimpleGraph::induced_edge_count(std::span<const Vertex> vertices) const {
  std::vector<std::uint8_t> in(n_, 0);
  for (Vertex v : vertices) in[v] = 1;
  std::size_t count = 0;
  for (auto [u, v] : edges_) {
    if (in[u] && in[v]) ++count;
  }
  return count;
}

SimpleGraph underlying_graph(const OrientedGraph& g) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(g.arc_count());
  for (const Arc& a : g.arcs()) edges.emplace_back(a.tail, a.head);
  return SimpleGraph(g.order(), edges);
}

bool is_connected(const SimpleGraph& g) {
  if (g.order() == 0) return true;
  std::vector<std::uint8_t> seen(g.order(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbours(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.order();
}

bool is_proper_colouring(const SimpleGraph& g, const VertexColouring& c) {
  for (auto [u, v] : g.edges()) {
    if (c.assigned(u) && c[u] == c[v]) return false;
  }
  return true;
}

}  // namespace orcol
