#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "orcol/oriented_graph.hpp"

namespace orcol {

/// Undirected simple graph on 0..n-1 with sorted neighbour lists.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  /// Throws LoopArc on {v, v} and VertexOutOfRange; repeated edges collapse.
  SimpleGraph(int n, std::span<const std::pair<Vertex, Vertex>> edges);

  int order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  /// Edges as (lo, hi), lexicographic.
  const std::vector<std::pair<Vertex, Vertex>>& edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbours(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const {
    return matrix_[static_cast<std::size_t>(u) * n_ + v] != 0;
  }

  bool is_complete() const;
  bool is_regular(int k) const;
  /// Edges with both ends in `vertices`.
  std::size_t induced_edge_count(std::span<const Vertex> vertices) const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint8_t> matrix_;
};

SimpleGraph underlying_graph(const OrientedGraph& g);
bool is_connected(const SimpleGraph& g);

/// Colouring is proper on `g` (unassigned vertices are ignored).
bool is_proper_colouring(const SimpleGraph& g, const VertexColouring& c);

}  // namespace orcol
