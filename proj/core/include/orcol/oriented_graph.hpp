#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace orcol {

using Vertex = int;

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// A loopless antisymmetric digraph on vertices 0..n-1.
///
/// Immutable after construction. Arc lookup is O(1) through a dense n x n
/// table; neighbour lists are kept sorted so that every traversal is
/// deterministic.
class OrientedGraph {
 public:
  OrientedGraph() = default;

  int order() const noexcept { return n_; }
  std::size_t arc_count() const noexcept { return arcs_.size(); }

  /// Arcs in lexicographic (tail, head) order.
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }

  std::span<const Vertex> out_neighbours(Vertex v) const { return out_[v]; }
  std::span<const Vertex> in_neighbours(Vertex v) const { return in_[v]; }

  int out_degree(Vertex v) const { return static_cast<int>(out_[v].size()); }
  int in_degree(Vertex v) const { return static_cast<int>(in_[v].size()); }
  int degree(Vertex v) const { return out_degree(v) + in_degree(v); }

  bool has_arc(Vertex tail, Vertex head) const {
    return matrix_[static_cast<std::size_t>(tail) * n_ + head] != 0;
  }
  bool adjacent(Vertex u, Vertex v) const { return has_arc(u, v) || has_arc(v, u); }

  /// Underlying neighbours (in and out), ascending.
  std::vector<Vertex> neighbours(Vertex v) const;

  friend bool operator==(const OrientedGraph& a, const OrientedGraph& b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_;
  }

 private:
  friend OrientedGraph build_oriented_graph(int n, std::span<const Arc> arcs);

  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::vector<std::uint8_t> matrix_;
};

/// Throws VertexOutOfRange, LoopArc, DigonArc or DuplicateArc.
OrientedGraph build_oriented_graph(int n, std::span<const Arc> arcs);

inline OrientedGraph build_oriented_graph(int n, std::initializer_list<Arc> arcs) {
  return build_oriented_graph(n, std::span<const Arc>(arcs.begin(), arcs.size()));
}

/// Vertex labelling; vertices without a colour hold `kUnassigned`.
class VertexColouring {
 public:
  static constexpr int kUnassigned = -1;

  VertexColouring() = default;
  explicit VertexColouring(int n) : colours_(static_cast<std::size_t>(n), kUnassigned) {}
  explicit VertexColouring(std::vector<int> colours) : colours_(std::move(colours)) {}

  int size() const noexcept { return static_cast<int>(colours_.size()); }
  int operator[](Vertex v) const { return colours_[v]; }
  void set(Vertex v, int colour) { colours_[v] = colour; }
  bool assigned(Vertex v) const { return colours_[v] != kUnassigned; }
  bool complete() const;

  /// Number of distinct colours among assigned vertices.
  int palette_size() const;
  /// Largest colour used, or -1 when nothing is assigned.
  int max_colour() const;

  const std::vector<int>& colours() const noexcept { return colours_; }

  friend bool operator==(const VertexColouring&, const VertexColouring&) = default;

 private:
  std::vector<int> colours_;
};

struct TwoDipath {
  Vertex first = 0;
  Vertex centre = 0;
  Vertex last = 0;
  /// True iff the ends are non-adjacent.
  bool induced = false;

  friend bool operator==(const TwoDipath&, const TwoDipath&) = default;
};

/// Every violation found by a validator, not just the first.
struct ValidityReport {
  /// Arcs whose ends share a colour.
  std::vector<Arc> monochromatic_arcs;
  /// Arc pairs (uv, xy) with c(u) = c(y) and c(v) = c(x); each unordered pair once.
  std::vector<std::pair<Arc, Arc>> opposed_arcs;
  /// 2-dipaths whose ends share a colour.
  std::vector<TwoDipath> clashing_dipaths;

  bool valid() const noexcept {
    return monochromatic_arcs.empty() && opposed_arcs.empty() && clashing_dipaths.empty();
  }
};

ValidityReport validate_oriented_colouring(const OrientedGraph& g, const VertexColouring& c);
ValidityReport validate_two_dipath_colouring(const OrientedGraph& g, const VertexColouring& c);

struct StructuralProfile {
  std::vector<int> degrees;
  std::vector<Vertex> sources;
  std::vector<Vertex> sinks;
  bool connected = false;
  std::vector<std::array<Vertex, 3>> triangles;
  std::vector<Arc> cut_arcs;
  int max_degree = 0;
  int min_degree = 0;
  bool properly_subcubic = false;
};

StructuralProfile structural_profile(const OrientedGraph& g);

std::vector<TwoDipath> two_dipaths(const OrientedGraph& g);

/// Every pair of vertices is adjacent or joined by a 2-dipath.
bool is_oclique(const OrientedGraph& g);

// ---- structural predicates and surgery ----

bool is_connected(const OrientedGraph& g);
bool is_cubic(const OrientedGraph& g);
bool is_properly_subcubic(const OrientedGraph& g);
bool has_source_or_sink(const OrientedGraph& g);
/// Some source of degree >= min_degree has an out-neighbour that is a sink of
/// degree >= min_degree.
bool has_source_adjacent_to_sink(const OrientedGraph& g, int min_degree = 0);
std::vector<std::array<Vertex, 3>> triangles(const OrientedGraph& g);
/// Arcs whose underlying edge is a bridge, in arc order.
std::vector<Arc> cut_arcs(const OrientedGraph& g);
/// Vertex sets of the connected components, each ascending, ordered by least vertex.
std::vector<std::vector<Vertex>> components(const OrientedGraph& g);

/// A graph carved out of a parent, with the map back to parent vertex ids.
struct Subgraph {
  OrientedGraph graph;
  std::vector<Vertex> to_parent;

  /// Parent id -> local id, or -1.
  std::vector<Vertex> from_parent(int parent_order) const;
};

Subgraph induced_subgraph(const OrientedGraph& g, std::span<const Vertex> vertices);
/// Subgraph on `vertices` keeping only the listed parent arcs (both ends must be kept).
Subgraph arc_subgraph(const OrientedGraph& g, std::span<const Vertex> vertices,
                      std::span<const Arc> arcs);
OrientedGraph without_arc(const OrientedGraph& g, Arc arc);

}  // namespace orcol
