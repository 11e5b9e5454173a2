#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "orcol/oriented_graph.hpp"
#include "orcol/simple_graph.hpp"

namespace orcol {

/// Underlying edges plus {u, w} for every 2-dipath u -> v -> w.
/// On cubic inputs, checks that no vertex centres more than two induced
/// 2-dipaths (InvariantViolation otherwise).
SimpleGraph build_square(const OrientedGraph& g);

/// Number of induced 2-dipaths centred at each vertex.
std::vector<int> induced_dipath_centre_counts(const OrientedGraph& g);

struct SquareEdgeCount {
  std::size_t edges = 0;
  /// 7n/2
  double bound = 0.0;
};

/// Edge count of the square of a cubic orientation against 7n/2.
/// Throws PreconditionViolated on non-cubic input, InvariantViolation if the
/// count exceeds the bound.
SquareEdgeCount average_degree_check(const OrientedGraph& g);

struct Subdivision {
  Vertex source = 0;
  Vertex sink = 0;
  /// The new vertex placed on the arc source -> sink.
  Vertex midpoint = 0;
};

struct SubdivisionMap {
  std::vector<Subdivision> entries;
};

/// Replaces every arc from a source to a sink by a 2-dipath through a fresh
/// vertex (ids n, n+1, ... in arc order). Original vertices keep their ids.
/// Requires a connected cubic orientation with at least one such arc.
std::pair<OrientedGraph, SubdivisionMap> subdivide_source_sink_arcs(const OrientedGraph& g);

/// The 7-core of the square and the structures hung off it.
struct CorePartition {
  /// Vertices of the 7-core, ascending.
  std::vector<Vertex> core;
  /// Non-core vertices in extension order: each has at most six square
  /// neighbours among the core and the vertices before it.
  std::vector<Vertex> shell_order;
  /// Non-core vertices centring a 2-dipath with both ends in the core, ascending.
  std::vector<Vertex> between;
  /// Vertex set of G_C (core plus between), ascending.
  std::vector<Vertex> gc_vertices;
  /// Arcs of G[core] plus arcs joining the core to `between`.
  std::vector<Arc> gc_arcs;

  bool gc_is_whole_graph(const OrientedGraph& g) const {
    return static_cast<int>(gc_vertices.size()) == g.order() && gc_arcs.size() == g.arc_count();
  }
};

/// Peels square vertices of degree at most 6 (lowest index first) until the
/// 7-core remains. `square` must be build_square(g).
CorePartition seven_core_partition(const OrientedGraph& g, const SimpleGraph& square);

/// Colours the core by mapping each component of G_C into QR_7 and keeping
/// the core vertices; other vertices stay unassigned. Throws
/// InvariantViolation if G_C is all of G or a component fails the QR_7
/// precondition.
VertexColouring colour_square_core(const OrientedGraph& g, const CorePartition& part);

/// Greedy completion along part.shell_order using colours 0..6. Throws
/// PreconditionViolated if `partial` is not a proper 7-colouring of the core,
/// InvariantViolation if some vertex finds no free colour.
VertexColouring extend_by_peel_order(const SimpleGraph& square, VertexColouring partial,
                                     const CorePartition& part);

enum class DipathRoute {
  SourceSinkSubdivision,
  SevenRegular,
  DirectQR7,
  PeelGreedy,
  CoreExtension,
};

std::string_view to_string(DipathRoute route) noexcept;

struct DipathOptions {
  /// Try a budgeted direct search into QR_7 before the core route.
  bool try_direct = true;
  std::uint64_t direct_budget = 20000;
};

struct DipathColouring {
  VertexColouring colouring;
  /// One route per connected component, ordered by least vertex.
  std::vector<DipathRoute> routes;
};

/// A 2-dipath colouring with at most 7 colours of any cubic orientation.
DipathColouring two_dipath_seven_colouring(const OrientedGraph& g, const DipathOptions& options = {});

}  // namespace orcol
