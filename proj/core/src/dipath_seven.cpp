#include "orcol/dipath_seven.hpp"

#include <algorithm>
#include <array>
#include <set>

#include <fmt/core.h>

#include "orcol/codec.hpp"
#include "orcol/error.hpp"
#include "orcol/hom_search.hpp"
#include "orcol/oracle.hpp"
#include "orcol/paley.hpp"

namespace orcol {

namespace {

constexpr int kColours = 7;

[[noreturn]] void violated(const OrientedGraph& g, const std::string& message) {
  throw Error(ErrorCode::InvariantViolation, message, emit_digraph6(g));
}

}  // namespace

std::string_view to_string(DipathRoute route) noexcept {
  switch (route) {
    case DipathRoute::SourceSinkSubdivision: return "source_sink_subdivision";
    case DipathRoute::SevenRegular: return "seven_regular";
    case DipathRoute::DirectQR7: return "direct_qr7";
    case DipathRoute::PeelGreedy: return "peel_greedy";
    case DipathRoute::CoreExtension: return "core_extension";
  }
  return "unknown";
}

std::vector<int> induced_dipath_centre_counts(const OrientedGraph& g) {
  std::vector<int> counts(g.order(), 0);
  for (const TwoDipath& p : two_dipaths(g)) {
    if (p.induced) ++counts[p.centre];
  }
  return counts;
}

SimpleGraph build_square(const OrientedGraph& g) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const Arc& a : g.arcs()) edges.emplace_back(a.tail, a.head);
  for (const TwoDipath& p : two_dipaths(g)) edges.emplace_back(p.first, p.last);
  if (is_cubic(g)) {
    const auto counts = induced_dipath_centre_counts(g);
    for (Vertex v = 0; v < g.order(); ++v) {
      if (counts[v] > 2) violated(g, fmt::format("vertex {} centres {} induced 2-dipaths", v, counts[v]));
    }
  }
  return SimpleGraph(g.order(), edges);
}

SquareEdgeCount average_degree_check(const OrientedGraph& g) {
  if (!is_cubic(g)) fail(ErrorCode::PreconditionViolated, "expected a cubic orientation");
  const SquareEdgeCount result{build_square(g).edge_count(), 3.5 * g.order()};
  if (2 * result.edges > static_cast<std::size_t>(7 * g.order())) {
    violated(g, fmt::format("square has {} edges, above 7n/2 = {}", result.edges, result.bound));
  }
  return result;
}

std::pair<OrientedGraph, SubdivisionMap> subdivide_source_sink_arcs(const OrientedGraph& g) {
  if (!is_cubic(g) || !is_connected(g)) {
    fail(ErrorCode::PreconditionViolated, "expected a connected cubic orientation");
  }
  SubdivisionMap map;
  std::vector<Arc> arcs;
  Vertex next = g.order();
  for (const Arc& a : g.arcs()) {
    if (g.in_degree(a.tail) == 0 && g.out_degree(a.head) == 0) {
      map.entries.push_back({a.tail, a.head, next});
      arcs.push_back({a.tail, next});
      arcs.push_back({next, a.head});
      ++next;
    } else {
      arcs.push_back(a);
    }
  }
  if (map.entries.empty()) fail(ErrorCode::PreconditionViolated, "no source is adjacent to a sink");
  OrientedGraph result = build_oriented_graph(next, arcs);
  if (!meets_subcubic_qr7_precondition(result)) {
    violated(g, "subdivided graph fails the QR_7 precondition");
  }
  return {std::move(result), std::move(map)};
}

CorePartition seven_core_partition(const OrientedGraph& g, const SimpleGraph& square) {
  const int n = square.order();
  if (n != g.order()) fail(ErrorCode::PreconditionViolated, "square does not match the graph");
  std::vector<int> degree(n);
  std::vector<std::uint8_t> removed(n, 0);
  std::set<Vertex> low;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = square.degree(v);
    if (degree[v] <= kColours - 1) low.insert(v);
  }
  std::vector<Vertex> peeled;
  while (!low.empty()) {
    const Vertex v = *low.begin();
    low.erase(low.begin());
    removed[v] = 1;
    peeled.push_back(v);
    for (Vertex w : square.neighbours(v)) {
      if (!removed[w] && --degree[w] == kColours - 1) low.insert(w);
    }
  }

  CorePartition part;
  for (Vertex v = 0; v < n; ++v) {
    if (!removed[v]) part.core.push_back(v);
  }
  part.shell_order.assign(peeled.rbegin(), peeled.rend());

  std::vector<std::uint8_t> in_core(n, 0);
  for (Vertex v : part.core) in_core[v] = 1;
  std::vector<std::uint8_t> is_between(n, 0);
  for (const TwoDipath& p : two_dipaths(g)) {
    if (!in_core[p.centre] && in_core[p.first] && in_core[p.last]) is_between[p.centre] = 1;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (is_between[v]) part.between.push_back(v);
    if (in_core[v] || is_between[v]) part.gc_vertices.push_back(v);
  }
  for (const Arc& a : g.arcs()) {
    const bool tail_core = in_core[a.tail], head_core = in_core[a.head];
    if ((tail_core && head_core) || (tail_core && is_between[a.head]) ||
        (head_core && is_between[a.tail])) {
      part.gc_arcs.push_back(a);
    }
  }
  return part;
}

VertexColouring colour_square_core(const OrientedGraph& g, const CorePartition& part) {
  VertexColouring colouring(g.order());
  if (part.core.empty()) return colouring;

  if (part.gc_is_whole_graph(g)) {
    // Edge ledger: with every shell vertex between core vertices and the shell
    // independent, e_C <= 7|C|/2 - 5|H|/2, yet minimum core degree 7 forces
    // e_C >= 7|C|/2.
    const SimpleGraph square = build_square(g);
    const long long core = static_cast<long long>(part.core.size());
    const long long shell = g.order() - core;
    const long long e_core = static_cast<long long>(square.induced_edge_count(part.core));
    violated(g, fmt::format("G_C equals G: |C| = {}, |H| = {}, e_C = {}, ledger bound 2e_C <= {}",
                            core, shell, e_core, 7 * core - 5 * shell));
  }

  const Subgraph gc = arc_subgraph(g, part.gc_vertices, part.gc_arcs);
  for (const auto& members : components(gc.graph)) {
    const Subgraph piece = induced_subgraph(gc.graph, members);
    if (!meets_subcubic_qr7_precondition(piece.graph)) {
      violated(g, "a component of G_C fails the QR_7 precondition");
    }
    const VertexMap phi = subcubic_qr7(piece.graph);
    for (std::size_t i = 0; i < phi.size(); ++i) {
      const Vertex original = gc.to_parent[piece.to_parent[i]];
      if (std::ranges::binary_search(part.core, original)) colouring.set(original, phi[i]);
    }
  }

  const SimpleGraph square = build_square(g);
  if (!is_proper_colouring(square, colouring)) violated(g, "core colouring is not proper on the square");
  return colouring;
}

VertexColouring extend_by_peel_order(const SimpleGraph& square, VertexColouring partial,
                                     const CorePartition& part) {
  if (partial.size() != square.order() || partial.max_colour() >= kColours ||
      !is_proper_colouring(square, partial)) {
    fail(ErrorCode::PreconditionViolated, "partial colouring is not a proper 7-colouring");
  }
  for (Vertex v : part.core) {
    if (!partial.assigned(v)) fail(ErrorCode::PreconditionViolated, fmt::format("core vertex {} uncoloured", v));
  }
  for (Vertex v : part.shell_order) {
    std::array<bool, kColours> taken{};
    for (Vertex w : square.neighbours(v)) {
      if (partial.assigned(w)) taken[partial[w]] = true;
    }
    const auto free = std::ranges::find(taken, false);
    if (free == taken.end()) {
      throw Error(ErrorCode::InvariantViolation,
                  fmt::format("vertex {} sees all seven colours during extension", v));
    }
    partial.set(v, static_cast<int>(free - taken.begin()));
  }
  return partial;
}

namespace {

std::pair<VertexColouring, DipathRoute> colour_component(const OrientedGraph& g,
                                                         const DipathOptions& options) {
  if (has_source_adjacent_to_sink(g)) {
    const auto [subdivided, map] = subdivide_source_sink_arcs(g);
    const VertexMap phi = subcubic_qr7(subdivided);
    return {VertexColouring(VertexMap(phi.begin(), phi.begin() + g.order())),
            DipathRoute::SourceSinkSubdivision};
  }

  const SimpleGraph square = build_square(g);
  if (square.is_regular(kColours)) {
    if (square.is_complete()) violated(g, "square is complete on 8 vertices (an 8-vertex oclique)");
    auto c = proper_colouring_within(square, kColours);
    if (!c) violated(g, "7-regular square without a 7-colouring");
    return {std::move(*c), DipathRoute::SevenRegular};
  }

  const CorePartition part = seven_core_partition(g, square);
  if (part.core.empty()) {
    return {extend_by_peel_order(square, VertexColouring(g.order()), part), DipathRoute::PeelGreedy};
  }
  if (options.try_direct) {
    SearchOutcome direct = search_homomorphism(g, qr7().graph(), {}, options.direct_budget);
    if (direct.status == SearchStatus::Found) {
      return {VertexColouring(std::move(direct.map)), DipathRoute::DirectQR7};
    }
  }
  return {extend_by_peel_order(square, colour_square_core(g, part), part),
          DipathRoute::CoreExtension};
}

}  // namespace

DipathColouring two_dipath_seven_colouring(const OrientedGraph& g, const DipathOptions& options) {
  if (!is_cubic(g)) fail(ErrorCode::PreconditionViolated, "expected a cubic orientation");
  DipathColouring result{VertexColouring(g.order()), {}};
  for (const auto& members : components(g)) {
    const Subgraph piece = induced_subgraph(g, members);
    auto [colouring, route] = colour_component(piece.graph, options);
    for (std::size_t i = 0; i < members.size(); ++i) {
      result.colouring.set(piece.to_parent[i], colouring[static_cast<Vertex>(i)]);
    }
    result.routes.push_back(route);
  }
  if (!validate_two_dipath_colouring(g, result.colouring).valid() ||
      result.colouring.max_colour() >= kColours) {
    violated(g, "2-dipath pipeline produced an invalid colouring");
  }
  return result;
}

}  // namespace orcol
