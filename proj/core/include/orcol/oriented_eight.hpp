#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orcol/oriented_graph.hpp"

namespace orcol {

enum class WitnessKind {
  /// Centre of out-degree 2 whose out-neighbours both have in-degree 2.
  TwoSinkOutNeighbours,
  /// Centre of out-degree 2 with an out-neighbour of in-degree 2 and an
  /// in-neighbour of out-degree 2.
  MixedNeighbours,
};

std::string_view to_string(WitnessKind kind) noexcept;

struct AltPathWitness {
  WitnessKind kind = WitnessKind::TwoSinkOutNeighbours;
  Vertex centre = -1;
  /// An out-neighbour of in-degree 2 (the lower one for TwoSinkOutNeighbours).
  Vertex out_neighbour = -1;
  /// TwoSinkOutNeighbours: the other out-neighbour. Otherwise -1.
  Vertex other_out_neighbour = -1;
  /// MixedNeighbours: the in-neighbour of out-degree 2. Otherwise -1.
  Vertex in_neighbour = -1;
};

/// Re-checks the degree conditions of `w` against `g`.
bool is_valid_witness(const OrientedGraph& g, const AltPathWitness& w);

/// Finds a witness on a cubic orientation without sources or sinks: first by
/// scanning for TwoSinkOutNeighbours, then by walking from a directed cycle
/// of out-degree-2 vertices until an in-degree-2 vertex appears.
AltPathWitness alt_path_witness(const OrientedGraph& g);

enum class EightCase { SourceOrSink, Triangle, TriangleFreeCutArc, TriangleFreeSurgery };

std::string_view to_string(EightCase tag) noexcept;

/// Vertex roles of the vertex-removal surgery: x -> u is the witness arc,
/// u -> v, w -> u, z -> x, x -> y.
struct SurgeryTuple {
  Vertex x = -1, u = -1, v = -1, w = -1, z = -1, y = -1;
};

struct EightColouringCertificate {
  EightCase tag = EightCase::SourceOrSink;
  /// (u, v, w) with u -> v.
  std::optional<std::array<Vertex, 3>> triangle;
  std::optional<Arc> cut_arc;
  std::optional<SurgeryTuple> surgery;
  /// Which sub-branch produced the colouring.
  std::string detail;
  int palette_size = 0;
};

struct EightColouring {
  VertexColouring colouring;
  EightColouringCertificate certificate;
};

/// A triangle of U(G) labelled so that u -> v, and either u -> v -> w -> u
/// (directed) or u -> w, v -> w.
struct TriangleLabel {
  Vertex u = -1, v = -1, w = -1;
  bool directed = false;
};

TriangleLabel label_triangle(const OrientedGraph& g, const std::array<Vertex, 3>& triangle);

/// Turns a homomorphism of G - uv into QR_7 into an oriented 8-colouring of G.
/// Throws PreconditionViolated if `phi` is not such a homomorphism.
EightColouring recolour_triangle(const OrientedGraph& g, const TriangleLabel& label,
                                 std::vector<int> phi);

EightColouring colour_with_triangle(const OrientedGraph& g);

SurgeryTuple surgery_tuple(const OrientedGraph& g, const AltPathWitness& witness);

/// G - x + (y -> z). Vertices above x shift down by one.
OrientedGraph surgery_reduced_graph(const OrientedGraph& g, const SurgeryTuple& s);

/// Lifts a homomorphism of the reduced graph into QR_7 back to G: x takes a
/// cycle completion of (y, z) avoiding the colour of v, and u takes colour 7.
EightColouring extend_surgery(const OrientedGraph& g, const SurgeryTuple& s, WitnessKind kind,
                              const std::vector<int>& phi_reduced);

EightColouring colour_triangle_free(const OrientedGraph& g);
EightColouring colour_with_source_or_sink(const OrientedGraph& g);

/// An oriented colouring with at most 8 colours of a connected cubic
/// orientation, dispatched on sources/sinks and triangles.
EightColouring oriented_eight_colouring(const OrientedGraph& g);

}  // namespace orcol
