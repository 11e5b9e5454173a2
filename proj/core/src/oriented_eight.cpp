#include "orcol/oriented_eight.hpp"

#include <algorithm>
#include <ranges>
#include <utility>

#include <fmt/core.h>

#include "orcol/codec.hpp"
#include "orcol/error.hpp"
#include "orcol/hom_search.hpp"
#include "orcol/oracle.hpp"
#include "orcol/paley.hpp"

namespace orcol {

namespace {

constexpr int kExtraColour = 7;
constexpr int kMaxColours = 8;

[[noreturn]] void violated(const OrientedGraph& g, const std::string& message) {
  throw Error(ErrorCode::InvariantViolation, message, emit_digraph6(g));
}

void require_connected_cubic(const OrientedGraph& g) {
  if (!is_cubic(g) || !is_connected(g)) {
    fail(ErrorCode::PreconditionViolated, "expected a connected cubic orientation");
  }
}

void require_no_source_or_sink(const OrientedGraph& g) {
  if (has_source_or_sink(g)) fail(ErrorCode::PreconditionViolated, "graph has a source or a sink");
}

Vertex third_neighbour(const OrientedGraph& g, Vertex v, Vertex a, Vertex b) {
  for (Vertex w : g.neighbours(v)) {
    if (w != a && w != b) return w;
  }
  return -1;
}

EightColouring finish(const OrientedGraph& g, std::vector<int> colours,
                      EightColouringCertificate certificate) {
  VertexColouring c(std::move(colours));
  if (!validate_oriented_colouring(g, c).valid() || c.max_colour() >= kMaxColours) {
    violated(g, fmt::format("{} branch ({}) produced an invalid colouring", to_string(certificate.tag),
                            certificate.detail));
  }
  certificate.palette_size = c.palette_size();
  return {std::move(c), std::move(certificate)};
}

std::vector<int> compose(const AffineAutomorphism& sigma, const std::vector<int>& colours) {
  std::vector<int> out(colours.size());
  std::ranges::transform(colours, out.begin(), sigma);
  return out;
}

}  // namespace

std::string_view to_string(WitnessKind kind) noexcept {
  return kind == WitnessKind::TwoSinkOutNeighbours ? "two_sink_out_neighbours" : "mixed_neighbours";
}

std::string_view to_string(EightCase tag) noexcept {
  switch (tag) {
    case EightCase::SourceOrSink: return "source_or_sink";
    case EightCase::Triangle: return "triangle";
    case EightCase::TriangleFreeCutArc: return "triangle_free_cut_arc";
    case EightCase::TriangleFreeSurgery: return "triangle_free_surgery";
  }
  return "unknown";
}

bool is_valid_witness(const OrientedGraph& g, const AltPathWitness& w) {
  const auto in_range = [&](Vertex v) { return v >= 0 && v < g.order(); };
  if (!in_range(w.centre) || g.out_degree(w.centre) != 2) return false;
  if (!in_range(w.out_neighbour) || !g.has_arc(w.centre, w.out_neighbour) ||
      g.in_degree(w.out_neighbour) != 2) {
    return false;
  }
  if (w.kind == WitnessKind::TwoSinkOutNeighbours) {
    return in_range(w.other_out_neighbour) && w.other_out_neighbour != w.out_neighbour &&
           g.has_arc(w.centre, w.other_out_neighbour) && g.in_degree(w.other_out_neighbour) == 2;
  }
  return in_range(w.in_neighbour) && g.has_arc(w.in_neighbour, w.centre) &&
         g.out_degree(w.in_neighbour) == 2;
}

AltPathWitness alt_path_witness(const OrientedGraph& g) {
  if (!is_cubic(g)) fail(ErrorCode::PreconditionViolated, "expected a cubic orientation");
  require_no_source_or_sink(g);
  const int n = g.order();
  const auto out_two = [&](Vertex v) { return g.out_degree(v) == 2; };

  for (Vertex v = 0; v < n; ++v) {
    if (!out_two(v)) continue;
    const auto out = g.out_neighbours(v);
    if (!out_two(out[0]) && !out_two(out[1])) {
      return {WitnessKind::TwoSinkOutNeighbours, v, out[0], out[1], -1};
    }
  }

  // Every out-degree-2 vertex now has an out-degree-2 out-neighbour, so
  // following them from any such vertex closes a directed cycle.
  const auto start = std::ranges::find_if(std::views::iota(0, n), out_two);
  if (start == std::views::iota(0, n).end()) violated(g, "no vertex of out-degree 2");
  std::vector<int> position(n, -1);
  std::vector<Vertex> trail;
  Vertex cur = *start;
  while (position[cur] == -1) {
    position[cur] = static_cast<int>(trail.size());
    trail.push_back(cur);
    const auto out = g.out_neighbours(cur);
    cur = out_two(out[0]) ? out[0] : out[1];
  }
  const std::vector<Vertex> cycle(trail.begin() + position[cur], trail.end());

  // Walk from x = cycle.front(), entered from its cycle predecessor, always
  // staying among out-degree-2 vertices until one of them has an
  // out-neighbour of in-degree 2.
  std::vector<std::uint8_t> visited(n, 0);
  Vertex pred = cycle.back();
  Vertex t = cycle.front();
  Vertex cycle_next = cycle.size() > 1 ? cycle[1] : cycle.front();
  bool first = true;
  while (!visited[t]) {
    visited[t] = 1;
    const auto out = g.out_neighbours(t);
    for (Vertex o : out) {
      if (!out_two(o)) return {WitnessKind::MixedNeighbours, t, o, -1, pred};
    }
    Vertex next = out[0];
    if (first && next == cycle_next) next = out[1];
    first = false;
    pred = t;
    t = next;
  }
  violated(g, "walk among out-degree-2 vertices closed without meeting an in-degree-2 vertex");
}

EightColouring colour_with_source_or_sink(const OrientedGraph& g) {
  require_connected_cubic(g);
  if (!has_source_or_sink(g)) fail(ErrorCode::PreconditionViolated, "graph has no source or sink");
  auto c = oriented_colouring_within(g, kMaxColours);
  if (!c) violated(g, "no oriented 8-colouring of a cubic orientation with a source or sink");
  EightColouringCertificate cert;
  cert.tag = EightCase::SourceOrSink;
  cert.detail = "exact_search";
  return finish(g, c->colours(), std::move(cert));
}

TriangleLabel label_triangle(const OrientedGraph& g, const std::array<Vertex, 3>& triangle) {
  const auto [a, b, c] = triangle;
  if (!g.adjacent(a, b) || !g.adjacent(b, c) || !g.adjacent(a, c)) {
    fail(ErrorCode::PreconditionViolated, "vertices do not form a triangle");
  }
  if (g.has_arc(a, b) && g.has_arc(b, c) && g.has_arc(c, a)) return {a, b, c, true};
  if (g.has_arc(b, a) && g.has_arc(c, b) && g.has_arc(a, c)) return {a, c, b, true};
  // Transitive: order by in-degree within the triangle.
  std::array<Vertex, 3> tri = triangle;
  const auto inner_in = [&](Vertex x) {
    return std::ranges::count_if(tri, [&](Vertex y) { return g.has_arc(y, x); });
  };
  std::ranges::sort(tri, {}, inner_in);
  return {tri[0], tri[1], tri[2], false};
}

EightColouring recolour_triangle(const OrientedGraph& g, const TriangleLabel& label,
                                 std::vector<int> phi) {
  const auto [u, v, w, directed] = label;
  const Tournament& t = qr7();
  if (!g.has_arc(u, v) || !is_homomorphism(without_arc(g, {u, v}), t.graph(), phi)) {
    fail(ErrorCode::PreconditionViolated, "phi is not a homomorphism of G - uv into QR_7");
  }
  EightColouringCertificate cert;
  cert.tag = EightCase::Triangle;
  cert.triangle = std::array<Vertex, 3>{u, v, w};

  if (phi[u] == phi[v]) {
    phi[u] = kExtraColour;
    cert.detail = "recolour_u_equal_ends";
    return finish(g, std::move(phi), std::move(cert));
  }
  if (t.beats(phi[u], phi[v])) {
    cert.detail = "qr7_direct";
    return finish(g, std::move(phi), std::move(cert));
  }
  phi = compose(normalize_arc(7, {phi[v], phi[u]}, {0, 1}), phi);

  const Vertex u_other = third_neighbour(g, u, v, w);
  const Vertex v_other = third_neighbour(g, v, u, w);
  if (g.has_arc(u, u_other) || phi[u_other] != 0) {
    phi[u] = kExtraColour;
    cert.detail = "recolour_u";
    return finish(g, std::move(phi), std::move(cert));
  }
  if (g.has_arc(v_other, v) || phi[v_other] != 1) {
    phi[v] = kExtraColour;
    cert.detail = "recolour_v";
    return finish(g, std::move(phi), std::move(cert));
  }

  const Vertex w_other = third_neighbour(g, w, u, v);
  static constexpr std::array<std::pair<int, int>, 3> kOptions{{{2, 4}, {2, 6}, {4, 6}}};
  for (const auto& [pu, pv] : kOptions) {
    if (directed) {
      for (Vertex x : cycle_completions(t, {pu, pv})) {
        const bool fits = g.has_arc(w, w_other) ? t.beats(x, phi[w_other]) : t.beats(phi[w_other], x);
        if (!fits) continue;
        phi[u] = pu, phi[v] = pv, phi[w] = x;
        cert.detail = fmt::format("directed_triangle u={} v={} w={}", pu, pv, x);
        return finish(g, std::move(phi), std::move(cert));
      }
    } else if (phi[w_other] != pu && phi[w_other] != pv) {
      phi[u] = pu, phi[v] = pv, phi[w] = kExtraColour;
      cert.detail = fmt::format("transitive_triangle u={} v={} w=7", pu, pv);
      return finish(g, std::move(phi), std::move(cert));
    }
  }
  violated(g, "no recolouring option fits the triangle");
}

EightColouring colour_with_triangle(const OrientedGraph& g) {
  require_connected_cubic(g);
  require_no_source_or_sink(g);
  const auto tris = triangles(g);
  if (tris.empty()) fail(ErrorCode::PreconditionViolated, "underlying graph is triangle free");
  const TriangleLabel label = label_triangle(g, tris.front());
  const OrientedGraph rest = without_arc(g, {label.u, label.v});
  if (!is_connected(rest)) violated(g, "removing a triangle arc disconnected the graph");
  return recolour_triangle(g, label, subcubic_qr7(rest));
}

SurgeryTuple surgery_tuple(const OrientedGraph& g, const AltPathWitness& witness) {
  if (!is_valid_witness(g, witness)) fail(ErrorCode::PreconditionViolated, "invalid witness");
  SurgeryTuple s;
  s.x = witness.centre;
  s.u = witness.out_neighbour;
  s.z = g.in_neighbours(s.x)[0];
  s.y = third_neighbour(g, s.x, s.u, s.z);
  s.v = g.out_neighbours(s.u)[0];
  s.w = third_neighbour(g, s.u, s.x, s.v);
  return s;
}

OrientedGraph surgery_reduced_graph(const OrientedGraph& g, const SurgeryTuple& s) {
  std::vector<Vertex> keep;
  for (Vertex q = 0; q < g.order(); ++q) {
    if (q != s.x) keep.push_back(q);
  }
  const auto local = [&](Vertex q) { return q < s.x ? q : q - 1; };
  std::vector<Arc> arcs = induced_subgraph(g, keep).graph.arcs();
  arcs.push_back({local(s.y), local(s.z)});
  return build_oriented_graph(g.order() - 1, arcs);
}

EightColouring extend_surgery(const OrientedGraph& g, const SurgeryTuple& s, WitnessKind kind,
                              const std::vector<int>& phi_reduced) {
  const OrientedGraph reduced = surgery_reduced_graph(g, s);
  if (!is_homomorphism(reduced, qr7().graph(), phi_reduced)) {
    fail(ErrorCode::PreconditionViolated, "phi is not a homomorphism of the reduced graph");
  }
  std::vector<int> phi(g.order(), VertexColouring::kUnassigned);
  for (Vertex q = 0; q < g.order(); ++q) {
    if (q != s.x) phi[q] = phi_reduced[q < s.x ? q : q - 1];
  }
  const auto options = cycle_completions(qr7(), {phi[s.y], phi[s.z]});
  const auto pick = std::ranges::find_if(options, [&](Vertex c) { return c != phi[s.v]; });
  if (pick == options.end()) violated(g, "every colour closing the surgery arc clashes with v");
  phi[s.x] = *pick;
  phi[s.u] = kExtraColour;

  EightColouringCertificate cert;
  cert.tag = EightCase::TriangleFreeSurgery;
  cert.surgery = s;
  cert.detail = to_string(kind);
  return finish(g, std::move(phi), std::move(cert));
}

EightColouring colour_triangle_free(const OrientedGraph& g) {
  require_connected_cubic(g);
  require_no_source_or_sink(g);
  if (!triangles(g).empty()) fail(ErrorCode::PreconditionViolated, "underlying graph has a triangle");

  if (const auto bridges = cut_arcs(g); !bridges.empty()) {
    const Arc cut = bridges.front();
    EightColouringCertificate cert;
    cert.tag = EightCase::TriangleFreeCutArc;
    cert.cut_arc = cut;
    const OrientedGraph rest = without_arc(g, cut);
    std::vector<int> colours(g.order(), VertexColouring::kUnassigned);
    for (const auto& members : components(rest)) {
      const Subgraph side = induced_subgraph(rest, members);
      const auto local = side.from_parent(g.order());
      PinSet pins;
      if (local[cut.tail] >= 0) pins.pin(local[cut.tail], 0);
      if (local[cut.head] >= 0) pins.pin(local[cut.head], 1);
      const VertexMap phi = subcubic_qr7(side.graph, pins);
      for (std::size_t i = 0; i < phi.size(); ++i) colours[side.to_parent[i]] = phi[i];
    }
    cert.detail = "merge_sides";
    return finish(g, std::move(colours), std::move(cert));
  }

  const AltPathWitness witness = alt_path_witness(g);
  const SurgeryTuple s = surgery_tuple(g, witness);
  if (g.adjacent(s.y, s.z)) violated(g, "surgery ends are adjacent in a triangle-free graph");
  const OrientedGraph reduced = surgery_reduced_graph(g, s);
  if (!meets_subcubic_qr7_precondition(reduced)) {
    violated(g, "reduced graph fails the QR_7 precondition");
  }
  const Vertex v_local = s.v < s.x ? s.v : s.v - 1;
  return extend_surgery(g, s, witness.kind, subcubic_qr7(reduced, PinSet{{v_local, 0}}));
}

EightColouring oriented_eight_colouring(const OrientedGraph& g) {
  require_connected_cubic(g);
  if (has_source_or_sink(g)) return colour_with_source_or_sink(g);
  if (!triangles(g).empty()) return colour_with_triangle(g);
  return colour_triangle_free(g);
}

}  // namespace orcol
