#include "orcol/oriented_graph.hpp"

#include <algorithm>
#include <map>
#include <iterator>
#include <set>
#include <tuple>

#include <fmt/core.h>

#include "orcol/error.hpp"

namespace orcol {

OrientedGraph build_oriented_graph(int n, std::span<const Arc> arcs) {
  if (n < 0) fail(ErrorCode::VertexOutOfRange, fmt::format("negative order {}", n));
  OrientedGraph g;
  g.n_ = n;
  g.out_.assign(n, {});
  g.in_.assign(n, {});
  g.matrix_.assign(static_cast<std::size_t>(n) * n, 0);
  for (const Arc& a : arcs) {
    if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n) {
      fail(ErrorCode::VertexOutOfRange,
           fmt::format("arc ({}, {}) outside 0..{}", a.tail, a.head, n - 1));
    }
    if (a.tail == a.head) fail(ErrorCode::LoopArc, fmt::format("loop at {}", a.tail));
    if (g.has_arc(a.tail, a.head)) {
      fail(ErrorCode::DuplicateArc, fmt::format("arc ({}, {}) repeated", a.tail, a.head));
    }
    if (g.has_arc(a.head, a.tail)) {
      fail(ErrorCode::DigonArc, fmt::format("both ({0}, {1}) and ({1}, {0})", a.tail, a.head));
    }
    g.matrix_[static_cast<std::size_t>(a.tail) * n + a.head] = 1;
    g.out_[a.tail].push_back(a.head);
    g.in_[a.head].push_back(a.tail);
    g.arcs_.push_back(a);
  }
  for (int v = 0; v < n; ++v) {
    std::ranges::sort(g.out_[v]);
    std::ranges::sort(g.in_[v]);
  }
  std::ranges::sort(g.arcs_);
  return g;
}

std::vector<Vertex> OrientedGraph::neighbours(Vertex v) const {
  std::vector<Vertex> result;
  result.reserve(out_[v].size() + in_[v].size());
  std::ranges::merge(out_[v], in_[v], std::back_inserter(result));
  return result;
}

bool VertexColouring::complete() const {
  return std::ranges::none_of(colours_, [](int c) { return c == kUnassigned; });
}

int VertexColouring::palette_size() const {
  std::set<int> used;
  for (int c : colours_) {
    if (c != kUnassigned) used.insert(c);
  }
  return static_cast<int>(used.size());
}

int VertexColouring::max_colour() const {
  int best = -1;
  for (int c : colours_) best = std::max(best, c);
  return best;
}

namespace {

void require_total(const OrientedGraph& g, const VertexColouring& c) {
  if (c.size() != g.order()) {
    fail(ErrorCode::MissingVertexColour,
         fmt::format("colouring covers {} vertices, graph has {}", c.size(), g.order()));
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!c.assigned(v)) fail(ErrorCode::MissingVertexColour, fmt::format("vertex {}", v));
  }
}

void collect_monochromatic(const OrientedGraph& g, const VertexColouring& c, ValidityReport& r) {
  for (const Arc& a : g.arcs()) {
    if (c[a.tail] == c[a.head]) r.monochromatic_arcs.push_back(a);
  }
}

}  // namespace

ValidityReport validate_oriented_colouring(const OrientedGraph& g, const VertexColouring& c) {
  require_total(g, c);
  ValidityReport report;
  collect_monochromatic(g, c, report);

  // Arcs grouped by colour pair; uv clashes with every xy in the reversed group.
  std::map<std::pair<int, int>, std::vector<Arc>> by_colours;
  for (const Arc& a : g.arcs()) {
    if (c[a.tail] != c[a.head]) by_colours[{c[a.tail], c[a.head]}].push_back(a);
  }
  for (const auto& [key, group] : by_colours) {
    if (key.first > key.second) continue;
    auto reversed = by_colours.find({key.second, key.first});
    if (reversed == by_colours.end()) continue;
    for (const Arc& a : group) {
      for (const Arc& b : reversed->second) report.opposed_arcs.emplace_back(a, b);
    }
  }
  return report;
}

ValidityReport validate_two_dipath_colouring(const OrientedGraph& g, const VertexColouring& c) {
  require_total(g, c);
  ValidityReport report;
  collect_monochromatic(g, c, report);
  for (const TwoDipath& p : two_dipaths(g)) {
    if (c[p.first] == c[p.last]) report.clashing_dipaths.push_back(p);
  }
  return report;
}

std::vector<TwoDipath> two_dipaths(const OrientedGraph& g) {
  std::vector<TwoDipath> paths;
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex u : g.in_neighbours(v)) {
      for (Vertex w : g.out_neighbours(v)) {
        paths.push_back({u, v, w, !g.adjacent(u, w)});
      }
    }
  }
  std::ranges::sort(paths, {}, [](const TwoDipath& p) {
    return std::tuple(p.first, p.centre, p.last);
  });
  return paths;
}

bool is_oclique(const OrientedGraph& g) {
  const int n = g.order();
  std::vector<std::uint8_t> joined(static_cast<std::size_t>(n) * n, 0);
  for (const TwoDipath& p : two_dipaths(g)) {
    joined[static_cast<std::size_t>(p.first) * n + p.last] = 1;
    joined[static_cast<std::size_t>(p.last) * n + p.first] = 1;
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v) && !joined[static_cast<std::size_t>(u) * n + v]) return false;
    }
  }
  return true;
}

std::vector<std::vector<Vertex>> components(const OrientedGraph& g) {
  const int n = g.order();
  std::vector<int> label(n, -1);
  std::vector<std::vector<Vertex>> result;
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] != -1) continue;
    const int id = static_cast<int>(result.size());
    std::vector<Vertex> members{s};
    label[s] = id;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (Vertex w : g.neighbours(members[i])) {
        if (label[w] == -1) {
          label[w] = id;
          members.push_back(w);
        }
      }
    }
    std::ranges::sort(members);
    result.push_back(std::move(members));
  }
  return result;
}

bool is_connected(const OrientedGraph& g) { return components(g).size() <= 1; }

bool is_cubic(const OrientedGraph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 3) return false;
  }
  return true;
}

bool is_properly_subcubic(const OrientedGraph& g) {
  bool low = false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) > 3) return false;
    if (g.degree(v) <= 2) low = true;
  }
  return low;
}

bool has_source_or_sink(const OrientedGraph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.in_degree(v) == 0 || g.out_degree(v) == 0) return true;
  }
  return false;
}

bool has_source_adjacent_to_sink(const OrientedGraph& g, int min_degree) {
  for (const Arc& a : g.arcs()) {
    if (g.in_degree(a.tail) == 0 && g.out_degree(a.head) == 0 &&
        g.degree(a.tail) >= min_degree && g.degree(a.head) >= min_degree) {
      return true;
    }
  }
  return false;
}

std::vector<std::array<Vertex, 3>> triangles(const OrientedGraph& g) {
  std::vector<std::array<Vertex, 3>> result;
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto nu = g.neighbours(u);
    for (Vertex v : nu) {
      if (v <= u) continue;
      for (Vertex w : nu) {
        if (w <= v) continue;
        if (g.adjacent(v, w)) result.push_back({u, v, w});
      }
    }
  }
  return result;
}

std::vector<Arc> cut_arcs(const OrientedGraph& g) {
  // Iterative Tarjan bridge finding on the underlying graph.
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Arc> bridges;
  int timer = 0;
  struct Frame {
    Vertex v;
    Vertex parent;
    std::vector<Vertex> nbrs;
    std::size_t next = 0;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    std::vector<Frame> stack;
    disc[root] = low[root] = timer++;
    stack.push_back({root, -1, g.neighbours(root)});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < f.nbrs.size()) {
        const Vertex w = f.nbrs[f.next++];
        if (w == f.parent) continue;  // simple graph: a single parent edge
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          const Vertex v = f.v;
          stack.push_back({w, v, g.neighbours(w)});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        const Vertex v = f.v;
        const Vertex p = f.parent;
        stack.pop_back();
        if (p != -1) {
          low[p] = std::min(low[p], low[v]);
          if (low[v] > disc[p]) {
            bridges.push_back(g.has_arc(p, v) ? Arc{p, v} : Arc{v, p});
          }
        }
      }
    }
  }
  std::ranges::sort(bridges);
  return bridges;
}

StructuralProfile structural_profile(const OrientedGraph& g) {
  StructuralProfile p;
  const int n = g.order();
  p.degrees.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    p.degrees[v] = g.degree(v);
    if (g.in_degree(v) == 0) p.sources.push_back(v);
    if (g.out_degree(v) == 0) p.sinks.push_back(v);
  }
  p.connected = is_connected(g);
  p.triangles = triangles(g);
  p.cut_arcs = cut_arcs(g);
  if (n > 0) {
    p.max_degree = *std::ranges::max_element(p.degrees);
    p.min_degree = *std::ranges::min_element(p.degrees);
  }
  p.properly_subcubic = n > 0 && p.max_degree <= 3 && p.min_degree <= 2;
  return p;
}

std::vector<Vertex> Subgraph::from_parent(int parent_order) const {
  std::vector<Vertex> map(parent_order, -1);
  for (std::size_t i = 0; i < to_parent.size(); ++i) map[to_parent[i]] = static_cast<Vertex>(i);
  return map;
}

Subgraph arc_subgraph(const OrientedGraph& g, std::span<const Vertex> vertices,
                      std::span<const Arc> arcs) {
  Subgraph sub;
  sub.to_parent.assign(vertices.begin(), vertices.end());
  const auto local = sub.from_parent(g.order());
  std::vector<Arc> kept;
  kept.reserve(arcs.size());
  for (const Arc& a : arcs) {
    if (!g.has_arc(a.tail, a.head)) {
      fail(ErrorCode::NotAnArc, fmt::format("({}, {}) not in parent", a.tail, a.head));
    }
    if (local[a.tail] < 0 || local[a.head] < 0) {
      fail(ErrorCode::VertexOutOfRange,
           fmt::format("arc ({}, {}) leaves the vertex set", a.tail, a.head));
    }
    kept.push_back({local[a.tail], local[a.head]});
  }
  sub.graph = build_oriented_graph(static_cast<int>(vertices.size()), kept);
  return sub;
}

Subgraph induced_subgraph(const OrientedGraph& g, std::span<const Vertex> vertices) {
  std::vector<std::uint8_t> keep(g.order(), 0);
  for (Vertex v : vertices) keep[v] = 1;
  std::vector<Arc> arcs;
  for (const Arc& a : g.arcs()) {
    if (keep[a.tail] && keep[a.head]) arcs.push_back(a);
  }
  return arc_subgraph(g, vertices, arcs);
}

OrientedGraph without_arc(const OrientedGraph& g, Arc arc) {
  const auto in_range = [&](Vertex v) { return v >= 0 && v < g.order(); };
  if (!in_range(arc.tail) || !in_range(arc.head) || !g.has_arc(arc.tail, arc.head)) {
    fail(ErrorCode::NotAnArc, fmt::format("{} -> {} is not an arc", arc.tail, arc.head));
  }
  std::vector<Arc> arcs;
  arcs.reserve(g.arc_count());
  for (const Arc& a : g.arcs()) {
    if (a != arc) arcs.push_back(a);
  }
  return build_oriented_graph(g.order(), arcs);
}

}  // namespace orcol
