#include "orcol/catalogue.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>

#include <fmt/core.h>

#include "orcol/codec.hpp"
#include "orcol/error.hpp"

namespace orcol {

namespace {

// Per-vertex label: (degree, triangles through v, vertices at distance two).
std::vector<std::array<int, 3>> vertex_labels(const SimpleGraph& g) {
  std::vector<std::array<int, 3>> labels(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    int tri = 0;
    std::vector<std::uint8_t> far(g.order(), 0);
    for (Vertex a : g.neighbours(v)) {
      for (Vertex b : g.neighbours(a)) {
        if (b != v && !g.adjacent(v, b)) far[b] = 1;
        if (b > a && g.adjacent(v, b)) ++tri;
      }
    }
    labels[v] = {g.degree(v), tri, static_cast<int>(std::ranges::count(far, 1))};
  }
  return labels;
}

bool extend(const SimpleGraph& a, const SimpleGraph& b, const std::vector<std::array<int, 3>>& la,
            const std::vector<std::array<int, 3>>& lb, std::vector<Vertex>& map,
            std::vector<std::uint8_t>& used, Vertex v) {
  if (v == a.order()) return true;
  for (Vertex image = 0; image < b.order(); ++image) {
    if (used[image] || la[v] != lb[image]) continue;
    bool consistent = true;
    for (Vertex w = 0; w < v && consistent; ++w) {
      consistent = a.adjacent(v, w) == b.adjacent(image, map[w]);
    }
    if (!consistent) continue;
    map[v] = image;
    used[image] = 1;
    if (extend(a, b, la, lb, map, used, v + 1)) return true;
    used[image] = 0;
  }
  return false;
}

void saturate(int n, std::vector<std::vector<Vertex>>& adj, std::vector<SimpleGraph>& classes) {
  Vertex v = 0;
  while (v < n && adj[v].size() == 3) ++v;
  if (v == n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b : adj[a]) {
        if (a < b) edges.emplace_back(a, b);
      }
    }
    SimpleGraph g(n, edges);
    if (!is_connected(g)) return;
    for (const SimpleGraph& known : classes) {
      if (are_isomorphic(known, g)) return;
    }
    classes.push_back(std::move(g));
    return;
  }
  const Vertex floor = std::max(v, adj[v].empty() ? v : *std::ranges::max_element(adj[v]));
  for (Vertex w = floor + 1; w < n; ++w) {
    if (adj[w].size() == 3) continue;
    adj[v].push_back(w);
    adj[w].push_back(v);
    saturate(n, adj, classes);
    adj[v].pop_back();
    adj[w].pop_back();
  }
}

}  // namespace

bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  const auto la = vertex_labels(a);
  const auto lb = vertex_labels(b);
  auto sa = la, sb = lb;
  std::ranges::sort(sa);
  std::ranges::sort(sb);
  if (sa != sb) return false;
  std::vector<Vertex> map(a.order(), -1);
  std::vector<std::uint8_t> used(b.order(), 0);
  return extend(a, b, la, lb, map, used, 0);
}

std::vector<SimpleGraph> enumerate_connected_cubic(int n) {
  if (n < 4 || n % 2 != 0) fail(ErrorCode::BadOrder, fmt::format("cubic graphs need even n >= 4, got {}", n));
  std::vector<std::vector<Vertex>> adj(n);
  std::vector<SimpleGraph> classes;
  saturate(n, adj, classes);
  return classes;
}

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("ORCOL_DATA_DIR"); env != nullptr && *env != '\0') return env;
  const std::filesystem::path build_dir = ORCOL_BUILD_DATA_DIR;
  if (std::filesystem::exists(build_dir)) return build_dir;
  return ORCOL_INSTALL_DATA_DIR;
}

std::filesystem::path catalogue_file(int n, const std::filesystem::path& dir) {
  return dir / fmt::format("cubic_{:02}.g6", n);
}

std::vector<SimpleGraph> load_cubic_catalogue(int n, const std::filesystem::path& dir) {
  const auto path = catalogue_file(n, dir);
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, fmt::format("cannot open {}", path.string()));
  std::vector<SimpleGraph> graphs;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    graphs.push_back(parse_graph6(line));
  }
  return graphs;
}

}  // namespace orcol
