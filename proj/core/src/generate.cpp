#include "orcol/generate.hpp"

#include <algorithm>
#include <numeric>

#include <fmt/core.h>

#include "orcol/error.hpp"

namespace orcol {

namespace {

std::uint64_t splitmix(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Rng::Rng(std::uint64_t seed) {
  for (auto& word : s_) word = splitmix(seed);
}

std::uint64_t Rng::next() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection on the top of the range keeps the draw unbiased.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

SimpleGraph random_cubic_graph(int n, Rng& rng) {
  if (n < 4 || n % 2 != 0) fail(ErrorCode::BadOrder, fmt::format("cubic graphs need even n >= 4, got {}", n));
  std::vector<Vertex> points(static_cast<std::size_t>(3) * n);
  for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<Vertex>(i / 3);
  for (;;) {
    for (std::size_t i = points.size() - 1; i > 0; --i) {
      std::swap(points[i], points[rng.below(i + 1)]);
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    bool simple = true;
    for (std::size_t i = 0; i < points.size() && simple; i += 2) {
      const Vertex a = std::min(points[i], points[i + 1]);
      const Vertex b = std::max(points[i], points[i + 1]);
      if (a == b || std::ranges::find(edges, std::pair{a, b}) != edges.end()) simple = false;
      edges.emplace_back(a, b);
    }
    if (!simple) continue;
    SimpleGraph g(n, edges);
    if (is_connected(g)) return g;
  }
}

OrientedGraph random_cubic_orientation(int n, std::uint64_t seed) {
  Rng rng(seed);
  const SimpleGraph g = random_cubic_graph(n, rng);
  std::vector<Arc> arcs;
  for (auto [a, b] : g.edges()) arcs.push_back(rng.coin() ? Arc{b, a} : Arc{a, b});
  return build_oriented_graph(n, arcs);
}

OrientedGraph random_subcubic_orientation(int n, std::uint64_t seed) {
  if (n < 1) fail(ErrorCode::BadOrder, "need at least one vertex");
  Rng rng(seed);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  for (std::size_t i = pairs.size(); i > 1; --i) std::swap(pairs[i - 1], pairs[rng.below(i)]);
  // Keep a random prefix of the shuffled pairs subject to the degree cap,
  // leaving vertex `spare` at degree <= 2.
  const Vertex spare = static_cast<Vertex>(rng.below(n));
  const std::size_t attempts = pairs.empty() ? 0 : rng.below(pairs.size() + 1);
  std::vector<int> degree(n, 0);
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < attempts; ++i) {
    const auto [u, v] = pairs[i];
    const auto cap = [&](Vertex x) { return x == spare ? 2 : 3; };
    if (degree[u] >= cap(u) || degree[v] >= cap(v)) continue;
    ++degree[u];
    ++degree[v];
    arcs.push_back(rng.coin() ? Arc{v, u} : Arc{u, v});
  }
  return build_oriented_graph(n, arcs);
}

Orientations::Orientations(SimpleGraph g) : graph_(std::move(g)) {
  if (graph_.edge_count() > 63) {
    fail(ErrorCode::LimitExceeded, fmt::format("{} edges give too many orientations", graph_.edge_count()));
  }
}

OrientedGraph Orientations::operator[](std::uint64_t index) const {
  const auto& edges = graph_.edges();
  const std::size_t m = edges.size();
  std::vector<Arc> arcs;
  arcs.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto [lo, hi] = edges[i];
    const bool flipped = ((index >> (m - 1 - i)) & 1) != 0;
    arcs.push_back(flipped ? Arc{hi, lo} : Arc{lo, hi});
  }
  return build_oriented_graph(graph_.order(), arcs);
}

Orientations all_orientations(const SimpleGraph& g) { return Orientations(g); }

}  // namespace orcol
