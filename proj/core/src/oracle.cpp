#include "orcol/oracle.hpp"

#include <algorithm>
#include <bit>

#include <fmt/core.h>

#include "orcol/dipath_seven.hpp"
#include "orcol/error.hpp"

namespace orcol {

namespace {

void check_limit(int order, const OracleLimits& limits) {
  if (order > limits.max_vertices) {
    fail(ErrorCode::LimitExceeded,
         fmt::format("{} vertices exceeds the oracle limit of {}", order, limits.max_vertices));
  }
}

// BFS from the lowest unvisited vertex of each component; vertex 0 first.
std::vector<Vertex> bfs_order(const OrientedGraph& g) {
  std::vector<Vertex> order;
  std::vector<std::uint8_t> seen(g.order(), 0);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    const std::size_t start = order.size();
    order.push_back(s);
    for (std::size_t i = start; i < order.size(); ++i) {
      for (Vertex w : g.neighbours(order[i])) {
        if (!seen[w]) {
          seen[w] = 1;
          order.push_back(w);
        }
      }
    }
  }
  return order;
}

class OrientedColouringSearch {
 public:
  OrientedColouringSearch(const OrientedGraph& g, int colours, std::uint64_t budget)
      : g_(g),
        k_(colours),
        budget_(budget),
        order_(bfs_order(g)),
        colour_(g.order(), VertexColouring::kUnassigned),
        flow_(static_cast<std::size_t>(colours) * colours, 0) {}

  std::optional<VertexColouring> run() {
    if (g_.order() == 0) return VertexColouring(0);
    if (k_ <= 0) return std::nullopt;
    if (descend(0, 0)) return VertexColouring(colour_);
    return std::nullopt;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  int& flow(int from, int to) { return flow_[static_cast<std::size_t>(from) * k_ + to]; }

  // Records the arcs from v to already coloured neighbours; false on a clash.
  bool place(Vertex v, int c, std::vector<std::pair<int, int>>& added) {
    for (Vertex w : g_.out_neighbours(v)) {
      const int d = colour_[w];
      if (d == VertexColouring::kUnassigned) continue;
      if (d == c || flow(d, c) != 0) return false;
      ++flow(c, d);
      added.emplace_back(c, d);
    }
    for (Vertex u : g_.in_neighbours(v)) {
      const int d = colour_[u];
      if (d == VertexColouring::kUnassigned) continue;
      if (d == c || flow(c, d) != 0) return false;
      ++flow(d, c);
      added.emplace_back(d, c);
    }
    return true;
  }

  bool descend(std::size_t index, int used) {
    if (index == order_.size()) return true;
    const Vertex v = order_[index];
    const int top = std::min(k_ - 1, used);
    for (int c = 0; c <= top; ++c) {
      if (budget_ != 0 && nodes_ >= budget_) {
        exhausted_ = true;
        return false;
      }
      ++nodes_;
      std::vector<std::pair<int, int>> added;
      colour_[v] = c;
      if (place(v, c, added) && descend(index + 1, std::max(used, c + 1))) return true;
      for (auto [from, to] : added) --flow(from, to);
      colour_[v] = VertexColouring::kUnassigned;
      if (exhausted_) return false;
    }
    return false;
  }

  const OrientedGraph& g_;
  int k_;
  std::uint64_t budget_;
  std::vector<Vertex> order_;
  std::vector<int> colour_;
  std::vector<int> flow_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

class DsaturSearch {
 public:
  DsaturSearch(const SimpleGraph& g, int colours, std::uint64_t budget)
      : g_(g),
        k_(colours),
        budget_(budget),
        colour_(g.order(), VertexColouring::kUnassigned),
        seen_(static_cast<std::size_t>(g.order()) * std::max(colours, 1), 0),
        saturation_(g.order(), 0) {}

  std::optional<VertexColouring> run() {
    if (g_.order() == 0) return VertexColouring(0);
    if (k_ <= 0) return std::nullopt;
    if (descend(0, 0)) return VertexColouring(colour_);
    return std::nullopt;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  int& seen(Vertex v, int c) { return seen_[static_cast<std::size_t>(v) * k_ + c]; }

  Vertex pick() const {
    Vertex best = -1;
    int best_sat = -1;
    int best_free = -1;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (colour_[v] != VertexColouring::kUnassigned) continue;
      int free = 0;
      for (Vertex w : g_.neighbours(v)) free += colour_[w] == VertexColouring::kUnassigned;
      if (saturation_[v] > best_sat || (saturation_[v] == best_sat && free > best_free)) {
        best = v;
        best_sat = saturation_[v];
        best_free = free;
      }
    }
    return best;
  }

  void paint(Vertex v, int c, int delta) {
    for (Vertex w : g_.neighbours(v)) {
      int& count = seen(w, c);
      if (delta > 0 && count++ == 0) ++saturation_[w];
      if (delta < 0 && --count == 0) --saturation_[w];
    }
  }

  bool descend(int coloured, int used) {
    if (coloured == g_.order()) return true;
    const Vertex v = pick();
    const int top = std::min(k_ - 1, used);
    for (int c = 0; c <= top; ++c) {
      if (seen(v, c) != 0) continue;
      if (budget_ != 0 && nodes_ >= budget_) {
        exhausted_ = true;
        return false;
      }
      ++nodes_;
      colour_[v] = c;
      paint(v, c, +1);
      if (descend(coloured + 1, std::max(used, c + 1))) return true;
      paint(v, c, -1);
      colour_[v] = VertexColouring::kUnassigned;
      if (exhausted_) return false;
    }
    return false;
  }

  const SimpleGraph& g_;
  int k_;
  std::uint64_t budget_;
  std::vector<int> colour_;
  std::vector<int> seen_;
  std::vector<int> saturation_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

std::vector<Arc> class_relation(const OrientedGraph& g, const VertexColouring& c) {
  std::vector<Arc> arcs;
  for (const Arc& a : g.arcs()) arcs.push_back({c[a.tail], c[a.head]});
  std::ranges::sort(arcs);
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  return arcs;
}

}  // namespace

std::optional<VertexColouring> oriented_colouring_within(const OrientedGraph& g, int colours,
                                                         std::uint64_t node_budget,
                                                         std::uint64_t* nodes) {
  OrientedColouringSearch search(g, colours, node_budget);
  auto result = search.run();
  if (nodes != nullptr) *nodes += search.nodes();
  return result;
}

std::optional<VertexColouring> proper_colouring_within(const SimpleGraph& g, int colours,
                                                       std::uint64_t node_budget,
                                                       std::uint64_t* nodes) {
  DsaturSearch search(g, colours, node_budget);
  auto result = search.run();
  if (nodes != nullptr) *nodes += search.nodes();
  return result;
}

CliqueResult max_clique(const SimpleGraph& g, OracleLimits limits) {
  check_limit(g.order(), limits);
  if (g.order() > 64) fail(ErrorCode::LimitExceeded, "max_clique supports at most 64 vertices");
  using Mask = std::uint64_t;
  const int n = g.order();
  std::vector<Mask> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  CliqueResult best;
  std::vector<Vertex> current;
  auto expand = [&](auto&& self, Mask candidates) -> void {
    ++best.nodes;
    if (candidates == 0) {
      if (static_cast<int>(current.size()) > best.size) {
        best.size = static_cast<int>(current.size());
        best.members = current;
      }
      return;
    }
    while (candidates != 0) {
      if (static_cast<int>(current.size()) + std::popcount(candidates) <= best.size) return;
      const Vertex v = std::countr_zero(candidates);
      candidates &= candidates - 1;
      current.push_back(v);
      self(self, candidates & adj[v]);
      current.pop_back();
    }
    if (static_cast<int>(current.size()) > best.size) {
      best.size = static_cast<int>(current.size());
      best.members = current;
    }
  };
  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  expand(expand, all);
  return best;
}

ExactResult exact_chromatic(const SimpleGraph& g, OracleLimits limits) {
  check_limit(g.order(), limits);
  ExactResult result;
  if (g.order() == 0) return result;
  const int lower = std::max(1, max_clique(g, limits).size);
  for (int k = lower; k <= g.order(); ++k) {
    if (auto c = proper_colouring_within(g, k, 0, &result.nodes)) {
      result.value = k;
      result.witness = std::move(*c);
      return result;
    }
  }
  fail(ErrorCode::InvariantViolation, "no proper colouring with n colours");
}

ExactResult exact_oriented_chromatic(const OrientedGraph& g, OracleLimits limits) {
  check_limit(g.order(), limits);
  ExactResult result;
  if (g.order() == 0) return result;
  // chi_o >= chi_2d >= clique number of the square.
  const int lower = std::max(1, max_clique(build_square(g), limits).size);
  for (int k = lower; k <= g.order(); ++k) {
    if (auto c = oriented_colouring_within(g, k, 0, &result.nodes)) {
      result.value = k;
      result.witness = std::move(*c);
      result.target_arcs = class_relation(g, result.witness);
      return result;
    }
  }
  fail(ErrorCode::InvariantViolation, "no oriented colouring with n colours");
}

ExactResult exact_two_dipath_chromatic(const OrientedGraph& g, OracleLimits limits) {
  check_limit(g.order(), limits);
  ExactResult result = exact_chromatic(build_square(g), limits);
  if (!validate_two_dipath_colouring(g, result.witness).valid()) {
    throw Error(ErrorCode::InvariantViolation,
                "proper colouring of the square is not a 2-dipath colouring");
  }
  return result;
}

}  // namespace orcol
