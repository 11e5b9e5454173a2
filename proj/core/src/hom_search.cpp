#include "orcol/hom_search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>

#include <fmt/core.h>

#include "orcol/codec.hpp"
#include "orcol/error.hpp"
#include "orcol/paley.hpp"

namespace orcol {

PinSet::PinSet(std::initializer_list<std::pair<const Vertex, Vertex>> pins) {
  for (const auto& [v, image] : pins) pin(v, image);
}

void PinSet::pin(Vertex v, Vertex image) {
  if (!pins_.emplace(v, image).second) {
    fail(ErrorCode::PreconditionViolated, fmt::format("vertex {} pinned twice", v));
  }
}

namespace {

using Mask = std::uint64_t;

class Search {
 public:
  Search(const OrientedGraph& g, const OrientedGraph& target, std::uint64_t budget)
      : g_(g), budget_(budget) {
    const int k = target.order();
    out_mask_.assign(k, 0);
    in_mask_.assign(k, 0);
    for (const Arc& a : target.arcs()) {
      out_mask_[a.tail] |= Mask{1} << a.head;
      in_mask_[a.head] |= Mask{1} << a.tail;
    }
    const Mask all = k == 64 ? ~Mask{0} : (Mask{1} << k) - 1;
    candidates_.assign(g.order(), all);
    image_.assign(g.order(), -1);
  }

  bool restrict(Vertex v, Mask allowed) {
    const Mask next = candidates_[v] & allowed;
    if (next != candidates_[v]) {
      trail_.emplace_back(v, candidates_[v]);
      candidates_[v] = next;
    }
    return next != 0;
  }

  SearchOutcome run(const PinSet& pins) {
    for (const auto& [v, image] : pins.entries()) {
      if (v < 0 || v >= g_.order() || image < 0 ||
          image >= static_cast<int>(out_mask_.size())) {
        fail(ErrorCode::VertexOutOfRange, fmt::format("pin {} -> {} out of range", v, image));
      }
      if (!restrict(v, Mask{1} << image)) return {SearchStatus::Absent, {}, nodes_};
    }
    const bool found = descend(0);
    if (exhausted_) return {SearchStatus::BudgetExhausted, {}, nodes_};
    if (!found) return {SearchStatus::Absent, {}, nodes_};
    return {SearchStatus::Found, image_, nodes_};
  }

 private:
  Vertex pick() const {
    Vertex best = -1;
    int best_size = 65;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (image_[v] != -1) continue;
      const int size = std::popcount(candidates_[v]);
      if (size < best_size) {
        best = v;
        best_size = size;
      }
    }
    return best;
  }

  bool assign(Vertex v, Vertex h) {
    image_[v] = h;
    for (Vertex w : g_.out_neighbours(v)) {
      if (image_[w] == -1 && !restrict(w, out_mask_[h])) return false;
    }
    for (Vertex u : g_.in_neighbours(v)) {
      if (image_[u] == -1 && !restrict(u, in_mask_[h])) return false;
    }
    return true;
  }

  void undo(std::size_t mark, Vertex v) {
    while (trail_.size() > mark) {
      candidates_[trail_.back().first] = trail_.back().second;
      trail_.pop_back();
    }
    image_[v] = -1;
  }

  bool descend(int depth) {
    if (depth == g_.order()) return true;
    const Vertex v = pick();
    for (Mask m = candidates_[v]; m != 0; m &= m - 1) {
      if (budget_ != 0 && nodes_ >= budget_) {
        exhausted_ = true;
        return false;
      }
      ++nodes_;
      const Vertex h = std::countr_zero(m);
      const std::size_t mark = trail_.size();
      if (assign(v, h) && descend(depth + 1)) return true;
      undo(mark, v);
      if (exhausted_) return false;
    }
    return false;
  }

  const OrientedGraph& g_;
  std::uint64_t budget_;
  std::vector<Mask> out_mask_;
  std::vector<Mask> in_mask_;
  std::vector<Mask> candidates_;
  std::vector<Vertex> image_;
  std::vector<std::pair<Vertex, Mask>> trail_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

std::atomic<std::uint64_t> g_calls{0};
std::atomic<std::uint64_t> g_successes{0};
std::atomic<std::uint64_t> g_failures{0};

}  // namespace

SearchOutcome search_homomorphism(const OrientedGraph& g, const OrientedGraph& target,
                                  const PinSet& pins, std::uint64_t node_budget) {
  if (target.order() > 64) {
    fail(ErrorCode::LimitExceeded, fmt::format("target has {} > 64 vertices", target.order()));
  }
  if (target.order() == 0 && g.order() > 0) return {SearchStatus::Absent, {}, 0};
  Search search(g, target, node_budget);
  return search.run(pins);
}

std::optional<VertexMap> find_homomorphism(const OrientedGraph& g, const OrientedGraph& target,
                                           const PinSet& pins) {
  SearchOutcome outcome = search_homomorphism(g, target, pins);
  if (outcome.status != SearchStatus::Found) return std::nullopt;
  return std::move(outcome.map);
}

bool is_homomorphism(const OrientedGraph& g, const OrientedGraph& target, const VertexMap& map) {
  if (static_cast<int>(map.size()) != g.order()) return false;
  for (Vertex image : map) {
    if (image < 0 || image >= target.order()) return false;
  }
  return std::ranges::all_of(g.arcs(),
                             [&](const Arc& a) { return target.has_arc(map[a.tail], map[a.head]); });
}

bool meets_subcubic_qr7_precondition(const OrientedGraph& g) {
  return is_connected(g) && is_properly_subcubic(g) && !has_source_adjacent_to_sink(g, 3);
}

VertexMap subcubic_qr7(const OrientedGraph& g, const PinSet& pins) {
  if (!meets_subcubic_qr7_precondition(g)) {
    fail(ErrorCode::PreconditionViolated,
         "expected a connected properly subcubic graph with no degree-3 source adjacent to a "
         "degree-3 sink");
  }
  g_calls.fetch_add(1, std::memory_order_relaxed);
  const Tournament& target = qr7();
  auto found = find_homomorphism(g, target.graph());
  if (!found) {
    g_failures.fetch_add(1, std::memory_order_relaxed);
    throw Error(ErrorCode::InvariantViolation,
                "no homomorphism to QR_7 for a graph meeting the subcubic precondition",
                emit_digraph6(g));
  }
  g_successes.fetch_add(1, std::memory_order_relaxed);
  if (pins.empty()) return *found;

  static const std::vector<AffineAutomorphism> automorphisms = paley_automorphisms(7);
  for (const AffineAutomorphism& sigma : automorphisms) {
    const bool realizes = std::ranges::all_of(pins.entries(), [&](const auto& entry) {
      return sigma((*found)[entry.first]) == entry.second;
    });
    if (realizes) {
      VertexMap moved(found->size());
      std::ranges::transform(*found, moved.begin(), sigma);
      return moved;
    }
  }
  auto pinned = find_homomorphism(g, target.graph(), pins);
  if (!pinned) fail(ErrorCode::PreconditionViolated, "pins cannot be met by any homomorphism to QR_7");
  return *pinned;
}

SubcubicOracleCounters subcubic_qr7_counters() {
  return {g_calls.load(), g_successes.load(), g_failures.load()};
}

}  // namespace orcol
