#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "orcol/oriented_graph.hpp"

namespace orcol {

/// Partial vertex -> target-vertex map fixed before search.
class PinSet {
 public:
  PinSet() = default;
  PinSet(std::initializer_list<std::pair<const Vertex, Vertex>> pins);

  /// Throws PreconditionViolated if `v` is already pinned.
  void pin(Vertex v, Vertex image);

  bool empty() const noexcept { return pins_.empty(); }
  std::size_t size() const noexcept { return pins_.size(); }
  const std::map<Vertex, Vertex>& entries() const noexcept { return pins_; }

 private:
  std::map<Vertex, Vertex> pins_;
};

/// A homomorphism written as the image of each source vertex.
using VertexMap = std::vector<Vertex>;

enum class SearchStatus { Found, Absent, BudgetExhausted };

struct SearchOutcome {
  SearchStatus status = SearchStatus::Absent;
  VertexMap map;
  std::uint64_t nodes = 0;
};

/// Backtracking with forward checking over candidate bitmasks. Variables are
/// picked by smallest candidate set, then lowest index; values ascend.
/// `node_budget` of 0 means unlimited. The target must have at most 64 vertices.
SearchOutcome search_homomorphism(const OrientedGraph& g, const OrientedGraph& target,
                                  const PinSet& pins = {}, std::uint64_t node_budget = 0);

std::optional<VertexMap> find_homomorphism(const OrientedGraph& g, const OrientedGraph& target,
                                           const PinSet& pins = {});

bool is_homomorphism(const OrientedGraph& g, const OrientedGraph& target, const VertexMap& map);

/// Connected, properly subcubic, and no degree-3 source adjacent to a degree-3 sink.
bool meets_subcubic_qr7_precondition(const OrientedGraph& g);

/// A homomorphism into QR_7 for graphs meeting the precondition above, which
/// guarantees one exists. Pins are honoured by composing an unpinned solution
/// with an automorphism of QR_7 (one pinned vertex, or a pinned arc onto an
/// arc); other pin sets fall back to a pinned search.
///
/// Throws PreconditionViolated when the structural check fails or the pins
/// cannot be met, and InvariantViolation (certificate = input digraph6) if
/// no homomorphism exists at all.
VertexMap subcubic_qr7(const OrientedGraph& g, const PinSet& pins = {});

struct SubcubicOracleCounters {
  std::uint64_t calls = 0;
  std::uint64_t successes = 0;
  std::uint64_t failures = 0;
};

/// Process-wide tallies of subcubic_qr7 calls that passed the precondition.
SubcubicOracleCounters subcubic_qr7_counters();

}  // namespace orcol
