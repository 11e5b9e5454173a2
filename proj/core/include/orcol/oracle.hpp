#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "orcol/oriented_graph.hpp"
#include "orcol/simple_graph.hpp"

namespace orcol {

struct OracleLimits {
  /// Inputs with more vertices raise LimitExceeded.
  int max_vertices = 14;
};

struct ExactResult {
  int value = 0;
  /// An optimal colouring using exactly `value` colours, numbered 0..value-1.
  VertexColouring witness;
  /// Oriented chromatic number only: arcs between colour classes induced by
  /// the witness (the target oriented graph).
  std::vector<Arc> target_arcs;
  std::uint64_t nodes = 0;
};

ExactResult exact_oriented_chromatic(const OrientedGraph& g, OracleLimits limits = {});
ExactResult exact_chromatic(const SimpleGraph& g, OracleLimits limits = {});
/// Chromatic number of the square; the witness is re-checked with
/// validate_two_dipath_colouring.
ExactResult exact_two_dipath_chromatic(const OrientedGraph& g, OracleLimits limits = {});

struct CliqueResult {
  int size = 0;
  std::vector<Vertex> members;
  std::uint64_t nodes = 0;
};

/// Branch and bound over bitsets; at most 64 vertices regardless of limits.
CliqueResult max_clique(const SimpleGraph& g, OracleLimits limits = {});

// Decision procedures shared with the colouring pipelines. No order limit;
// `node_budget` of 0 means unlimited, and exhausting it yields nullopt.

/// An oriented colouring with colours 0..colours-1, if one exists. Colour
/// classes keep a live orientation relation; vertex 0 takes colour 0 and new
/// colours are opened in ascending order.
std::optional<VertexColouring> oriented_colouring_within(const OrientedGraph& g, int colours,
                                                         std::uint64_t node_budget = 0,
                                                         std::uint64_t* nodes = nullptr);

/// A proper colouring with colours 0..colours-1, by DSATUR branch and bound.
std::optional<VertexColouring> proper_colouring_within(const SimpleGraph& g, int colours,
                                                       std::uint64_t node_budget = 0,
                                                       std::uint64_t* nodes = nullptr);

}  // namespace orcol
