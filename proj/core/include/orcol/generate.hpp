#pragma once

#include <cstdint>
#include <iterator>
#include <vector>

#include "orcol/oriented_graph.hpp"
#include "orcol/simple_graph.hpp"

namespace orcol {

/// SplitMix64-seeded xoshiro256** with an exactly specified bounded draw, so
/// generated instances are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next();
  /// Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::uint64_t s_[4];
};

/// A uniformly paired connected cubic simple graph (rejection sampling on
/// loops, multi-edges and disconnection), each edge oriented by a coin flip.
/// Throws BadOrder unless n is even and >= 4.
OrientedGraph random_cubic_orientation(int n, std::uint64_t seed);
SimpleGraph random_cubic_graph(int n, Rng& rng);

/// Random oriented graph with maximum degree 3 and some vertex of degree at
/// most 2; not necessarily connected. n >= 1.
OrientedGraph random_subcubic_orientation(int n, std::uint64_t seed);

/// The orientations of a simple graph, indexed 0..2^m - 1. Edge i (in
/// edges() order) points lo -> hi when bit (m-1-i) of the index is clear, so
/// the sequence is lexicographic in the flip vector.
class Orientations {
 public:
  explicit Orientations(SimpleGraph g);

  std::uint64_t size() const noexcept { return std::uint64_t{1} << graph_.edge_count(); }
  OrientedGraph operator[](std::uint64_t index) const;

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = OrientedGraph;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(const Orientations* owner, std::uint64_t index) : owner_(owner), index_(index) {}
    OrientedGraph operator*() const { return (*owner_)[index_]; }
    iterator& operator++() {
      ++index_;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++index_;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

   private:
    const Orientations* owner_ = nullptr;
    std::uint64_t index_ = 0;
  };

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, size()}; }

 private:
  SimpleGraph graph_;
};

/// Throws LimitExceeded beyond 63 edges.
Orientations all_orientations(const SimpleGraph& g);

}  // namespace orcol
