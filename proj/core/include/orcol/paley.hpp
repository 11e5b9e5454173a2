#pragma once

#include <vector>

#include "orcol/oriented_graph.hpp"

namespace orcol {

/// An oriented graph in which every pair of distinct vertices spans exactly one arc.
class Tournament {
 public:
  /// Throws PreconditionViolated if `g` is not a tournament.
  explicit Tournament(OrientedGraph g);

  const OrientedGraph& graph() const noexcept { return graph_; }
  int order() const noexcept { return graph_.order(); }
  bool beats(Vertex u, Vertex v) const { return graph_.has_arc(u, v); }

 private:
  OrientedGraph graph_;
};

bool is_prime(int q);

/// Non-zero quadratic residues mod q, ascending.
std::vector<int> quadratic_residues(int q);

/// QR_q: arc u -> v iff (v - u) mod q is a non-zero quadratic residue.
/// Throws BadModulus unless q is a prime congruent to 3 mod 4.
Tournament paley_tournament(int q);

/// The Paley tournament on 7 vertices, built once.
const Tournament& qr7();

/// Vertex i beats vertex j iff i < j.
Tournament transitive_tournament(int n);

/// x -> (multiplier * x + offset) mod modulus.
struct AffineAutomorphism {
  int multiplier = 1;
  int offset = 0;
  int modulus = 1;

  Vertex operator()(Vertex x) const {
    return static_cast<Vertex>((static_cast<long long>(multiplier) * x + offset) % modulus);
  }

  friend bool operator==(const AffineAutomorphism&, const AffineAutomorphism&) = default;
};

/// True iff the vertex map is a bijection carrying arcs of `t` onto arcs of `t`.
bool is_automorphism(const Tournament& t, const std::vector<Vertex>& map);

/// All maps x -> a x + b with a a non-zero residue, each checked against the
/// arc relation before being returned. Sorted by (multiplier, offset).
std::vector<AffineAutomorphism> paley_automorphisms(int q);

/// The affine automorphism of QR_q sending from.tail -> to.tail and
/// from.head -> to.head. Throws NotAnArc if either pair is not an arc.
AffineAutomorphism normalize_arc(int q, Arc from, Arc to);

/// The automorphism of QR_q sending `from` to `to`.
AffineAutomorphism normalize_vertex(int q, Vertex from, Vertex to);

/// { x : z -> x and x -> y }, i.e. the vertices closing y -> z into a directed
/// triangle. Ascending. Throws NotAnArc if y -> z is absent.
std::vector<Vertex> cycle_completions(const Tournament& t, Arc yz);

}  // namespace orcol
