#include "orcol/paley.hpp"

#include <algorithm>
#include <set>

#include <fmt/core.h>

#include "orcol/error.hpp"

namespace orcol {

namespace {

int mod(long long x, int q) {
  const long long r = x % q;
  return static_cast<int>(r < 0 ? r + q : r);
}

void require_paley_modulus(int q) {
  if (!is_prime(q) || q % 4 != 3) {
    fail(ErrorCode::BadModulus, fmt::format("{} is not a prime congruent to 3 mod 4", q));
  }
}

bool is_residue(int x, int q) {
  const auto qr = quadratic_residues(q);
  return std::ranges::binary_search(qr, mod(x, q));
}

// Fermat: q is prime.
int inverse(int x, int q) {
  long long result = 1, base = mod(x, q);
  for (int e = q - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % q;
    base = base * base % q;
  }
  return static_cast<int>(result);
}

}  // namespace

Tournament::Tournament(OrientedGraph g) : graph_(std::move(g)) {
  const std::size_t n = graph_.order();
  if (graph_.arc_count() != (n == 0 ? 0 : n * (n - 1) / 2)) {
    fail(ErrorCode::PreconditionViolated, "not a tournament: some pair spans no arc");
  }
}

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

std::vector<int> quadratic_residues(int q) {
  std::set<int> squares;
  for (long long x = 1; x < q; ++x) squares.insert(static_cast<int>(x * x % q));
  squares.erase(0);
  return {squares.begin(), squares.end()};
}

Tournament paley_tournament(int q) {
  require_paley_modulus(q);
  const auto qr = quadratic_residues(q);
  std::vector<Arc> arcs;
  for (int u = 0; u < q; ++u) {
    for (int r : qr) arcs.push_back({u, (u + r) % q});
  }
  return Tournament(build_oriented_graph(q, arcs));
}

const Tournament& qr7() {
  static const Tournament t = paley_tournament(7);
  return t;
}

Tournament transitive_tournament(int n) {
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) arcs.push_back({u, v});
  }
  return Tournament(build_oriented_graph(n, arcs));
}

bool is_automorphism(const Tournament& t, const std::vector<Vertex>& map) {
  const int n = t.order();
  if (static_cast<int>(map.size()) != n) return false;
  std::vector<std::uint8_t> hit(n, 0);
  for (Vertex image : map) {
    if (image < 0 || image >= n || hit[image]) return false;
    hit[image] = 1;
  }
  return std::ranges::all_of(t.graph().arcs(),
                             [&](const Arc& a) { return t.beats(map[a.tail], map[a.head]); });
}

std::vector<AffineAutomorphism> paley_automorphisms(int q) {
  const Tournament t = paley_tournament(q);
  std::vector<AffineAutomorphism> result;
  for (int a : quadratic_residues(q)) {
    for (int b = 0; b < q; ++b) {
      const AffineAutomorphism phi{a, b, q};
      std::vector<Vertex> map(q);
      for (int x = 0; x < q; ++x) map[x] = phi(x);
      if (!is_automorphism(t, map)) {
        fail(ErrorCode::InvariantViolation,
             fmt::format("x -> {}x + {} does not preserve QR_{}", a, b, q));
      }
      result.push_back(phi);
    }
  }
  return result;
}

AffineAutomorphism normalize_arc(int q, Arc from, Arc to) {
  require_paley_modulus(q);
  for (const Arc& arc : {from, to}) {
    if (arc.tail < 0 || arc.tail >= q || arc.head < 0 || arc.head >= q ||
        !is_residue(arc.head - arc.tail, q)) {
      fail(ErrorCode::NotAnArc, fmt::format("({}, {}) is not an arc of QR_{}", arc.tail, arc.head, q));
    }
  }
  // a (from.head - from.tail) = to.head - to.tail; b = to.tail - a from.tail.
  const int a = mod(static_cast<long long>(to.head - to.tail) * inverse(from.head - from.tail, q), q);
  if (!is_residue(a, q)) {
    fail(ErrorCode::InvariantViolation,
         fmt::format("multiplier {} is not a residue mod {}", a, q));
  }
  const int b = mod(to.tail - static_cast<long long>(a) * from.tail, q);
  return {a, b, q};
}

AffineAutomorphism normalize_vertex(int q, Vertex from, Vertex to) {
  require_paley_modulus(q);
  return {1, mod(to - from, q), q};
}

std::vector<Vertex> cycle_completions(const Tournament& t, Arc yz) {
  const int n = t.order();
  if (yz.tail < 0 || yz.tail >= n || yz.head < 0 || yz.head >= n || !t.beats(yz.tail, yz.head)) {
    fail(ErrorCode::NotAnArc, fmt::format("({}, {}) is not an arc", yz.tail, yz.head));
  }
  std::vector<Vertex> result;
  for (Vertex x : t.graph().out_neighbours(yz.head)) {
    if (t.beats(x, yz.tail)) result.push_back(x);
  }
  return result;
}

}  // namespace orcol
