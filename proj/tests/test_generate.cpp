#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "orcol/codec.hpp"
#include "orcol/error.hpp"
#include "orcol/generate.hpp"

namespace orcol {
namespace {

TEST(Rng, FrozenStream) {
  Rng a(42), b(42), c(43);
  const std::uint64_t first = a.next();
  EXPECT_EQ(first, b.next());
  EXPECT_NE(first, c.next());
  for (int i = 0; i < 1000; ++i) EXPECT_LT(a.below(7), 7u);
}

TEST(Rng, BelowIsRoughlyUniform) {
  Rng r(5);
  std::array<int, 6> counts{};
  for (int i = 0; i < 60000; ++i) ++counts[r.below(6)];
  for (int c : counts) {
    EXPECT_GT(c, 9400);
    EXPECT_LT(c, 10600);
  }
}

TEST(RandomCubic, K4ForAnySeed) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_TRUE(underlying_graph(random_cubic_orientation(4, seed)).is_complete());
  }
}

TEST(RandomCubic, BadOrders) {
  for (int n : {5, 2, 0, -4}) {
    try {
      random_cubic_orientation(n, 1);
      ADD_FAILURE() << n;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::BadOrder);
    }
  }
}

TEST(RandomCubic, DeterministicConnectedCubic) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 6 + 2 * static_cast<int>(seed % 8);
    const OrientedGraph g = random_cubic_orientation(n, seed);
    EXPECT_EQ(emit_digraph6(g), emit_digraph6(random_cubic_orientation(n, seed)));
    EXPECT_TRUE(is_cubic(g));
    EXPECT_TRUE(is_connected(g));
    EXPECT_EQ(g.order(), n);
  }
  EXPECT_NE(emit_digraph6(random_cubic_orientation(20, 1)), emit_digraph6(random_cubic_orientation(20, 2)));
}

TEST(RandomSubcubic, ProperlySubcubic) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const OrientedGraph g = random_subcubic_orientation(1 + static_cast<int>(seed % 8), seed);
    EXPECT_TRUE(is_properly_subcubic(g) || g.order() == 1) << seed;
    EXPECT_EQ(emit_digraph6(g), emit_digraph6(random_subcubic_orientation(g.order(), seed)));
  }
}

TEST(Orientations, Counts) {
  EXPECT_EQ(all_orientations(testing::complete_graph(4)).size(), 64u);
  EXPECT_EQ(all_orientations(testing::k33()).size(), 512u);
  EXPECT_EQ(all_orientations(testing::complete_graph(2)).size(), 2u);
  std::set<std::string> distinct;
  for (const OrientedGraph& g : all_orientations(testing::complete_graph(4))) distinct.insert(emit_digraph6(g));
  EXPECT_EQ(distinct.size(), 64u);
}

TEST(Orientations, IndexOrder) {
  const Orientations all = all_orientations(testing::complete_graph(3));
  EXPECT_EQ(all[0], build_oriented_graph(3, {{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_EQ(all[1], build_oriented_graph(3, {{0, 1}, {0, 2}, {2, 1}}));
  EXPECT_EQ(all[4], build_oriented_graph(3, {{1, 0}, {0, 2}, {1, 2}}));
  EXPECT_THROW(all_orientations(testing::complete_graph(12)), Error);
}

}  // namespace
}  // namespace orcol
