#include <gtest/gtest.h>

#include <algorithm>

#include "brute_force.hpp"
#include "fixtures.hpp"
#include "orcol/dipath_seven.hpp"
#include "orcol/error.hpp"
#include "orcol/generate.hpp"
#include "orcol/oracle.hpp"
#include "orcol/paley.hpp"

namespace orcol {
namespace {

using testing::directed_cycle;
using testing::directed_path;

TEST(ExactOriented, Examples) {
  EXPECT_EQ(exact_oriented_chromatic(build_oriented_graph(2, {{0, 1}})).value, 2);
  EXPECT_EQ(exact_oriented_chromatic(directed_cycle(5)).value, 5);
  EXPECT_EQ(exact_oriented_chromatic(transitive_tournament(4).graph()).value, 4);
  EXPECT_EQ(exact_oriented_chromatic(testing::k4_no_source()).value, 4);
  EXPECT_EQ(exact_oriented_chromatic(qr7().graph()).value, 7);
  EXPECT_EQ(exact_oriented_chromatic(build_oriented_graph(0, {})).value, 0);
  EXPECT_EQ(exact_oriented_chromatic(build_oriented_graph(3, {})).value, 1);
}

TEST(ExactOriented, WitnessAndTarget) {
  const OrientedGraph c6 = directed_cycle(6);
  const ExactResult r = exact_oriented_chromatic(c6);
  EXPECT_TRUE(validate_oriented_colouring(c6, r.witness).valid());
  EXPECT_EQ(r.witness.palette_size(), r.value);
  EXPECT_EQ(r.witness.max_colour(), r.value - 1);
  for (const Arc& a : c6.arcs()) {
    const Arc image{r.witness[a.tail], r.witness[a.head]};
    EXPECT_NE(std::ranges::find(r.target_arcs, image), r.target_arcs.end());
  }
}

TEST(ExactOriented, LimitExceeded) {
  try {
    exact_oriented_chromatic(directed_cycle(15));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::LimitExceeded);
  }
  EXPECT_EQ(exact_oriented_chromatic(directed_cycle(15), {.max_vertices = 15}).value, 3);
}

TEST(ExactChromatic, Examples) {
  EXPECT_EQ(exact_chromatic(testing::complete_graph(4)).value, 4);
  EXPECT_EQ(exact_chromatic(testing::cycle_graph(5)).value, 3);
  EXPECT_EQ(exact_chromatic(testing::cycle_graph(6)).value, 2);
  const ExactResult p = exact_chromatic(testing::petersen());
  EXPECT_EQ(p.value, 3);
  EXPECT_TRUE(is_proper_colouring(testing::petersen(), p.witness));
  EXPECT_TRUE(p.witness.complete());
}

TEST(ExactTwoDipath, Examples) {
  EXPECT_EQ(exact_two_dipath_chromatic(directed_cycle(5)).value, 5);
  EXPECT_EQ(exact_two_dipath_chromatic(directed_path(3)).value, 3);
  EXPECT_EQ(exact_two_dipath_chromatic(transitive_tournament(4).graph()).value, 4);
  EXPECT_EQ(exact_two_dipath_chromatic(build_oriented_graph(3, {{0, 1}, {2, 1}})).value, 2);
}

TEST(MaxClique, Examples) {
  EXPECT_EQ(max_clique(testing::complete_graph(4)).size, 4);
  EXPECT_EQ(max_clique(testing::cycle_graph(5)).size, 2);
  EXPECT_EQ(max_clique(build_square(directed_cycle(5))).size, 5);
  EXPECT_EQ(max_clique(testing::petersen()).size, 2);
  const CliqueResult r = max_clique(testing::complete_graph(40), {.max_vertices = 64});
  EXPECT_EQ(r.size, 40);
  EXPECT_EQ(r.members.size(), 40u);
}

TEST(Oracles, OcliqueHasFullChromaticNumbers) {
  for (int n = 3; n <= 7; ++n) {
    const OrientedGraph c = directed_cycle(n);
    if (!is_oclique(c)) continue;
    EXPECT_EQ(exact_oriented_chromatic(c).value, n);
    EXPECT_EQ(exact_two_dipath_chromatic(c).value, n);
  }
}

TEST(Oracles, AgreeWithBruteForce) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const OrientedGraph g = random_subcubic_orientation(2 + static_cast<int>(seed % 5), seed);
    const int chi_o = exact_oriented_chromatic(g).value;
    const int chi_2d = exact_two_dipath_chromatic(g).value;
    EXPECT_EQ(chi_o, testing::brute_oriented_chromatic(g)) << seed;
    EXPECT_EQ(chi_2d, testing::brute_two_dipath_chromatic(g)) << seed;
    EXPECT_GE(chi_o, chi_2d);
    const SimpleGraph sq = build_square(g);
    EXPECT_EQ(exact_chromatic(sq).value, testing::brute_chromatic(sq));
    EXPECT_EQ(max_clique(sq).size, testing::brute_clique(sq));
  }
}

TEST(Decision, WithinRespectsBudget) {
  EXPECT_FALSE(oriented_colouring_within(directed_cycle(5), 4).has_value());
  EXPECT_TRUE(oriented_colouring_within(directed_cycle(5), 5).has_value());
  std::uint64_t nodes = 0;
  EXPECT_FALSE(oriented_colouring_within(qr7().graph(), 6, 1, &nodes).has_value());
  EXPECT_LE(nodes, 2u);
  EXPECT_FALSE(proper_colouring_within(testing::petersen(), 2).has_value());
  const auto c = proper_colouring_within(testing::petersen(), 3);
  ASSERT_TRUE(c.has_value());
  EXPECT_TRUE(is_proper_colouring(testing::petersen(), *c));
}

}  // namespace
}  // namespace orcol
