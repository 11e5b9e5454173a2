#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "orcol/catalogue.hpp"
#include "orcol/codec.hpp"
#include "orcol/dipath_seven.hpp"
#include "orcol/error.hpp"
#include "orcol/generate.hpp"
#include "orcol/hom_search.hpp"
#include "orcol/oracle.hpp"
#include "orcol/paley.hpp"

namespace orcol {
namespace {

using testing::directed_cycle;
using testing::directed_path;

// Cubic orientations on 10 vertices whose square is 7-regular.
constexpr const char* kSevenRegular[] = {"&I@?GCG?Y??A@E_C?E?", "&I@?AOG@O_?__A?c_K?", "&IACa@OA?@GC?GA@?OG"};

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no orcol::Error thrown";
  return ErrorCode::Io;
}

void expect_valid(const OrientedGraph& g, const DipathColouring& r) {
  EXPECT_TRUE(validate_two_dipath_colouring(g, r.colouring).valid()) << emit_digraph6(g);
  EXPECT_LE(r.colouring.max_colour(), 6);
  EXPECT_TRUE(r.colouring.complete());
}

TEST(Square, Examples) {
  const SimpleGraph p3 = build_square(directed_path(3));
  EXPECT_EQ(p3.edge_count(), 3u);
  EXPECT_TRUE(p3.is_complete());
  const SimpleGraph c4 = build_square(directed_cycle(4));
  EXPECT_TRUE(c4.is_complete());
  EXPECT_TRUE(build_square(transitive_tournament(4).graph()).is_complete());
  EXPECT_EQ(build_square(build_oriented_graph(3, {{0, 1}, {2, 1}})).edge_count(), 2u);
}

TEST(Square, EdgeBound) {
  for (const OrientedGraph& g : all_orientations(testing::complete_graph(4))) {
    const SquareEdgeCount c = average_degree_check(g);
    EXPECT_EQ(c.edges, 6u);
    EXPECT_EQ(c.bound, 14.0);
  }
  for (const OrientedGraph& g : testing::no_source_or_sink_orientations(testing::k33())) {
    EXPECT_LE(average_degree_check(g).edges, 21u);
  }
  EXPECT_EQ(code_of([] { average_degree_check(directed_cycle(4)); }), ErrorCode::PreconditionViolated);
}

TEST(Square, InducedCentreCounts) {
  EXPECT_EQ(induced_dipath_centre_counts(directed_path(3)), (std::vector<int>{0, 1, 0}));
  for (const OrientedGraph& g : all_orientations(testing::k33())) {
    for (int c : induced_dipath_centre_counts(g)) EXPECT_LE(c, 2);
  }
}

TEST(Subdivision, K4WithSourceAndSink) {
  const OrientedGraph g = build_oriented_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}, {1, 2}});
  const auto [sub, map] = subdivide_source_sink_arcs(g);
  ASSERT_EQ(map.entries.size(), 1u);
  EXPECT_EQ(map.entries[0].source, 0);
  EXPECT_EQ(map.entries[0].sink, 3);
  EXPECT_EQ(map.entries[0].midpoint, 4);
  EXPECT_EQ(sub.order(), 5);
  EXPECT_EQ(sub.degree(4), 2);
  EXPECT_TRUE(sub.has_arc(0, 4));
  EXPECT_TRUE(sub.has_arc(4, 3));
  EXPECT_FALSE(sub.adjacent(0, 3));
  EXPECT_TRUE(meets_subcubic_qr7_precondition(sub));
  EXPECT_EQ(code_of([] { subdivide_source_sink_arcs(testing::k4_no_source()); }), ErrorCode::PreconditionViolated);
}

TEST(CorePartition, K4PeelsEverything) {
  for (const OrientedGraph& g : all_orientations(testing::complete_graph(4))) {
    const CorePartition p = seven_core_partition(g, build_square(g));
    EXPECT_TRUE(p.core.empty());
    EXPECT_EQ(p.shell_order.size(), 4u);
    EXPECT_TRUE(p.between.empty());
    EXPECT_TRUE(colour_square_core(g, p).colours() == std::vector<int>(4, VertexColouring::kUnassigned));
  }
}

TEST(CorePartition, SevenRegularSquareKeepsEverything) {
  for (const char* text : kSevenRegular) {
    const OrientedGraph g = parse_digraph6(text);
    const SimpleGraph sq = build_square(g);
    ASSERT_TRUE(sq.is_regular(7));
    const CorePartition p = seven_core_partition(g, sq);
    EXPECT_EQ(static_cast<int>(p.core.size()), g.order());
    EXPECT_TRUE(p.shell_order.empty());
    EXPECT_TRUE(p.gc_is_whole_graph(g));
    // A partition whose G_C is all of G must trip the edge ledger.
    EXPECT_EQ(code_of([&] { colour_square_core(g, p); }), ErrorCode::InvariantViolation);
  }
}

TEST(CorePartition, ShellOrderIsAnExtensionOrder) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const OrientedGraph g = random_cubic_orientation(10 + 2 * static_cast<int>(seed % 6), seed);
    const SimpleGraph sq = build_square(g);
    const CorePartition p = seven_core_partition(g, sq);
    std::set<Vertex> placed(p.core.begin(), p.core.end());
    for (Vertex v : p.shell_order) {
      const auto before = std::ranges::count_if(sq.neighbours(v), [&](Vertex w) { return placed.contains(w); });
      EXPECT_LE(before, 6);
      placed.insert(v);
    }
    EXPECT_EQ(static_cast<int>(placed.size()), g.order());
  }
}

// Core colouring and extension on a hand-picked core; the between set and
// G_C are rebuilt here from their definitions.
TEST(CorePartition, FabricatedCoreRoute) {
  const OrientedGraph g = testing::balanced_orientation(testing::k33(), 3);
  const SimpleGraph sq = build_square(g);
  CorePartition p;
  p.core = {0, 3};
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v != 0 && v != 3) p.shell_order.push_back(v);
  }
  for (const TwoDipath& d : two_dipaths(g)) {
    const bool ends = std::ranges::binary_search(p.core, d.first) && std::ranges::binary_search(p.core, d.last);
    if (ends && !std::ranges::binary_search(p.core, d.centre)) p.between.push_back(d.centre);
  }
  std::ranges::sort(p.between);
  p.between.erase(std::ranges::unique(p.between).begin(), p.between.end());
  std::ranges::set_union(p.core, p.between, std::back_inserter(p.gc_vertices));
  for (const Arc& a : g.arcs()) {
    const auto in = [&](const std::vector<Vertex>& s, Vertex v) { return std::ranges::binary_search(s, v); };
    if ((in(p.core, a.tail) && in(p.core, a.head)) || (in(p.core, a.tail) && in(p.between, a.head)) ||
        (in(p.between, a.tail) && in(p.core, a.head))) {
      p.gc_arcs.push_back(a);
    }
  }
  const VertexColouring partial = colour_square_core(g, p);
  EXPECT_TRUE(partial.assigned(0));
  EXPECT_TRUE(partial.assigned(3));
  EXPECT_EQ(partial.palette_size(), 2);
  const VertexColouring full = extend_by_peel_order(sq, partial, p);
  EXPECT_TRUE(full.complete());
  EXPECT_TRUE(is_proper_colouring(sq, full));
  EXPECT_TRUE(validate_two_dipath_colouring(g, full).valid());
}

TEST(Extension, RejectsBadPartials) {
  const OrientedGraph g = directed_cycle(5);
  const SimpleGraph sq = build_square(g);
  CorePartition p;
  p.core = {0};
  p.shell_order = {1, 2, 3, 4};
  EXPECT_EQ(code_of([&] { extend_by_peel_order(sq, VertexColouring(5), p); }), ErrorCode::PreconditionViolated);
  EXPECT_EQ(code_of([&] { extend_by_peel_order(sq, VertexColouring({9, -1, -1, -1, -1}), p); }),
            ErrorCode::PreconditionViolated);
}

TEST(Extension, TamperedOrderRunsOutOfColours) {
  // Every vertex of K_8 sees seven coloured neighbours once the rest are coloured.
  const SimpleGraph k8 = testing::complete_graph(8);
  CorePartition p;
  p.shell_order = {0, 1, 2, 3, 4, 5, 6, 7};
  EXPECT_EQ(code_of([&] { extend_by_peel_order(k8, VertexColouring(8), p); }), ErrorCode::InvariantViolation);
}

TEST(Pipeline, AllK4Orientations) {
  for (const OrientedGraph& g : all_orientations(testing::complete_graph(4))) {
    const DipathColouring r = two_dipath_seven_colouring(g);
    expect_valid(g, r);
    EXPECT_EQ(r.colouring.palette_size(), 4);
  }
}

TEST(Pipeline, K33AndPrism) {
  for (const SimpleGraph& base : {testing::k33(), testing::prism()}) {
    for (const OrientedGraph& g : all_orientations(base)) expect_valid(g, two_dipath_seven_colouring(g));
  }
}

TEST(Pipeline, AllCubicOrientationsOnEight) {
  const auto graphs = load_cubic_catalogue(8, ORCOL_TEST_DATA_DIR);
  ASSERT_EQ(graphs.size(), 5u);
  std::set<DipathRoute> routes;
  for (const SimpleGraph& base : graphs) {
    for (const OrientedGraph& g : all_orientations(base)) {
      const DipathColouring r = two_dipath_seven_colouring(g);
      expect_valid(g, r);
      routes.insert(r.routes.begin(), r.routes.end());
    }
  }
  EXPECT_TRUE(routes.contains(DipathRoute::SourceSinkSubdivision));
  EXPECT_TRUE(routes.contains(DipathRoute::PeelGreedy));
}

TEST(Pipeline, SevenRegularRoute) {
  for (const char* text : kSevenRegular) {
    const OrientedGraph g = parse_digraph6(text);
    EXPECT_FALSE(has_source_adjacent_to_sink(g));
    const DipathColouring r = two_dipath_seven_colouring(g);
    expect_valid(g, r);
    EXPECT_EQ(r.routes, std::vector<DipathRoute>{DipathRoute::SevenRegular});
  }
}

TEST(Pipeline, ComponentsAreColouredSeparately) {
  std::vector<Arc> arcs = testing::k4_no_source().arcs();
  const Tournament tt = transitive_tournament(4);
  for (const Arc& a : tt.graph().arcs()) arcs.push_back({a.tail + 4, a.head + 4});
  const OrientedGraph g = build_oriented_graph(8, arcs);
  const DipathColouring r = two_dipath_seven_colouring(g);
  expect_valid(g, r);
  EXPECT_EQ(r.routes, (std::vector<DipathRoute>{DipathRoute::PeelGreedy, DipathRoute::SourceSinkSubdivision}));
}

TEST(Pipeline, RejectsNonCubic) {
  EXPECT_EQ(code_of([] { two_dipath_seven_colouring(directed_cycle(5)); }), ErrorCode::PreconditionViolated);
}

TEST(Pipeline, RouteNames) {
  EXPECT_EQ(to_string(DipathRoute::CoreExtension), "core_extension");
  EXPECT_EQ(to_string(DipathRoute::DirectQR7), "direct_qr7");
}

}  // namespace
}  // namespace orcol
