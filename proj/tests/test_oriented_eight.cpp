#include <gtest/gtest.h>

#include <map>
#include <set>
#include <string>

#include "brute_force.hpp"
#include "fixtures.hpp"
#include "orcol/catalogue.hpp"
#include "orcol/error.hpp"
#include "orcol/generate.hpp"
#include "orcol/hom_search.hpp"
#include "orcol/oriented_eight.hpp"
#include "orcol/paley.hpp"

namespace orcol {
namespace {

using testing::k4_no_source;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no orcol::Error thrown";
  return ErrorCode::Io;
}

void expect_valid(const OrientedGraph& g, const EightColouring& r) {
  EXPECT_TRUE(validate_oriented_colouring(g, r.colouring).valid());
  EXPECT_LE(r.colouring.max_colour(), 7);
  EXPECT_EQ(r.certificate.palette_size, r.colouring.palette_size());
  int sevens = 0;
  for (int c : r.colouring.colours()) sevens += c == 7;
  EXPECT_LE(sevens, 1);
}

std::vector<OrientedGraph> cubic_orientations(int n, bool (*keep)(const OrientedGraph&)) {
  std::vector<OrientedGraph> out;
  for (const SimpleGraph& g : load_cubic_catalogue(n, ORCOL_TEST_DATA_DIR)) {
    for (const OrientedGraph& o : all_orientations(g)) {
      if (keep(o)) out.push_back(o);
    }
  }
  return out;
}

bool balanced_with_triangle(const OrientedGraph& g) { return !has_source_or_sink(g) && !triangles(g).empty(); }
bool balanced_triangle_free(const OrientedGraph& g) { return !has_source_or_sink(g) && triangles(g).empty(); }

TEST(Witness, K4Example) {
  const AltPathWitness w = alt_path_witness(k4_no_source());
  EXPECT_EQ(w.kind, WitnessKind::TwoSinkOutNeighbours);
  EXPECT_EQ(w.centre, 1);
  EXPECT_EQ(w.out_neighbour, 2);
  EXPECT_EQ(w.other_out_neighbour, 3);
  EXPECT_TRUE(is_valid_witness(k4_no_source(), w));
}

TEST(Witness, EveryBalancedK33Orientation) {
  const auto graphs = testing::no_source_or_sink_orientations(testing::k33());
  EXPECT_FALSE(graphs.empty());
  for (const OrientedGraph& g : graphs) EXPECT_TRUE(is_valid_witness(g, alt_path_witness(g)));
}

TEST(Witness, MixedKindOccurs) {
  std::set<WitnessKind> kinds;
  for (const OrientedGraph& g : cubic_orientations(8, [](const OrientedGraph& o) { return !has_source_or_sink(o); })) {
    const AltPathWitness w = alt_path_witness(g);
    ASSERT_TRUE(is_valid_witness(g, w));
    kinds.insert(w.kind);
  }
  EXPECT_EQ(kinds.size(), 2u);
}

TEST(Witness, RejectsSources) {
  EXPECT_EQ(code_of([] { alt_path_witness(transitive_tournament(4).graph()); }), ErrorCode::PreconditionViolated);
  AltPathWitness bogus{WitnessKind::MixedNeighbours, 0, 1, -1, 3};
  EXPECT_FALSE(is_valid_witness(k4_no_source(), bogus));
}

TEST(SourceOrSink, Examples) {
  const EightColouring t = colour_with_source_or_sink(transitive_tournament(4).graph());
  EXPECT_EQ(t.colouring.palette_size(), 4);
  EXPECT_EQ(t.certificate.tag, EightCase::SourceOrSink);
  expect_valid(transitive_tournament(4).graph(), t);

  std::vector<Arc> arcs;
  const SimpleGraph k33 = testing::k33();
  for (auto [a, b] : k33.edges()) arcs.push_back(a == 0 ? Arc{a, b} : Arc{b, a});
  const OrientedGraph k33_out = build_oriented_graph(6, arcs);
  expect_valid(k33_out, colour_with_source_or_sink(k33_out));

  EXPECT_EQ(code_of([] { colour_with_source_or_sink(k4_no_source()); }), ErrorCode::PreconditionViolated);
}

TEST(Triangle, K4Example) {
  const EightColouring r = colour_with_triangle(k4_no_source());
  expect_valid(k4_no_source(), r);
  EXPECT_EQ(r.certificate.tag, EightCase::Triangle);
  ASSERT_TRUE(r.certificate.triangle.has_value());
  EXPECT_EQ(code_of([] { colour_with_triangle(transitive_tournament(4).graph()); }), ErrorCode::PreconditionViolated);
  const OrientedGraph k33 = testing::balanced_orientation(testing::k33(), 1);
  EXPECT_EQ(code_of([&] { colour_with_triangle(k33); }), ErrorCode::PreconditionViolated);
}

TEST(Triangle, Labelling) {
  const TriangleLabel d = label_triangle(testing::directed_cycle(3), {0, 1, 2});
  EXPECT_TRUE(d.directed);
  EXPECT_EQ((std::array<Vertex, 3>{d.u, d.v, d.w}), (std::array<Vertex, 3>{0, 1, 2}));
  const OrientedGraph reversed = build_oriented_graph(3, {{1, 0}, {2, 1}, {0, 2}});
  const TriangleLabel r = label_triangle(reversed, {0, 1, 2});
  EXPECT_TRUE(r.directed);
  EXPECT_TRUE(reversed.has_arc(r.u, r.v) && reversed.has_arc(r.v, r.w) && reversed.has_arc(r.w, r.u));
  const OrientedGraph tt = build_oriented_graph(3, {{2, 0}, {2, 1}, {0, 1}});
  const TriangleLabel t = label_triangle(tt, {0, 1, 2});
  EXPECT_FALSE(t.directed);
  EXPECT_EQ((std::array<Vertex, 3>{t.u, t.v, t.w}), (std::array<Vertex, 3>{2, 0, 1}));
  EXPECT_THROW(label_triangle(testing::directed_path(3), {0, 1, 2}), Error);
}

// Runs the recolouring step on every homomorphism of G - uv into QR_7 for
// every balanced cubic orientation with a triangle on up to 8 vertices.
TEST(Triangle, RecolouringCoversEveryBranch) {
  std::map<std::string, int> details;
  std::vector<OrientedGraph> graphs = cubic_orientations(4, balanced_with_triangle);
  for (int n : {6, 8}) {
    const auto more = cubic_orientations(n, balanced_with_triangle);
    graphs.insert(graphs.end(), more.begin(), more.end());
  }
  std::size_t runs = 0;
  for (const OrientedGraph& g : graphs) {
    for (const auto& tri : triangles(g)) {
      const TriangleLabel label = label_triangle(g, tri);
      const OrientedGraph rest = without_arc(g, {label.u, label.v});
      for (const auto& phi : testing::all_homomorphisms(rest, qr7().graph())) {
        const EightColouring r = recolour_triangle(g, label, phi);
        ++runs;
        expect_valid(g, r);
        const std::string& d = r.certificate.detail;
        ++details[d.substr(0, d.find(' '))];
      }
    }
  }
  EXPECT_GT(runs, 0u);
  for (const char* branch : {"recolour_u_equal_ends", "qr7_direct", "recolour_u", "recolour_v", "directed_triangle",
                             "transitive_triangle"}) {
    EXPECT_GT(details[branch], 0) << branch;
  }
}

TEST(Triangle, RecolourRejectsNonHomomorphism) {
  const TriangleLabel label = label_triangle(k4_no_source(), {0, 1, 2});
  EXPECT_EQ(code_of([&] { recolour_triangle(k4_no_source(), label, {0, 0, 0, 0}); }),
            ErrorCode::PreconditionViolated);
}

TEST(TriangleFree, EveryBalancedK33Orientation) {
  for (const OrientedGraph& g : testing::no_source_or_sink_orientations(testing::k33())) {
    const EightColouring r = colour_triangle_free(g);
    expect_valid(g, r);
    EXPECT_EQ(r.certificate.tag, EightCase::TriangleFreeSurgery);
    ASSERT_TRUE(r.certificate.surgery.has_value());
  }
}

TEST(TriangleFree, CutArcBranch) {
  const SimpleGraph base = testing::bridged_k33_pair();
  int seen = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const OrientedGraph g = testing::balanced_orientation(base, seed);
    const EightColouring r = colour_triangle_free(g);
    expect_valid(g, r);
    EXPECT_EQ(r.certificate.tag, EightCase::TriangleFreeCutArc);
    EXPECT_EQ(r.certificate.detail, "merge_sides");
    ASSERT_TRUE(r.certificate.cut_arc.has_value());
    EXPECT_TRUE(g.adjacent(6, 13));
    EXPECT_LE(r.colouring.palette_size(), 7);
    EXPECT_LE(r.colouring.max_colour(), 6);
    ++seen;
  }
  EXPECT_EQ(seen, 20);
}

TEST(TriangleFree, SurgeryExtendsEveryReducedHomomorphism) {
  std::vector<OrientedGraph> graphs = testing::no_source_or_sink_orientations(testing::k33());
  const auto eight = cubic_orientations(8, balanced_triangle_free);
  graphs.insert(graphs.end(), eight.begin(), eight.end());
  std::set<WitnessKind> kinds;
  std::size_t runs = 0;
  for (const OrientedGraph& g : graphs) {
    if (!cut_arcs(g).empty()) continue;
    const AltPathWitness w = alt_path_witness(g);
    kinds.insert(w.kind);
    const SurgeryTuple s = surgery_tuple(g, w);
    const OrientedGraph reduced = surgery_reduced_graph(g, s);
    EXPECT_TRUE(meets_subcubic_qr7_precondition(reduced));
    EXPECT_EQ(reduced.order(), g.order() - 1);
    for (const auto& phi : testing::all_homomorphisms(reduced, qr7().graph())) {
      const EightColouring r = extend_surgery(g, s, w.kind, phi);
      ++runs;
      expect_valid(g, r);
      EXPECT_EQ(r.colouring[s.u], 7);
    }
  }
  EXPECT_GT(runs, 0u);
  EXPECT_EQ(kinds.size(), 2u);
}

TEST(TriangleFree, RejectsTriangles) {
  EXPECT_EQ(code_of([] { colour_triangle_free(k4_no_source()); }), ErrorCode::PreconditionViolated);
}

TEST(Dispatch, AllK4Orientations) {
  for (const OrientedGraph& g : all_orientations(testing::complete_graph(4))) {
    const EightColouring r = oriented_eight_colouring(g);
    expect_valid(g, r);
    EXPECT_EQ(r.colouring.palette_size(), 4);
  }
}

TEST(Dispatch, AllK33Orientations) {
  std::size_t count = 0;
  for (const OrientedGraph& g : all_orientations(testing::k33())) {
    expect_valid(g, oriented_eight_colouring(g));
    ++count;
  }
  EXPECT_EQ(count, 512u);
}

TEST(Dispatch, RejectsDisconnectedAndNonCubic) {
  const OrientedGraph k4 = k4_no_source();
  std::vector<Arc> arcs = k4.arcs();
  for (const Arc& a : k4.arcs()) arcs.push_back({a.tail + 4, a.head + 4});
  const OrientedGraph two = build_oriented_graph(8, arcs);
  EXPECT_EQ(code_of([&] { oriented_eight_colouring(two); }), ErrorCode::PreconditionViolated);
  EXPECT_EQ(code_of([] { oriented_eight_colouring(testing::directed_cycle(4)); }), ErrorCode::PreconditionViolated);
}

}  // namespace
}  // namespace orcol
