#include <gtest/gtest.h>

#include <cstdlib>

#include "fixtures.hpp"
#include "orcol/catalogue.hpp"
#include "orcol/error.hpp"
#include "orcol/simple_graph.hpp"

namespace orcol {
namespace {

void expect_catalogue_shape(const std::vector<SimpleGraph>& graphs, int n) {
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    EXPECT_EQ(graphs[i].order(), n);
    EXPECT_TRUE(graphs[i].is_regular(3));
    EXPECT_TRUE(is_connected(graphs[i]));
    for (std::size_t j = i + 1; j < graphs.size(); ++j) EXPECT_FALSE(are_isomorphic(graphs[i], graphs[j]));
  }
}

TEST(Catalogue, BundledCounts) {
  const std::pair<int, std::size_t> expected[] = {{4, 1}, {6, 2}, {8, 5}};
  for (auto [n, count] : expected) {
    const auto graphs = load_cubic_catalogue(n, ORCOL_TEST_DATA_DIR);
    EXPECT_EQ(graphs.size(), count) << n;
    expect_catalogue_shape(graphs, n);
  }
}

TEST(Catalogue, EnumeratorMatchesBundledFiles) {
  for (int n : {4, 6, 8}) {
    const auto generated = enumerate_connected_cubic(n);
    const auto bundled = load_cubic_catalogue(n, ORCOL_TEST_DATA_DIR);
    ASSERT_EQ(generated.size(), bundled.size());
    for (std::size_t i = 0; i < generated.size(); ++i) EXPECT_EQ(generated[i], bundled[i]);
  }
}

TEST(Catalogue, OddAndTinyOrders) {
  EXPECT_THROW(enumerate_connected_cubic(5), Error);
  EXPECT_THROW(enumerate_connected_cubic(2), Error);
}

TEST(Catalogue, MissingFile) {
  try {
    load_cubic_catalogue(12, ORCOL_TEST_DATA_DIR);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Io);
  }
}

TEST(Isomorphism, RelabelledGraphs) {
  const SimpleGraph p = testing::petersen();
  std::vector<std::pair<Vertex, Vertex>> shuffled;
  for (auto [a, b] : p.edges()) shuffled.emplace_back((a * 3 + 1) % 10, (b * 3 + 1) % 10);
  EXPECT_TRUE(are_isomorphic(p, SimpleGraph(10, shuffled)));
  EXPECT_FALSE(are_isomorphic(testing::k33(), testing::prism()));
  EXPECT_FALSE(are_isomorphic(testing::complete_graph(4), testing::cycle_graph(4)));
}

TEST(Catalogue, CubeIsListedOnce) {
  int hits = 0;
  for (const SimpleGraph& g : load_cubic_catalogue(8, ORCOL_TEST_DATA_DIR)) hits += are_isomorphic(g, testing::cube());
  EXPECT_EQ(hits, 1);
}

}  // namespace
}  // namespace orcol
