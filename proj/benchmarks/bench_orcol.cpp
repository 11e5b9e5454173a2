#include <benchmark/benchmark.h>

#include <vector>

#include "orcol/dipath_seven.hpp"
#include "orcol/generate.hpp"
#include "orcol/hom_search.hpp"
#include "orcol/oracle.hpp"
#include "orcol/oriented_eight.hpp"
#include "orcol/paley.hpp"

namespace {

using namespace orcol;

std::vector<OrientedGraph> cubic_sample(int n, int count) {
  std::vector<OrientedGraph> out;
  for (int i = 0; i < count; ++i) out.push_back(random_cubic_orientation(n, 1000 + i));
  return out;
}

std::vector<OrientedGraph> subcubic_sample(int n, int count) {
  std::vector<OrientedGraph> out;
  for (std::uint64_t seed = 0; static_cast<int>(out.size()) < count; ++seed) {
    OrientedGraph g = random_subcubic_orientation(n, seed);
    if (meets_subcubic_qr7_precondition(g)) out.push_back(std::move(g));
  }
  return out;
}

void BM_SubcubicQr7(benchmark::State& state) {
  const auto graphs = subcubic_sample(static_cast<int>(state.range(0)), 32);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(subcubic_qr7(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_SubcubicQr7)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_OrientedEight(benchmark::State& state) {
  const auto graphs = cubic_sample(static_cast<int>(state.range(0)), 32);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(oriented_eight_colouring(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_OrientedEight)->Arg(8)->Arg(16)->Arg(20);

void BM_DipathSeven(benchmark::State& state) {
  const auto graphs = cubic_sample(static_cast<int>(state.range(0)), 32);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(two_dipath_seven_colouring(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_DipathSeven)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_ExactOrientedChromatic(benchmark::State& state) {
  const auto graphs = cubic_sample(static_cast<int>(state.range(0)), 16);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(exact_oriented_chromatic(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_ExactOrientedChromatic)->Arg(8)->Arg(10)->Arg(12);

void BM_ExactChromaticOfSquare(benchmark::State& state) {
  std::vector<SimpleGraph> squares;
  for (const OrientedGraph& g : cubic_sample(static_cast<int>(state.range(0)), 16)) squares.push_back(build_square(g));
  const OracleLimits limits{64};
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(exact_chromatic(squares[i++ % squares.size()], limits));
}
BENCHMARK(BM_ExactChromaticOfSquare)->Arg(10)->Arg(20)->Arg(40);

void BM_MaxCliqueOfSquare(benchmark::State& state) {
  std::vector<SimpleGraph> squares;
  for (const OrientedGraph& g : cubic_sample(static_cast<int>(state.range(0)), 16)) squares.push_back(build_square(g));
  const OracleLimits limits{64};
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(max_clique(squares[i++ % squares.size()], limits));
}
BENCHMARK(BM_MaxCliqueOfSquare)->Arg(20)->Arg(64);

void BM_BuildSquare(benchmark::State& state) {
  const auto graphs = cubic_sample(static_cast<int>(state.range(0)), 16);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(build_square(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_BuildSquare)->Arg(20)->Arg(200);

}  // namespace
BENCHMARK_MAIN();
