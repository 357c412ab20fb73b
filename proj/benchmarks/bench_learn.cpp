#include <memory>

#include <benchmark/benchmark.h>

#include "mvrcg/citest.hpp"
#include "mvrcg/criteria.hpp"
#include "mvrcg/evaluate.hpp"
#include "mvrcg/learner.hpp"
#include "mvrcg/simulate.hpp"

using namespace mvrcg;

namespace {

Dataset sample_for(int p, long n, std::uint64_t seed) {
    const auto g = random_mvr_cg({p, 2.0, seed, std::nullopt});
    return sample_gaussian(cg_to_dag_with_latents(g, seed + 1), n, seed + 2);
}

void BM_MSeparation(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    const auto g = random_mvr_cg({p, 2.0, 5, std::nullopt});
    for (auto _ : state) {
        int separated = 0;
        for (Vertex v = 1; v < p; ++v) separated += m_separated(g, {{0}, {v}, {}});
        benchmark::DoNotOptimize(separated);
    }
}
BENCHMARK(BM_MSeparation)->Arg(20)->Arg(50);

void BM_FisherZ(benchmark::State& state) {
    const auto stats = SufficientStats::from_dataset(sample_for(20, 1000, 3));
    const VertexSet s{2, 5, 7};
    for (auto _ : state) benchmark::DoNotOptimize(fisher_z_test(stats, 0, 1, s, 0.005));
}
BENCHMARK(BM_FisherZ);

// One full learner run on sampled data; the sample and statistics are built once.
void BM_Learn(benchmark::State& state, const char* variant) {
    const int p = static_cast<int>(state.range(0));
    const auto data = sample_for(p, 1000, 11);
    const auto stats = SufficientStats::from_dataset(data);
    const auto config = LearnerConfig::from_variant(variant);
    for (auto _ : state) {
        const GaussianTester tester(stats, 0.005);
        benchmark::DoNotOptimize(learn(tester, data.columns, config));
    }
}
BENCHMARK_CAPTURE(BM_Learn, original, "original")->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Learn, stable_lmpc, "stable-lmpc")->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_EssentialGraph(benchmark::State& state) {
    const auto g = random_mvr_cg({static_cast<int>(state.range(0)), 2.0, 9, std::nullopt});
    for (auto _ : state) benchmark::DoNotOptimize(essential_graph(g));
}
BENCHMARK(BM_EssentialGraph)->Arg(20)->Arg(50);

}  // namespace
BENCHMARK_MAIN();
