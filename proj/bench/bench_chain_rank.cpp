// Serial reference versus the OpenMP level kernel on random square matrices.

#include "bcrank/oracle.hpp"
#include "bcrank/rank.hpp"

#include <benchmark/benchmark.h>

#include <vector>

namespace {

std::vector<bcrank::BicomplexMatrix> inputs(std::size_t n) {
    bcrank::oracle::GenParams p;
    p.singular_density = 0.3;
    bcrank::oracle::SplitMix64 rng(n);
    std::vector<bcrank::BicomplexMatrix> out;
    for (int k = 0; k < 4; ++k)
        out.push_back(bcrank::oracle::random_matrix(n, n, p, rng));
    return out;
}

void BM_ChainRankSerial(benchmark::State& state) {
    const auto mats = inputs(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        for (const auto& a : mats)
            benchmark::DoNotOptimize(bcrank::chain_rank_serial(a).rank);
}

void BM_ChainRankParallel(benchmark::State& state) {
    const auto mats = inputs(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        for (const auto& a : mats)
            benchmark::DoNotOptimize(bcrank::chain_rank(a).rank);
}

BENCHMARK(BM_ChainRankSerial)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ChainRankParallel)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
