// Serial reference vs OpenMP kernels. Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <vector>

#include "ebchan/amend.hpp"
#include "ebchan/ebtest.hpp"
#include "ebchan/markov.hpp"
#include "ebchan/random.hpp"

namespace {

using namespace ebchan;

const DynamicalFamily kFamily = Homogenization{1.0, 1.0, 0.5, 2.0};

void BM_ScanSerial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(scan_serial(kFamily, 0.0, 10.0, static_cast<int>(state.range(0))));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ScanParallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(scan(kFamily, 0.0, 10.0, static_cast<int>(state.range(0))));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_AmendmentSerial(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(
            local_amendment_search_serial(seb_example_channel(), 4, static_cast<int>(state.range(0)), 7));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_AmendmentParallel(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(local_amendment_search(seb_example_channel(), 4, static_cast<int>(state.range(0)), 7));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

std::vector<QubitChannelAffine> random_diagonal_channels(int count) {
    Rng rng(3);
    std::vector<QubitChannelAffine> out;
    for (int k = 0; k < count; ++k) {
        out.push_back(QubitChannelAffine::diagonal({rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5)},
                                                   {0.0, 0.0, rng.uniform(-0.3, 0.3)}));
    }
    return out;
}

void BM_PptMarginsSerial(benchmark::State& state) {
    const auto channels = random_diagonal_channels(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(ppt_margins_serial(channels));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_PptMarginsParallel(benchmark::State& state) {
    const auto channels = random_diagonal_channels(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(ppt_margins(channels));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_ScanSerial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanParallel)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_AmendmentSerial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AmendmentParallel)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_PptMarginsSerial)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PptMarginsParallel)->Arg(10000)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
