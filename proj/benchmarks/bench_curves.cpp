#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "pucorrect/dataset.hpp"
#include "pucorrect/metrics.hpp"

using namespace pucorrect;

namespace {

Dataset make_dataset(std::size_t n_labeled, std::size_t n_unlabeled) {
    std::mt19937_64 rng(99);
    std::normal_distribution<double> pos(1.0, 1.0);
    std::normal_distribution<double> neg(0.0, 1.0);
    std::vector<PuSample> samples;
    samples.reserve(n_labeled + n_unlabeled);
    for (std::size_t i = 0; i < n_labeled; ++i)
        samples.push_back({pos(rng), PuLabel::LabeledPositive, {}});
    for (std::size_t i = 0; i < n_unlabeled; ++i)
        samples.push_back({neg(rng), PuLabel::Unlabeled, {}});
    return Dataset(std::move(samples));
}

} // namespace

static void BM_PuRocCurve(benchmark::State& state) {
    const Dataset data = make_dataset(state.range(0), state.range(0) * 10);
    for (auto _ : state) {
        benchmark::DoNotOptimize(metrics::pu_roc(data, AreaMode::RankEquivalent));
    }
}
BENCHMARK(BM_PuRocCurve)->Arg(100)->Arg(1000)->Arg(10000);

static void BM_PuPrCurve(benchmark::State& state) {
    const Dataset data = make_dataset(state.range(0), state.range(0) * 10);
    for (auto _ : state) {
        benchmark::DoNotOptimize(metrics::pu_pr(data, AreaMode::RankEquivalent));
    }
}
BENCHMARK(BM_PuPrCurve)->Arg(100)->Arg(1000)->Arg(10000);

static void BM_RateSweep(benchmark::State& state) {
    const Dataset data = make_dataset(state.range(0), state.range(0) * 10);
    for (auto _ : state) {
        benchmark::DoNotOptimize(metrics::pu_rate_sweep(data));
    }
}
BENCHMARK(BM_RateSweep)->Arg(1000)->Arg(10000);

BENCHMARK_MAIN();
