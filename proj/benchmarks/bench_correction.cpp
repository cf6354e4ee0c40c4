#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "pucorrect/correction.hpp"
#include "pucorrect/metrics.hpp"

using namespace pucorrect;

namespace {

std::vector<metrics::RatePair> make_sweep(std::size_t n) {
    // A plausible monotone PU sweep.
    std::vector<metrics::RatePair> sweep;
    sweep.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = 1.0 - static_cast<double>(i) / static_cast<double>(n - 1);
        const double fpr = static_cast<double>(i) / static_cast<double>(n - 1);
        const double tpr = std::min(1.0, 1.6 * fpr / (0.6 * fpr + 1.0) + 0.2 * fpr);
        sweep.push_back({tpr, fpr, t});
    }
    return sweep;
}

} // namespace

static void BM_RecoverRocIndirect(benchmark::State& state) {
    const auto sweep = make_sweep(state.range(0));
    const MixtureParams params{0.3, 0.95, {}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            correction::recover_roc_indirect(sweep, params, AreaMode::RankEquivalent));
    }
}
BENCHMARK(BM_RecoverRocIndirect)->Arg(1000)->Arg(10000);

static void BM_FeasibilitySweep(benchmark::State& state) {
    const MixtureParams truth{0.25, 0.75, {}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            correction::feasibility_sweep(0.9, truth, state.range(0)));
    }
}
BENCHMARK(BM_FeasibilitySweep)->Arg(100)->Arg(200);
