// Microbenchmarks for the inference kernels and the full evaluation suite.
// Set sizes sweep from the 5-point default up to 256 points to show the
// quadratic composition cost.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "fuzzrp/harness/config.hpp"
#include "fuzzrp/harness/runner.hpp"
#include "fuzzrp/inference.hpp"

namespace {

using namespace fuzzrp;

FuzzyRule make_rule(std::size_t n, std::mt19937& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> a(n), b(n);
    for (std::size_t k = 0; k < n; ++k) {
        a[k] = unit(rng);
        b[k] = unit(rng);
    }
    a[0] = 1.0;  // keep the antecedent normal so every method is exercised
    b[n - 1] = 1.0;
    return FuzzyRule{DiscreteFuzzySet{a}, DiscreteFuzzySet{b}};
}

DiscreteFuzzySet make_premise(std::size_t n, std::mt19937& rng) {
    std::uniform_real_distribution<double> unit(0.05, 1.0);
    std::vector<double> p(n);
    for (double& d : p) d = unit(rng);
    return DiscreteFuzzySet{p};
}

void bench_cri_fmp(benchmark::State& state) {
    std::mt19937 rng(1);
    const auto n = static_cast<std::size_t>(state.range(0));
    const FuzzyRule rule = make_rule(n, rng);
    const DiscreteFuzzySet premise = make_premise(n, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            cri_fmp(rule, premise, OperatorFamily::Lukasiewicz));
    }
}
BENCHMARK(bench_cri_fmp)->Arg(5)->Arg(32)->Arg(256);

void bench_qip_fmp(benchmark::State& state) {
    std::mt19937 rng(2);
    const auto n = static_cast<std::size_t>(state.range(0));
    const FuzzyRule rule = make_rule(n, rng);
    const DiscreteFuzzySet premise = make_premise(n, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            qip_fmp(rule, premise, OperatorFamily::Goedel));
    }
}
BENCHMARK(bench_qip_fmp)->Arg(5)->Arg(32)->Arg(256);

void bench_tip_fmt(benchmark::State& state) {
    std::mt19937 rng(3);
    const auto n = static_cast<std::size_t>(state.range(0));
    const FuzzyRule rule = make_rule(n, rng);
    const DiscreteFuzzySet premise = make_premise(n, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            tip_fmt(rule, premise, OperatorFamily::R0));
    }
}
BENCHMARK(bench_tip_fmt)->Arg(5)->Arg(32)->Arg(256);

void bench_aars_fmp(benchmark::State& state) {
    std::mt19937 rng(4);
    const auto n = static_cast<std::size_t>(state.range(0));
    const FuzzyRule rule = make_rule(n, rng);
    const DiscreteFuzzySet premise = make_premise(n, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            aars_fmp(rule, premise, AarsForm::MoreOrLess));
    }
}
BENCHMARK(bench_aars_fmp)->Arg(5)->Arg(32)->Arg(256);

void bench_dmm_fmp(benchmark::State& state) {
    std::mt19937 rng(5);
    const auto n = static_cast<std::size_t>(state.range(0));
    const FuzzyRule rule = make_rule(n, rng);
    const DiscreteFuzzySet premise = make_premise(n, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            dmm_fmp(rule, premise, SignForm::ThreeValued));
    }
}
BENCHMARK(bench_dmm_fmp)->Arg(5)->Arg(32)->Arg(256);

void bench_full_suite(benchmark::State& state) {
    ExperimentConfig config = default_config();
    config.classes = {1, 2};
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_suite(config));
    }
}
BENCHMARK(bench_full_suite);

}  // namespace

BENCHMARK_MAIN();
