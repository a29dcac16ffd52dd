#include <ech/capacities.hpp>
#include <ech/embeddings.hpp>
#include <ech/isoperimetric.hpp>
#include <ech/partitions.hpp>
#include <ech/t3.hpp>

#include <benchmark/benchmark.h>

using namespace ech;

static void BM_WeightSequence(benchmark::State& state) {
    for (auto _ : state) {
        auto v = weight_sequence(Rational(1), Rational(2), state.range(0));
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_WeightSequence)->Arg(1000)->Arg(10000);

static void BM_CapToricTriangle(benchmark::State& state) {
    auto omega = RationalPolygon::from_vertices(
        {RationalPoint{Rational(0), Rational(0)}, RationalPoint{Rational(2), Rational(0)},
         RationalPoint{Rational(0), Rational(2)}});
    for (auto _ : state) {
        auto c = cap_toric(omega, state.range(0));
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_CapToricTriangle)->Arg(5)->Arg(10)->Arg(15);

static void BM_T3Spectrum(benchmark::State& state) {
    for (auto _ : state) {
        auto v = t3::t3_spectrum(state.range(0));
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_T3Spectrum)->Arg(3)->Arg(6);

static void BM_GeneratorEnumeration(benchmark::State& state) {
    for (auto _ : state) {
        auto polys = polygons_within_euclidean_length(Rational(state.range(0)));
        benchmark::DoNotOptimize(polys);
    }
}
BENCHMARK(BM_GeneratorEnumeration)->Arg(4)->Arg(6);

static void BM_Workhorse(benchmark::State& state) {
    Theta t(Rational(3, 5), Side::plus);
    auto parts = all_partitions(state.range(0));
    for (auto _ : state) {
        for (const auto& p : parts) {
            auto r = workhorse_check(t, p);
            benchmark::DoNotOptimize(r);
        }
    }
}
BENCHMARK(BM_Workhorse)->Arg(8)->Arg(10);

static void BM_StaircaseSample(benchmark::State& state) {
    for (auto _ : state) {
        auto s = staircase_sample(Rational(9), state.range(0));
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_StaircaseSample)->Arg(10000)->Arg(100000);

BENCHMARK_MAIN();
