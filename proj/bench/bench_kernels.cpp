// Serial reference kernels against their OpenMP versions.
#include <benchmark/benchmark.h>

#include "harmap/catalog.hpp"
#include "harmap/classes.hpp"
#include "harmap/geometry.hpp"

using namespace harmap;

namespace {

Exec mode(const benchmark::State& state) {
    return state.range(0) ? Exec::parallel : Exec::serial;
}

void label(benchmark::State& state) {
    state.SetLabel(state.range(0) ? "parallel" : "serial");
}

void BM_StarlikeMargin(benchmark::State& state) {
    const HarmonicMap f = make(CatalogTag::harmonic_koebe, 200).without_closed_form();
    for (auto _ : state)
        benchmark::DoNotOptimize(starlike_margin(f, 0.99, 4096, mode(state)).min_margin);
    label(state);
}

void BM_ConvexMargin(benchmark::State& state) {
    const HarmonicMap f = make(CatalogTag::alexander_plus_L, 200).without_closed_form();
    for (auto _ : state)
        benchmark::DoNotOptimize(convex_margin(f, 0.99, 4096, mode(state)).min_margin);
    label(state);
}

void BM_Univalence(benchmark::State& state) {
    const HarmonicMap f = make(CatalogTag::harmonic_koebe);
    for (auto _ : state)
        benchmark::DoNotOptimize(univalent_on_circle(f, 0.95, kUnivalenceAngles, mode(state)));
    label(state);
}

void BM_Membership(benchmark::State& state) {
    const HarmonicMap f = sample_member(ClassKind::W_H0, 1, 200);
    const ClassId c(ClassKind::W_H0);
    for (auto _ : state)
        benchmark::DoNotOptimize(membership(f, c, SamplingGrid::standard(), mode(state)).margin);
    label(state);
}

} // namespace

BENCHMARK(BM_StarlikeMargin)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ConvexMargin)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Univalence)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Membership)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
