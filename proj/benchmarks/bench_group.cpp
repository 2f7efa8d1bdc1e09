#include "wlp/group.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

namespace {

void BM_FreeBallEnumeration(benchmark::State& state) {
    const wlp::Group f2 = wlp::Group::free(2);
    const auto radius = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        std::size_t count = 0;
        f2.for_each_in_ball(radius, [&](const wlp::GroupElement&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(2 * std::pow(3, radius) - 1));
}
BENCHMARK(BM_FreeBallEnumeration)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_FreeMultiply(benchmark::State& state) {
    const wlp::Group f2 = wlp::Group::free(2);
    const wlp::GroupElement x = wlp::FreeWord::parse("a^65536 b a^-3 b^-1 a^16");
    const wlp::GroupElement y = wlp::FreeWord::parse("a^-16 b a^3 b^-1 a^-65536 b");
    for (auto _ : state) benchmark::DoNotOptimize(f2.multiply(x, y));
}
BENCHMARK(BM_FreeMultiply);

void BM_SetProduct(benchmark::State& state) {
    const wlp::Group f2 = wlp::Group::free(2);
    const wlp::FiniteSet a = f2.ball(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(f2.set_product(a, a));
}
BENCHMARK(BM_SetProduct)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
