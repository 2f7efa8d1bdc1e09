#include "wlp/weights_f2.hpp"
#include "wlp/plane_strip.hpp"

#include <benchmark/benchmark.h>

#include <vector>

namespace {

std::vector<wlp::FreeWord> sample_words(unsigned radius) {
    std::vector<wlp::FreeWord> out;
    wlp::Group::free(2).for_each_in_ball(radius, [&](const wlp::GroupElement& g) { out.push_back(std::get<wlp::FreeWord>(g)); });
    return out;
}

void BM_NondenseEval(benchmark::State& state) {
    const auto words = sample_words(8);
    for (auto _ : state) {
        for (const auto& w : words) benchmark::DoNotOptimize(wlp::eval_f2_nondense(w));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(words.size()));
}
BENCHMARK(BM_NondenseEval)->Unit(benchmark::kMillisecond);

void BM_SemigroupParse(benchmark::State& state) {
    std::vector<wlp::FreeWord> words;
    const wlp::Group f2 = wlp::Group::free(2);
    for (unsigned l = 1; l <= 4; ++l) {
        for (unsigned k = 1; k <= 4; ++k) {
            if (l == k) continue;
            const wlp::GroupElement centre =
                f2.multiply(wlp::semigroup_generator(l), f2.invert(wlp::semigroup_generator(k)));
            f2.for_each_in_ball(k, [&](const wlp::GroupElement& u) { words.push_back(std::get<wlp::FreeWord>(f2.multiply(centre, u))); });
        }
    }
    for (auto _ : state) {
        for (const auto& w : words) benchmark::DoNotOptimize(wlp::parse_sv_membership(w, 24, 8));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(words.size()));
}
BENCHMARK(BM_SemigroupParse)->Unit(benchmark::kMillisecond);

void BM_StripRatioBound(benchmark::State& state) {
    const auto extent = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(wlp::horizontal_ratio_bound(wlp::Rational(1, 2), extent));
}
BENCHMARK(BM_StripRatioBound)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace
