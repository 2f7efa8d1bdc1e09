#include "wlp/constructor.hpp"
#include "wlp/criteria.hpp"

#include <benchmark/benchmark.h>

namespace {

wlp::FiniteSet interval(long long lo, long long hi) {
    wlp::FiniteSet out;
    for (long long t = lo; t <= hi; ++t) out.insert(wlp::LatticePoint{t});
    return out;
}

void BM_SeriesSearchSalas(benchmark::State& state) {
    const wlp::Group z = wlp::Group::lattice(1);
    wlp::SpaceParams params(std::make_shared<wlp::SalasWeight>(1), 1);
    std::vector<wlp::FiniteSet> sets;
    for (long long n = 1; n <= state.range(0); ++n) sets.push_back(interval(-n, n));
    wlp::SeriesOptions opt;
    opt.horizon = 256;
    for (auto _ : state) benchmark::DoNotOptimize(wlp::series_criterion_search(wlp::SubsetSpec::naturals(z), params, sets, opt));
}
BENCHMARK(BM_SeriesSearchSalas)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_AssembleAndVerify(benchmark::State& state) {
    const wlp::Group z = wlp::Group::lattice(1);
    wlp::SpaceParams params(std::make_shared<wlp::SalasWeight>(1), 1);
    std::vector<wlp::FinSupFun> targets{wlp::FinSupFun::delta(wlp::LatticePoint{0}),
                                        wlp::FinSupFun::indicator(interval(-1, 1), wlp::Rational(1, 2))};
    const auto schedule = wlp::schedule_targets(targets, static_cast<std::size_t>(state.range(0)), params);
    for (auto _ : state) {
        auto r = wlp::assemble(schedule, wlp::SubsetSpec::naturals(z), params);
        benchmark::DoNotOptimize(wlp::verify(*r.assembly, params));
    }
}
BENCHMARK(BM_AssembleAndVerify)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace
