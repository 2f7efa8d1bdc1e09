#include "oracles.hpp"

#include "wlp/criteria.hpp"
#include "wlp/errors.hpp"
#include "wlp/weights_f2.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace wlp;

namespace {

DyadicValue two_to(long long e) { return DyadicValue::pow2(BigInt(e)); }
GroupElement z(long long n) { return LatticePoint{n}; }

FiniteSet interval(long long lo, long long hi) {
    FiniteSet out;
    for (long long t = lo; t <= hi; ++t) out.insert(z(t));
    return out;
}

const Group& zz() {
    static const Group g = Group::lattice(1);
    return g;
}

WeightPtr salas() { return std::make_shared<SalasWeight>(1); }

// Sum over k >= 1, n != k of sum over t in [-k, k] of 2^-|s_n - s_k + t|, with s_0 = 0.
Rational salas_series_oracle(const std::vector<long long>& s) {
    Rational total = 0;
    for (std::size_t k = 1; k < s.size(); ++k) {
        for (std::size_t n = 0; n < s.size(); ++n) {
            if (n == k) continue;
            for (long long t = -static_cast<long long>(k); t <= static_cast<long long>(k); ++t) {
                total += pow2(-std::llabs(s[n] - s[k] + t));
            }
        }
    }
    return total;
}

}  // namespace

// ---------------------------------------------------------------- inf and ess sup

TEST(InfSearch, Z2WitnessAtFiveThirtyTwo) {
    Z2Weight w;
    auto r = abelian_inf_search(SubsetSpec::whole_group(w.group()), w, {two_to(-4)}, 20000);
    ASSERT_TRUE(r[0].found());
    EXPECT_EQ(r[0].witness->element, GroupElement(LatticePoint{5, 32}));
    EXPECT_EQ(r[0].witness->value, two_to(-5));
}

TEST(InfSearch, SalasNaturals) {
    SalasWeight w(1);
    auto r = abelian_inf_search(SubsetSpec::naturals(zz()), w, {two_to(-9)}, 100);
    ASSERT_TRUE(r[0].found());
    EXPECT_EQ(r[0].witness->element, z(10));
    EXPECT_EQ(r[0].witness->value, two_to(-10));
    EXPECT_EQ(r[0].witness->index, 9U);
}

TEST(InfSearch, UnitWeightNeverSucceeds) {
    UnitWeight w(zz());
    for (std::size_t h : {1U, 10U, 1000U}) {
        auto r = abelian_inf_search(SubsetSpec::naturals(zz()), w, {two_to(-1)}, h);
        EXPECT_FALSE(r[0].found());
        EXPECT_EQ(r[0].scanned, h);
    }
}

TEST(InfSearch, WitnessIsTheFirstQualifyingCandidate) {
    Z2Weight w;
    const SubsetSpec s = SubsetSpec::whole_group(w.group());
    std::vector<DyadicValue> thresholds;
    for (int k = 0; k <= 5; ++k) thresholds.push_back(two_to(-k));
    auto results = abelian_inf_search(s, w, thresholds, 20000);
    auto candidates = s.take(20000);
    for (const auto& r : results) {
        ASSERT_TRUE(r.found());
        for (std::size_t i = 0; i < r.witness->index; ++i) {
            ASSERT_FALSE(symmetric_value(w, candidates[i]) < r.threshold);
        }
        EXPECT_EQ(candidates[r.witness->index], r.witness->element);
    }
}

TEST(EssSup, SingletonKMatchesInfSearch) {
    SalasWeight w(1);
    FiniteSet k(std::vector<GroupElement>{z(0)});
    auto inf = abelian_inf_search(SubsetSpec::naturals(zz()), w, {two_to(-6)}, 100);
    auto ess = esssup_sufficient_check(SubsetSpec::naturals(zz()), w, k, two_to(-6), 100);
    ASSERT_TRUE(ess.found());
    EXPECT_EQ(ess.witness->element, inf[0].witness->element);
}

TEST(EssSup, SalasIntervalK) {
    SalasWeight w(1);
    auto r = esssup_sufficient_check(SubsetSpec::naturals(zz()), w, interval(-2, 2), two_to(-5), 100);
    ASSERT_TRUE(r.found());
    EXPECT_EQ(r.witness->element, z(8));
    EXPECT_EQ(r.witness->value, two_to(-6));
}

TEST(EssSup, NondenseWeightRunsOutOfHorizon) {
    F2NondenseWeight w;
    const Group& f2 = w.group();
    FiniteSet k(std::vector<GroupElement>{f2.identity(), FreeWord::parse("b")});
    auto r = esssup_sufficient_check(SubsetSpec::powers(f2, FreeWord::parse("a")), w, k, two_to(-1), 300);
    EXPECT_FALSE(r.found());
    EXPECT_EQ(r.scanned, 300U);
}

TEST(EssSup, ImpliesInfAndFailsMonotonically) {
    std::mt19937_64 rng(31);
    SalasWeight w(1);
    const SubsetSpec s = SubsetSpec::naturals(zz());
    for (int i = 0; i < 300; ++i) {
        FiniteSet k(std::vector<GroupElement>{z(0)});
        for (long long t = -4; t <= 4; ++t) {
            if (rng() % 2) k.insert(z(t));
        }
        DyadicValue eps = two_to(-static_cast<long long>(rng() % 12));
        const std::size_t horizon = 1 + rng() % 16;
        auto ess = esssup_sufficient_check(s, w, k, eps, horizon);
        if (ess.found()) {
            EXPECT_LT(symmetric_value(w, ess.witness->element), eps);
            auto inf = abelian_inf_search(s, w, {eps}, horizon);
            ASSERT_TRUE(inf[0].found());
            EXPECT_LE(inf[0].witness->index, ess.witness->index);
        } else {
            for (std::size_t h = 1; h <= horizon; ++h) EXPECT_FALSE(esssup_sufficient_check(s, w, k, eps, h).found());
        }
    }
}

// ---------------------------------------------------------------- series

TEST(SeriesTerms, SingleStageCountsOnlyTheOriginRow) {
    SpaceParams params(salas(), 1);
    auto t = series_terms(params, {z(0), z(4)}, {FiniteSet{}, interval(-1, 1)}, {0, 1});
    // Only (n, k) = (0, 1): sum over t in [-1, 1] of w(-4 + t).
    EXPECT_EQ(t.total, pow2(-3) + pow2(-4) + pow2(-5));
    EXPECT_EQ(t.term[1][0], 0);
}

TEST(SeriesTerms, PowersOfFourMatchDirectSummation) {
    SpaceParams params(salas(), 1);
    std::vector<long long> s{0};
    std::vector<GroupElement> witnesses{z(0)};
    std::vector<FiniteSet> sets{FiniteSet{}};
    std::vector<Rational> c{0};
    for (long long n = 1, v = 4; n <= 5; ++n, v *= 4) {
        s.push_back(v);
        witnesses.push_back(z(v));
        sets.push_back(interval(-n, n));
        c.push_back(1);
    }
    auto t = series_terms(params, witnesses, sets, c);
    EXPECT_EQ(t.total, salas_series_oracle(s));
    Rational rows = 0;
    for (std::size_t n = 0; n < witnesses.size(); ++n) rows += t.row_sum(n);
    EXPECT_EQ(rows, t.total);
}

TEST(SeriesTerms, RejectsInexactParameters) {
    SpaceParams params(salas(), 1.5);
    EXPECT_THROW(series_terms(params, {z(0)}, {FiniteSet{}}, {0}), UsageError);
}

TEST(SeriesSearch, SalasCertificateRechecks) {
    SpaceParams params(salas(), 1);
    std::vector<FiniteSet> sets;
    for (long long n = 1; n <= 5; ++n) sets.push_back(interval(-n, n));
    SeriesOptions opt;
    opt.horizon = 128;
    auto r = series_criterion_search(SubsetSpec::naturals(zz()), params, sets, opt);
    ASSERT_TRUE(r.ok()) << r.failure->message;
    const auto& cert = *r.certificate;
    EXPECT_EQ(cert.depth(), 5U);
    EXPECT_EQ(cert.witnesses[0], z(0));
    std::vector<long long> s;
    for (const auto& g : cert.witnesses) s.push_back(std::get<LatticePoint>(g).coords[0].convert_to<long long>());
    EXPECT_EQ(cert.total, salas_series_oracle(s));
    CertificateCheck check = recheck_certificate(cert, params);
    EXPECT_TRUE(check.ok());
    for (const auto& stage : cert.stages) EXPECT_LE(stage.increment, stage.budget);
    Rational sum = 0;
    for (const auto& stage : cert.stages) sum += stage.increment;
    EXPECT_EQ(sum, cert.total);

    auto again = series_criterion_search(SubsetSpec::naturals(zz()), params, sets, opt);
    EXPECT_EQ(again.certificate->witnesses, cert.witnesses);
    EXPECT_EQ(again.certificate->total, cert.total);
}

TEST(SeriesSearch, TamperedCertificateFailsRecheck) {
    SpaceParams params(salas(), 1);
    std::vector<FiniteSet> sets{interval(-1, 1), interval(-2, 2)};
    auto r = series_criterion_search(SubsetSpec::naturals(zz()), params, sets, {});
    ASSERT_TRUE(r.ok());
    SeriesCertificate bad = *r.certificate;
    bad.witnesses[2] = bad.witnesses[1];
    CertificateCheck check = recheck_certificate(bad, params);
    EXPECT_FALSE(check.disjoint);
    EXPECT_FALSE(check.total_matches);
    ASSERT_TRUE(check.collision);
    EXPECT_EQ(*check.collision, std::make_pair(1U, 2U));
}

TEST(SeriesSearch, UnitWeightFailsOnBudget) {
    SpaceParams params(std::make_shared<UnitWeight>(zz()), 1);
    auto r = series_criterion_search(SubsetSpec::naturals(zz()), params, {interval(-1, 1)}, {});
    ASSERT_FALSE(r.ok());
    EXPECT_EQ(r.failure->reason, SeriesFailureReason::Budget);
    EXPECT_EQ(r.failure->stage, 1U);
    EXPECT_EQ(*r.failure->best_increment, 3);
    EXPECT_EQ(r.failure->budget, Rational(1, 2));
}

TEST(SeriesSearch, CapFailureIsDistinct) {
    // The forbidden region at stage 2 has 7 elements, over a cap of 3.
    const Group tiny = Group::lattice(1, 3);
    SpaceParams params(std::make_shared<UnitWeight>(tiny), 1);
    SeriesOptions opt;
    opt.budget0 = 1000;
    FiniteSet f1 = interval(-1, 1), f2 = interval(-2, 2);
    auto r = series_criterion_search(SubsetSpec::naturals(tiny), params, {f1, f2}, opt);
    ASSERT_FALSE(r.ok());
    EXPECT_EQ(r.failure->reason, SeriesFailureReason::Cap);
    EXPECT_EQ(r.failure->stage, 2U);
    EXPECT_EQ(r.failure->partial.depth(), 1U);
}

TEST(SeriesSearch, FiniteSubsetRunsOut) {
    SpaceParams params(salas(), 1);
    auto r = series_criterion_search(SubsetSpec::explicit_list(zz(), {z(5)}), params, {interval(-1, 1), interval(-2, 2)}, {});
    ASSERT_FALSE(r.ok());
    EXPECT_EQ(r.failure->reason, SeriesFailureReason::EnumeratorExhausted);
    EXPECT_EQ(to_string(r.failure->reason), "enumerator-exhausted");
}

TEST(SeriesSearch, BacktracksWhenAGreedyPickBlocksTheNextStage) {
    // Stage 1 prefers 40, after which stage 2 has only 4 left, and W(-4 + F_2) > 1/4.
    SpaceParams params(salas(), 1);
    auto r = series_criterion_search(SubsetSpec::explicit_list(zz(), {z(4), z(40)}), params,
                                     {interval(-1, 1), interval(-2, 2)}, {});
    ASSERT_TRUE(r.ok()) << r.failure->message;
    EXPECT_EQ(r.certificate->witnesses[1], z(4));
    EXPECT_EQ(r.certificate->witnesses[2], z(40));
    EXPECT_EQ(r.certificate->stages[0].backtracks, 1U);
    EXPECT_TRUE(recheck_certificate(*r.certificate, params).ok());
}

TEST(SeriesSearch, IncreasingSetsAreEnforced) {
    SpaceParams params(salas(), 1);
    EXPECT_THROW(series_criterion_search(SubsetSpec::naturals(zz()), params, {interval(-2, 2), interval(-1, 1)}, {}),
                 ValidationError);
    SeriesOptions loose;
    loose.require_increasing = false;
    EXPECT_NO_THROW(series_criterion_search(SubsetSpec::naturals(zz()), params, {interval(-2, 2), interval(-1, 1)}, loose));
}

// ---------------------------------------------------------------- single translations

TEST(SingleTranslation, Z2DiagonalHasFinitelyManyMarkedPowers) {
    Z2Weight w;
    auto r = single_translation_check(LatticePoint{1, 1}, w, {}, 64);
    std::vector<std::size_t> expected;
    for (long long n = 1; n <= 64; ++n) {
        if (oracle::z2_log2(n, n) != 0 || oracle::z2_log2(-n, -n) != 0) expected.push_back(static_cast<std::size_t>(n));
    }
    EXPECT_EQ(r.non_unit_powers, expected);
    EXPECT_LT(r.non_unit_powers.size(), 64U);

    auto probe = single_translation_check(LatticePoint{1, 1}, w, {r.min_value, r.min_value * two_to(1)}, 64);
    EXPECT_FALSE(probe.thresholds[0].found());
    EXPECT_EQ(probe.thresholds[1].found(), r.min_value < two_to(0));
}

TEST(SingleTranslation, SalasGeneratorReachesEveryThreshold) {
    SalasWeight w(1);
    std::vector<DyadicValue> thresholds;
    for (int m = 1; m <= 8; ++m) thresholds.push_back(two_to(-m));
    auto r = single_translation_check(z(1), w, thresholds, 64);
    for (std::size_t m = 1; m <= 8; ++m) {
        ASSERT_TRUE(r.thresholds[m - 1].found());
        EXPECT_EQ(r.thresholds[m - 1].witness->element, z(static_cast<long long>(m) + 1));
    }
}

TEST(SingleTranslation, UnitWeightNeverDropsBelowOne) {
    UnitWeight w(Group::lattice(2));
    auto r = single_translation_check(LatticePoint{2, 3}, w, {two_to(-1)}, 64);
    EXPECT_FALSE(r.thresholds[0].found());
    EXPECT_TRUE(r.non_unit_powers.empty());
    EXPECT_EQ(r.min_value, two_to(0));
}
