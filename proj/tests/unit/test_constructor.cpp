#include "wlp/constructor.hpp"
#include "wlp/errors.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace wlp;

namespace {

GroupElement z(long long n) { return LatticePoint{n}; }

const Group& zz() {
    static const Group g = Group::lattice(1);
    return g;
}

SpaceParams salas(double p = 1) { return SpaceParams(std::make_shared<SalasWeight>(1), p); }

FinSupFun delta(long long n, Rational v = 1) { return FinSupFun::delta(z(n), v); }

}  // namespace

TEST(Schedule, RoundRobin) {
    FinSupFun f = delta(0), g = delta(1);
    EXPECT_EQ(schedule_targets({f}, 3, salas()).order, (std::vector<std::size_t>{0, 0, 0}));
    TargetSchedule s = schedule_targets({f, g}, 5, salas());
    EXPECT_EQ(s.order, (std::vector<std::size_t>{0, 1, 0, 1, 0}));
    EXPECT_EQ(s.target(2), g);
    EXPECT_EQ(schedule_targets({delta(0, 2)}, 1, salas(2)).sup_power(1), 4);
}

TEST(Schedule, RejectsBadInput) {
    EXPECT_THROW(schedule_targets({}, 3, salas()), ValidationError);
    EXPECT_THROW(schedule_targets({delta(0), delta(1)}, 1, salas()), ValidationError);
    EXPECT_THROW(schedule_targets({FinSupFun{}}, 2, salas()), ValidationError);
    EXPECT_THROW(schedule_targets({delta(0)}, 2, salas(1.5)), UsageError);
}

TEST(Assemble, SingleTargetIsReproducedExactly) {
    SpaceParams params = salas();
    Assembly a = assemble_with_witnesses(schedule_targets({delta(0)}, 1, params), {z(4)}, params);
    EXPECT_EQ(a.x, delta(-4));
    VerifyReport v = verify(a, params);
    ASSERT_TRUE(v.ok()) << v.first_problem;
    EXPECT_EQ(v.rows[0].lhs, 0);
    EXPECT_EQ(v.rows[0].bound, Rational(1, 2));
}

TEST(Assemble, PowersOfFour) {
    SpaceParams params = salas();
    std::vector<GroupElement> t;
    for (long long n = 1, v = 4; n <= 4; ++n, v *= 4) t.push_back(z(v));
    Assembly a = assemble_with_witnesses(schedule_targets({delta(0)}, 4, params), t, params);
    FinSupFun expected_x;
    for (long long v : {4, 16, 64, 256}) expected_x = expected_x + delta(-v);
    EXPECT_EQ(a.x, expected_x);

    const long long s[] = {0, 4, 16, 64, 256};
    for (int n = 1; n <= 4; ++n) {
        Rational eps = 0;
        for (int k = 1; k <= 4; ++k) {
            if (k != n) eps += pow2(-std::llabs(s[n] - s[k]));
        }
        EXPECT_EQ(a.eps[n], eps) << n;
    }
    VerifyReport v = verify(a, params);
    ASSERT_TRUE(v.ok()) << v.first_problem;
    EXPECT_EQ(v.rows[1].lhs, a.eps[2]);
    EXPECT_TRUE(v.rows[1].equals_eps);
}

TEST(Assemble, OverlappingWitnessesAreRejected) {
    SpaceParams params = salas();
    auto schedule = schedule_targets({delta(0), delta(0, 2) + delta(1)}, 2, params);
    EXPECT_THROW(assemble_with_witnesses(schedule, {z(5), z(6)}, params), ConstructionError);
    EXPECT_THROW(assemble_with_witnesses(schedule, {z(5)}, params), UsageError);
}

TEST(Assemble, UnitWeightHasNoCertificate) {
    SpaceParams params(std::make_shared<UnitWeight>(zz()), 1);
    AssembleResult r = assemble(schedule_targets({delta(0)}, 3, params), SubsetSpec::naturals(zz()), params);
    ASSERT_FALSE(r.ok());
    EXPECT_EQ(r.failure->reason, SeriesFailureReason::Budget);
}

TEST(Verify, PerturbedXFails) {
    SpaceParams params = salas();
    auto schedule = schedule_targets({delta(0), delta(0) + delta(1, -1)}, 4, params);
    AssembleResult r = assemble(schedule, SubsetSpec::naturals(zz()), params);
    ASSERT_TRUE(r.ok());
    ASSERT_TRUE(verify(*r.assembly, params).ok());

    Assembly bad = *r.assembly;
    const auto& [g, v] = *bad.x.values().begin();
    bad.x.set(g, v + Rational(1, 3));
    VerifyReport report = verify(bad, params);
    EXPECT_FALSE(report.ok());
    EXPECT_FALSE(report.x_matches);
    EXPECT_FALSE(report.first_problem.empty());

    Assembly wrong_eps = *r.assembly;
    wrong_eps.eps[2] += Rational(1, 1000);
    EXPECT_FALSE(verify(wrong_eps, params).ok());
}

TEST(Assemble, IsDeterministic) {
    SpaceParams params = salas();
    auto schedule = schedule_targets({delta(0), delta(1, 3)}, 6, params);
    AssembleResult a = assemble(schedule, SubsetSpec::naturals(zz()), params);
    AssembleResult b = assemble(schedule, SubsetSpec::naturals(zz()), params);
    ASSERT_TRUE(a.ok() && b.ok());
    EXPECT_EQ(a.assembly->witnesses, b.assembly->witnesses);
    EXPECT_EQ(a.assembly->x, b.assembly->x);
    EXPECT_EQ(a.assembly->total, b.assembly->total);
}

TEST(Assemble, RandomTargetsVerifyTermForTerm) {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<long long> pos(-2, 2), num(-9, 9), den(1, 4);
    for (int trial = 0; trial < 40; ++trial) {
        const double p = 1 + static_cast<double>(rng() % 2);
        SpaceParams params = salas(p);
        std::vector<FinSupFun> targets;
        const std::size_t m = 1 + rng() % 3;
        bool constant_modulus = true;
        for (std::size_t i = 0; i < m; ++i) {
            FinSupFun f;
            while (f.empty()) {
                for (int j = 0; j < 3; ++j) f.set(z(pos(rng)), Rational(num(rng), den(rng)));
            }
            for (const auto& [g, v] : f.values()) constant_modulus = constant_modulus && wlp::abs(v) == f.sup_abs();
            targets.push_back(f);
        }
        auto schedule = schedule_targets(targets, m + rng() % 5, params);
        SeriesOptions opt;
        opt.horizon = 512;
        AssembleResult r = assemble(schedule, SubsetSpec::naturals(zz()), params, opt);
        ASSERT_TRUE(r.ok()) << r.failure->message;
        VerifyReport v = verify(*r.assembly, params);
        ASSERT_TRUE(v.ok()) << v.first_problem;
        for (const auto& row : v.rows) {
            EXPECT_EQ(row.mass_loss, 0);
            EXPECT_EQ(row.lhs, row.pieces_sum);
            EXPECT_LE(row.lhs, row.eps);
            if (constant_modulus) EXPECT_TRUE(row.equals_eps);
        }
    }
}
