#include "wlp/errors.hpp"
#include "wlp/plane_strip.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace wlp;

namespace {

DyadicValue two_to(long long e) { return DyadicValue::pow2(BigInt(e)); }

// Straight from the three-case definition, scanning bands upward.
struct OracleCell {
    long long n;
    long long k;
    int branches_firing;
    long long log2;
};

OracleCell oracle_r2(const Rational& x, const Rational& y) {
    const Rational ax = x < 0 ? Rational(-x) : x;
    long long n = 0;
    while (Rational((n + 1) * (n + 2) / 2) <= ax) ++n;
    const long long floor_x = static_cast<long long>(boost::multiprecision::numerator(ax) / boost::multiprecision::denominator(ax));
    const long long k = floor_x - n * (n + 1) / 2;
    const bool outside = !(1 - pow2(1 - n) < y && y < 1);
    const bool top = 1 - pow2(-n) <= y && y < 1;
    const bool middle = 1 - pow2(1 - n) < y && y < 1 - pow2(-n);
    OracleCell c{n, k, int(outside) + int(top) + int(middle), 0};
    c.log2 = outside ? -n : top ? n : n - 2 * k;
    return c;
}

Rational random_rational(std::mt19937_64& rng, long long range) {
    std::uniform_int_distribution<long long> num(-range * 64, range * 64);
    std::uniform_int_distribution<int> den_exp(0, 8);
    return Rational(num(rng), 1LL << den_exp(rng));
}

CellRegion random_region(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> c(-8, 8), count(1, 3);
    std::vector<Rect> rects;
    for (int i = count(rng); i > 0; --i) {
        int x0 = c(rng), y0 = c(rng);
        int w = 1 + static_cast<int>(rng() % 5), h = 1 + static_cast<int>(rng() % 5);
        rects.push_back(Rect{Rational(x0, 2), Rational(y0, 2), Rational(x0 + w, 2), Rational(y0 + h, 2)});
    }
    return CellRegion(rects);
}

bool inside(const CellRegion& r, const Rational& x, const Rational& y) {
    for (const auto& rect : r.rects()) {
        if (rect.x0 < x && x < rect.x1 && rect.y0 < y && y < rect.y1) return true;
    }
    return false;
}

}  // namespace

TEST(StripWeight, Examples) {
    EXPECT_EQ(eval_r2(Rational(1, 2), Rational(1, 2)), two_to(0));
    EXPECT_EQ(eval_r2(6, 2), two_to(-3));
    EXPECT_EQ(eval_r2(6, Rational(13, 16)), two_to(3));
    StripCell c = classify_r2(6, Rational(13, 16));
    EXPECT_EQ(c.band, 3);
    EXPECT_EQ(c.layer, StripLayer::Middle);
    EXPECT_EQ(c.column, 0);
    EXPECT_EQ(eval_r2(9, Rational(13, 16)), two_to(-3));  // column k = 3 of band 3
}

TEST(StripWeight, Offsets) {
    EXPECT_EQ(strip_offset(0), 0);
    EXPECT_EQ(strip_offset(3), 6);
    for (long long m = 0; m < 500; ++m) {
        BigInt n = strip_band(m);
        EXPECT_LE(strip_offset(n), m);
        EXPECT_GT(strip_offset(n + 1), m);
    }
}

TEST(StripWeight, PartitionAndMirrorOnRandomPoints) {
    std::mt19937_64 rng(51);
    for (int i = 0; i < 10000; ++i) {
        Rational x = random_rational(rng, 80);
        Rational y = random_rational(rng, 2);
        OracleCell o = oracle_r2(x, y);
        ASSERT_EQ(o.branches_firing, 1);
        ASSERT_EQ(eval_r2(x, y), two_to(o.log2)) << x << "," << y;
        ASSERT_EQ(eval_r2(-x, y), eval_r2(x, y));
        StripCell c = classify_r2(x, y);
        ASSERT_EQ(c.band, o.n);
        ASSERT_EQ(c.column, o.k);
    }
}

TEST(StripRatio, MaximumIsFourAndAttained) {
    StripRatioEstimate e = horizontal_ratio_bound(Rational(1, 2), 20);
    EXPECT_EQ(e.max_ratio, two_to(2));
    EXPECT_EQ(e.analytic, two_to(2));
    const PlanePoint& at = e.attained_at;
    EXPECT_EQ(eval_r2(at.x + Rational(1, 2), at.y) / eval_r2(at.x, at.y), two_to(2));
}

TEST(StripRatio, AgreesWithDenseSampling) {
    // x on a 1/8 grid, t in {1/8, 1/2, 7/8}. Every 1 - 2^-j is a layer edge of
    // some band, so y is sampled strictly between consecutive edges.
    std::vector<Rational> ys{-1, 2};
    for (long long n = 0; n <= 13; ++n) ys.push_back(1 - 3 * pow2(-n - 2));
    for (Rational t : {Rational(1, 8), Rational(1, 2), Rational(7, 8)}) {
        long long best = -1000;
        for (long long i = -78 * 8; i <= 78 * 8; ++i) {
            Rational x(i, 8);
            for (const auto& y : ys) best = std::max(best, oracle_r2(x + t, y).log2 - oracle_r2(x, y).log2);
        }
        EXPECT_EQ(horizontal_ratio_bound(t, 11).max_ratio, two_to(best)) << t;
    }
}

TEST(StripRatio, TopLayerAcrossABandBoundaryDoubles) {
    for (long long n = 1; n <= 10; ++n) {
        Rational edge(strip_offset(n + 1));
        Rational y = 1 - pow2(-n - 2);
        EXPECT_EQ(eval_r2(edge, y) / eval_r2(edge - Rational(1, 2), y), two_to(1));
    }
}

TEST(StripRatio, ZeroShiftIsIdentity) { EXPECT_EQ(horizontal_ratio_bound(0, 20).max_ratio, two_to(0)); }

TEST(Criterion4, WorkedExample) {
    Criterion4Witness w = criterion4_witness(2, Rational(1, 8));
    EXPECT_EQ(w.t, 8U);
    EXPECT_EQ(w.s, (PlanePoint{72, 0}));
    EXPECT_EQ(w.removed_area, Rational(1, 16));
    EXPECT_TRUE(w.ok());
}

TEST(Criterion4, GridIsValidAndMinimal) {
    for (unsigned n = 1; n <= 8; ++n) {
        for (int d = 1; d <= 8; ++d) {
            Rational delta = pow2(-d);
            Criterion4Witness w = criterion4_witness(n, delta);
            ASSERT_TRUE(w.ok()) << n << "," << d;
            EXPECT_EQ(w.removed_area, n * pow2(3 - static_cast<long long>(w.t)));
            EXPECT_EQ(subtract(w.f, w.e).area(), w.removed_area);
            EXPECT_LE(w.sup_weight, two_to(-static_cast<long long>(w.t)));
            if (w.t > 2) {
                const long long prev = w.t - 1;
                EXPECT_FALSE(pow2(-prev) < delta && n * pow2(3 - prev) < delta);
            }
        }
    }
    EXPECT_THROW(criterion4_witness(0, 1), UsageError);
    EXPECT_THROW(criterion4_witness(1, 0), UsageError);
}

TEST(Integrals, UnitColumnsMatchClosedFormAndStayAboveOne) {
    for (long long m = 0; m <= 40; ++m) {
        const long long n = static_cast<long long>(strip_band(m));
        const long long k = m - n * (n + 1) / 2;
        Rational expected = n == 0 ? Rational(1) : 1 + pow2(-2 * k) + (1 - pow2(1 - n)) * pow2(-n);
        Rational v = integral_r2(CellRegion::box(m, 0, m + 1, 1), 1);
        EXPECT_EQ(v, expected) << m;
        EXPECT_GE(v, 1);
        EXPECT_EQ(integral_r2(CellRegion::box(-m - 1, 0, -m, 1), 1), v);
    }
}

TEST(Regions, AlgebraOnRandomUnions) {
    std::mt19937_64 rng(52);
    std::uniform_int_distribution<int> coord(-40, 40);
    for (int i = 0; i < 1000; ++i) {
        CellRegion a = random_region(rng), b = random_region(rng);
        CellRegion u = unite(a, b), n = intersect(a, b), d = subtract(a, b);
        ASSERT_EQ(u.area(), a.area() + b.area() - n.area());
        ASSERT_EQ(d.area(), a.area() - n.area());
        ASSERT_EQ(u, unite(b, a));
        ASSERT_EQ(u.normalized(), u.normalized().normalized());
        ASSERT_EQ(a.translated(Rational(1, 3), -2).area(), a.area());
        for (int j = 0; j < 10; ++j) {
            Rational x(2 * coord(rng) + 1, 12), y(2 * coord(rng) + 1, 12);
            ASSERT_EQ(inside(u, x, y), inside(a, x, y) || inside(b, x, y));
            ASSERT_EQ(inside(n, x, y), inside(a, x, y) && inside(b, x, y));
            ASSERT_EQ(inside(d, x, y), inside(a, x, y) && !inside(b, x, y));
        }
    }
}

TEST(Regions, RejectsDegenerateRectangles) {
    EXPECT_THROW(CellRegion::box(0, 0, 0, 1), ValidationError);
    EXPECT_THROW(CellRegion::box(0, 1, 1, 0), ValidationError);
}

TEST(Regions, EssSupIgnoresBoundaries) {
    // Band 1 is 2^-1 below y = 0 and 2 on (0, 1); the shared edge carries no mass.
    EXPECT_EQ(*esssup_r2(CellRegion::box(1, -1, 2, 0)), two_to(-1));
    EXPECT_EQ(*esssup_r2(CellRegion::box(1, -1, 2, Rational(1, 4))), two_to(1));
    EXPECT_FALSE(esssup_r2(CellRegion{}).has_value());
}
