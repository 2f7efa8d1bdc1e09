#include "oracles.hpp"

#include "wlp/errors.hpp"
#include "wlp/group.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace wlp;

namespace {

constexpr int kIterations = 2000;

GroupElement word(std::string_view text) { return FreeWord::parse(text); }

LatticePoint random_point(std::mt19937_64& rng, int dim, long long range) {
    std::uniform_int_distribution<long long> dist(-range, range);
    std::vector<BigInt> c;
    for (int i = 0; i < dim; ++i) c.emplace_back(dist(rng));
    return LatticePoint(c);
}

}  // namespace

TEST(FreeGroup, MultiplyCancelsAcrossTheJunction) {
    const Group f2 = Group::free(2);
    EXPECT_EQ(f2.multiply(word("a^4 b"), word("b^-1 a^-4")), f2.identity());
    EXPECT_EQ(f2.multiply(word("a^3"), word("a^-1 b")), word("a^2 b"));
}

TEST(FreeGroup, InverseReversesSyllables) {
    const Group f2 = Group::free(2);
    EXPECT_EQ(f2.invert(word("a^4 b a^-12")), word("a^12 b^-1 a^-4"));
}

TEST(FreeGroup, HugeExponentsStayCompact) {
    const Group f2 = Group::free(2);
    GroupElement big = FreeWord::generator(1, BigInt(1) << 65536);
    EXPECT_EQ(std::get<FreeWord>(big).syllable_count(), 1U);
    EXPECT_EQ(f2.word_length(big), BigInt(1) << 65536);
    EXPECT_EQ(f2.multiply(big, f2.invert(big)), f2.identity());
}

TEST(FreeGroup, ParseRejectsGarbage) {
    EXPECT_THROW(FreeWord::parse("a^x"), ValidationError);
    EXPECT_EQ(FreeWord::parse("e"), FreeWord{});
    EXPECT_EQ(FreeWord::parse(""), FreeWord{});
    EXPECT_EQ(FreeWord::parse("a a b^0 a^-2"), FreeWord{});
}

TEST(FreeGroup, ReductionMatchesLetterOracle) {
    std::mt19937_64 rng(1);
    const Group f2 = Group::free(2);
    for (int i = 0; i < kIterations; ++i) {
        auto u = oracle::random_word(rng, 2, 20);
        auto v = oracle::random_word(rng, 2, 20);
        GroupElement product = f2.multiply(oracle::to_word(u), oracle::to_word(v));
        EXPECT_EQ(product, GroupElement(oracle::to_word(oracle::concat(u, v))));
        EXPECT_EQ(f2.word_length(product), BigInt(oracle::concat(u, v).size()));
    }
}

TEST(FreeGroup, GroupAxiomsOnRandomWords) {
    std::mt19937_64 rng(2);
    const Group f2 = Group::free(2);
    for (int i = 0; i < kIterations; ++i) {
        GroupElement x = oracle::to_word(oracle::random_word(rng, 2, 20));
        GroupElement y = oracle::to_word(oracle::random_word(rng, 2, 20));
        GroupElement z = oracle::to_word(oracle::random_word(rng, 2, 20));
        ASSERT_EQ(f2.multiply(f2.multiply(x, y), z), f2.multiply(x, f2.multiply(y, z)));
        ASSERT_EQ(f2.multiply(x, f2.invert(x)), f2.identity());
        ASSERT_EQ(f2.multiply(f2.invert(x), x), f2.identity());
        ASSERT_EQ(f2.multiply(x, f2.identity()), x);
        ASSERT_EQ(f2.invert(f2.invert(x)), x);
        ASSERT_EQ(f2.invert(f2.multiply(x, y)), f2.multiply(f2.invert(y), f2.invert(x)));
    }
}

TEST(FreeGroup, FromSyllablesIsIdempotent) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < kIterations; ++i) {
        auto raw = oracle::random_word(rng, 3, 20);
        // Unreduced input: the word followed by a random letter and its inverse.
        raw.push_back(1);
        raw.push_back(-1);
        std::vector<Syllable> syl;
        for (int x : raw) syl.push_back(Syllable{std::abs(x), x > 0 ? 1 : -1});
        FreeWord once = FreeWord::from_syllables(syl);
        EXPECT_EQ(FreeWord::from_syllables(once.syllables()), once);
        EXPECT_EQ(once, oracle::to_word(oracle::reduce(raw)));
    }
}

TEST(Lattice, AxiomsOnRandomPoints) {
    std::mt19937_64 rng(4);
    const Group z2 = Group::lattice(2);
    for (int i = 0; i < kIterations; ++i) {
        GroupElement x = random_point(rng, 2, 1'000'000);
        GroupElement y = random_point(rng, 2, 1'000'000);
        GroupElement z = random_point(rng, 2, 1'000'000);
        ASSERT_EQ(z2.multiply(z2.multiply(x, y), z), z2.multiply(x, z2.multiply(y, z)));
        ASSERT_EQ(z2.multiply(x, y), z2.multiply(y, x));
        ASSERT_EQ(z2.multiply(x, z2.invert(x)), z2.identity());
    }
}

TEST(Lattice, WordLengthIsLInfinity) {
    const Group z2 = Group::lattice(2);
    EXPECT_EQ(z2.word_length(LatticePoint{3, -5}), 5);
    EXPECT_EQ(z2.word_length(z2.identity()), 0);
}

TEST(Ball, FreeGroupSizesMatchClosedFormAndOracle) {
    const Group f2 = Group::free(2);
    for (unsigned n = 0; n <= 8; ++n) {
        BigInt closed = 2 * boost::multiprecision::pow(BigInt(3), n) - 1;
        EXPECT_EQ(f2.ball_size(n), closed) << n;
        EXPECT_EQ(BigInt(f2.ball(n).size()), closed) << n;
    }
    std::size_t sphere4 = 0;
    f2.for_each_in_sphere(4, [&](const GroupElement&) { ++sphere4; });
    EXPECT_EQ(sphere4, oracle::sphere(2, 4).size());
}

TEST(Ball, SphereMatchesOracleAsSets) {
    const Group f2 = Group::free(2);
    FiniteSet lib;
    f2.for_each_in_sphere(5, [&](const GroupElement& g) { lib.insert(g); });
    FiniteSet expected;
    for (const auto& w : oracle::sphere(2, 5)) expected.insert(oracle::to_word(w));
    EXPECT_EQ(lib, expected);
}

TEST(Ball, LatticeBallIsBox) {
    const Group z2 = Group::lattice(2);
    EXPECT_EQ(z2.ball(3).size(), 49U);
    EXPECT_EQ(z2.ball_size(3), 49);
    EXPECT_TRUE(z2.ball(3).contains(LatticePoint{-3, 3}));
}

TEST(Ball, CapIsEnforced) {
    const Group f2 = Group::free(2, 1000);
    EXPECT_THROW(f2.ball(8), ResourceError);
    EXPECT_NO_THROW(f2.ball(5));
}

TEST(SetProduct, ExamplesAndIdentity) {
    const Group z = Group::lattice(1);
    FiniteSet a(std::vector<GroupElement>{LatticePoint{0}, LatticePoint{1}});
    FiniteSet b(std::vector<GroupElement>{LatticePoint{0}, LatticePoint{10}});
    FiniteSet ab = z.set_product(a, b);
    EXPECT_EQ(ab.size(), 4U);
    EXPECT_TRUE(ab.contains(LatticePoint{11}));
    FiniteSet e(std::vector<GroupElement>{z.identity()});
    EXPECT_EQ(z.set_product(a, e), a);
}

TEST(SetProduct, RespectsCap) {
    const Group f2 = Group::free(2, 100);
    FiniteSet b3 = f2.ball(3);
    EXPECT_THROW(f2.set_product(b3, b3), ResourceError);
}

TEST(SetProduct, RandomTranslatesPreserveSize) {
    std::mt19937_64 rng(5);
    const Group f2 = Group::free(2);
    FiniteSet b2 = f2.ball(2);
    for (int i = 0; i < 200; ++i) {
        GroupElement s = oracle::to_word(oracle::random_word(rng, 2, 20));
        EXPECT_EQ(f2.translate_set(s, b2).size(), b2.size());
        EXPECT_EQ(f2.right_translate_set(b2, s).size(), b2.size());
        EXPECT_EQ(f2.inverse_set(f2.translate_set(s, b2)), f2.right_translate_set(f2.inverse_set(b2), f2.invert(s)));
    }
}

TEST(Disjoint, Examples) {
    FiniteSet a(std::vector<GroupElement>{LatticePoint{1}, LatticePoint{2}});
    FiniteSet b(std::vector<GroupElement>{LatticePoint{3}});
    FiniteSet c(std::vector<GroupElement>{LatticePoint{2}});
    EXPECT_TRUE(disjoint(a, b));
    EXPECT_FALSE(disjoint(a, c));
    EXPECT_TRUE(disjoint(FiniteSet{}, a));
}

TEST(Mixing, LatticeAndFreeOperandsAreRejected) {
    EXPECT_THROW(multiply(LatticePoint{1}, FreeWord::parse("a")), UsageError);
    EXPECT_THROW(multiply(LatticePoint{1}, LatticePoint{1, 2}), UsageError);
    EXPECT_THROW(Group::free(2).multiply(FreeWord::parse("c"), FreeWord::parse("a")), UsageError);
}

TEST(GroupParse, Names) {
    EXPECT_EQ(Group::parse("Z"), Group::lattice(1));
    EXPECT_EQ(Group::parse("Z^3"), Group::lattice(3));
    EXPECT_EQ(Group::parse("F_2"), Group::free(2));
    EXPECT_THROW(Group::parse("SL_2"), ValidationError);
}
