#include <gtest/gtest.h>

#include <random>

#include "kmarkov/contfrac.hpp"
#include "oracles.hpp"

using namespace kmarkov;

namespace {

CFSequence seq(std::initializer_list<long> xs) {
    CFSequence s;
    for (long x : xs) s.emplace_back(x);
    return s;
}

CFSequence random_seq(std::mt19937_64& rng, std::size_t len, long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    CFSequence s(len);
    for (auto& x : s) x = d(rng);
    return s;
}

}  // namespace

TEST(ContFrac, GoldenNumerators) {
    EXPECT_EQ(cf_numerator(seq({3, 2, 2})), 17);
    EXPECT_EQ(cf_numerator(seq({2, 1, 2})), 8);
    EXPECT_EQ(cf_numerator(seq({1, 1, 1, 1, 3, 2, 2})), 100);
    EXPECT_EQ(cf_numerator(seq({2, 2, 2})), 12);
    EXPECT_EQ(cf_numerator(seq({3})), 3);
}

TEST(ContFrac, EvalGivesNumeratorAndDenominator) {
    ExactFraction f = cf_eval(seq({3, 2, 2}));
    EXPECT_EQ(f.numerator, 17);
    EXPECT_EQ(f.denominator, 5);
}

TEST(ContFrac, EmptySequence) {
    EXPECT_EQ(cf_numerator({}), 1);
    EXPECT_THROW(cf_eval({}), ValidationError);
}

TEST(ContFrac, MatrixDeterminantIsUnit) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        CFSequence s = random_seq(rng, 1 + i % 9, 0, 20);
        CFMatrix m = cf_matrix(s);
        Integer det = m.p * m.s - m.q * m.r;
        EXPECT_EQ(det, s.size() % 2 == 0 ? 1 : -1);
    }
}

TEST(ContFrac, NumeratorMatchesEulerContinuant) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        CFSequence s = random_seq(rng, 1 + i % 12, 0, 30);
        EXPECT_EQ(cf_numerator(s), oracle::continuant(s));
    }
}

TEST(ContFrac, EvalMatchesRationalRecursion) {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 300; ++i) {
        CFSequence s = random_seq(rng, 1 + i % 10, 1, 50);
        ExactFraction f = cf_eval(s);
        Rational expected = oracle::cf_value(s);
        EXPECT_EQ(f.numerator, expected.get_num());
        EXPECT_EQ(f.denominator, expected.get_den());
    }
}

TEST(ContFrac, ReversalKeepsNumerator) {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 300; ++i) {
        CFSequence s = random_seq(rng, 1 + i % 11, 0, 40);
        CFSequence r(s.rbegin(), s.rend());
        EXPECT_EQ(cf_numerator(s), cf_numerator(r));
    }
}

TEST(ContFrac, Admissibility) {
    EXPECT_TRUE(cf_admissible(seq({0, 0, 3})));
    EXPECT_FALSE(cf_admissible(seq({1, -1})));
    EXPECT_TRUE(cf_admissible_shape(seq({3, 2, 2})));
    EXPECT_TRUE(cf_admissible_shape(seq({2})));
    EXPECT_FALSE(cf_admissible_shape(seq({1})));
    EXPECT_FALSE(cf_admissible_shape(seq({2, 1})));
    EXPECT_FALSE(cf_admissible_shape(seq({0, 2})));
}

TEST(ContFrac, SkeinIdentitiesOnSmallCases) {
    const CFSequence mu1 = seq({2, 1}), mu2 = seq({3});
    for (long a = 1; a <= 4; ++a)
        for (long c = 0; c <= 4; ++c)
            for (long b = 2; b <= 4; ++b)
                for (auto v : {SkeinVariant::Collapse, SkeinVariant::Shift}) {
                    SkeinCheck chk = cf_skein_check(mu1, a, c, b, mu2, v);
                    EXPECT_TRUE(chk.equal) << a << " " << c << " " << b;
                    EXPECT_EQ(chk.lhs, chk.rhs);
                }
}

TEST(ContFrac, SkeinSidesAgreeWithContinuantOracle) {
    // N[mu1,a,c,b,mu2] = N[mu1,a+c+b,mu2] + c N[mu1,a-1,1,b-1,mu2], computed by Euler's rule.
    const CFSequence mu1 = seq({1, 4}), mu2 = seq({2, 2});
    auto cat = [](std::initializer_list<CFSequence> parts) {
        CFSequence out;
        for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
        return out;
    };
    for (long a = 1; a <= 5; ++a)
        for (long c = 0; c <= 5; ++c)
            for (long b = 1; b <= 5; ++b) {
                Integer lhs = oracle::continuant(cat({mu1, seq({a, c, b}), mu2}));
                Integer rhs = oracle::continuant(cat({mu1, seq({a + c + b}), mu2})) +
                              c * oracle::continuant(cat({mu1, seq({a - 1, 1, b - 1}), mu2}));
                EXPECT_EQ(lhs, rhs);
                EXPECT_EQ(cf_skein_check(mu1, a, c, b, mu2, SkeinVariant::Collapse).lhs, lhs);
            }
}

TEST(ContFrac, LargeEntriesStayExact) {
    CFSequence s(60, Integer("123456789012345678901234567890"));
    CFSequence head(s.begin(), s.begin() + 20);
    EXPECT_EQ(cf_numerator(head), oracle::continuant(head));
    CFSequence r(s.rbegin(), s.rend());
    EXPECT_EQ(cf_numerator(s), cf_numerator(r));
    EXPECT_GT(cf_numerator(s).get_str().size(), 1700u);
}
