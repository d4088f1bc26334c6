#include <gtest/gtest.h>

#include <random>

#include "kmarkov/contfrac.hpp"
#include "kmarkov/poset.hpp"
#include "oracles.hpp"

using namespace kmarkov;

namespace {

constexpr Dir U = Dir::Up;
constexpr Dir D = Dir::Down;

FencePoset fig1() { return poset_from_shape({3, 2, 2}); }

FencePoset pair_poset(unsigned k, Dir d) {
    FencePoset p(std::vector<Dir>{d});
    Rational w(static_cast<long>(k));
    if (d == U) p.set_weights({w, 1 / w});
    else p.set_weights({1 / w, w});
    p.set_pairs({{1, 2}});
    return p;
}

}  // namespace

TEST(Poset, ShapeToDirections) {
    EXPECT_EQ(fig1().directions(), (std::vector<Dir>{U, U, D, D, U}));
    EXPECT_EQ(poset_from_shape({2}).size(), 1u);
    FencePoset p12 = poset_from_shape({1, 2});
    EXPECT_EQ(p12.directions(), (std::vector<Dir>{D}));
    EXPECT_EQ(ideal_count(p12), 3);
}

TEST(Poset, ShapeOf) {
    EXPECT_EQ(shape_of(fig1()), (Shape{3, 2, 2}));
    EXPECT_EQ(shape_of(FencePoset::singleton()), (Shape{2}));
    EXPECT_THROW(shape_of(FencePoset()), ValidationError);
}

TEST(Poset, InvalidShapesRejected) {
    EXPECT_THROW(poset_from_shape({}), ValidationError);
    EXPECT_THROW(poset_from_shape({1}), ValidationError);
    EXPECT_THROW(poset_from_shape({3, 0, 2}), ValidationError);
    EXPECT_THROW(poset_from_shape({2, 1}), ValidationError);
}

TEST(Poset, FirstEntryOneIffFirstElementMaximal) {
    for (std::size_t bits = 0; bits < 512; ++bits) {
        std::vector<Dir> dirs;
        for (std::size_t i = 0; i < 9; ++i) dirs.push_back((bits >> i) & 1U ? D : U);
        FencePoset p(dirs);
        bool maximal = p.direction(1) == D;
        EXPECT_EQ(shape_of(p).front() == 1, maximal);
    }
}

TEST(Poset, ShapeRoundTripAndNumerator) {
    for (std::size_t bits = 0; bits < (1U << 11); ++bits) {
        std::vector<Dir> dirs;
        for (std::size_t i = 0; i < 11; ++i) dirs.push_back((bits >> i) & 1U ? D : U);
        FencePoset p(dirs);
        Shape s = shape_of(p);
        EXPECT_TRUE(valid_shape(s));
        EXPECT_EQ(poset_from_shape(s), p);
        EXPECT_EQ(ideal_count(p), cf_numerator(to_cf(s)));
    }
}

TEST(Poset, ReverseAndDual) {
    FencePoset p = fig1();
    EXPECT_EQ(reverse_poset(reverse_poset(p)), p);
    EXPECT_EQ(dual_poset(dual_poset(p)), p);
    EXPECT_EQ(ideal_count(reverse_poset(p)), 17);
    EXPECT_EQ(ideal_count(dual_poset(p)), 17);
    FencePoset p12 = poset_from_shape({1, 2});
    EXPECT_EQ(shape_of(reverse_poset(p12)), (Shape{3}));
    EXPECT_EQ(ideal_count(reverse_poset(p12)), 3);
}

TEST(Poset, ReverseCarriesLabelsWeightsPairs) {
    FencePoset p(std::vector<Dir>{U, D, U});
    p.set_labels({Label::X, Label::Y, Label::Y, Label::Z});
    p.set_weights({2, Rational(1, 2), 1, 1});
    p.set_pairs({{1, 2}});
    FencePoset r = reverse_poset(p);
    EXPECT_EQ(r.directions(), (std::vector<Dir>{D, U, D}));
    EXPECT_EQ(r.labels(), (std::vector<Label>{Label::Z, Label::Y, Label::Y, Label::X}));
    EXPECT_EQ(r.weight(4), 2);
    EXPECT_EQ(r.pairs(), (std::vector<ElementPair>{{3, 4}}));
    EXPECT_EQ(weighted_ideal_sum(r), weighted_ideal_sum(p));
}

TEST(Poset, Intervals) {
    FencePoset p = fig1();
    EXPECT_EQ(induced_interval(p, 1, 6), p);
    EXPECT_TRUE(induced_interval(p, 4, 3).empty());
    EXPECT_EQ(induced_interval(p, 2, 4).directions(), (std::vector<Dir>{U, D}));
    EXPECT_THROW(induced_interval(p, 0, 2), ValidationError);
    EXPECT_THROW(induced_interval(p, 2, 7), ValidationError);
}

TEST(Poset, Join) {
    FencePoset a = poset_from_shape({2, 2});
    FencePoset b = poset_from_shape({3});
    FencePoset j = join(a, D, b);
    EXPECT_EQ(j.directions(), (std::vector<Dir>{U, D, D, U}));
    EXPECT_EQ(join(FencePoset(), U, b), b);
    EXPECT_EQ(join(a, U, FencePoset()), a);
}

TEST(Poset, Below) {
    FencePoset p = fig1();
    EXPECT_TRUE(p.below(1, 3));
    EXPECT_TRUE(p.below(5, 3));
    EXPECT_FALSE(p.below(1, 5));
    EXPECT_FALSE(p.below(3, 3));
    auto lt = oracle::strict_order(p);
    for (std::size_t i = 1; i <= 6; ++i)
        for (std::size_t j = 1; j <= 6; ++j) EXPECT_EQ(p.below(i, j), lt[i - 1][j - 1]);
}

TEST(Poset, EnumerationGoldens) {
    auto empty = ideals_enumerate(FencePoset());
    ASSERT_EQ(empty.size(), 1u);
    EXPECT_TRUE(empty[0].empty());
    auto one = ideals_enumerate(FencePoset::singleton());
    ASSERT_EQ(one.size(), 2u);
    EXPECT_EQ(one[1], (OrderIdeal{1}));
    EXPECT_EQ(ideals_enumerate(fig1()).size(), 17u);
    EXPECT_EQ(ideal_count(fig1()), 17);
    EXPECT_EQ(ideal_count(poset_from_shape({2, 1, 2})), 8);
    EXPECT_EQ(ideal_count(FencePoset()), 1);
}

TEST(Poset, EnumerationIsLexicographicAndMatchesOracle) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        FencePoset p = random_fence_poset(rng, 1 + t % 12);
        auto ideals = ideals_enumerate(p);
        std::vector<std::vector<bool>> membership;
        for (const auto& ideal : ideals) {
            std::vector<bool> m(p.size(), false);
            for (std::size_t i : ideal) m[i - 1] = true;
            membership.push_back(m);
        }
        EXPECT_TRUE(std::is_sorted(membership.begin(), membership.end()));
        std::set<std::vector<std::size_t>> got(ideals.begin(), ideals.end());
        EXPECT_EQ(got.size(), ideals.size());
        EXPECT_EQ(got, oracle::ideals(p));
    }
}

TEST(Poset, EnumerationGuard) {
    FencePoset big(std::vector<Dir>(kEnumerationLimit, U));
    EXPECT_THROW(ideals_enumerate(big), ValidationError);
    EXPECT_EQ(ideal_count(big), static_cast<unsigned long>(kEnumerationLimit + 2));
}

TEST(Poset, WeightedSum) {
    for (unsigned k = 1; k <= 5; ++k) {
        FencePoset p = pair_poset(k, U);
        EXPECT_EQ(weighted_ideal_sum(p), Rational(k + 2));
        EXPECT_EQ(weighted_ideal_sum(p), oracle::weighted_sum(p));
    }
    EXPECT_EQ(weighted_ideal_sum(fig1()), 17);
}

TEST(Poset, WeightsMustBePositiveAndSized) {
    FencePoset p(std::vector<Dir>{U});
    EXPECT_THROW(p.set_weights({1}), ValidationError);
    EXPECT_THROW(p.set_weights({1, 0}), ValidationError);
    EXPECT_THROW(p.set_weights({1, -2}), ValidationError);
}

TEST(Poset, PairsMustBeAdjacentAndDisjoint) {
    FencePoset p(std::vector<Dir>{U, U, U});
    EXPECT_THROW(p.set_pairs({{1, 3}}), ValidationError);
    EXPECT_THROW(p.set_pairs({{1, 2}, {2, 3}}), ValidationError);
    EXPECT_THROW(p.set_pairs({{4, 5}}), ValidationError);
    p.set_pairs({{3, 4}, {1, 2}});
    EXPECT_EQ(p.pairs(), (std::vector<ElementPair>{{1, 2}, {3, 4}}));
}

TEST(Poset, Balanced) {
    EXPECT_TRUE(is_balanced(pair_poset(3, U)));
    EXPECT_TRUE(is_balanced(fig1()));
    FencePoset bad(std::vector<Dir>{U});
    bad.set_weights({Rational(1, 2), 2});
    EXPECT_FALSE(is_balanced(bad));
    EXPECT_THROW(extend_poset(bad, 2), ValidationError);
}

TEST(Poset, ExtendPair) {
    FencePoset ex = extend_poset(pair_poset(2, U), 2);
    EXPECT_EQ(ex.size(), 3u);
    EXPECT_EQ(ex.directions(), (std::vector<Dir>{U, U}));
    EXPECT_TRUE(ex.unit_weights());

    FencePoset k1(std::vector<Dir>{D});
    k1.set_pairs({{1, 2}});
    FencePoset ex1 = extend_poset(k1, 1);
    EXPECT_EQ(ex1.size(), 2u);
    EXPECT_EQ(ex1.directions(), (std::vector<Dir>{D}));

    FencePoset plain = fig1();
    EXPECT_EQ(extend_poset(plain, 0), plain);
    EXPECT_EQ(extend_poset(plain, 3), plain);
}

TEST(Poset, ExtendPreservesWeightedSumAndSizeLaw) {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 300; ++t) {
        unsigned k = 1 + t % 4;
        std::size_t h = 2 + t % 9;
        FencePoset p = random_fence_poset(rng, h);
        std::vector<Rational> w(h, Rational(1));
        std::vector<ElementPair> pairs;
        for (std::size_t i = 1; i < h; ++i) {
            if (rng() % 2) continue;
            bool up = p.direction(i) == Dir::Up;
            w[i - 1] = up ? Rational(k) : Rational(1, k);
            w[i] = up ? Rational(1, k) : Rational(k);
            pairs.emplace_back(i, i + 1);
            ++i;
        }
        p.set_weights(w);
        p.set_pairs(pairs);
        ASSERT_TRUE(is_balanced(p));
        FencePoset ex = extend_poset(p, k);
        EXPECT_EQ(ex.size(), (h - 2 * pairs.size()) + (k + 1) * pairs.size());
        EXPECT_EQ(Rational(ideal_count(ex)), weighted_ideal_sum(p));
        EXPECT_EQ(weighted_ideal_sum(p), oracle::weighted_sum(p));
    }
}

TEST(Poset, LabelsPropagateThroughExtension) {
    FencePoset p = pair_poset(2, D);
    p.set_labels({Label::Y, Label::Y});
    FencePoset ex = extend_poset(p, 2);
    EXPECT_EQ(ex.labels(), (std::vector<Label>(3, Label::Y)));
    EXPECT_EQ(ex.directions(), (std::vector<Dir>{D, D}));
}
