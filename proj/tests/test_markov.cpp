#include <gtest/gtest.h>

#include <set>

#include "kmarkov/markov.hpp"
#include "oracles.hpp"

using namespace kmarkov;

namespace {

Fraction fr(long p, long q) { return Fraction{p, q}; }
LatticePoint pt(long x, long y) { return {x, y}; }

}  // namespace

TEST(Markov, RootsAndEquation) {
    for (unsigned k = 0; k <= 5; ++k) {
        MarkovTriple r = markov_root(k);
        EXPECT_EQ(r.b, k + 2);
        EXPECT_TRUE(k_markov_check(r.a, r.b, r.c, k));
        EXPECT_TRUE(oracle::is_k_markov(r.a, r.b, r.c, k));
        EXPECT_TRUE(oracle::is_k_markov(1, 1, 1, k));
    }
    EXPECT_FALSE(k_markov_check(1, 2, 3, 0));
}

TEST(Markov, VietaStepsStayOnTheSurface) {
    for (unsigned k = 0; k <= 3; ++k)
        for (const auto& e : tree_levels(k, 7)) {
            EXPECT_TRUE(oracle::is_k_markov(e.triple.a, e.triple.b, e.triple.c, k));
            MarkovTriple back = vieta_flip_middle(e.triple);
            EXPECT_TRUE(oracle::is_k_markov(back.a, back.b, back.c, k));
            EXPECT_LT(back.b, e.triple.b);
        }
}

TEST(Markov, TreeDepthThreeForKOne) {
    std::vector<Integer> got;
    for (const auto& e : tree_levels(1, 3)) got.push_back(e.triple.b);
    std::multiset<Integer> expected{13, 61, 217, 291, 4683, 16693, 3673};
    EXPECT_EQ(std::multiset<Integer>(got.begin(), got.end()), expected);
    EXPECT_EQ(got.size(), 7u);
}

TEST(Markov, TreePathsAndFarey) {
    TreePath unit{PathOrigin::UnitSubtree, {}};
    EXPECT_EQ(farey_node(unit).mid, fr(1, 2));
    EXPECT_EQ(tree_node(1, unit).b, 13);
    TreePath full{PathOrigin::FullRoot, {Step::R, Step::R, Step::L}};
    EXPECT_EQ(farey_node(full).mid, fr(2, 5));
    EXPECT_EQ(tree_node(1, full).b, 4683);
    EXPECT_EQ(tree_node(1, full), tree_node(1, TreePath{PathOrigin::UnitSubtree, {Step::R, Step::L}}));
}

TEST(Markov, FareyPathRoundTrip) {
    for (const auto& f : reduced_fractions(20)) {
        if (f.p == 0 || f.p == f.q) continue;
        TreePath path = farey_path(f);
        EXPECT_EQ(path.origin, PathOrigin::UnitSubtree);
        EXPECT_EQ(farey_node(path).mid, f);
    }
    EXPECT_THROW(farey_path(fr(2, 4)), ValidationError);
    EXPECT_THROW(farey_path(fr(1, 1)), ValidationError);
}

TEST(Markov, FareyTriplesAreUnimodular) {
    for (const auto& e : tree_levels(0, 8)) {
        const auto& [l, m, r] = e.farey;
        EXPECT_EQ(m.p * l.q - m.q * l.p, 1);
        EXPECT_EQ(r.p * m.q - r.q * m.p, 1);
        EXPECT_EQ(m, mediant(l, r));
    }
}

TEST(Markov, NumberGoldens) {
    EXPECT_EQ(markov_number(1, fr(2, 5)), 4683);
    EXPECT_EQ(markov_number(1, fr(2, 5), Method::Poset), 4683);
    EXPECT_EQ(markov_number(1, fr(2, 5), Method::Both), 4683);
    EXPECT_EQ(markov_number(0, fr(0, 1)), 1);
    EXPECT_EQ(markov_number(0, fr(1, 1)), 2);
    EXPECT_EQ(markov_number(3, fr(1, 1)), 5);
    EXPECT_EQ(markov_number(2, fr(1, 2)), 25);
    EXPECT_THROW(markov_number(0, fr(3, 2)), ValidationError);
    EXPECT_THROW(markov_number(0, fr(2, 4)), ValidationError);
}

TEST(Markov, EndpointsAgreeAcrossMethods) {
    for (unsigned k = 0; k <= 3; ++k) {
        EXPECT_EQ(markov_number(k, fr(0, 1), Method::Poset), markov_number(k, fr(0, 1), Method::Tree));
        EXPECT_EQ(markov_number(k, fr(1, 1), Method::Poset), markov_number(k, fr(1, 1), Method::Tree));
    }
}

TEST(Markov, TreeValuesAreReachedByVietaSearch) {
    for (unsigned k = 0; k <= 3; ++k) {
        const Integer bound("100000000");
        auto numbers = oracle::k_markov_numbers(k, bound);
        std::set<Integer> from_tree;
        for (const auto& f : reduced_fractions(9)) {
            Integer m = markov_number(k, f);
            if (m <= bound) from_tree.insert(m);
        }
        for (const auto& m : from_tree) EXPECT_TRUE(numbers.count(m)) << "k=" << k << " m=" << m;
    }
}

TEST(Markov, ReducedFractionsOrder) {
    auto fs = reduced_fractions(4);
    std::vector<Fraction> expected{fr(0, 1), fr(1, 1), fr(1, 2), fr(1, 3), fr(2, 3), fr(1, 4), fr(3, 4)};
    EXPECT_EQ(fs, expected);
}

TEST(Markov, DistanceBasics) {
    EXPECT_EQ(markov_distance(1, pt(3, 3), pt(3, 3)), 0);
    EXPECT_EQ(markov_distance(1, pt(0, 0), pt(5, 2)), 4683);
    for (unsigned k = 0; k <= 2; ++k)
        for (long x = -3; x <= 3; ++x)
            for (long y = -3; y <= 3; ++y) {
                if (x == 0 && y == 0) continue;
                EXPECT_EQ(markov_distance(k, pt(0, 0), pt(x, y)), markov_distance(k, pt(x, y), pt(0, 0)));
                EXPECT_EQ(markov_distance(k, pt(0, 0), pt(x, y)), markov_distance(k, pt(7, -2), pt(7 + x, y - 2)));
            }
}

TEST(Markov, TableMethodsAgreeAndJobsDoNotMatter) {
    auto a = markov_table(1, 10, Method::Tree, 1);
    auto b = markov_table(1, 10, Method::Poset, 3);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].r, b[i].r);
        EXPECT_EQ(a[i].value, b[i].value);
    }
}

TEST(Markov, PtolemySingle) {
    PtolemyCheck c = verify_ptolemy(0, pt(0, 0), pt(2, 0), pt(2, 1), pt(0, 1));
    EXPECT_TRUE(c.holds);
    EXPECT_GE(c.lhs, c.rhs);
    EXPECT_THROW(verify_ptolemy(0, pt(0, 0), pt(2, 1), pt(2, 0), pt(0, 1)), ValidationError);
    EXPECT_THROW(verify_ptolemy(0, pt(0, 0), pt(1, 1), pt(2, 2), pt(0, 2)), ValidationError);
    EXPECT_THROW(verify_ptolemy(0, pt(0, 0), pt(0, 0), pt(2, 2), pt(0, 2)), ValidationError);
}

TEST(Markov, PtolemySmallSweep) {
    for (unsigned k = 0; k <= 2; ++k) {
        PtolemyReport r = verify_ptolemy_sweep(k, 0, 2, 2);
        EXPECT_TRUE(r.passed());
        EXPECT_GT(r.quadrilaterals, 0u);
    }
    EXPECT_EQ(verify_ptolemy_sweep(0, 0, 2, 1).quadrilaterals, verify_ptolemy_sweep(0, -1, 1, 1).quadrilaterals);
}

TEST(Markov, AignerSmall) {
    for (unsigned k = 0; k <= 3; ++k) {
        AignerReport r = verify_aigner(k, 12, 2);
        EXPECT_TRUE(r.passed()) << k;
        EXPECT_GT(r.checked[0], 0u);
        EXPECT_GT(r.checked[1], 0u);
        EXPECT_GT(r.checked[2], 0u);
    }
}

TEST(Markov, Recurrences) {
    for (unsigned k = 0; k <= 1; ++k) {
        RecurrenceReport r = verify_recurrences(k, 20, Method::Both);
        EXPECT_TRUE(r.passed());
        EXPECT_EQ(r.rows.size(), 18u);
    }
    EXPECT_THROW(verify_recurrences(2, 20), ValidationError);
}

TEST(Markov, FibonacciAtOneOverN) {
    // m^(0)_{1/n} = F_{2n+1}.
    Integer f0 = 1, f1 = 1;
    std::vector<Integer> odd;
    for (int i = 0; i < 50; ++i) {
        Integer f2 = f0 + f1;
        f0 = f1;
        f1 = f2;
        odd.push_back(f0);
    }
    for (long n = 1; n <= 20; ++n) EXPECT_EQ(markov_number(0, fr(1, n)), odd[2 * n - 1]) << n;
}

TEST(Markov, CollisionsAndOrderComparison) {
    for (unsigned k = 0; k <= 3; ++k) EXPECT_TRUE(find_collisions(k, 12, 2).empty());
    OrderComparison a = compare_orders(0, 1, 8, 1), b = compare_orders(0, 1, 8, 3);
    EXPECT_EQ(a.fractions, reduced_fractions(8).size());
    EXPECT_EQ(a.pairs, a.fractions * (a.fractions - 1) / 2);
    ASSERT_EQ(a.discordant.size(), b.discordant.size());
    for (std::size_t i = 0; i < a.discordant.size(); ++i) {
        EXPECT_EQ(a.discordant[i].a, b.discordant[i].a);
        EXPECT_EQ(a.discordant[i].b, b.discordant[i].b);
        const auto& d = a.discordant[i];
        EXPECT_LT((d.m_k_a - d.m_k_b) * (d.m_k2_a - d.m_k2_b), 0);
    }
}
