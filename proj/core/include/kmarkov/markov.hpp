#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "kmarkov/lattice.hpp"
#include "kmarkov/numeric.hpp"

namespace kmarkov {

struct MarkovTriple {
    Integer a;
    Integer b;
    Integer c;
    unsigned k = 0;

    bool operator==(const MarkovTriple& o) const { return k == o.k && a == o.a && b == o.b && c == o.c; }
};

struct FareyTriple {
    Fraction left;
    Fraction mid;
    Fraction right;

    bool operator==(const FareyTriple&) const = default;
};

enum class Step : std::uint8_t { L, R };

// FullRoot paths start at (1, k+2, 1) <-> (0/1, 1/1, 1/0); UnitSubtree paths
// start at its right child, the root of the [0,1] subtree.
enum class PathOrigin { FullRoot, UnitSubtree };

struct TreePath {
    PathOrigin origin = PathOrigin::FullRoot;
    std::vector<Step> steps;

    bool operator==(const TreePath&) const = default;
};

enum class Method { Tree, Poset, Both };

bool k_markov_check(const Integer& a, const Integer& b, const Integer& c, unsigned k);
MarkovTriple markov_root(unsigned k);
FareyTriple farey_root();

// Left: (b, (b^2+kbc+c^2)/a, c). Right: (a, (a^2+kab+b^2)/c, b).
MarkovTriple vieta_step(const MarkovTriple& t, Step child);
FareyTriple farey_step(const FareyTriple& t, Step child);
// Vieta jump on the middle entry: (a, (a^2+kac+c^2)/b, c).
MarkovTriple vieta_flip_middle(const MarkovTriple& t);

MarkovTriple tree_node(unsigned k, const TreePath& path);
FareyTriple farey_node(const TreePath& path);
TreePath farey_path(const Fraction& r);

Integer markov_number(unsigned k, const Fraction& r, Method method = Method::Tree);
Integer markov_distance(unsigned k, const LatticePoint& a, const LatticePoint& b, Side side = Side::Left);

struct TreeEntry {
    std::size_t depth = 0;  // below the full root
    TreePath path;          // from the full root
    FareyTriple farey;
    MarkovTriple triple;
};

// Nodes of the [0,1] subtree at depths 1..max_depth, by depth then by value.
std::vector<TreeEntry> tree_levels(unsigned k, std::size_t max_depth);

// Reduced p/q in [0,1] with q <= q_max, ordered by (q, p).
std::vector<Fraction> reduced_fractions(std::size_t q_max);

struct TableRow {
    Fraction r;
    Integer value;
};

std::vector<TableRow> markov_table(unsigned k, std::size_t q_max, Method method, unsigned jobs);

struct PtolemyCheck {
    std::array<LatticePoint, 4> v;
    Integer lhs;  // |AC| |BD|
    Integer rhs;  // |AB| |CD| + |AD| |BC|
    bool holds = false;
    bool tight = false;
};

struct PtolemyReport {
    unsigned k = 0;
    long lo = 0;
    long hi = 0;
    std::uint64_t quadrilaterals = 0;
    std::uint64_t tight = 0;
    std::vector<PtolemyCheck> violations;

    bool passed() const { return violations.empty(); }
};

// ABCD must be distinct and strictly convex in the given cyclic order.
PtolemyCheck verify_ptolemy(unsigned k, const LatticePoint& a, const LatticePoint& b, const LatticePoint& c,
                            const LatticePoint& d);
// Every strictly convex quadrilateral with vertices in [lo, hi]^2, once each,
// counter-clockwise from its lexicographically smallest vertex.
PtolemyReport verify_ptolemy_sweep(unsigned k, long lo, long hi, unsigned jobs);

enum class AignerFamily { FixedNumerator, FixedDenominator, FixedSum };
const char* to_string(AignerFamily f);

struct AignerViolation {
    AignerFamily family;
    Fraction smaller;  // the fraction whose number should be smaller
    Fraction larger;
    Integer m_smaller;
    Integer m_larger;
};

struct AignerReport {
    unsigned k = 0;
    std::size_t q_max = 0;
    std::array<std::uint64_t, 3> checked{};
    std::vector<AignerViolation> violations;

    bool passed() const { return violations.empty(); }
};

AignerReport verify_aigner(unsigned k, std::size_t q_max, unsigned jobs);

struct RecurrenceRow {
    std::size_t n = 0;
    Integer predicted;
    Integer actual;
    bool holds = false;
};

struct RecurrenceReport {
    unsigned k = 0;
    std::size_t n_max = 0;
    std::vector<RecurrenceRow> rows;

    bool passed() const;
};

// k = 0: m_{1/n} = 3 m_{1/(n-1)} - m_{1/(n-2)}. k = 1: 5 m_{1/(n-1)} - m_{1/(n-2)} - 1.
RecurrenceReport verify_recurrences(unsigned k, std::size_t n_max, Method method = Method::Tree);

struct Collision {
    Integer value;
    std::vector<Fraction> fractions;
};

struct DiscordantPair {
    Fraction a;
    Fraction b;
    Integer m_k_a, m_k_b;
    Integer m_k2_a, m_k2_b;
};

struct OrderComparison {
    unsigned k = 0;
    unsigned k2 = 0;
    std::size_t q_max = 0;
    std::size_t fractions = 0;
    std::uint64_t pairs = 0;
    std::vector<DiscordantPair> discordant;
    std::vector<Collision> collisions_k;
    std::vector<Collision> collisions_k2;
};

std::vector<Collision> find_collisions(unsigned k, std::size_t q_max, unsigned jobs);
OrderComparison compare_orders(unsigned k, unsigned k2, std::size_t q_max, unsigned jobs);

}  // namespace kmarkov
