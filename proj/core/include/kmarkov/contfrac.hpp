#pragma once

#include <vector>

#include "kmarkov/numeric.hpp"

namespace kmarkov {

using CFSequence = std::vector<Integer>;

// Product of [[a_i, 1], [1, 0]] over the sequence, read as [[p, r], [q, s]].
struct CFMatrix {
    Integer p{1};
    Integer q{0};
    Integer r{0};
    Integer s{1};
};

struct ExactFraction {
    Integer numerator;
    Integer denominator;
};

// Collapse: N[m1,a,c,b,m2] = N[m1,a+c+b,m2] + c*N[m1,a-1,1,b-1,m2]
// Shift:    N[m1,a,c+1,b,m2] = N[m1,a,1,b+c,m2] + c*N[m1,a-1,1,b-2,m2]
enum class SkeinVariant { Collapse, Shift };

struct SkeinCheck {
    Integer lhs;
    Integer rhs;
    bool equal = false;
};

// Entries >= 0; as a shape additionally all >= 1 with the last >= 2
// (a single entry must be >= 2).
bool cf_admissible(const CFSequence& seq);
bool cf_admissible_shape(const CFSequence& seq);

CFMatrix cf_matrix(const CFSequence& seq);
ExactFraction cf_eval(const CFSequence& seq);
// Top-left matrix entry. The empty sequence gives 1.
Integer cf_numerator(const CFSequence& seq);

SkeinCheck cf_skein_check(const CFSequence& mu1, const Integer& a, const Integer& c,
                          const Integer& b, const CFSequence& mu2, SkeinVariant variant);

}  // namespace kmarkov
