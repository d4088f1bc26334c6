#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "kmarkov/poset.hpp"

namespace kmarkov {

// P1[c,d] isomorphic to P2[c2,d2], on top in P1 and on bottom in P2. 1-based.
struct CrossingOverlap {
    std::size_t c = 0;
    std::size_t d = 0;
    std::size_t c2 = 0;
    std::size_t d2 = 0;

    bool operator==(const CrossingOverlap&) const = default;
};

// Where an output element came from: input poset 1 or 2 and its index there.
struct ElementOrigin {
    std::uint8_t source = 0;
    std::size_t index = 0;

    bool operator==(const ElementOrigin&) const = default;
};

struct Resolution {
    FencePoset p3, p4, p5, p6;
    std::array<std::vector<ElementOrigin>, 4> origins;

    const FencePoset& output(std::size_t i) const;
};

enum class CountMode { Dp, Enumeration };

struct IdentityCheck {
    Integer lhs;  // |J(P1)| |J(P2)|
    Integer rhs;  // |J(P3)| |J(P4)| + |J(P5)| |J(P6)|
    std::array<Integer, 6> counts;
    bool equal = false;
};

bool is_crossing_overlap(const FencePoset& p1, const FencePoset& p2, const CrossingOverlap& ov);
std::vector<CrossingOverlap> find_crossing_overlaps(const FencePoset& p1, const FencePoset& p2);

Resolution resolve_type0(const FencePoset& p1, const FencePoset& p2, const CrossingOverlap& ov);
Resolution resolve_type1(const FencePoset& p1, const FencePoset& p2, std::size_t i);
Resolution resolve_type2(const FencePoset& p1, const FencePoset& p2);

IdentityCheck verify_resolution_identity(const FencePoset& p1, const FencePoset& p2, const Resolution& res,
                                         CountMode mode = CountMode::Dp);

// Every relation in an output is either copied from the input it came from or
// is one of at most `max_new` joining relations.
bool resolution_is_splice(const FencePoset& p1, const FencePoset& p2, const Resolution& res,
                          std::size_t max_new = 1);

}  // namespace kmarkov
