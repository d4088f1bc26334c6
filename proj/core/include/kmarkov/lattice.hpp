#pragma once

#include <optional>
#include <vector>

#include "kmarkov/numeric.hpp"
#include "kmarkov/poset.hpp"

namespace kmarkov {

struct LatticePoint {
    Integer x;
    Integer y;

    bool operator==(const LatticePoint& o) const { return x == o.x && y == o.y; }
    bool operator!=(const LatticePoint& o) const { return !(*this == o); }
};

LatticePoint operator+(const LatticePoint& a, const LatticePoint& b);
LatticePoint operator-(const LatticePoint& a, const LatticePoint& b);

// Position of the intersection on the crossed segment, seen from the arc.
enum class Bias { NearLeft, NearRight, Midpoint };
// Side of the arc on which this segment shares an endpoint with the previous one.
enum class Turn { SharedRight, SharedLeft };
enum class Side { Left, Right };

struct Crossing {
    Label label = Label::X;
    Bias bias = Bias::NearLeft;
    std::optional<Turn> turn;

    bool operator==(const Crossing&) const = default;
};

using CrossingWord = std::vector<Crossing>;

// Q_0..Q_r with r-1 turns of -pi (Side::Left) or +pi (Side::Right).
struct PolylineArc {
    std::vector<LatticePoint> waypoints;
    std::vector<Side> turns;
    Side end_bias = Side::Left;
};

CrossingWord crossing_word_segment(const LatticePoint& a, const LatticePoint& b, Side side);
CrossingWord crossing_word_polyline(const PolylineArc& arc);

void validate_word(const CrossingWord& w);
FencePoset poset_from_word(const CrossingWord& w, unsigned k);
// Weighted ideal sum of the compiled poset, cross-checked against the
// continued-fraction numerator of the extended poset's shape.
Integer arc_length(const CrossingWord& w, unsigned k);

}  // namespace kmarkov
