#include "kmarkov/lattice.hpp"

#include <algorithm>
#include <array>

namespace kmarkov {

LatticePoint operator+(const LatticePoint& a, const LatticePoint& b) { return {a.x + b.x, a.y + b.y}; }
LatticePoint operator-(const LatticePoint& a, const LatticePoint& b) { return {a.x - b.x, a.y - b.y}; }

namespace {

struct Vec {
    long x;
    long y;
};

Integer cross(const Integer& ax, const Integer& ay, const Integer& bx, const Integer& by) { return ax * by - ay * bx; }
Rational cross(const Integer& ax, const Integer& ay, const Rational& bx, const Rational& by) { return ax * by - ay * bx; }

Integer floor_of(const Rational& r) {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return out;
}

Side opposite(Side s) { return s == Side::Left ? Side::Right : Side::Left; }
Turn turn_toward(Side s) { return s == Side::Left ? Turn::SharedLeft : Turn::SharedRight; }

enum class Kind { Line, Spoke, Bridge };

struct RawCrossing {
    Label label = Label::X;
    Bias bias = Bias::NearLeft;
    LatticePoint e1, e2;
    Kind kind = Kind::Line;
    Side side = Side::Left;  // detour side for spokes
    LatticePoint center;     // detour centre for spokes
    LatticePoint origin;     // step start for line crossings
};

RawCrossing make_raw(Label label, Bias bias, LatticePoint e1, LatticePoint e2, Kind kind) {
    RawCrossing rc;
    rc.label = label;
    rc.bias = bias;
    rc.e1 = std::move(e1);
    rc.e2 = std::move(e2);
    rc.kind = kind;
    return rc;
}

// Spokes of L at a lattice point, counter-clockwise from east.
constexpr std::array<std::pair<Vec, Label>, 6> kSpokes{{
    {{1, 0}, Label::Z},
    {{0, 1}, Label::Y},
    {{-1, 1}, Label::X},
    {{-1, 0}, Label::Z},
    {{0, -1}, Label::Y},
    {{1, -1}, Label::X},
}};

bool along_lattice(const Integer& u, const Integer& v) {
    if (u == 0) return abs(v) == 1;
    if (v == 0) return abs(u) == 1;
    return (u == 1 && v == -1) || (u == -1 && v == 1);
}

Label lattice_label(const Integer& u, const Integer& v) {
    if (v == 0) return Label::Z;
    if (u == 0) return Label::Y;
    return Label::X;
}

struct StepEvent {
    Rational t;
    Label family;
    Integer n;
};

void add_family(std::vector<StepEvent>& ev, const Integer& start, const Integer& delta, Label family) {
    if (delta == 0) return;
    Integer lo = delta > 0 ? start : Integer(start + delta);
    Integer hi = delta > 0 ? Integer(start + delta) : start;
    for (Integer n = lo + 1; n < hi; ++n) {
        Rational t(n - start, delta);
        t.canonicalize();
        ev.push_back({t, family, n});
    }
}

// Crossings of the open primitive step p -> p + (u, v).
void step_crossings(const LatticePoint& p, const Integer& u, const Integer& v, std::vector<RawCrossing>& out) {
    if (along_lattice(u, v)) return;
    std::vector<StepEvent> ev;
    add_family(ev, p.x, u, Label::Y);
    add_family(ev, p.y, v, Label::Z);
    add_family(ev, p.x + p.y, u + v, Label::X);
    std::sort(ev.begin(), ev.end(), [](const StepEvent& a, const StepEvent& b) { return a.t < b.t; });

    for (const auto& e : ev) {
        Rational x = p.x + e.t * u;
        Rational y = p.y + e.t * v;
        LatticePoint e1, e2;
        switch (e.family) {
            case Label::Y: {
                Integer j = floor_of(y);
                e1 = {e.n, j};
                e2 = {e.n, j + 1};
                break;
            }
            case Label::Z: {
                Integer i = floor_of(x);
                e1 = {i, e.n};
                e2 = {i + 1, e.n};
                break;
            }
            case Label::X: {
                Integer i = floor_of(x);
                e1 = {i, e.n - i};
                e2 = {i + 1, e.n - i - 1};
                break;
            }
        }
        Rational dx1 = e1.x - x, dy1 = e1.y - y, dx2 = e2.x - x, dy2 = e2.y - y;
        Rational d1 = dx1 * dx1 + dy1 * dy1;
        Rational d2 = dx2 * dx2 + dy2 * dy2;
        bool e1_right = sgn(cross(u, v, dx1, dy1)) < 0;
        const Rational& d_right = e1_right ? d1 : d2;
        const Rational& d_left = e1_right ? d2 : d1;
        Bias bias = d_right < d_left ? Bias::NearRight : (d_left < d_right ? Bias::NearLeft : Bias::Midpoint);
        RawCrossing rc = make_raw(e.family, bias, e1, e2, Kind::Line);
        rc.origin = p;
        out.push_back(std::move(rc));
    }
}

void detour_crossings(const LatticePoint& c, const Integer& u, const Integer& v, Side side,
                      std::vector<RawCrossing>& out) {
    std::vector<std::pair<Vec, Label>> spokes;
    for (const auto& s : kSpokes) {
        int sg = sgn(cross(u, v, Integer(s.first.x), Integer(s.first.y)));
        if ((side == Side::Left && sg > 0) || (side == Side::Right && sg < 0)) spokes.push_back(s);
    }
    // Travel order: from the spoke pointing most backwards to the one closest to (u, v).
    std::sort(spokes.begin(), spokes.end(), [side](const auto& a, const auto& b) {
        long cr = a.first.x * b.first.y - a.first.y * b.first.x;
        return side == Side::Left ? cr < 0 : cr > 0;
    });
    for (const auto& [w, label] : spokes) {
        RawCrossing rc = make_raw(label, side == Side::Left ? Bias::NearRight : Bias::NearLeft, c,
                                  c + LatticePoint{Integer(w.x), Integer(w.y)}, Kind::Spoke);
        rc.side = side;
        rc.center = c;
        out.push_back(std::move(rc));
    }
}

std::optional<LatticePoint> shared_vertex(const RawCrossing& a, const RawCrossing& b) {
    for (const auto* p : {&a.e1, &a.e2})
        if (*p == b.e1 || *p == b.e2) return *p;
    return std::nullopt;
}

Turn turn_between(const RawCrossing& a, const RawCrossing& b, const Integer& u, const Integer& v) {
    auto vtx = shared_vertex(a, b);
    if (!vtx) throw InvariantViolation("consecutive crossings share no endpoint");
    const LatticePoint& V = *vtx;
    // A detour keeps its centre on the side opposite to the detour.
    if (b.kind == Kind::Spoke && V == b.center) return turn_toward(opposite(b.side));
    if (a.kind == Kind::Spoke && V == a.center) return turn_toward(opposite(a.side));
    if (a.kind == Kind::Spoke && b.kind == Kind::Spoke && a.side != b.side)
        throw InvariantViolation("adjacent detours on opposite sides without a bridge");
    if (b.kind == Kind::Spoke) return turn_toward(b.side);
    if (a.kind == Kind::Spoke) return turn_toward(a.side);
    if (a.kind != Kind::Line || b.kind != Kind::Line) throw InvariantViolation("unexpected bridge adjacency");
    int sg = sgn(cross(u, v, Integer(V.x - a.origin.x), Integer(V.y - a.origin.y)));
    if (sg == 0) throw InvariantViolation("shared endpoint lies on the arc");
    return sg > 0 ? Turn::SharedLeft : Turn::SharedRight;
}

Integer gcd_of(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// Lattice points strictly inside the arc get a detour side; steps are primitive.
CrossingWord build_word(const LatticePoint& a, const Integer& u, const Integer& v, const std::vector<Side>& sides,
                        Side end_bias) {
    const std::size_t steps = sides.size() + 1;
    std::vector<RawCrossing> raw;
    LatticePoint p = a;
    for (std::size_t j = 0; j < steps; ++j) {
        if (j > 0) {
            if (j >= 2 && along_lattice(u, v) && sides[j - 2] != sides[j - 1]) {
                // The arc switches sides along a lattice segment and must cross it.
                LatticePoint prev = p - LatticePoint{u, v};
                raw.push_back(make_raw(lattice_label(u, v), Bias::Midpoint, prev, p, Kind::Bridge));
            }
            detour_crossings(p, u, v, sides[j - 1], raw);
        }
        std::size_t first = raw.size();
        step_crossings(p, u, v, raw);

        std::optional<Side> before = j > 0 ? std::optional<Side>(sides[j - 1]) : std::nullopt;
        std::optional<Side> after = j + 1 < steps ? std::optional<Side>(sides[j]) : std::nullopt;
        std::optional<Side> resolved;
        if (!before && !after)
            resolved = end_bias;
        else if (before && after)
            resolved = *before == *after ? before : std::nullopt;
        else
            resolved = before ? before : after;
        for (std::size_t t = first; t < raw.size(); ++t) {
            if (raw[t].bias == Bias::Midpoint && resolved == Side::Right) raw[t].bias = Bias::NearRight;
        }
        p = p + LatticePoint{u, v};
    }

    CrossingWord out;
    out.reserve(raw.size());
    for (std::size_t t = 0; t < raw.size(); ++t) {
        Crossing c{raw[t].label, raw[t].bias, std::nullopt};
        if (t > 0) c.turn = turn_between(raw[t - 1], raw[t], u, v);
        out.push_back(c);
    }
    return out;
}

}  // namespace

CrossingWord crossing_word_segment(const LatticePoint& a, const LatticePoint& b, Side side) {
    return crossing_word_polyline(PolylineArc{{a, b}, {}, side});
}

CrossingWord crossing_word_polyline(const PolylineArc& arc) {
    const auto& q = arc.waypoints;
    if (q.size() < 2) throw ValidationError("polyline needs at least two waypoints");
    if (arc.turns.size() != q.size() - 2) throw ValidationError("polyline needs one turn per interior waypoint");
    for (std::size_t i = 0; i + 1 < q.size(); ++i)
        if (q[i] == q[i + 1]) throw ValidationError("consecutive waypoints must be distinct");

    LatticePoint d0 = q[1] - q[0];
    Integer g0 = gcd_of(d0.x, d0.y);
    Integer u = d0.x / g0, v = d0.y / g0;

    std::vector<Side> sides;
    for (std::size_t i = 0; i + 1 < q.size(); ++i) {
        LatticePoint d = q[i + 1] - q[i];
        Integer g = gcd_of(d.x, d.y);
        if (d.x != g * u || d.y != g * v)
            throw UnsupportedFeature("only turns of +-pi are supported: waypoints must be collinear and advancing");
        if (i > 0) sides.push_back(arc.turns[i - 1]);
        for (Integer t = 1; t < g; ++t) sides.push_back(arc.end_bias);
    }
    return build_word(q[0], u, v, sides, arc.end_bias);
}

void validate_word(const CrossingWord& w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i == 0 && w[i].turn) throw ValidationError("the first crossing cannot carry a turn");
        if (i > 0 && !w[i].turn) throw ValidationError("crossing " + std::to_string(i + 1) + " is missing its turn");
    }
}

FencePoset poset_from_word(const CrossingWord& w, unsigned k) {
    validate_word(w);
    if (w.empty()) return FencePoset();
    std::vector<Dir> dirs;
    std::vector<Label> labels;
    std::vector<Rational> weights;
    std::vector<ElementPair> pairs;
    const Rational lo(k), hi = k == 0 ? Rational(1) : Rational(1, k);
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) dirs.push_back(*w[i].turn == Turn::SharedRight ? Dir::Down : Dir::Up);
        if (k == 0) {
            labels.push_back(w[i].label);
            weights.emplace_back(1);
            continue;
        }
        Dir pair_dir = w[i].bias == Bias::NearRight ? Dir::Down : Dir::Up;
        dirs.push_back(pair_dir);
        labels.insert(labels.end(), 2, w[i].label);
        if (pair_dir == Dir::Up) {
            weights.push_back(lo);
            weights.push_back(hi);
        } else {
            weights.push_back(hi);
            weights.push_back(lo);
        }
        pairs.emplace_back(labels.size() - 1, labels.size());
    }
    FencePoset p(std::move(dirs));
    p.set_labels(std::move(labels));
    p.set_weights(std::move(weights));
    p.set_pairs(std::move(pairs));
    return p;
}

Integer arc_length(const CrossingWord& w, unsigned k) {
    FencePoset p = poset_from_word(w, k);
    Rational sum = weighted_ideal_sum(p);
    if (sum.get_den() != 1) throw InvariantViolation("weighted ideal sum is not an integer");
    Integer value = sum.get_num();
    if (!p.empty()) {
        Integer via_shape = cf_numerator(to_cf(shape_of(extend_poset(p, k))));
        if (via_shape != value) throw InvariantViolation("weighted sum disagrees with extended-shape numerator");
    }
    return value;
}

}  // namespace kmarkov
