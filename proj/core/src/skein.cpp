#include "kmarkov/skein.hpp"

#include <string>

namespace kmarkov {

namespace {

struct Strand {
    FencePoset poset;
    std::vector<ElementOrigin> origin;
};

Strand whole(const FencePoset& p, std::uint8_t source) {
    Strand s{p, {}};
    for (std::size_t i = 1; i <= p.size(); ++i) s.origin.push_back({source, i});
    return s;
}

Strand interval(const Strand& s, std::size_t a, std::size_t b) {
    Strand out{induced_interval(s.poset, a, b), {}};
    if (a <= b) out.origin.assign(s.origin.begin() + (a - 1), s.origin.begin() + b);
    return out;
}

Strand reversed(const Strand& s) { return {reverse_poset(s.poset), {s.origin.rbegin(), s.origin.rend()}}; }

Strand joined(const Strand& a, Dir rel, const Strand& b) {
    Strand out{join(a.poset, rel, b.poset), a.origin};
    out.origin.insert(out.origin.end(), b.origin.begin(), b.origin.end());
    return out;
}

Resolution assemble(Strand s3, Strand s4, Strand s5, Strand s6) {
    Resolution r;
    r.p3 = std::move(s3.poset);
    r.p4 = std::move(s4.poset);
    r.p5 = std::move(s5.poset);
    r.p6 = std::move(s6.poset);
    r.origins = {std::move(s3.origin), std::move(s4.origin), std::move(s5.origin), std::move(s6.origin)};
    return r;
}

bool on_top(const FencePoset& p, std::size_t c, std::size_t d) {
    return (c == 1 || p.direction(c - 1) == Dir::Up) && (d == p.size() || p.direction(d) == Dir::Down);
}

bool on_bottom(const FencePoset& p, std::size_t c, std::size_t d) {
    return (c == 1 || p.direction(c - 1) == Dir::Down) && (d == p.size() || p.direction(d) == Dir::Up);
}

bool same_interval(const FencePoset& p1, std::size_t c, const FencePoset& p2, std::size_t c2, std::size_t len) {
    for (std::size_t t = 0; t + 1 < len; ++t)
        if (p1.direction(c + t) != p2.direction(c2 + t)) return false;
    if (p1.labeled() && p2.labeled()) {
        for (std::size_t t = 0; t < len; ++t)
            if (p1.label(c + t) != p2.label(c2 + t)) return false;
    }
    return true;
}

}  // namespace

const FencePoset& Resolution::output(std::size_t i) const {
    switch (i) {
        case 3: return p3;
        case 4: return p4;
        case 5: return p5;
        case 6: return p6;
        default: throw ValidationError("resolution outputs are numbered 3..6");
    }
}

bool is_crossing_overlap(const FencePoset& p1, const FencePoset& p2, const CrossingOverlap& ov) {
    const std::size_t h1 = p1.size(), h2 = p2.size();
    if (ov.c < 1 || ov.c > ov.d || ov.d > h1) return false;
    if (ov.c2 < 1 || ov.c2 > ov.d2 || ov.d2 > h2) return false;
    if (ov.d - ov.c != ov.d2 - ov.c2) return false;
    if (ov.c == 1 && ov.c2 == 1) return false;
    if (ov.d == h1 && ov.d2 == h2) return false;
    if (!same_interval(p1, ov.c, p2, ov.c2, ov.d - ov.c + 1)) return false;
    return on_top(p1, ov.c, ov.d) && on_bottom(p2, ov.c2, ov.d2);
}

std::vector<CrossingOverlap> find_crossing_overlaps(const FencePoset& p1, const FencePoset& p2) {
    std::vector<CrossingOverlap> out;
    const std::size_t h1 = p1.size(), h2 = p2.size();
    for (std::size_t c = 1; c <= h1; ++c) {
        for (std::size_t d = c; d <= h1; ++d) {
            if (!on_top(p1, c, d)) continue;
            const std::size_t len = d - c + 1;
            for (std::size_t c2 = 1; c2 + len - 1 <= h2; ++c2) {
                CrossingOverlap ov{c, d, c2, c2 + len - 1};
                if (is_crossing_overlap(p1, p2, ov)) out.push_back(ov);
            }
        }
    }
    return out;
}

Resolution resolve_type0(const FencePoset& p1, const FencePoset& p2, const CrossingOverlap& ov) {
    if (!is_crossing_overlap(p1, p2, ov)) throw ValidationError("resolve_type0: not a crossing overlap");
    const std::size_t h1 = p1.size(), h2 = p2.size();
    const auto [c, d, c2, d2] = ov;
    const Strand s1 = whole(p1, 1), s2 = whole(p2, 2);

    Strand s3 = joined(interval(s1, 1, d), Dir::Up, interval(s2, d2 + 1, h2));
    Strand s4 = joined(interval(s2, 1, d2), Dir::Down, interval(s1, d + 1, h1));

    Strand s5;
    if (c > 1 && c2 > 1) {
        s5 = joined(interval(s1, 1, c - 1), Dir::Down, reversed(interval(s2, 1, c2 - 1)));
    } else if (c == 1) {
        std::size_t v = 0;
        for (std::size_t x = c2 - 1; x-- > 1;) {
            if (!p2.below(x, c2 - 1)) {
                v = x;
                break;
            }
        }
        s5 = interval(s2, 1, v);
    } else {
        std::size_t u = 0;
        for (std::size_t x = c - 1; x-- > 1;) {
            if (!p1.below(c - 1, x)) {
                u = x;
                break;
            }
        }
        s5 = interval(s1, 1, u);
    }

    Strand s6;
    if (d < h1 && d2 < h2) {
        s6 = joined(reversed(interval(s2, d2 + 1, h2)), Dir::Up, interval(s1, d + 1, h1));
    } else if (d == h1) {
        std::size_t v = h2 + 1;
        for (std::size_t x = d2 + 2; x <= h2; ++x) {
            if (!p2.below(x, d2 + 1)) {
                v = x;
                break;
            }
        }
        s6 = interval(s2, v, h2);
    } else {
        std::size_t u = h1 + 1;
        for (std::size_t x = d + 2; x <= h1; ++x) {
            if (!p1.below(d + 1, x)) {
                u = x;
                break;
            }
        }
        s6 = interval(s1, u, h1);
    }
    return assemble(std::move(s3), std::move(s4), std::move(s5), std::move(s6));
}

Resolution resolve_type1(const FencePoset& p1, const FencePoset& p2, std::size_t i) {
    if (p1.empty()) throw ValidationError("resolve_type1: P1 is empty");
    if (i < 1 || i >= p2.size()) throw ValidationError("resolve_type1: index must satisfy 1 <= i < |P2|");
    Strand s2 = whole(p2, 2);
    if (p2.direction(i) == Dir::Up) {
        s2 = reversed(s2);
        i = p2.size() - i;
    }
    const FencePoset& q2 = s2.poset;
    if (q2.direction(i) != Dir::Down) throw InvariantViolation("resolve_type1: relabeling failed");
    const std::size_t h2 = q2.size();
    const Strand s1 = whole(p1, 1);

    Strand s3 = joined(interval(s2, 1, i), Dir::Up, s1);
    std::size_t v = h2 + 1;
    for (std::size_t x = i + 1; x <= h2; ++x) {
        if (!q2.below(x, i)) {
            v = x;
            break;
        }
    }
    Strand s4 = interval(s2, v, h2);
    Strand s5 = joined(reversed(s1), Dir::Up, interval(s2, i + 1, h2));
    std::size_t u = 0;
    for (std::size_t x = i; x-- > 1;) {
        if (!q2.below(i, x)) {
            u = x;
            break;
        }
    }
    Strand s6 = interval(s2, 1, u);
    return assemble(std::move(s3), std::move(s4), std::move(s5), std::move(s6));
}

Resolution resolve_type2(const FencePoset& p1, const FencePoset& p2) {
    if (p1.empty() || p2.empty()) throw ValidationError("resolve_type2: inputs must be non-empty");
    const std::size_t h1 = p1.size(), h2 = p2.size();
    const Strand s1 = whole(p1, 1), s2 = whole(p2, 2);
    Strand s3 = joined(reversed(s2), Dir::Up, s1);
    std::size_t v = h1 + 1;
    for (std::size_t x = 2; x <= h1; ++x) {
        if (!p1.below(x, 1)) {
            v = x;
            break;
        }
    }
    std::size_t u = h2 + 1;
    for (std::size_t x = 2; x <= h2; ++x) {
        if (!p2.below(1, x)) {
            u = x;
            break;
        }
    }
    return assemble(std::move(s3), Strand{}, interval(s1, v, h1), interval(s2, u, h2));
}

IdentityCheck verify_resolution_identity(const FencePoset& p1, const FencePoset& p2, const Resolution& res,
                                         CountMode mode) {
    auto count = [mode](const FencePoset& p) -> Integer {
        if (mode == CountMode::Enumeration) return Integer(static_cast<unsigned long>(ideals_enumerate_count(p)));
        return ideal_count(p);
    };
    IdentityCheck out;
    out.counts = {count(p1), count(p2), count(res.p3), count(res.p4), count(res.p5), count(res.p6)};
    out.lhs = out.counts[0] * out.counts[1];
    out.rhs = out.counts[2] * out.counts[3] + out.counts[4] * out.counts[5];
    out.equal = out.lhs == out.rhs;
    return out;
}

bool resolution_is_splice(const FencePoset& p1, const FencePoset& p2, const Resolution& res, std::size_t max_new) {
    for (std::size_t o = 0; o < 4; ++o) {
        const FencePoset& out = res.output(o + 3);
        const auto& origin = res.origins[o];
        if (origin.size() != out.size()) return false;
        std::size_t fresh = 0;
        for (std::size_t t = 1; t < out.size(); ++t) {
            const ElementOrigin& a = origin[t - 1];
            const ElementOrigin& b = origin[t];
            const FencePoset& src = a.source == 1 ? p1 : p2;
            if (a.source == b.source && b.index == a.index + 1) {
                if (out.direction(t) != src.direction(a.index)) return false;
            } else if (a.source == b.source && a.index == b.index + 1) {
                if (out.direction(t) != flip(src.direction(b.index))) return false;
            } else {
                ++fresh;
            }
        }
        if (fresh > max_new) return false;
    }
    return true;
}

}  // namespace kmarkov
