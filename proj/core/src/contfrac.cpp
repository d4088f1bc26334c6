#include "kmarkov/contfrac.hpp"

#include <initializer_list>

namespace kmarkov {

namespace {

CFSequence splice(const CFSequence& mu1, std::initializer_list<Integer> mid, const CFSequence& mu2) {
    CFSequence out;
    out.reserve(mu1.size() + mid.size() + mu2.size());
    out.insert(out.end(), mu1.begin(), mu1.end());
    out.insert(out.end(), mid.begin(), mid.end());
    out.insert(out.end(), mu2.begin(), mu2.end());
    return out;
}

}  // namespace

bool cf_admissible(const CFSequence& seq) {
    for (const auto& a : seq)
        if (a < 0) return false;
    return true;
}

bool cf_admissible_shape(const CFSequence& seq) {
    if (seq.empty()) return false;
    for (const auto& a : seq)
        if (a < 1) return false;
    return seq.back() >= 2;
}

CFMatrix cf_matrix(const CFSequence& seq) {
    // Right-multiplying by [[a,1],[1,0]] maps columns (c0, c1) to (a*c0 + c1, c0).
    CFMatrix m;
    Integer t;
    for (const auto& a : seq) {
        t = a * m.p + m.r;
        m.r = m.p;
        m.p = t;
        t = a * m.q + m.s;
        m.s = m.q;
        m.q = t;
    }
    return m;
}

ExactFraction cf_eval(const CFSequence& seq) {
    if (seq.empty()) throw ValidationError("cf_eval: empty sequence");
    CFMatrix m = cf_matrix(seq);
    return {m.p, m.q};
}

Integer cf_numerator(const CFSequence& seq) {
    Integer p0 = 1, p1 = 0, t;
    for (const auto& a : seq) {
        t = a * p0 + p1;
        p1 = p0;
        p0 = t;
    }
    return p0;
}

SkeinCheck cf_skein_check(const CFSequence& mu1, const Integer& a, const Integer& c, const Integer& b,
                          const CFSequence& mu2, SkeinVariant variant) {
    if (a < 0 || b < 0 || c < 0) throw ValidationError("cf_skein_check: a, b, c must be >= 0");
    SkeinCheck out;
    if (variant == SkeinVariant::Collapse) {
        out.lhs = cf_numerator(splice(mu1, {a, c, b}, mu2));
        out.rhs = cf_numerator(splice(mu1, {a + c + b}, mu2)) +
                  c * cf_numerator(splice(mu1, {a - 1, 1, b - 1}, mu2));
    } else {
        out.lhs = cf_numerator(splice(mu1, {a, c + 1, b}, mu2));
        out.rhs = cf_numerator(splice(mu1, {a, 1, b + c}, mu2)) +
                  c * cf_numerator(splice(mu1, {a - 1, 1, b - 2}, mu2));
    }
    out.equal = out.lhs == out.rhs;
    return out;
}

}  // namespace kmarkov
