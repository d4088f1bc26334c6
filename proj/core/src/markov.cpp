#include "kmarkov/markov.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "kmarkov/parallel.hpp"

namespace kmarkov {

bool k_markov_check(const Integer& a, const Integer& b, const Integer& c, unsigned k) {
    Integer lhs = a * a + b * b + c * c + k * (a * b + a * c + b * c);
    Integer rhs = (3 + 3 * static_cast<unsigned long>(k)) * a * b * c;
    return lhs == rhs;
}

MarkovTriple markov_root(unsigned k) { return {1, Integer(k) + 2, 1, k}; }

FareyTriple farey_root() { return {{0, 1}, {1, 1}, {1, 0}}; }

namespace {

Integer exact_div(const Integer& num, const Integer& den) {
    if (den == 0) throw InvariantViolation("Vieta step divides by zero");
    Integer q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw InvariantViolation("Vieta step is not an exact division");
    return q;
}

Integer vieta_numerator(const Integer& x, const Integer& y, unsigned k) { return x * x + k * x * y + y * y; }

}  // namespace

MarkovTriple vieta_step(const MarkovTriple& t, Step child) {
    if (child == Step::L) return {t.b, exact_div(vieta_numerator(t.b, t.c, t.k), t.a), t.c, t.k};
    return {t.a, exact_div(vieta_numerator(t.a, t.b, t.k), t.c), t.b, t.k};
}

FareyTriple farey_step(const FareyTriple& t, Step child) {
    if (child == Step::L) return {t.mid, mediant(t.mid, t.right), t.right};
    return {t.left, mediant(t.left, t.mid), t.mid};
}

MarkovTriple vieta_flip_middle(const MarkovTriple& t) {
    return {t.a, exact_div(vieta_numerator(t.a, t.c, t.k), t.b), t.c, t.k};
}

MarkovTriple tree_node(unsigned k, const TreePath& path) {
    MarkovTriple t = markov_root(k);
    if (path.origin == PathOrigin::UnitSubtree) t = vieta_step(t, Step::R);
    for (Step s : path.steps) t = vieta_step(t, s);
    return t;
}

FareyTriple farey_node(const TreePath& path) {
    FareyTriple t = farey_root();
    if (path.origin == PathOrigin::UnitSubtree) t = farey_step(t, Step::R);
    for (Step s : path.steps) t = farey_step(t, s);
    return t;
}

TreePath farey_path(const Fraction& r) {
    if (r.q <= 0 || r.p <= 0 || r.p >= r.q) throw ValidationError("farey_path: need 0 < r < 1");
    if (!r.reduced()) throw ValidationError("farey_path: fraction must be reduced");
    TreePath path{PathOrigin::UnitSubtree, {}};
    FareyTriple t = farey_step(farey_root(), Step::R);
    for (;;) {
        int c = compare(r, t.mid);
        if (c == 0) return path;
        Step s = c > 0 ? Step::L : Step::R;
        path.steps.push_back(s);
        t = farey_step(t, s);
    }
}

namespace {

void check_unit_interval(const Fraction& r) {
    if (r.q <= 0 || r.p < 0 || r.p > r.q) throw ValidationError("rational index must lie in [0,1]: " + r.str());
    if (!r.reduced()) throw ValidationError("rational index must be reduced: " + r.str());
}

Integer by_tree(unsigned k, const Fraction& r) {
    if (r.p == 0) return 1;
    if (r.p == r.q) return Integer(k) + 2;
    return tree_node(k, farey_path(r)).b;
}

Integer by_poset(unsigned k, const Fraction& r) {
    return arc_length(crossing_word_segment({0, 0}, {r.q, r.p}, Side::Left), k);
}

}  // namespace

Integer markov_number(unsigned k, const Fraction& r, Method method) {
    check_unit_interval(r);
    switch (method) {
        case Method::Tree: return by_tree(k, r);
        case Method::Poset: return by_poset(k, r);
        case Method::Both: {
            Integer t = by_tree(k, r);
            Integer p = by_poset(k, r);
            if (t != p)
                throw InvariantViolation("tree and poset disagree at k=" + std::to_string(k) + ", r=" + r.str() +
                                         ": " + to_string(t) + " vs " + to_string(p));
            return t;
        }
    }
    throw ValidationError("unknown method");
}

Integer markov_distance(unsigned k, const LatticePoint& a, const LatticePoint& b, Side side) {
    if (a == b) return 0;
    return arc_length(crossing_word_segment(a, b, side), k);
}

std::vector<TreeEntry> tree_levels(unsigned k, std::size_t max_depth) {
    std::vector<TreeEntry> out;
    if (max_depth == 0) return out;
    std::vector<TreeEntry> level{{1, {PathOrigin::FullRoot, {Step::R}}, farey_step(farey_root(), Step::R),
                                  vieta_step(markov_root(k), Step::R)}};
    for (std::size_t depth = 1; depth <= max_depth; ++depth) {
        out.insert(out.end(), level.begin(), level.end());
        if (depth == max_depth) break;
        std::vector<TreeEntry> next;
        next.reserve(level.size() * 2);
        // Right children hold the smaller values, so this keeps each level sorted.
        for (const auto& e : level) {
            for (Step s : {Step::R, Step::L}) {
                TreeEntry c{depth + 1, e.path, farey_step(e.farey, s), vieta_step(e.triple, s)};
                c.path.steps.push_back(s);
                next.push_back(std::move(c));
            }
        }
        level = std::move(next);
    }
    return out;
}

std::vector<Fraction> reduced_fractions(std::size_t q_max) {
    std::vector<Fraction> out;
    for (std::size_t q = 1; q <= q_max; ++q)
        for (std::size_t p = 0; p <= q; ++p)
            if (std::gcd(p, q) == 1) out.push_back({Integer(static_cast<unsigned long>(p)), Integer(static_cast<unsigned long>(q))});
    return out;
}

std::vector<TableRow> markov_table(unsigned k, std::size_t q_max, Method method, unsigned jobs) {
    std::vector<Fraction> fr = reduced_fractions(q_max);
    auto values = parallel_map(fr.size(), jobs, [&](std::size_t i) { return markov_number(k, fr[i], method); });
    std::vector<TableRow> out;
    out.reserve(fr.size());
    for (std::size_t i = 0; i < fr.size(); ++i) out.push_back({fr[i], std::move(values[i])});
    return out;
}

namespace {

int orientation(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
    Integer v = (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x);
    return sgn(v);
}

// +1 / -1 if strictly convex counter-clockwise / clockwise in this order, 0 otherwise.
int convex_sign(const std::array<LatticePoint, 4>& v) {
    int s = orientation(v[0], v[1], v[2]);
    if (s == 0) return 0;
    for (std::size_t i = 1; i < 4; ++i)
        if (orientation(v[i], v[(i + 1) % 4], v[(i + 2) % 4]) != s) return 0;
    return s;
}

PtolemyCheck make_check(const std::array<LatticePoint, 4>& v, const Integer& ac, const Integer& bd, const Integer& ab,
                        const Integer& cd, const Integer& ad, const Integer& bc) {
    PtolemyCheck out{v, ac * bd, ab * cd + ad * bc};
    out.holds = out.lhs >= out.rhs;
    out.tight = out.lhs == out.rhs;
    return out;
}

}  // namespace

PtolemyCheck verify_ptolemy(unsigned k, const LatticePoint& a, const LatticePoint& b, const LatticePoint& c,
                            const LatticePoint& d) {
    std::array<LatticePoint, 4> v{a, b, c, d};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (v[i] == v[j]) throw ValidationError("Ptolemy: vertices must be distinct");
    if (convex_sign(v) == 0) throw ValidationError("Ptolemy: ABCD is not a strictly convex quadrilateral in this order");
    return make_check(v, markov_distance(k, a, c), markov_distance(k, b, d), markov_distance(k, a, b),
                      markov_distance(k, c, d), markov_distance(k, a, d), markov_distance(k, b, c));
}

PtolemyReport verify_ptolemy_sweep(unsigned k, long lo, long hi, unsigned jobs) {
    if (hi < lo) throw ValidationError("Ptolemy sweep: empty coordinate box");
    std::vector<LatticePoint> pts;
    for (long x = lo; x <= hi; ++x)
        for (long y = lo; y <= hi; ++y) pts.push_back({x, y});
    const std::size_t n = pts.size();

    auto dist = parallel_map(n * n, jobs, [&](std::size_t idx) {
        return markov_distance(k, pts[idx / n], pts[idx % n]);
    });
    auto d = [&](std::size_t i, std::size_t j) -> const Integer& { return dist[i * n + j]; };

    PtolemyReport rep;
    rep.k = k;
    rep.lo = lo;
    rep.hi = hi;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t l = j + 1; l < n; ++l)
                for (std::size_t m = l + 1; m < n; ++m) {
                    // pts is lexicographic, so pts[i] is a hull vertex; order the rest by angle around it.
                    std::array<std::size_t, 3> rest{j, l, m};
                    if (orientation(pts[i], pts[j], pts[l]) == 0 || orientation(pts[i], pts[j], pts[m]) == 0 ||
                        orientation(pts[i], pts[l], pts[m]) == 0)
                        continue;
                    std::sort(rest.begin(), rest.end(),
                              [&](std::size_t a, std::size_t b) { return orientation(pts[i], pts[a], pts[b]) > 0; });
                    std::array<std::size_t, 4> id{i, rest[0], rest[1], rest[2]};
                    std::array<LatticePoint, 4> v{pts[id[0]], pts[id[1]], pts[id[2]], pts[id[3]]};
                    if (convex_sign(v) <= 0) continue;
                    ++rep.quadrilaterals;
                    PtolemyCheck c = make_check(v, d(id[0], id[2]), d(id[1], id[3]), d(id[0], id[1]),
                                                d(id[2], id[3]), d(id[0], id[3]), d(id[1], id[2]));
                    if (c.tight) ++rep.tight;
                    if (!c.holds) rep.violations.push_back(std::move(c));
                }
    return rep;
}

const char* to_string(AignerFamily f) {
    switch (f) {
        case AignerFamily::FixedNumerator: return "fixed-numerator";
        case AignerFamily::FixedDenominator: return "fixed-denominator";
        case AignerFamily::FixedSum: return "fixed-sum";
    }
    return "?";
}

AignerReport verify_aigner(unsigned k, std::size_t q_max, unsigned jobs) {
    if (q_max < 2) throw ValidationError("verify_aigner: q_max must be >= 2");
    std::map<std::pair<std::size_t, std::size_t>, Integer> m;
    for (auto& row : markov_table(k, q_max, Method::Tree, jobs))
        m.emplace(std::make_pair(row.r.p.get_ui(), row.r.q.get_ui()), std::move(row.value));

    AignerReport rep;
    rep.k = k;
    rep.q_max = q_max;
    auto check = [&](AignerFamily fam, std::size_t p, std::size_t q, std::size_t p2, std::size_t q2) {
        ++rep.checked[static_cast<std::size_t>(fam)];
        const Integer& a = m.at({p, q});
        const Integer& b = m.at({p2, q2});
        if (!(a < b)) {
            rep.violations.push_back({fam,
                                      {Integer(static_cast<unsigned long>(p)), Integer(static_cast<unsigned long>(q))},
                                      {Integer(static_cast<unsigned long>(p2)), Integer(static_cast<unsigned long>(q2))},
                                      a, b});
        }
    };
    for (std::size_t q = 1; q <= q_max; ++q) {
        for (std::size_t p = 1; p <= q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            for (std::size_t q2 = q + 1; q2 <= q_max; ++q2)
                if (std::gcd(p, q2) == 1) check(AignerFamily::FixedNumerator, p, q, p, q2);
            for (std::size_t p2 = p + 1; p2 < q; ++p2)
                if (std::gcd(p2, q) == 1) check(AignerFamily::FixedDenominator, p, q, p2, q);
            for (std::size_t i = 1; i < p && q + i <= q_max; ++i)
                if (std::gcd(p - i, q + i) == 1) check(AignerFamily::FixedSum, p, q, p - i, q + i);
        }
    }
    return rep;
}

bool RecurrenceReport::passed() const {
    return std::all_of(rows.begin(), rows.end(), [](const RecurrenceRow& r) { return r.holds; });
}

RecurrenceReport verify_recurrences(unsigned k, std::size_t n_max, Method method) {
    if (k > 1) throw ValidationError("verify_recurrences: only k = 0 and k = 1 have stated recurrences");
    if (n_max < 3) throw ValidationError("verify_recurrences: n_max must be >= 3");
    std::vector<Integer> m(n_max + 1);
    for (std::size_t n = 1; n <= n_max; ++n) m[n] = markov_number(k, {1, Integer(static_cast<unsigned long>(n))}, method);
    RecurrenceReport rep;
    rep.k = k;
    rep.n_max = n_max;
    for (std::size_t n = 3; n <= n_max; ++n) {
        Integer pred = k == 0 ? Integer(3 * m[n - 1] - m[n - 2]) : Integer(5 * m[n - 1] - m[n - 2] - 1);
        rep.rows.push_back({n, pred, m[n], pred == m[n]});
    }
    return rep;
}

std::vector<Collision> find_collisions(unsigned k, std::size_t q_max, unsigned jobs) {
    std::map<Integer, std::vector<Fraction>> by_value;
    for (auto& row : markov_table(k, q_max, Method::Tree, jobs)) by_value[row.value].push_back(row.r);
    std::vector<Collision> out;
    for (auto& [value, fr] : by_value)
        if (fr.size() > 1) out.push_back({value, fr});
    return out;
}

OrderComparison compare_orders(unsigned k, unsigned k2, std::size_t q_max, unsigned jobs) {
    auto t1 = markov_table(k, q_max, Method::Tree, jobs);
    auto t2 = markov_table(k2, q_max, Method::Tree, jobs);
    OrderComparison rep;
    rep.k = k;
    rep.k2 = k2;
    rep.q_max = q_max;
    rep.fractions = t1.size();
    for (std::size_t i = 0; i < t1.size(); ++i) {
        for (std::size_t j = i + 1; j < t1.size(); ++j) {
            ++rep.pairs;
            int s1 = sgn(Integer(t1[i].value - t1[j].value));
            int s2 = sgn(Integer(t2[i].value - t2[j].value));
            if (s1 * s2 < 0)
                rep.discordant.push_back({t1[i].r, t1[j].r, t1[i].value, t1[j].value, t2[i].value, t2[j].value});
        }
    }
    rep.collisions_k = find_collisions(k, q_max, jobs);
    rep.collisions_k2 = find_collisions(k2, q_max, jobs);
    return rep;
}

}  // namespace kmarkov
