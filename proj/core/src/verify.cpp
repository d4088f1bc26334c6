#include "kmarkov/verify.hpp"

#include <numeric>
#include <optional>
#include <sstream>

#include "kmarkov/lattice.hpp"
#include "kmarkov/markov.hpp"
#include "kmarkov/parallel.hpp"

namespace kmarkov {

namespace {

constexpr std::size_t kMaxSamples = 8;

struct Outcome {
    std::uint64_t checked = 0;
    std::optional<std::string> failure;
};

SweepResult merge(std::string name, const std::vector<Outcome>& outcomes) {
    SweepResult r;
    r.name = std::move(name);
    for (const auto& o : outcomes) {
        r.checked += o.checked;
        if (o.failure) {
            ++r.failures;
            if (r.samples.size() < kMaxSamples) r.samples.push_back(*o.failure);
        }
    }
    return r;
}

std::string dirs_str(const FencePoset& p) {
    std::string s = "h=" + std::to_string(p.size()) + " ";
    for (Dir d : p.directions()) s += to_char(d);
    return s;
}

std::string seq_str(const CFSequence& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + to_string(s[i]);
    return out + "]";
}

std::string vec_str(long x, long y) { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::vector<std::pair<long, long>> box_vectors(long radius) {
    std::vector<std::pair<long, long>> out;
    for (long x = -radius; x <= radius; ++x)
        for (long y = -radius; y <= radius; ++y)
            if (x != 0 || y != 0) out.emplace_back(x, y);
    return out;
}

std::vector<Fraction> positive_fractions(std::size_t q_max) {
    std::vector<Fraction> out;
    for (auto& f : reduced_fractions(q_max))
        if (f.p > 0) out.push_back(f);
    return out;
}

}  // namespace

Rational weighted_sum_by_enumeration(const FencePoset& p) {
    Rational total = 0;
    for (const auto& ideal : ideals_enumerate(p)) {
        Rational prod = 1;
        for (std::size_t i : ideal) prod *= p.weight(i);
        total += prod;
    }
    return total;
}

bool near_palindromic(const Shape& s, unsigned k) {
    const std::size_t n = s.size();
    if (n == 0 || n % 2 != 0) return false;
    for (std::size_t i = 0; i + 1 < n / 2; ++i)
        if (s[i] != s[n - 1 - i]) return false;
    std::size_t a = s[n / 2 - 1], b = s[n / 2];
    return (a > b ? a - b : b - a) == k;
}

bool near_palindromic_somewhere(const FencePoset& p, unsigned k) {
    if (p.empty()) return false;
    const FencePoset dual = dual_poset(p);
    for (const FencePoset* q : {&p, &dual}) {
        if (near_palindromic(shape_of(*q), k) || near_palindromic(shape_of(reverse_poset(*q)), k)) return true;
    }
    return false;
}

SweepResult sweep_ideal_exhaustive(std::size_t max_h) {
    if (max_h > kEnumerationLimit) throw ValidationError("sweep_ideal_exhaustive: max_h too large");
    std::vector<Outcome> out;
    out.push_back({1, ideal_count(FencePoset()) == 1 && ideals_enumerate_count(FencePoset()) == 1
                          ? std::nullopt
                          : std::optional<std::string>("empty poset")});
    for (std::size_t h = 1; h <= max_h; ++h) {
        Outcome o;
        const std::uint64_t patterns = std::uint64_t{1} << (h - 1);
        for (std::uint64_t bits = 0; bits < patterns; ++bits) {
            std::vector<Dir> dirs(h - 1);
            for (std::size_t i = 0; i + 1 < h; ++i) dirs[i] = ((bits >> i) & 1U) ? Dir::Down : Dir::Up;
            FencePoset p(std::move(dirs));
            ++o.checked;
            Integer dp = ideal_count(p);
            if (dp != static_cast<unsigned long>(ideals_enumerate_count(p)) && !o.failure)
                o.failure = "DP != enumeration for " + dirs_str(p);
            if (dp != cf_numerator(to_cf(shape_of(p))) && !o.failure)
                o.failure = "DP != shape numerator for " + dirs_str(p);
        }
        out.push_back(std::move(o));
    }
    return merge("ideal_count vs enumeration (exhaustive, h <= " + std::to_string(max_h) + ")", out);
}

SweepResult sweep_ideal_random(std::uint64_t seed, std::size_t samples, std::size_t min_h, std::size_t max_h,
                               unsigned jobs) {
    auto out = parallel_map(samples, jobs, [&](std::size_t i) {
        auto rng = task_rng(seed, i);
        FencePoset p = random_fence_poset(rng, uniform(rng, min_h, max_h));
        std::vector<Rational> w(p.size());
        for (auto& x : w) x = Rational(static_cast<long>(uniform(rng, 1, 5)), static_cast<long>(uniform(rng, 1, 5)));
        p.set_weights(std::move(w));
        Outcome o{1, std::nullopt};
        Rational dp = weighted_ideal_sum(p);
        Rational en = weighted_sum_by_enumeration(p);
        if (dp != en) o.failure = "weighted DP " + to_string(dp) + " != enumeration " + to_string(en) + " for " + dirs_str(p);
        return o;
    });
    return merge("weighted sum vs enumeration (random, h in [" + std::to_string(min_h) + "," + std::to_string(max_h) +
                     "])",
                 out);
}

SweepResult sweep_numerator_skein(std::uint64_t seed, long max_value, std::size_t max_mu_len, unsigned jobs) {
    const std::size_t side = static_cast<std::size_t>(max_value + 1);
    auto out = parallel_map(side * side * side, jobs, [&](std::size_t idx) {
        long a = static_cast<long>(idx / (side * side));
        long c = static_cast<long>((idx / side) % side);
        long b = static_cast<long>(idx % side);
        auto rng = task_rng(seed, idx);
        auto random_mu = [&] {
            CFSequence mu(uniform(rng, 0, max_mu_len));
            for (auto& x : mu) x = static_cast<unsigned long>(uniform(rng, 0, 10));
            return mu;
        };
        CFSequence mu1 = random_mu(), mu2 = random_mu();
        Outcome o;
        for (auto variant : {SkeinVariant::Collapse, SkeinVariant::Shift}) {
            ++o.checked;
            SkeinCheck chk = cf_skein_check(mu1, a, c, b, mu2, variant);
            if (!chk.equal && !o.failure) {
                std::ostringstream msg;
                msg << (variant == SkeinVariant::Collapse ? "collapse" : "shift") << " mu1=" << seq_str(mu1) << " a=" << a
                    << " c=" << c << " b=" << b << " mu2=" << seq_str(mu2) << ": " << chk.lhs << " != " << chk.rhs;
                o.failure = msg.str();
            }
        }
        return o;
    });
    return merge("numerator skein identities (a,b,c in [0," + std::to_string(max_value) + "])", out);
}

SweepResult sweep_resolutions(int type, std::uint64_t seed, std::size_t samples, std::size_t max_h, CountMode mode,
                              unsigned jobs) {
    if (type < 0 || type > 2) throw ValidationError("resolution type must be 0, 1 or 2");
    if (max_h < 2) throw ValidationError("sweep_resolutions: max_h must be >= 2");
    auto out = parallel_map(samples, jobs, [&](std::size_t idx) {
        auto rng = task_rng(seed ^ static_cast<std::uint64_t>(type) * 0x9e3779b97f4a7c15ULL, idx);
        FencePoset p1, p2;
        Resolution res;
        std::string where;
        for (;;) {
            p1 = random_fence_poset(rng, uniform(rng, 1, max_h));
            p2 = random_fence_poset(rng, uniform(rng, type == 1 ? 2 : 1, max_h));
            if (type == 0) {
                auto ovs = find_crossing_overlaps(p1, p2);
                if (ovs.empty()) continue;
                const auto& ov = ovs[uniform(rng, 0, ovs.size() - 1)];
                res = resolve_type0(p1, p2, ov);
                where = " overlap=(" + std::to_string(ov.c) + "," + std::to_string(ov.d) + "," +
                        std::to_string(ov.c2) + "," + std::to_string(ov.d2) + ")";
            } else if (type == 1) {
                std::size_t i = uniform(rng, 1, p2.size() - 1);
                res = resolve_type1(p1, p2, i);
                where = " i=" + std::to_string(i);
            } else {
                res = resolve_type2(p1, p2);
            }
            break;
        }
        Outcome o{1, std::nullopt};
        IdentityCheck chk = verify_resolution_identity(p1, p2, res, mode);
        if (!chk.equal)
            o.failure = "P1 " + dirs_str(p1) + ", P2 " + dirs_str(p2) + where + ": " + to_string(chk.lhs) +
                        " != " + to_string(chk.rhs);
        else if (!resolution_is_splice(p1, p2, res))
            o.failure = "P1 " + dirs_str(p1) + ", P2 " + dirs_str(p2) + where + ": output is not a splice";
        return o;
    });
    return merge("type " + std::to_string(type) + " resolution identity (h <= " + std::to_string(max_h) + ")", out);
}

SweepResult sweep_tree_vs_poset(unsigned k, std::size_t q_max, unsigned jobs) {
    auto fr = reduced_fractions(q_max);
    auto out = parallel_map(fr.size(), jobs, [&](std::size_t i) {
        Outcome o{1, std::nullopt};
        Integer t = markov_number(k, fr[i], Method::Tree);
        Integer p = markov_number(k, fr[i], Method::Poset);
        if (t != p) o.failure = "k=" + std::to_string(k) + " r=" + fr[i].str() + ": tree " + to_string(t) + " != poset " + to_string(p);
        return o;
    });
    return merge("tree vs poset, k=" + std::to_string(k) + ", q <= " + std::to_string(q_max), out);
}

SweepResult sweep_weighted_extension(unsigned k, std::size_t q_max, unsigned jobs) {
    auto fr = positive_fractions(q_max);
    auto out = parallel_map(fr.size(), jobs, [&](std::size_t i) {
        Outcome o;
        for (Side side : {Side::Left, Side::Right}) {
            ++o.checked;
            FencePoset p = poset_from_word(crossing_word_segment({0, 0}, {fr[i].q, fr[i].p}, side), k);
            FencePoset ext = extend_poset(p, k);
            const std::size_t pairs = p.pairs().size();
            const std::size_t expected_size = p.size() - 2 * pairs + (k + 1) * pairs;
            if (!is_balanced(p) && !o.failure) o.failure = "r=" + fr[i].str() + ": compiled poset is not balanced";
            if (weighted_ideal_sum(p) != Rational(ideal_count(ext)) && !o.failure)
                o.failure = "r=" + fr[i].str() + ": W(P) != W(P^ex)";
            if (ext.size() != expected_size && !o.failure) o.failure = "r=" + fr[i].str() + ": size law fails";
        }
        return o;
    });
    return merge("weighted sum equals extended count, k=" + std::to_string(k), out);
}

SweepResult sweep_near_palindromic(unsigned k, std::size_t q_max, unsigned jobs) {
    auto fr = positive_fractions(q_max);
    auto out = parallel_map(fr.size(), jobs, [&](std::size_t i) {
        Outcome o{1, std::nullopt};
        FencePoset ext = extend_poset(poset_from_word(crossing_word_segment({0, 0}, {fr[i].q, fr[i].p}, Side::Left), k), k);
        if (!near_palindromic_somewhere(ext, k)) o.failure = "r=" + fr[i].str() + ": no near-palindromic labeling";
        return o;
    });
    return merge("near-palindromic extended shape, k=" + std::to_string(k), out);
}

SweepResult sweep_left_right(unsigned k, long radius, unsigned jobs) {
    auto vecs = box_vectors(radius);
    auto out = parallel_map(vecs.size(), jobs, [&](std::size_t i) {
        Outcome o{1, std::nullopt};
        LatticePoint a{0, 0}, b{vecs[i].first, vecs[i].second};
        FencePoset left = extend_poset(poset_from_word(crossing_word_segment(a, b, Side::Left), k), k);
        FencePoset right = extend_poset(poset_from_word(crossing_word_segment(a, b, Side::Right), k), k);
        if (left != reverse_poset(right))
            o.failure = "B-A=" + vec_str(vecs[i].first, vecs[i].second) + ": left and reversed right differ";
        else if (markov_distance(k, a, b, Side::Left) != markov_distance(k, a, b, Side::Right))
            o.failure = "B-A=" + vec_str(vecs[i].first, vecs[i].second) + ": left and right lengths differ";
        return o;
    });
    return merge("left/right reversal equality, k=" + std::to_string(k), out);
}

SweepResult sweep_translation(unsigned k, long radius, unsigned jobs) {
    static const std::vector<std::pair<long, long>> shifts{{1, 0}, {0, 1}, {-3, 7}, {12, -5}, {1000003, -999983}};
    auto vecs = box_vectors(radius);
    auto out = parallel_map(vecs.size(), jobs, [&](std::size_t i) {
        Outcome o;
        LatticePoint a{0, 0}, b{vecs[i].first, vecs[i].second};
        CrossingWord base = crossing_word_segment(a, b, Side::Left);
        Integer len = arc_length(base, k);
        for (const auto& [sx, sy] : shifts) {
            ++o.checked;
            LatticePoint v{sx, sy};
            if (crossing_word_segment(a + v, b + v, Side::Left) != base || markov_distance(k, a + v, b + v) != len) {
                if (!o.failure)
                    o.failure = "B-A=" + vec_str(vecs[i].first, vecs[i].second) + " shift " + vec_str(sx, sy) +
                                " changes the arc";
            }
        }
        return o;
    });
    return merge("translation invariance, k=" + std::to_string(k), out);
}

}  // namespace kmarkov
