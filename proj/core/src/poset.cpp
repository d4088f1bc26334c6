#include "kmarkov/poset.hpp"

#include <algorithm>
#include <string>

namespace kmarkov {

char to_char(Dir d) { return d == Dir::Up ? 'U' : 'D'; }

char to_char(Label l) {
    switch (l) {
        case Label::X: return 'x';
        case Label::Y: return 'y';
        case Label::Z: return 'z';
    }
    return '?';
}

Label label_from_char(char c) {
    switch (c) {
        case 'x': return Label::X;
        case 'y': return Label::Y;
        case 'z': return Label::Z;
        default: throw ValidationError(std::string("unknown label '") + c + "'");
    }
}

CFSequence to_cf(const Shape& s) {
    CFSequence out;
    out.reserve(s.size());
    for (auto a : s) out.emplace_back(static_cast<unsigned long>(a));
    return out;
}

FencePoset::FencePoset(std::vector<Dir> dirs)
    : h_(dirs.size() + 1), dirs_(std::move(dirs)), weights_(h_, Rational(1)) {}

FencePoset FencePoset::singleton() { return FencePoset(std::vector<Dir>{}); }

Dir FencePoset::direction(std::size_t i) const {
    if (i < 1 || i >= h_) throw ValidationError("direction index out of range");
    return dirs_[i - 1];
}

const std::vector<Label>& FencePoset::labels() const {
    if (!labels_) throw ValidationError("poset is unlabeled");
    return *labels_;
}

Label FencePoset::label(std::size_t i) const {
    if (i < 1 || i > h_) throw ValidationError("label index out of range");
    return labels()[i - 1];
}

void FencePoset::set_labels(std::vector<Label> labels) {
    if (labels.size() != h_) throw ValidationError("label count does not match poset size");
    labels_ = std::move(labels);
}

const Rational& FencePoset::weight(std::size_t i) const {
    if (i < 1 || i > h_) throw ValidationError("weight index out of range");
    return weights_[i - 1];
}

void FencePoset::set_weights(std::vector<Rational> weights) {
    if (weights.size() != h_) throw ValidationError("weight count does not match poset size");
    for (auto& w : weights) {
        w.canonicalize();
        if (w <= 0) throw ValidationError("weights must be positive");
    }
    weights_ = std::move(weights);
}

bool FencePoset::unit_weights() const {
    return std::all_of(weights_.begin(), weights_.end(), [](const Rational& w) { return w == 1; });
}

void FencePoset::set_pairs(std::vector<ElementPair> pairs) {
    std::sort(pairs.begin(), pairs.end());
    std::size_t last = 0;
    for (const auto& [i, j] : pairs) {
        if (i < 1 || j != i + 1 || j > h_) throw ValidationError("pairs must be adjacent in-range (i, i+1)");
        if (i <= last) throw ValidationError("pairs overlap");
        last = j;
    }
    pairs_ = std::move(pairs);
}

bool FencePoset::below(std::size_t i, std::size_t j) const {
    if (i < 1 || j < 1 || i > h_ || j > h_) throw ValidationError("element index out of range");
    if (i == j) return false;
    if (i < j) {
        for (std::size_t t = i; t < j; ++t)
            if (dirs_[t - 1] != Dir::Up) return false;
        return true;
    }
    for (std::size_t t = j; t < i; ++t)
        if (dirs_[t - 1] != Dir::Down) return false;
    return true;
}

bool FencePoset::operator==(const FencePoset& o) const {
    return h_ == o.h_ && dirs_ == o.dirs_ && labels_ == o.labels_ && weights_ == o.weights_ &&
           pairs_ == o.pairs_;
}

bool valid_shape(const Shape& s) {
    if (s.empty()) return false;
    for (auto a : s)
        if (a < 1) return false;
    return s.back() >= 2;
}

FencePoset poset_from_shape(const Shape& s) {
    if (!valid_shape(s)) throw ValidationError("invalid shape");
    std::vector<Dir> dirs;
    if (s.size() == 1) {
        dirs.assign(s[0] - 2, Dir::Up);
        return FencePoset(std::move(dirs));
    }
    Dir d = Dir::Up;
    for (std::size_t i = 0; i < s.size(); ++i) {
        std::size_t run = s[i];
        if (i == 0 || i + 1 == s.size()) run -= 1;
        dirs.insert(dirs.end(), run, d);
        d = flip(d);
    }
    return FencePoset(std::move(dirs));
}

Shape shape_of(const FencePoset& p) {
    if (p.empty()) throw ValidationError("the empty poset has no shape");
    const auto& dirs = p.directions();
    std::vector<std::pair<Dir, std::size_t>> runs;
    for (Dir d : dirs) {
        if (!runs.empty() && runs.back().first == d)
            ++runs.back().second;
        else
            runs.emplace_back(d, 1);
    }
    if (runs.empty()) return {2};
    if (runs.size() == 1 && runs[0].first == Dir::Up) return {runs[0].second + 2};
    Shape a;
    std::size_t start = 0;
    if (runs[0].first == Dir::Up) {
        a.push_back(runs[0].second + 1);
        start = 1;
    } else {
        a.push_back(1);
    }
    for (std::size_t i = start; i < runs.size(); ++i) a.push_back(runs[i].second);
    a.back() += 1;
    return a;
}

namespace {

std::vector<ElementPair> mirror_pairs(const std::vector<ElementPair>& pairs, std::size_t h) {
    std::vector<ElementPair> out;
    out.reserve(pairs.size());
    for (const auto& [i, j] : pairs) out.emplace_back(h + 1 - j, h + 1 - i);
    return out;
}

}  // namespace

FencePoset reverse_poset(const FencePoset& p) {
    if (p.empty()) return p;
    std::vector<Dir> dirs(p.directions().rbegin(), p.directions().rend());
    for (auto& d : dirs) d = flip(d);
    FencePoset out(std::move(dirs));
    if (p.labeled()) out.set_labels({p.labels().rbegin(), p.labels().rend()});
    out.set_weights({p.weights().rbegin(), p.weights().rend()});
    out.set_pairs(mirror_pairs(p.pairs(), p.size()));
    return out;
}

FencePoset dual_poset(const FencePoset& p) {
    if (p.empty()) return p;
    std::vector<Dir> dirs = p.directions();
    for (auto& d : dirs) d = flip(d);
    FencePoset out(std::move(dirs));
    if (p.labeled()) out.set_labels(p.labels());
    out.set_weights(p.weights());
    out.set_pairs(p.pairs());
    return out;
}

FencePoset induced_interval(const FencePoset& p, std::size_t a, std::size_t b) {
    if (a < 1) throw ValidationError("interval start must be >= 1");
    if (a > b) return FencePoset();
    if (b > p.size()) throw ValidationError("interval end exceeds poset size");
    FencePoset out(std::vector<Dir>(p.directions().begin() + (a - 1), p.directions().begin() + (b - 1)));
    if (p.labeled()) out.set_labels({p.labels().begin() + (a - 1), p.labels().begin() + b});
    out.set_weights({p.weights().begin() + (a - 1), p.weights().begin() + b});
    std::vector<ElementPair> pairs;
    for (const auto& [i, j] : p.pairs())
        if (i >= a && j <= b) pairs.emplace_back(i - a + 1, j - a + 1);
    out.set_pairs(std::move(pairs));
    return out;
}

FencePoset join(const FencePoset& p, Dir rel, const FencePoset& q) {
    if (p.empty()) return q;
    if (q.empty()) return p;
    std::vector<Dir> dirs = p.directions();
    dirs.push_back(rel);
    dirs.insert(dirs.end(), q.directions().begin(), q.directions().end());
    FencePoset out(std::move(dirs));
    if (p.labeled() && q.labeled()) {
        std::vector<Label> labels = p.labels();
        labels.insert(labels.end(), q.labels().begin(), q.labels().end());
        out.set_labels(std::move(labels));
    }
    std::vector<Rational> weights = p.weights();
    weights.insert(weights.end(), q.weights().begin(), q.weights().end());
    out.set_weights(std::move(weights));
    std::vector<ElementPair> pairs = p.pairs();
    for (const auto& [i, j] : q.pairs()) pairs.emplace_back(i + p.size(), j + p.size());
    out.set_pairs(std::move(pairs));
    return out;
}

namespace {

// Element i is bit (h - i), so increasing masks are lexicographic in (x_1, ..., x_h).
struct IdealMasks {
    std::uint64_t up = 0;
    std::uint64_t down = 0;
};

IdealMasks ideal_masks(const FencePoset& p) {
    if (p.size() > kEnumerationLimit)
        throw ValidationError("poset too large to enumerate (h > " + std::to_string(kEnumerationLimit) +
                              "); use ideal_count");
    IdealMasks m;
    const std::size_t h = p.size();
    for (std::size_t i = 1; i < h; ++i) {
        std::uint64_t bit = std::uint64_t{1} << (h - i - 1);
        (p.direction(i) == Dir::Up ? m.up : m.down) |= bit;
    }
    return m;
}

inline bool is_ideal(std::uint64_t s, const IdealMasks& m) {
    // Up at i: i+1 in S forces i. Down at i: i in S forces i+1.
    return ((s & ~(s >> 1) & m.up) | ((s >> 1) & ~s & m.down)) == 0;
}

}  // namespace

std::vector<OrderIdeal> ideals_enumerate(const FencePoset& p) {
    IdealMasks m = ideal_masks(p);
    const std::size_t h = p.size();
    std::vector<OrderIdeal> out;
    const std::uint64_t end = std::uint64_t{1} << h;
    for (std::uint64_t s = 0; s < end; ++s) {
        if (!is_ideal(s, m)) continue;
        OrderIdeal ideal;
        for (std::size_t i = 1; i <= h; ++i)
            if ((s >> (h - i)) & 1U) ideal.push_back(i);
        out.push_back(std::move(ideal));
    }
    return out;
}

std::uint64_t ideals_enumerate_count(const FencePoset& p) {
    IdealMasks m = ideal_masks(p);
    const std::uint64_t end = std::uint64_t{1} << p.size();
    std::uint64_t n = 0;
    for (std::uint64_t s = 0; s < end; ++s) n += is_ideal(s, m);
    return n;
}

Integer ideal_count(const FencePoset& p) {
    if (p.empty()) return 1;
    // a: ideals of P[1,i] containing P(i); b: those that do not.
    Integer a = 1, b = 1, t;
    for (Dir d : p.directions()) {
        if (d == Dir::Up) {
            b += a;
        } else {
            t = a + b;
            a = t;
        }
    }
    return a + b;
}

Rational weighted_ideal_sum(const FencePoset& p) {
    if (p.empty()) return Rational(1);
    if (p.unit_weights()) return Rational(ideal_count(p));
    Rational a = p.weight(1), b = 1, t;
    for (std::size_t i = 1; i < p.size(); ++i) {
        const Rational& w = p.weight(i + 1);
        if (p.direction(i) == Dir::Up) {
            b += a;
            a *= w;
        } else {
            t = a + b;
            a = t * w;
        }
    }
    return a + b;
}

std::vector<ElementPair> balanced_pairs(const FencePoset& p) {
    if (!p.pairs().empty() || p.unit_weights()) return p.pairs();
    std::vector<ElementPair> out;
    for (std::size_t i = 1; i <= p.size(); ++i) {
        if (p.weight(i) == 1) continue;
        if (i == p.size()) break;
        out.emplace_back(i, i + 1);
        ++i;
    }
    return out;
}

namespace {

std::size_t lower_of(const FencePoset& p, const ElementPair& pr) {
    return p.direction(pr.first) == Dir::Up ? pr.first : pr.second;
}

}  // namespace

bool is_balanced(const FencePoset& p) {
    std::vector<ElementPair> pairs = balanced_pairs(p);
    std::vector<bool> paired(p.size() + 1, false);
    std::size_t last = 0;
    for (const auto& pr : pairs) {
        if (pr.first < 1 || pr.second != pr.first + 1 || pr.second > p.size() || pr.first <= last) return false;
        last = pr.second;
        paired[pr.first] = paired[pr.second] = true;
        std::size_t lo = lower_of(p, pr);
        std::size_t hi = lo == pr.first ? pr.second : pr.first;
        if (p.weight(lo).get_den() != 1) return false;
        if (p.weight(lo) * p.weight(hi) != 1) return false;
    }
    for (std::size_t i = 1; i <= p.size(); ++i)
        if (!paired[i] && p.weight(i) != 1) return false;
    return true;
}

FencePoset extend_poset(const FencePoset& p, unsigned k) {
    std::vector<ElementPair> pairs = balanced_pairs(p);
    if (pairs.empty() || k == 0) {
        if (!p.unit_weights()) throw ValidationError("extend_poset: unpaired non-unit weights");
        FencePoset out = p;
        out.set_pairs({});
        return out;
    }
    if (!is_balanced(p)) throw ValidationError("extend_poset: poset is not balanced");
    for (const auto& pr : pairs) {
        if (p.weight(lower_of(p, pr)) != k)
            throw ValidationError("extend_poset: pair weights are not {k, 1/k} for k = " + std::to_string(k));
    }

    std::vector<Dir> dirs;
    std::vector<Label> labels;
    std::size_t next_pair = 0;
    for (std::size_t i = 1; i <= p.size(); ++i) {
        if (i > 1) dirs.push_back(p.direction(i - 1));
        if (next_pair < pairs.size() && pairs[next_pair].first == i) {
            Dir d = p.direction(i);
            dirs.insert(dirs.end(), k, d);
            if (p.labeled()) labels.insert(labels.end(), k + 1, p.label(i));
            ++next_pair;
            ++i;
        } else if (p.labeled()) {
            labels.push_back(p.label(i));
        }
    }
    FencePoset out(std::move(dirs));
    if (p.labeled()) out.set_labels(std::move(labels));
    return out;
}

FencePoset random_fence_poset(std::mt19937_64& rng, std::size_t h) {
    if (h == 0) return FencePoset();
    std::vector<Dir> dirs(h - 1);
    for (auto& d : dirs) d = (rng() & 1U) ? Dir::Up : Dir::Down;
    return FencePoset(std::move(dirs));
}

}  // namespace kmarkov
