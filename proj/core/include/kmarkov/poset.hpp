#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "kmarkov/contfrac.hpp"
#include "kmarkov/numeric.hpp"

namespace kmarkov {

// Relation between P(i) and P(i+1): Up means P(i) < P(i+1).
enum class Dir : std::uint8_t { Up, Down };
enum class Label : std::uint8_t { X, Y, Z };

inline Dir flip(Dir d) { return d == Dir::Up ? Dir::Down : Dir::Up; }
char to_char(Dir d);
char to_char(Label l);
Label label_from_char(char c);

// Shape entries a_1..a_n, all >= 1, last >= 2.
using Shape = std::vector<std::size_t>;
CFSequence to_cf(const Shape& s);

// Adjacent pair (i, i+1), 1-based, produced by the arc compiler.
using ElementPair = std::pair<std::size_t, std::size_t>;

// Fence poset with chronological labeling 1..h. Indices in the public API are
// 1-based to match the usual P(i) notation.
class FencePoset {
public:
    FencePoset() = default;
    explicit FencePoset(std::vector<Dir> dirs);
    static FencePoset singleton();

    std::size_t size() const { return h_; }
    bool empty() const { return h_ == 0; }

    const std::vector<Dir>& directions() const { return dirs_; }
    Dir direction(std::size_t i) const;  // relation between P(i) and P(i+1)

    bool labeled() const { return labels_.has_value(); }
    const std::vector<Label>& labels() const;
    Label label(std::size_t i) const;
    void set_labels(std::vector<Label> labels);
    void clear_labels() { labels_.reset(); }

    const std::vector<Rational>& weights() const { return weights_; }
    const Rational& weight(std::size_t i) const;
    void set_weights(std::vector<Rational> weights);
    bool unit_weights() const;

    const std::vector<ElementPair>& pairs() const { return pairs_; }
    void set_pairs(std::vector<ElementPair> pairs);

    // P(i) < P(j) strictly, through the chain of cover relations.
    bool below(std::size_t i, std::size_t j) const;

    bool operator==(const FencePoset& o) const;
    bool operator!=(const FencePoset& o) const { return !(*this == o); }

private:
    std::size_t h_ = 0;
    std::vector<Dir> dirs_;
    std::optional<std::vector<Label>> labels_;
    std::vector<Rational> weights_;
    std::vector<ElementPair> pairs_;
};

using OrderIdeal = std::vector<std::size_t>;

inline constexpr std::size_t kEnumerationLimit = 30;

FencePoset poset_from_shape(const Shape& s);
Shape shape_of(const FencePoset& p);
bool valid_shape(const Shape& s);

FencePoset reverse_poset(const FencePoset& p);
// Same elements with every relation inverted.
FencePoset dual_poset(const FencePoset& p);
FencePoset induced_interval(const FencePoset& p, std::size_t a, std::size_t b);
// p followed by q, joined by `rel` between the last of p and the first of q.
// Empty operands are skipped. Labels survive only if both sides carry them.
FencePoset join(const FencePoset& p, Dir rel, const FencePoset& q);

std::vector<OrderIdeal> ideals_enumerate(const FencePoset& p);
// Number of ideals by subset filtering; same guard as ideals_enumerate.
std::uint64_t ideals_enumerate_count(const FencePoset& p);
Integer ideal_count(const FencePoset& p);
Rational weighted_ideal_sum(const FencePoset& p);

// Recorded pairs, or pairs inferred from weights when none are recorded.
std::vector<ElementPair> balanced_pairs(const FencePoset& p);
bool is_balanced(const FencePoset& p);
FencePoset extend_poset(const FencePoset& p, unsigned k);

FencePoset random_fence_poset(std::mt19937_64& rng, std::size_t h);

}  // namespace kmarkov
