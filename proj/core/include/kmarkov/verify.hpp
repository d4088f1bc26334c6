#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "kmarkov/poset.hpp"
#include "kmarkov/skein.hpp"

namespace kmarkov {

struct SweepResult {
    std::string name;
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    std::vector<std::string> samples;  // first few failures, human readable

    bool passed() const { return failures == 0 && checked > 0; }
};

// Sum over enumerated ideals of the product of member weights.
Rational weighted_sum_by_enumeration(const FencePoset& p);

// even length, outer entries mirror, middle entries differ by k.
bool near_palindromic(const Shape& s, unsigned k);
// Some chronological labeling of p or of its order dual is near-palindromic.
bool near_palindromic_somewhere(const FencePoset& p, unsigned k);

SweepResult sweep_ideal_exhaustive(std::size_t max_h);
SweepResult sweep_ideal_random(std::uint64_t seed, std::size_t samples, std::size_t min_h, std::size_t max_h,
                               unsigned jobs);
SweepResult sweep_numerator_skein(std::uint64_t seed, long max_value, std::size_t max_mu_len, unsigned jobs);
SweepResult sweep_resolutions(int type, std::uint64_t seed, std::size_t samples, std::size_t max_h, CountMode mode,
                              unsigned jobs);

SweepResult sweep_tree_vs_poset(unsigned k, std::size_t q_max, unsigned jobs);
SweepResult sweep_weighted_extension(unsigned k, std::size_t q_max, unsigned jobs);
SweepResult sweep_near_palindromic(unsigned k, std::size_t q_max, unsigned jobs);
SweepResult sweep_left_right(unsigned k, long radius, unsigned jobs);
SweepResult sweep_translation(unsigned k, long radius, unsigned jobs);

}  // namespace kmarkov
