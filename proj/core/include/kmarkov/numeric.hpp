#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace kmarkov {

using Integer = mpz_class;
using Rational = mpq_class;

// Bad input: malformed values, violated preconditions.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Input outside the supported feature set (e.g. polyline turns other than +-pi).
class UnsupportedFeature : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal cross-check failed. Never expected on valid input.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Non-negative fraction p/q kept exactly as given; q == 0 is allowed so the
// Farey root's 1/0 can be represented.
struct Fraction {
    Integer p{0};
    Integer q{1};

    bool operator==(const Fraction& o) const { return p == o.p && q == o.q; }
    bool reduced() const;
    std::string str() const;
};

Fraction mediant(const Fraction& a, const Fraction& b);
// Sign of a - b for fractions with non-negative denominators (1/0 is +inf).
int compare(const Fraction& a, const Fraction& b);

Fraction parse_fraction(std::string_view text);
Integer parse_integer(std::string_view text);
Rational parse_rational(std::string_view text);
std::string to_string(const Integer& v);
std::string to_string(const Rational& v);

}  // namespace kmarkov
