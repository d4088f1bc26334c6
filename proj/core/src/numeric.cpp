#include "kmarkov/numeric.hpp"

#include <cctype>

namespace kmarkov {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

bool Fraction::reduced() const {
    Integer g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    return g == 1;
}

std::string Fraction::str() const { return to_string(p) + "/" + to_string(q); }

Fraction mediant(const Fraction& a, const Fraction& b) { return {a.p + b.p, a.q + b.q}; }

int compare(const Fraction& a, const Fraction& b) {
    Integer lhs = a.p * b.q;
    Integer rhs = b.p * a.q;
    int c = cmp(lhs, rhs);
    return (c > 0) - (c < 0);
}

Integer parse_integer(std::string_view text) {
    text = trim(text);
    if (text.empty()) throw ValidationError("empty integer");
    std::size_t start = (text.front() == '-' || text.front() == '+') ? 1 : 0;
    if (start == text.size()) throw ValidationError("malformed integer: " + std::string(text));
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw ValidationError("malformed integer: " + std::string(text));
    }
    std::string digits(text.front() == '+' ? text.substr(1) : text);
    return Integer(digits, 10);
}

Fraction parse_fraction(std::string_view text) {
    text = trim(text);
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return {parse_integer(text), 1};
    Fraction f{parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1))};
    if (f.p < 0 || f.q < 0) throw ValidationError("negative fraction: " + std::string(text));
    return f;
}

Rational parse_rational(std::string_view text) {
    text = trim(text);
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw ValidationError("zero denominator: " + std::string(text));
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Integer& v) { return v.get_str(10); }

std::string to_string(const Rational& v) { return v.get_str(10); }

}  // namespace kmarkov
