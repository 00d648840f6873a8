#pragma once


#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <string>

#include "hopfore/errors.hpp"

namespace hopfore {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always stored gcd-reduced with positive
/// denominator (the backing rational_adaptor canonicalizes on every
/// operation), so equality is structural.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numer(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denom(const Rational& r) { return boost::multiprecision::denominator(r); }

inline BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }
inline BigInt lcm(const BigInt& a, const BigInt& b) { return boost::multiprecision::lcm(a, b); }

/// C(n, k) over the integers, by the multiplicative recurrence.
inline BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt acc = 1;
    for (long i = 1; i <= k; ++i) {
        acc *= n - k + i;
        acc /= i;  // exact at every step
    }
    return acc;
}

inline std::string to_string(const Rational& r) {
    if (denom(r) == 1) return numer(r).str();
    return numer(r).str() + "/" + denom(r).str();
}

/// Parses "a" or "a/b" (b > 0) starting at `pos`; advances `pos` past the
/// consumed text. Accepts an optional leading sign on the numerator.
inline Rational parse_rational(const std::string& text, std::size_t& pos) {
    std::size_t start = pos;
    auto digits = [&](BigInt& out) {
        std::size_t d0 = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == d0) throw SyntaxError("expected digits at position " + std::to_string(d0), d0);
        out = BigInt(text.substr(d0, pos - d0));
    };
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    BigInt num;
    digits(num);
    BigInt den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        digits(den);
        if (den == 0) throw SyntaxError("zero denominator at position " + std::to_string(start), start);
    }
    Rational r(num, den);
    return negative ? Rational(-r) : r;
}

}  // namespace hopfore
