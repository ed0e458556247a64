#pragma once

// Exact arithmetic used throughout: arbitrary-precision integers and
// rationals. No floating point ever participates in an accept/reject
// decision; doubles appear only in human-readable report columns.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace drkit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt big_pow(const BigInt& base, std::uint64_t exp) {
    if (exp > std::numeric_limits<unsigned>::max())
        throw std::domain_error("exponent too large for exact power");
    return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

inline Rational rat_pow(const Rational& r, std::uint64_t exp) {
    return Rational(big_pow(numerator(r), exp), big_pow(denominator(r), exp));
}

inline BigInt rat_floor(const Rational& r) {
    BigInt n = numerator(r), d = denominator(r);  // d > 0 in canonical form
    BigInt q = n / d;
    if (n < 0 && q * d != n) --q;
    return q;
}

inline BigInt rat_ceil(const Rational& r) { return -rat_floor(-r); }

// Accepts "num/den" or a bare integer; denominator must be positive.
Rational parse_rational(std::string_view text);

// Canonical form is always "num/den", lowest terms ("3" prints as "3/1").
std::string format_rational(const Rational& r);

// Narrowing with a range check; values that reach here have already been
// bounded by configured limits, so a failure is a usage error.
std::int64_t to_int64(const BigInt& v);

}  // namespace drkit
