#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "longseg/int128.hpp"

namespace longseg {

/// Exact fraction with int64 numerator and positive int64 denominator, kept
/// reduced. Used for every threshold where floating-point rounding would be
/// able to flip a boundary decision (average cutoffs, GC fractions, error
/// rates).
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d);

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<Int128>(a.num) * b.den < static_cast<Int128>(b.num) * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
};

Rational operator*(const Rational& a, const Rational& b);

/// Parses "p/q", an exact decimal ("0.05", "-3.25"), or an integer.
/// Exponents are not accepted; throws std::invalid_argument on anything else
/// or when the reduced fraction does not fit int64.
Rational parse_rational(std::string_view text);

/// True when the token contains '.' or '/', i.e. it is not a plain integer.
bool looks_non_integral(std::string_view text);

} // namespace longseg
