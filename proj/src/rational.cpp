#include "longseg/rational.hpp"

#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace longseg {

namespace {

std::int64_t gcd128(Int128 a, Int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int128 t = a % b;
        a = b;
        b = t;
    }
    return static_cast<std::int64_t>(a);
}

Rational make_reduced(Int128 num, Int128 den, std::string_view text) {
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    Int128 g = num == 0 ? den : gcd128(num, den);
    num /= g;
    den /= g;
    constexpr Int128 lo = INT64_MIN, hi = INT64_MAX;
    if (num < lo || num > hi || den > hi)
        throw std::invalid_argument("fraction out of range in '" + std::string(text) + "'");
    Rational r;
    r.num = static_cast<std::int64_t>(num);
    r.den = static_cast<std::int64_t>(den);
    return r;
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("bad number '" + std::string(whole) + "'");
    return v;
}

} // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
    *this = make_reduced(n, d, "<n/d>");
}

std::string Rational::str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

Rational operator*(const Rational& a, const Rational& b) {
    return make_reduced(static_cast<Int128>(a.num) * b.num,
                        static_cast<Int128>(a.den) * b.den, "<product>");
}

bool looks_non_integral(std::string_view text) {
    return text.find('.') != std::string_view::npos || text.find('/') != std::string_view::npos;
}

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty number");
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        const std::int64_t p = parse_int(text.substr(0, slash), text);
        const std::int64_t q = parse_int(text.substr(slash + 1), text);
        return make_reduced(p, q, text);
    }
    std::string_view rest = text;
    bool negative = false;
    if (rest.front() == '+' || rest.front() == '-') {
        negative = rest.front() == '-';
        rest.remove_prefix(1);
    }
    const auto dot = rest.find('.');
    std::string_view int_part = dot == std::string_view::npos ? rest : rest.substr(0, dot);
    std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : rest.substr(dot + 1);
    if (int_part.empty() && frac_part.empty())
        throw std::invalid_argument("bad number '" + std::string(text) + "'");
    for (std::string_view part : {int_part, frac_part})
        for (char c : part)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("bad number '" + std::string(text) + "'");
    if (frac_part.size() > 18 || int_part.size() > 19)
        throw std::invalid_argument("too many digits in '" + std::string(text) + "'");
    Int128 num = 0;
    for (char c : int_part) num = num * 10 + (c - '0');
    Int128 den = 1;
    for (char c : frac_part) {
        num = num * 10 + (c - '0');
        den *= 10;
        if (num > static_cast<Int128>(INT64_MAX) * den)
            throw std::invalid_argument("number out of range '" + std::string(text) + "'");
    }
    if (negative) num = -num;
    return make_reduced(num, den, text);
}

} // namespace longseg
