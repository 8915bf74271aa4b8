#pragma once

#include <cstdint>
#include <string>
#include <type_traits>

#include "longseg/errors.hpp"

namespace longseg {

using Int128 = __int128;

/// Score types whose arithmetic must be exact (overflow is an error, never
/// wraparound). Everything else (double) accumulates natively.
template <class S>
inline constexpr bool is_exact_score_v =
    std::is_same_v<S, std::int64_t> || std::is_same_v<S, Int128>;

template <class S>
inline S checked_add(S a, S b) {
    if constexpr (is_exact_score_v<S>) {
        S out;
        if (__builtin_add_overflow(a, b, &out))
            throw OverflowError("integer overflow in score accumulation");
        return out;
    } else {
        return a + b;
    }
}

template <class S>
inline S checked_sub(S a, S b) {
    if constexpr (is_exact_score_v<S>) {
        S out;
        if (__builtin_sub_overflow(a, b, &out))
            throw OverflowError("integer overflow in score subtraction");
        return out;
    } else {
        return a - b;
    }
}

template <class S>
inline S checked_mul(S a, S b) {
    if constexpr (is_exact_score_v<S>) {
        S out;
        if (__builtin_mul_overflow(a, b, &out))
            throw OverflowError("integer overflow in score scaling");
        return out;
    } else {
        return a * b;
    }
}

/// Widest type used for threshold comparisons, so that f + alpha never
/// overflows for int64 inputs.
template <class S>
struct compare_promote {
    using type = S;
};
template <>
struct compare_promote<std::int64_t> {
    using type = Int128;
};

template <class S>
using compare_promote_t = typename compare_promote<S>::type;

std::string to_string(Int128 value);

} // namespace longseg
