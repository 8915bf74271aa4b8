#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "longseg/int128.hpp"
#include "longseg/rational.hpp"

namespace longseg::oracle {

// Reference implementations by literal enumeration, written straight from the
// problem statements. They deliberately share no summation or scan code with
// the linear-time search, so a defect there cannot confirm itself here.

struct Witness {
    std::int64_t start = 0;
    std::int64_t end = 0;
    Int128 score = 0;

    std::int64_t length() const { return end - start + 1; }

    friend bool operator==(const Witness& a, const Witness& b) {
        return a.start == b.start && a.end == b.end;
    }
};

struct OracleResult {
    std::int64_t best_length = 0;           // 0 when nothing qualifies
    std::optional<Int128> best_score;       // set by the min-length variant
    std::vector<Witness> witnesses;         // every segment achieving the best

    bool contains(std::int64_t start, std::int64_t end) const;
};

inline constexpr std::size_t kDefaultCap = 2000;

/// All maximum-length segments with sum >= alpha.
OracleResult brute_longest_above(std::span<const std::int64_t> scores, std::int64_t alpha,
                                 std::size_t cap = kDefaultCap);
OracleResult brute_longest_above(std::span<const double> scores, double alpha,
                                 std::size_t cap = kDefaultCap);

/// All maximum-length segments with average >= beta, decided in exact
/// rational arithmetic.
OracleResult brute_longest_avg_above(std::span<const std::int64_t> scores, const Rational& beta,
                                     std::size_t cap = kDefaultCap);

/// All maximum-length segments with average <= bound (exact); the trimming
/// orientation of the average problem.
OracleResult brute_longest_mean_at_most(std::span<const std::int64_t> values, const Rational& bound,
                                        std::size_t cap = kDefaultCap);

/// All segments of length >= min_len achieving the maximum sum.
OracleResult brute_max_score_min_length(std::span<const std::int64_t> scores, std::int64_t min_len,
                                        std::size_t cap = kDefaultCap);

} // namespace longseg::oracle
