#include "longseg/oracle.hpp"

#include <algorithm>

#include "longseg/errors.hpp"

namespace longseg::oracle {

namespace {

void check_cap(std::size_t n, std::size_t cap) {
    if (n > cap)
        throw CapError("oracle cap exceeded: n=" + std::to_string(n) +
                       " > " + std::to_string(cap));
}

Int128 mul_checked(Int128 a, Int128 b) {
    Int128 out;
    if (__builtin_mul_overflow(a, b, &out))
        throw OverflowError("oracle rational comparison overflow");
    return out;
}

// Collects every maximum-length segment satisfying `qualifies(sum, len)`,
// summing each segment directly (no prefix array on purpose).
template <class S, class Qualifies>
OracleResult longest_by(std::span<const S> scores, Qualifies qualifies, std::size_t cap) {
    check_cap(scores.size(), cap);
    const auto n = static_cast<std::int64_t>(scores.size());
    OracleResult result;
    for (std::int64_t i = 1; i <= n; ++i) {
        S sum{};
        for (std::int64_t j = i; j <= n; ++j) {
            sum = sum + scores[j - 1];
            const std::int64_t len = j - i + 1;
            if (!qualifies(sum, len)) continue;
            if (len > result.best_length) {
                result.best_length = len;
                result.witnesses.clear();
            }
            if (len == result.best_length)
                result.witnesses.push_back(Witness{i, j, static_cast<Int128>(sum)});
        }
    }
    return result;
}

} // namespace

bool OracleResult::contains(std::int64_t start, std::int64_t end) const {
    return std::find(witnesses.begin(), witnesses.end(), Witness{start, end, 0}) !=
           witnesses.end();
}

OracleResult brute_longest_above(std::span<const std::int64_t> scores, std::int64_t alpha,
                                 std::size_t cap) {
    return longest_by<Int128>(
        std::vector<Int128>(scores.begin(), scores.end()),
        [alpha](Int128 sum, std::int64_t) { return sum >= alpha; }, cap);
}

OracleResult brute_longest_above(std::span<const double> scores, double alpha,
                                 std::size_t cap) {
    check_cap(scores.size(), cap);
    const auto n = static_cast<std::int64_t>(scores.size());
    OracleResult result;
    for (std::int64_t i = 1; i <= n; ++i) {
        double sum = 0.0;
        for (std::int64_t j = i; j <= n; ++j) {
            sum += scores[j - 1];
            const std::int64_t len = j - i + 1;
            if (sum < alpha) continue;
            if (len > result.best_length) {
                result.best_length = len;
                result.witnesses.clear();
            }
            if (len == result.best_length)
                result.witnesses.push_back(Witness{i, j, static_cast<Int128>(sum)});
        }
    }
    return result;
}

OracleResult brute_longest_avg_above(std::span<const std::int64_t> scores, const Rational& beta,
                                     std::size_t cap) {
    return longest_by<Int128>(
        std::vector<Int128>(scores.begin(), scores.end()),
        [&beta](Int128 sum, std::int64_t len) {
            // avg >= num/den  <=>  sum·den >= num·len  (den > 0)
            return mul_checked(sum, beta.den) >= mul_checked(beta.num, len);
        },
        cap);
}

OracleResult brute_longest_mean_at_most(std::span<const std::int64_t> values, const Rational& bound,
                                        std::size_t cap) {
    return longest_by<Int128>(
        std::vector<Int128>(values.begin(), values.end()),
        [&bound](Int128 sum, std::int64_t len) {
            return mul_checked(sum, bound.den) <= mul_checked(bound.num, len);
        },
        cap);
}

OracleResult brute_max_score_min_length(std::span<const std::int64_t> scores, std::int64_t min_len,
                                        std::size_t cap) {
    check_cap(scores.size(), cap);
    const auto n = static_cast<std::int64_t>(scores.size());
    OracleResult result;
    for (std::int64_t i = 1; i <= n; ++i) {
        Int128 sum = 0;
        for (std::int64_t j = i; j <= n; ++j) {
            sum += scores[j - 1];
            if (j - i + 1 < min_len) continue;
            if (!result.best_score || sum > *result.best_score) {
                result.best_score = sum;
                result.witnesses.clear();
            }
            if (sum == *result.best_score)
                result.witnesses.push_back(Witness{i, j, sum});
        }
    }
    if (!result.witnesses.empty()) result.best_length = result.witnesses.front().length();
    return result;
}

} // namespace longseg::oracle
