#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "longseg/int128.hpp"

namespace longseg {

/// Closed interval [start, end] of 1-based positions together with its score,
/// the sum of the scores inside it.
template <class S>
struct Segment {
    std::int64_t start = 0;
    std::int64_t end = 0;
    S score{};

    std::int64_t length() const { return end - start + 1; }

    friend bool operator==(const Segment& a, const Segment& b) {
        return a.start == b.start && a.end == b.end && a.score == b.score;
    }
};

/// Result of a segment search: the winning segment (or nothing when no
/// segment qualifies) plus an instrumentation counter of loop steps.
///
/// The counter tallies the paired scan of the search: every evaluation of the
/// outer loop condition, every evaluation of the i-advance condition, and
/// every j-decrement. Its tight bound is 4(n+1) for every input, which makes
/// the linear-time claim a testable assertion rather than a wall-clock guess.
template <class S>
struct SearchOutcome {
    std::optional<Segment<S>> segment;
    std::uint64_t iterations = 0;

    bool found() const { return segment.has_value(); }
};

enum class LadderKind { LeftMinima, RightMaxima };

/// Monotone ladder over prefix scores f[0..n]:
///  - LeftMinima: positions 0 = p_1 < p_2 < ... where f hits a strict new
///    minimum scanning left to right; f at the positions strictly decreases.
///  - RightMaxima: positions n = p_1 > p_2 > ... >= 0 where f hits a strict
///    new maximum scanning right to left; f at the positions strictly
///    increases. Position 0 is admitted when f[0] exceeds all of f[1..n];
///    it can never end a non-empty segment, so the scan's strict length test
///    ignores it.
struct MonotoneLadder {
    LadderKind kind = LadderKind::LeftMinima;
    std::vector<std::int64_t> positions;

    std::size_t count() const { return positions.size(); }
};

/// Prefix scores f with f[0] = 0 and f[j] = f[j-1] + a_j. In exact-integer
/// mode any overflow throws OverflowError instead of wrapping.
template <class S>
std::vector<S> prefix_scores(std::span<const S> scores) {
    std::vector<S> f(scores.size() + 1);
    f[0] = S{};
    for (std::size_t j = 0; j < scores.size(); ++j)
        f[j + 1] = checked_add(f[j], scores[j]);
    return f;
}

template <class S>
MonotoneLadder left_minima(std::span<const S> f) {
    if (f.empty()) throw std::invalid_argument("prefix scores must hold f[0]");
    MonotoneLadder ladder{LadderKind::LeftMinima, {0}};
    for (std::int64_t i = 1; i < static_cast<std::int64_t>(f.size()); ++i)
        if (f[i] < f[ladder.positions.back()]) ladder.positions.push_back(i);
    return ladder;
}

template <class S>
MonotoneLadder right_maxima(std::span<const S> f) {
    if (f.empty()) throw std::invalid_argument("prefix scores must hold f[0]");
    const auto n = static_cast<std::int64_t>(f.size()) - 1;
    MonotoneLadder ladder{LadderKind::RightMaxima, {n}};
    for (std::int64_t j = n - 1; j >= 0; --j)
        if (f[j] > f[ladder.positions.back()]) ladder.positions.push_back(j);
    return ladder;
}

namespace detail {

/// f[at] + alpha > f[against], evaluated in a width where int64 cannot
/// overflow.
template <class S>
bool shifted_exceeds(const std::vector<S>& f, std::int64_t at, S alpha, std::int64_t against) {
    using W = compare_promote_t<S>;
    const W lhs = checked_add(static_cast<W>(f[at]), static_cast<W>(alpha));
    return lhs > static_cast<W>(f[against]);
}

/// The paired scan over the two ladders. Walks the left ladder forward and
/// the right ladder backward (from the highest prefix value toward f[n]),
/// visiting exactly the pairs (l_i, r_j) where i is the first left index
/// whose shifted prefix value fits under f[r_j]; records the first strict
/// length improvement, which fixes the tie-break among equal-length optima.
template <class S>
SearchOutcome<S> ladder_scan(const std::vector<S>& f, const MonotoneLadder& left,
                             const MonotoneLadder& right, S alpha) {
    const auto& l = left.positions;
    const auto& r = right.positions;
    const std::size_t k = l.size();
    const std::size_t m = r.size();

    SearchOutcome<S> out;
    std::int64_t best_len = 0;
    std::size_t i = 1, j = m; // 1-based indices into the ladders
    for (;;) {
        ++out.iterations; // outer loop test
        if (!(i <= k && j >= 1)) break;
        for (;;) {
            ++out.iterations; // i-advance test
            if (i <= k && shifted_exceeds(f, l[i - 1], alpha, r[j - 1])) {
                ++i;
                continue;
            }
            break;
        }
        if (i > k) continue;
        while (j >= 1 && !shifted_exceeds(f, l[i - 1], alpha, r[j - 1])) {
            const std::int64_t len = r[j - 1] - l[i - 1];
            if (len > best_len) {
                best_len = len;
                out.segment = Segment<S>{l[i - 1] + 1, r[j - 1],
                                         checked_sub(f[r[j - 1]], f[l[i - 1]])};
            }
            --j;
            ++out.iterations; // j-decrement
        }
    }
    return out;
}

} // namespace detail

/// Longest segment [i, j] with a(i, j) >= alpha, or nothing when no segment
/// qualifies. Among equal-length optima the scan order decides: left minima
/// ascending, right maxima descending, first strict improvement kept.
template <class S>
SearchOutcome<S> longest_segment_above(std::span<const S> scores, S alpha) {
    const std::vector<S> f = prefix_scores(scores);
    const MonotoneLadder left = left_minima<S>(f);
    const MonotoneLadder right = right_maxima<S>(f);
    return detail::ladder_scan<S>(f, left, right, alpha);
}

/// Longest segment whose average score is >= beta: runs the threshold search
/// on shifted scores (a_k - beta) with alpha = 0. The reported score is the
/// original (unshifted) sum over the winning segment.
inline SearchOutcome<double> longest_segment_avg_above(std::span<const double> scores,
                                                       double beta) {
    std::vector<double> shifted(scores.size());
    for (std::size_t t = 0; t < scores.size(); ++t) shifted[t] = scores[t] - beta;
    SearchOutcome<double> out =
        longest_segment_above<double>(shifted, 0.0);
    if (out.segment) {
        double sum = 0.0; // left-to-right over the original values
        for (std::int64_t t = out.segment->start; t <= out.segment->end; ++t)
            sum += scores[t - 1];
        out.segment->score = sum;
    }
    return out;
}

/// Exact-arithmetic specialization of the average search for beta = p/q:
/// searches shifted integer scores (q·a_k - p) with alpha = 0, so boundary
/// cases are never misclassified by rounding. Requires q >= 1.
inline SearchOutcome<std::int64_t> longest_segment_avg_above_rational(
    std::span<const std::int64_t> scores, std::int64_t p, std::int64_t q) {
    if (q < 1) throw std::invalid_argument("denominator must be positive");
    // Shift in 128 bits: |q·a - p| < 2^127 for any int64 inputs.
    std::vector<Int128> shifted(scores.size());
    for (std::size_t t = 0; t < scores.size(); ++t)
        shifted[t] = static_cast<Int128>(q) * scores[t] - p;
    const SearchOutcome<Int128> wide =
        longest_segment_above<Int128>(shifted, Int128{0});
    SearchOutcome<std::int64_t> out;
    out.iterations = wide.iterations;
    if (wide.segment) {
        std::int64_t sum = 0;
        for (std::int64_t t = wide.segment->start; t <= wide.segment->end; ++t)
            sum = checked_add(sum, scores[t - 1]);
        out.segment = Segment<std::int64_t>{wide.segment->start, wide.segment->end, sum};
    }
    return out;
}

/// Maximum-score segment among those of length >= min_len, or nothing when
/// n < min_len. Single forward scan holding the running minimum of
/// f[0..j-min_len]; score ties break to the smaller start, then smaller end.
template <class S>
SearchOutcome<S> max_score_with_min_length(std::span<const S> scores, std::int64_t min_len) {
    if (min_len < 1) throw std::invalid_argument("minimum length must be >= 1");
    SearchOutcome<S> out;
    const auto n = static_cast<std::int64_t>(scores.size());
    if (n < min_len) return out;
    const std::vector<S> f = prefix_scores(scores);
    std::int64_t min_pos = 0; // first position of the minimum of f[0..j-min_len]
    bool have_best = false;
    S best_score{};
    for (std::int64_t j = min_len; j <= n; ++j) {
        ++out.iterations; // scan step
        const std::int64_t candidate = j - min_len;
        if (f[candidate] < f[min_pos]) {
            min_pos = candidate;
            ++out.iterations; // running-minimum update
        }
        const S score = checked_sub(f[j], f[min_pos]);
        if (!have_best || score > best_score) {
            have_best = true;
            best_score = score;
            out.segment = Segment<S>{min_pos + 1, j, score};
        }
    }
    return out;
}

} // namespace longseg
