#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdint>
#include <limits>
#include <random>
#include <thread>
#include <vector>

#include "longseg/core.hpp"
#include "longseg/errors.hpp"
#include "longseg/oracle.hpp"
#include "longseg/score_sequence.hpp"

using namespace longseg;

namespace {

using I64 = std::int64_t;
using Vec = std::vector<I64>;

std::vector<I64> positions(const MonotoneLadder& ladder) { return ladder.positions; }

Vec random_scores(std::mt19937_64& rng, std::size_t max_n, I64 lo = -10, I64 hi = 10) {
    std::uniform_int_distribution<std::size_t> len(0, max_n);
    std::uniform_int_distribution<I64> val(lo, hi);
    Vec scores(len(rng));
    for (auto& s : scores) s = val(rng);
    return scores;
}

// Definition-level ladder checks: pointwise extremality and strict
// monotonicity of the prefix values along each ladder.
void check_ladders(const std::vector<I64>& f) {
    const auto left = left_minima<I64>(f);
    const auto right = right_maxima<I64>(f);
    const auto n = static_cast<I64>(f.size()) - 1;

    REQUIRE(left.positions.front() == 0);
    for (std::size_t t = 0; t < left.positions.size(); ++t) {
        const I64 p = left.positions[t];
        for (I64 q = 0; q <= p; ++q) CHECK(f[p] <= f[q]);
        if (t > 0) {
            CHECK(left.positions[t - 1] < p);
            CHECK(f[p] < f[left.positions[t - 1]]);
        }
    }
    REQUIRE(right.positions.front() == n);
    for (std::size_t t = 0; t < right.positions.size(); ++t) {
        const I64 p = right.positions[t];
        for (I64 q = p; q <= n; ++q) CHECK(f[p] >= f[q]);
        if (t > 0) {
            CHECK(right.positions[t - 1] > p);
            CHECK(f[p] > f[right.positions[t - 1]]);
        }
    }
}

// rho(i) = min{ j : f[r_j] >= f[l_i] + alpha }, by direct scan.
std::vector<std::size_t> rho_by_scan(const std::vector<I64>& f, const MonotoneLadder& left,
                                     const MonotoneLadder& right, I64 alpha) {
    std::vector<std::size_t> rho;
    for (I64 lp : left.positions) {
        std::size_t found = right.positions.size() + 1;
        for (std::size_t j = 0; j < right.positions.size(); ++j) {
            if (static_cast<Int128>(f[right.positions[j]]) >=
                static_cast<Int128>(f[lp]) + alpha) {
                found = j + 1;
                break;
            }
        }
        rho.push_back(found);
    }
    return rho;
}

} // namespace

TEST_CASE("prefix scores") {
    CHECK(prefix_scores<I64>(Vec{}) == Vec{0});
    CHECK(prefix_scores<I64>(Vec{-1, 3, -2, 4, -5, 1}) == Vec{0, -1, 2, 0, 4, -1, 0});
    CHECK(prefix_scores<I64>(Vec{5}) == Vec{0, 5});

    SUBCASE("differences reproduce the input") {
        std::mt19937_64 rng(7);
        for (int it = 0; it < 50; ++it) {
            const Vec scores = random_scores(rng, 100);
            const auto f = prefix_scores<I64>(scores);
            REQUIRE(f.size() == scores.size() + 1);
            CHECK(f[0] == 0);
            for (std::size_t j = 1; j < f.size(); ++j)
                CHECK(f[j] - f[j - 1] == scores[j - 1]);
        }
    }

    SUBCASE("integer overflow is an error, not a wrap") {
        const Vec big{std::numeric_limits<I64>::max(), 1};
        CHECK_THROWS_AS(prefix_scores<I64>(big), OverflowError);
        const Vec low{std::numeric_limits<I64>::min(), -1};
        CHECK_THROWS_AS(prefix_scores<I64>(low), OverflowError);
    }
}

TEST_CASE("left minima ladder") {
    CHECK(positions(left_minima<I64>(Vec{0})) == Vec{0});
    CHECK(positions(left_minima<I64>(Vec{0, -1, 2, 0, 4, -1, 0})) == Vec{0, 1});
    CHECK(positions(left_minima<I64>(Vec{0, -1, -2, -3})) == Vec{0, 1, 2, 3});
}

TEST_CASE("right maxima ladder") {
    CHECK(positions(right_maxima<I64>(Vec{0})) == Vec{0});
    CHECK(positions(right_maxima<I64>(Vec{0, -1, 2, 0, 4, -1, 0})) == Vec{6, 4});
    CHECK(positions(right_maxima<I64>(Vec{0, 1, 2, 3})) == Vec{3});
    // position 0 admitted when f[0] beats everything to its right
    CHECK(positions(right_maxima<I64>(Vec{0, -1, -2})) == Vec{2, 1, 0});
}

TEST_CASE("longest segment above threshold: pinned examples") {
    SUBCASE("single element") {
        const auto out = longest_segment_above<I64>(Vec{5}, 3);
        REQUIRE(out.found());
        CHECK(out.segment->start == 1);
        CHECK(out.segment->end == 1);
        CHECK(out.segment->score == 5);
    }
    SUBCASE("all sums below alpha") {
        CHECK_FALSE(longest_segment_above<I64>(Vec{-1, -2}, 0).found());
    }
    SUBCASE("longer beats higher-scoring") {
        const auto out = longest_segment_above<I64>(Vec{-1, 3, -2, 4, -5, 1}, 3);
        REQUIRE(out.found());
        CHECK(out.segment->start == 1);
        CHECK(out.segment->end == 4);
        CHECK(out.segment->length() == 4);
        CHECK(out.segment->score == 4);
    }
    SUBCASE("empty input") {
        const auto out = longest_segment_above<I64>(Vec{}, 0);
        CHECK_FALSE(out.found());
        CHECK(out.iterations <= 4);
    }
    SUBCASE("degenerate thresholds need no special casing") {
        const Vec zeros(7, 0);
        for (I64 alpha : {0, -5}) {
            const auto out = longest_segment_above<I64>(zeros, alpha);
            REQUIRE(out.found());
            CHECK(out.segment->start == 1);
            CHECK(out.segment->end == 7);
            CHECK(out.segment->score == 0);
        }
        CHECK_FALSE(longest_segment_above<I64>(zeros, 1).found());
    }
}

TEST_CASE("average variants: pinned examples") {
    SUBCASE("boundary average counts") {
        const std::vector<double> ones{1, 1, 1};
        const auto out = longest_segment_avg_above(ones, 1.0);
        REQUIRE(out.found());
        CHECK(out.segment->start == 1);
        CHECK(out.segment->end == 3);
    }
    SUBCASE("longer lower-average segment wins") {
        const std::vector<double> bits{0, 1, 1, 0, 1, 0};
        const auto out = longest_segment_avg_above(bits, 0.6);
        REQUIRE(out.found());
        CHECK(out.segment->start == 1);
        CHECK(out.segment->end == 5);
        CHECK(out.segment->score == doctest::Approx(3.0));
    }
    SUBCASE("nothing qualifies") {
        const std::vector<double> zero{0, 0};
        CHECK_FALSE(longest_segment_avg_above(zero, 0.5).found());
    }
    SUBCASE("rational path, same instance") {
        const auto out = longest_segment_avg_above_rational(Vec{0, 1, 1, 0, 1, 0}, 3, 5);
        REQUIRE(out.found());
        CHECK(out.segment->start == 1);
        CHECK(out.segment->end == 5);
        CHECK(out.segment->score == 3); // original, untransformed sum
    }
    SUBCASE("single element at the exact boundary") {
        const auto out = longest_segment_avg_above_rational(Vec{1}, 1, 1);
        REQUIRE(out.found());
        CHECK(out.segment->start == 1);
        CHECK(out.segment->end == 1);
    }
    SUBCASE("denominator must be positive") {
        CHECK_THROWS_AS(longest_segment_avg_above_rational(Vec{1}, 1, 0), std::invalid_argument);
    }
    SUBCASE("GC indicator tie-break") {
        // ATGCGCGCAT -> indicators; three max-length candidates exist
        // ([1,8], [2,9], [3,10], each 6/8 = 0.75); the scan order keeps [1,8].
        const Vec gc{0, 0, 1, 1, 1, 1, 1, 1, 0, 0};
        const auto out = longest_segment_avg_above_rational(gc, 7, 10);
        REQUIRE(out.found());
        CHECK(out.segment->start == 1);
        CHECK(out.segment->end == 8);
        CHECK(out.segment->length() == 8);
        CHECK(out.segment->score == 6);
    }
}

TEST_CASE("max score with minimum length: pinned examples") {
    SUBCASE("reduces to classic max segment at L=1") {
        const auto out = max_score_with_min_length<I64>(Vec{-1, 2, -1}, 1);
        REQUIRE(out.found());
        CHECK(out.segment->start == 2);
        CHECK(out.segment->end == 2);
        CHECK(out.segment->score == 2);
    }
    SUBCASE("length bound forces a crossing") {
        const auto out = max_score_with_min_length<I64>(Vec{5, -9, 6, -2, 3}, 3);
        REQUIRE(out.found());
        CHECK(out.segment->start == 3);
        CHECK(out.segment->end == 5);
        CHECK(out.segment->score == 7);
    }
    SUBCASE("n below the bound") {
        CHECK_FALSE(max_score_with_min_length<I64>(Vec{1, 2}, 3).found());
    }
    SUBCASE("invalid bound") {
        CHECK_THROWS_AS(max_score_with_min_length<I64>(Vec{1}, 0), std::invalid_argument);
    }
}

TEST_CASE("ladder definition properties on random inputs") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 300; ++it) {
        const Vec scores = random_scores(rng, 60);
        check_ladders(prefix_scores<I64>(scores));
    }
}

TEST_CASE("boundary property of the returned segment") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<I64> alpha_dist(-5, 5);
    for (int it = 0; it < 400; ++it) {
        const Vec scores = random_scores(rng, 60);
        const I64 alpha = alpha_dist(rng);
        const auto out = longest_segment_above<I64>(scores, alpha);
        if (!out.found()) continue;
        const auto f = prefix_scores<I64>(scores);
        const I64 i_star = out.segment->start - 1;
        const I64 j_star = out.segment->end;
        const auto n = static_cast<I64>(scores.size());
        for (I64 p = 0; p < i_star; ++p) CHECK(f[i_star] < f[p]);
        for (I64 p = j_star + 1; p <= n; ++p) CHECK(f[j_star] > f[p]);
    }
}

TEST_CASE("pair monotonicity (rho non-increasing)") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<I64> alpha_dist(-6, 6);
    for (int it = 0; it < 300; ++it) {
        const Vec scores = random_scores(rng, 50);
        const auto f = prefix_scores<I64>(scores);
        const auto left = left_minima<I64>(f);
        const auto right = right_maxima<I64>(f);
        const auto rho = rho_by_scan(f, left, right, alpha_dist(rng));
        for (std::size_t i = 1; i < rho.size(); ++i) CHECK(rho[i - 1] >= rho[i]);
    }
}

TEST_CASE("oracle equivalence on random instances") {
    std::mt19937_64 rng(19);
    for (int it = 0; it < 400; ++it) {
        const Vec scores = random_scores(rng, 80);
        for (I64 alpha : {-5, 0, 3}) {
            const auto out = longest_segment_above<I64>(scores, alpha);
            const auto truth = oracle::brute_longest_above(scores, alpha);
            if (truth.best_length == 0) {
                CHECK_FALSE(out.found());
                continue;
            }
            REQUIRE(out.found());
            CHECK(out.segment->length() == truth.best_length);
            CHECK(truth.contains(out.segment->start, out.segment->end));
            CHECK(static_cast<Int128>(out.segment->score) >= alpha);
        }
    }
}

TEST_CASE("reduction identity: average via shifted sum search") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<I64> p_dist(-3, 3);
    std::uniform_int_distribution<I64> q_dist(1, 5);
    for (int it = 0; it < 300; ++it) {
        const Vec scores = random_scores(rng, 60, -5, 5);
        const I64 p = p_dist(rng), q = q_dist(rng);
        const auto avg = longest_segment_avg_above_rational(scores, p, q);
        Vec shifted(scores.size());
        for (std::size_t t = 0; t < scores.size(); ++t) shifted[t] = q * scores[t] - p;
        const auto direct = longest_segment_above<I64>(shifted, 0);
        CHECK(avg.found() == direct.found());
        if (avg.found()) {
            CHECK(avg.segment->start == direct.segment->start);
            CHECK(avg.segment->end == direct.segment->end);
        }
    }
}

TEST_CASE("scale invariance of the argmax") {
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<I64> alpha_dist(-5, 5);
    for (int it = 0; it < 200; ++it) {
        const Vec scores = random_scores(rng, 60);
        const I64 alpha = alpha_dist(rng);
        const auto base = longest_segment_above<I64>(scores, alpha);
        for (I64 c : {2, 3, 7}) {
            Vec scaled(scores.size());
            for (std::size_t t = 0; t < scores.size(); ++t) scaled[t] = c * scores[t];
            const auto out = longest_segment_above<I64>(scaled, c * alpha);
            CHECK(base.found() == out.found());
            if (base.found()) {
                CHECK(base.segment->start == out.segment->start);
                CHECK(base.segment->end == out.segment->end);
                CHECK(out.segment->score == c * base.segment->score);
            }
        }
    }
}

TEST_CASE("linear work bound, including adversarial shapes") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<I64> alpha_dist(-8, 8);
    for (int it = 0; it < 200; ++it) {
        const Vec scores = random_scores(rng, 120);
        const auto out = longest_segment_above<I64>(scores, alpha_dist(rng));
        CHECK(out.iterations <= 4 * (scores.size() + 1));
    }
    for (std::size_t n : {0u, 1u, 2u, 3u, 10u, 101u, 1000u}) {
        for (I64 alpha : {-3, 0, 1, 100}) {
            Vec down(n, -1); // strictly decreasing prefixes: both ladders full
            auto out = longest_segment_above<I64>(down, alpha);
            CHECK(out.iterations <= 4 * (n + 1));
            Vec up(n, 1);
            out = longest_segment_above<I64>(up, alpha);
            CHECK(out.iterations <= 4 * (n + 1));
            Vec saw(n);
            for (std::size_t t = 0; t < n; ++t) saw[t] = (t % 2 == 0) ? 2 : -3;
            out = longest_segment_above<I64>(saw, alpha);
            CHECK(out.iterations <= 4 * (n + 1));
        }
    }
}

TEST_CASE("reversal duality of the ladders") {
    std::mt19937_64 rng(37);
    for (int it = 0; it < 300; ++it) {
        const Vec scores = random_scores(rng, 60);
        const auto f = prefix_scores<I64>(scores);
        const auto n = static_cast<I64>(scores.size());
        std::vector<I64> reversed_negated(f.size());
        for (I64 t = 0; t <= n; ++t) reversed_negated[t] = -f[n - t];
        const auto right = right_maxima<I64>(f);
        const auto left_of_rev = left_minima<I64>(reversed_negated);
        REQUIRE(right.positions.size() == left_of_rev.positions.size());
        for (std::size_t t = 0; t < right.positions.size(); ++t)
            CHECK(right.positions[t] == n - left_of_rev.positions[t]);
    }
}

TEST_CASE("floating mode agrees with exact mode on integer-valued doubles") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<I64> alpha_dist(-5, 5);
    for (int it = 0; it < 200; ++it) {
        const Vec scores = random_scores(rng, 80);
        const I64 alpha = alpha_dist(rng);
        const std::vector<double> reals(scores.begin(), scores.end());
        const auto exact = longest_segment_above<I64>(scores, alpha);
        const auto fp = longest_segment_above<double>(reals, static_cast<double>(alpha));
        CHECK(exact.found() == fp.found());
        if (exact.found()) {
            CHECK(exact.segment->start == fp.segment->start);
            CHECK(exact.segment->end == fp.segment->end);
        }
    }
}

TEST_CASE("minimum-length variant against the oracle") {
    std::mt19937_64 rng(43);
    for (int it = 0; it < 300; ++it) {
        const Vec scores = random_scores(rng, 60);
        for (I64 min_len : {1, 3, 10}) {
            const auto out = max_score_with_min_length<I64>(scores, min_len);
            const auto truth = oracle::brute_max_score_min_length(scores, min_len);
            CHECK(out.found() == truth.best_score.has_value());
            if (out.found()) {
                CHECK(static_cast<Int128>(out.segment->score) == *truth.best_score);
                // tie-break contract: smallest start, then smallest end
                CHECK(out.segment->start == truth.witnesses.front().start);
                CHECK(out.segment->end == truth.witnesses.front().end);
                CHECK(out.iterations <= 4 * (scores.size() + 1));
            }
        }
    }
}

TEST_CASE("operations are safe to run concurrently on shared input") {
    const Vec scores = [] {
        std::mt19937_64 rng(67);
        return random_scores(rng, 2000);
    }();
    const auto expected = longest_segment_above<I64>(scores, 0);
    std::vector<std::thread> workers;
    std::array<SearchOutcome<I64>, 8> results;
    for (std::size_t t = 0; t < results.size(); ++t)
        workers.emplace_back([&, t] { results[t] = longest_segment_above<I64>(scores, 0); });
    for (auto& w : workers) w.join();
    for (const auto& out : results) {
        CHECK(out.found() == expected.found());
        CHECK(out.iterations == expected.iterations);
        if (expected.found()) CHECK(*out.segment == *expected.segment);
    }
}

TEST_CASE("score sequence dispatch") {
    SUBCASE("non-finite values rejected") {
        CHECK_THROWS_AS(ScoreSequence::of_reals({1.0, std::numeric_limits<double>::infinity()}),
                        std::invalid_argument);
        CHECK_THROWS_AS(ScoreSequence::of_reals({std::numeric_limits<double>::quiet_NaN()}),
                        std::invalid_argument);
    }
    SUBCASE("exact mode keeps integer scores") {
        const auto seq = ScoreSequence::of_integers({-1, 3, -2, 4, -5, 1});
        const auto out = longest_segment_above(seq, ScoreValue{I64{3}});
        REQUIRE(out.found());
        CHECK(std::get<I64>(out.segment->score) == 4);
    }
    SUBCASE("threshold mode must match") {
        const auto seq = ScoreSequence::of_integers({1, 2});
        CHECK_THROWS_AS(longest_segment_above(seq, ScoreValue{0.5}), std::invalid_argument);
    }
    SUBCASE("float average over integer scores reports the exact sum") {
        const auto seq = ScoreSequence::of_integers({0, 1, 1, 0, 1, 0});
        const auto out = longest_segment_avg_above(seq, 0.6);
        REQUIRE(out.found());
        CHECK(out.segment->start == 1);
        CHECK(out.segment->end == 5);
        CHECK(std::get<I64>(out.segment->score) == 3);
    }
    SUBCASE("rational average requires exact mode") {
        const auto seq = ScoreSequence::of_reals({0.5, 1.5});
        CHECK_THROWS_AS(longest_segment_avg_above(seq, Rational(1, 2)), std::invalid_argument);
    }
}
