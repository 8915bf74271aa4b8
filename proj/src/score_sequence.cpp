#include "longseg/score_sequence.hpp"

#include <cmath>
#include <stdexcept>

namespace longseg {

namespace {

template <class S>
GenericOutcome erase(const SearchOutcome<S>& typed) {
    GenericOutcome out;
    out.iterations = typed.iterations;
    if (typed.segment)
        out.segment = GenericSegment{typed.segment->start, typed.segment->end,
                                     ScoreValue{typed.segment->score}};
    return out;
}

} // namespace

ScoreSequence ScoreSequence::of_integers(std::vector<std::int64_t> values) {
    return ScoreSequence(std::move(values));
}

ScoreSequence ScoreSequence::of_reals(std::vector<double> values) {
    for (double v : values)
        if (!std::isfinite(v)) throw std::invalid_argument("non-finite score rejected");
    return ScoreSequence(std::move(values));
}

std::size_t ScoreSequence::size() const {
    return exact() ? std::get<0>(values_).size() : std::get<1>(values_).size();
}

std::span<const std::int64_t> ScoreSequence::integers() const {
    return std::get<0>(values_);
}

std::span<const double> ScoreSequence::reals() const {
    return std::get<1>(values_);
}

GenericOutcome longest_segment_above(const ScoreSequence& seq, ScoreValue alpha) {
    if (seq.exact()) {
        if (alpha.index() != 0)
            throw std::invalid_argument("exact sequence needs an integer threshold");
        return erase(longest_segment_above<std::int64_t>(seq.integers(), std::get<0>(alpha)));
    }
    const double a = alpha.index() == 1 ? std::get<1>(alpha)
                                        : static_cast<double>(std::get<0>(alpha));
    if (!std::isfinite(a)) throw std::invalid_argument("threshold must be finite");
    return erase(longest_segment_above<double>(seq.reals(), a));
}

GenericOutcome longest_segment_avg_above(const ScoreSequence& seq, double beta) {
    if (!std::isfinite(beta)) throw std::invalid_argument("threshold must be finite");
    if (!seq.exact()) return erase(longest_segment_avg_above(seq.reals(), beta));
    // Integer sequence under a floating threshold: decide in doubles, but
    // report the exact integer sum of the winning segment.
    const auto ints = seq.integers();
    std::vector<double> reals(ints.begin(), ints.end());
    GenericOutcome out = erase(longest_segment_avg_above(std::span<const double>(reals), beta));
    if (out.segment) {
        std::int64_t sum = 0;
        for (std::int64_t t = out.segment->start; t <= out.segment->end; ++t)
            sum = checked_add(sum, ints[t - 1]);
        out.segment->score = ScoreValue{sum};
    }
    return out;
}

GenericOutcome longest_segment_avg_above(const ScoreSequence& seq, const Rational& beta) {
    if (!seq.exact())
        throw std::invalid_argument("rational threshold requires an exact integer sequence");
    return erase(longest_segment_avg_above_rational(seq.integers(), beta.num, beta.den));
}

GenericOutcome max_score_with_min_length(const ScoreSequence& seq, std::int64_t min_len) {
    if (seq.exact())
        return erase(max_score_with_min_length<std::int64_t>(seq.integers(), min_len));
    return erase(max_score_with_min_length<double>(seq.reals(), min_len));
}

} // namespace longseg
