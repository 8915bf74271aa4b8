#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "longseg/core.hpp"
#include "longseg/rational.hpp"

namespace longseg {

/// A score or threshold in whichever arithmetic mode the sequence uses.
using ScoreValue = std::variant<std::int64_t, double>;

/// Ordered list of scores sharing one arithmetic mode: exact int64 (overflow
/// is a reported error) or double (non-finite values rejected at
/// construction, comparisons raw with no epsilon).
class ScoreSequence {
public:
    static ScoreSequence of_integers(std::vector<std::int64_t> values);
    static ScoreSequence of_reals(std::vector<double> values); // throws on non-finite

    bool exact() const { return values_.index() == 0; }
    std::size_t size() const;

    std::span<const std::int64_t> integers() const; // pre: exact()
    std::span<const double> reals() const;          // pre: !exact()

private:
    explicit ScoreSequence(std::vector<std::int64_t> v) : values_(std::move(v)) {}
    explicit ScoreSequence(std::vector<double> v) : values_(std::move(v)) {}

    std::variant<std::vector<std::int64_t>, std::vector<double>> values_;
};

struct GenericSegment {
    std::int64_t start = 0;
    std::int64_t end = 0;
    ScoreValue score{std::int64_t{0}};

    std::int64_t length() const { return end - start + 1; }
};

struct GenericOutcome {
    std::optional<GenericSegment> segment;
    std::uint64_t iterations = 0;

    bool found() const { return segment.has_value(); }
};

/// Mode-dispatching front ends over the typed operations. The threshold must
/// live in the sequence's arithmetic mode (int64 for exact sequences, double
/// for real ones); a mismatch throws std::invalid_argument.
GenericOutcome longest_segment_above(const ScoreSequence& seq, ScoreValue alpha);
GenericOutcome longest_segment_avg_above(const ScoreSequence& seq, double beta);
GenericOutcome longest_segment_avg_above(const ScoreSequence& seq, const Rational& beta);
GenericOutcome max_score_with_min_length(const ScoreSequence& seq, std::int64_t min_len);

} // namespace longseg
