#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "longseg/int128.hpp"
#include "longseg/rational.hpp"

namespace longseg::bio {

/// A named biological sequence, optionally with one Phred quality value per
/// residue.
struct SequenceRecord {
    std::string id;
    std::string residues;
    std::vector<int> qualities; // empty = no qualities (FASTA)

    bool has_qualities() const { return !qualities.empty(); }
};

/// Q values from an ASCII quality string: Q_k = code(char_k) - offset.
/// Throws QualityError when a character code falls below the offset.
std::vector<int> phred_decode(std::string_view text, int offset);

/// Fixed-point per-base error probability: units/10^12 = 10^(-Q/10), with Q
/// capped at 93 (the printable Phred+33 ceiling). The table is frozen so GC
/// and trimming decisions are exact integer arithmetic end to end and
/// bit-identical across platforms; values at Q multiples of 10 are exact
/// powers of ten.
inline constexpr std::int64_t kErrorUnitScale = 1'000'000'000'000LL;
std::int64_t phred_error_units(int q);

/// Position-specific error probabilities e_1..e_n as exact fixed-point units.
struct ErrorProfile {
    std::vector<std::int64_t> units;

    static ErrorProfile from_qualities(std::span<const int> qualities);
    double e_at(std::size_t index) const {
        return static_cast<double>(units[index]) / static_cast<double>(kErrorUnitScale);
    }
};

/// Exact test  mean(units)/10^12 <= bound  over a window of length len.
bool mean_at_most(Int128 unit_sum, std::int64_t len, const Rational& bound);

/// Per-record analysis outcome. `start`/`end` are 1-based inclusive; a report
/// with start == 0 means no region met the threshold. The achieved metric
/// (GC fraction, or mean error) is the exact rational metric_num/metric_den.
struct RegionReport {
    std::string id;
    std::int64_t start = 0;
    std::int64_t end = 0;
    Int128 metric_num = 0;
    Int128 metric_den = 0;

    bool found() const { return start > 0; }
    std::int64_t length() const { return found() ? end - start + 1 : 0; }
    std::string tsv_row() const;
};

/// Longest region with GC fraction >= min_gc (exact). G/C count 1, A/T/N
/// count 0, lowercase as uppercase; under `strict`, residues outside
/// {A,C,G,T,N} throw ResidueError, otherwise they score 0.
RegionReport gc_longest_region(const SequenceRecord& record, const Rational& min_gc,
                               bool strict = false);

/// Longest region whose mean error probability is <= max_error (exact).
/// Requires qualities; throws QualityError otherwise.
RegionReport trim_longest(const SequenceRecord& record, const Rational& max_error);

bool contains_n(const SequenceRecord& record);

/// Streaming FASTA reader: '>' headers, id up to first whitespace, sequence
/// lines concatenated, blank lines ignored.
class FastaReader {
public:
    explicit FastaReader(std::istream& in) : in_(in) {}

    /// Fills `out` with the next record; false at end of input.
    bool next(SequenceRecord& out);

private:
    std::istream& in_;
    std::string pending_id_;
    bool have_pending_ = false;
    std::uint64_t line_no_ = 0;
};

/// Streaming FASTQ reader: strict 4-line records, '+' line content ignored,
/// quality characters decoded with the given offset (33 or 64) and required
/// printable.
class FastqReader {
public:
    explicit FastqReader(std::istream& in, int offset = 33) : in_(in), offset_(offset) {}

    bool next(SequenceRecord& out);

private:
    std::istream& in_;
    int offset_;
    std::uint64_t line_no_ = 0;
};

void write_fasta(const SequenceRecord& record, std::ostream& out);
void write_fastq(const SequenceRecord& record, std::ostream& out, int offset = 33);

/// Record restricted to a 1-based closed interval; qualities sliced
/// identically when present.
SequenceRecord slice(const SequenceRecord& record, std::int64_t start, std::int64_t end);

/// Emits the record restricted to the report's region. Empty regions become
/// zero-length reads, or no output at all when skip_empty is set.
void write_trimmed_fastq(const SequenceRecord& record, const RegionReport& region,
                         std::ostream& out, bool skip_empty = false, int offset = 33);

} // namespace longseg::bio
