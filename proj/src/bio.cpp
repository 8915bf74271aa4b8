#include "longseg/bio.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>

#include "longseg/core.hpp"
#include "longseg/errors.hpp"

namespace longseg::bio {

namespace {

// units[q] = round(10^(-q/10) * 10^12), q = 0..93.
constexpr std::int64_t kErrorUnits[94] = {
    1000000000000LL, 794328234724LL, 630957344480LL, 501187233627LL, 398107170553LL, 316227766017LL,
    251188643151LL, 199526231497LL, 158489319246LL, 125892541179LL, 100000000000LL, 79432823472LL,
    63095734448LL, 50118723363LL, 39810717055LL, 31622776602LL, 25118864315LL, 19952623150LL,
    15848931925LL, 12589254118LL, 10000000000LL, 7943282347LL, 6309573445LL, 5011872336LL,
    3981071706LL, 3162277660LL, 2511886432LL, 1995262315LL, 1584893192LL, 1258925412LL,
    1000000000LL, 794328235LL, 630957344LL, 501187234LL, 398107171LL, 316227766LL,
    251188643LL, 199526231LL, 158489319LL, 125892541LL, 100000000LL, 79432823LL,
    63095734LL, 50118723LL, 39810717LL, 31622777LL, 25118864LL, 19952623LL,
    15848932LL, 12589254LL, 10000000LL, 7943282LL, 6309573LL, 5011872LL,
    3981072LL, 3162278LL, 2511886LL, 1995262LL, 1584893LL, 1258925LL,
    1000000LL, 794328LL, 630957LL, 501187LL, 398107LL, 316228LL,
    251189LL, 199526LL, 158489LL, 125893LL, 100000LL, 79433LL,
    63096LL, 50119LL, 39811LL, 31623LL, 25119LL, 19953LL,
    15849LL, 12589LL, 10000LL, 7943LL, 6310LL, 5012LL,
    3981LL, 3162LL, 2512LL, 1995LL, 1585LL, 1259LL,
    1000LL, 794LL, 631LL, 501LL,
};

int gc_score(char residue, bool strict) {
    switch (residue) {
        case 'G': case 'g': case 'C': case 'c':
            return 1;
        case 'A': case 'a': case 'T': case 't': case 'N': case 'n':
            return 0;
        default:
            if (strict)
                throw ResidueError(std::string("bad residue '") + residue + "'");
            return 0;
    }
}

bool blank(const std::string& line) {
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

std::string first_word(std::string_view text) {
    const auto end = text.find_first_of(" \t\r");
    return std::string(text.substr(0, end == std::string_view::npos ? text.size() : end));
}

// Strips a trailing CR so files with Windows line endings parse.
bool get_line(std::istream& in, std::string& line, std::uint64_t& line_no) {
    if (!std::getline(in, line)) return false;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
}

} // namespace

std::vector<int> phred_decode(std::string_view text, int offset) {
    std::vector<int> qualities;
    qualities.reserve(text.size());
    for (char c : text) {
        const int code = static_cast<unsigned char>(c);
        if (code < offset)
            throw QualityError("quality character code " + std::to_string(code) +
                               " below offset " + std::to_string(offset));
        qualities.push_back(code - offset);
    }
    return qualities;
}

std::int64_t phred_error_units(int q) {
    if (q < 0) throw QualityError("negative quality value");
    return kErrorUnits[std::min(q, 93)];
}

ErrorProfile ErrorProfile::from_qualities(std::span<const int> qualities) {
    ErrorProfile profile;
    profile.units.reserve(qualities.size());
    for (int q : qualities) profile.units.push_back(phred_error_units(q));
    return profile;
}

bool mean_at_most(Int128 unit_sum, std::int64_t len, const Rational& bound) {
    // mean = unit_sum / (10^12 · len)  <= num/den
    const Int128 lhs = checked_mul(unit_sum, static_cast<Int128>(bound.den));
    const Int128 rhs = checked_mul(checked_mul(static_cast<Int128>(bound.num),
                                               static_cast<Int128>(kErrorUnitScale)),
                                   static_cast<Int128>(len));
    return lhs <= rhs;
}

std::string RegionReport::tsv_row() const {
    if (!found()) return id + "\t0\t0\t0\t\t";
    return id + "\t" + std::to_string(start) + "\t" + std::to_string(end) + "\t" +
           std::to_string(length()) + "\t" + to_string(metric_num) + "\t" +
           to_string(metric_den);
}

RegionReport gc_longest_region(const SequenceRecord& record, const Rational& min_gc,
                               bool strict) {
    if (min_gc.num < 0 || min_gc.num > min_gc.den)
        throw std::invalid_argument("GC threshold must lie in [0, 1]");
    std::vector<std::int64_t> indicator(record.residues.size());
    for (std::size_t t = 0; t < record.residues.size(); ++t)
        indicator[t] = gc_score(record.residues[t], strict);
    const auto outcome =
        longest_segment_avg_above_rational(indicator, min_gc.num, min_gc.den);
    RegionReport report;
    report.id = record.id;
    if (outcome.segment) {
        report.start = outcome.segment->start;
        report.end = outcome.segment->end;
        report.metric_num = outcome.segment->score; // G/C count in the region
        report.metric_den = outcome.segment->length();
    }
    return report;
}

RegionReport trim_longest(const SequenceRecord& record, const Rational& max_error) {
    if (!record.has_qualities())
        throw QualityError("record '" + record.id + "' has no qualities");
    if (record.qualities.size() != record.residues.size())
        throw QualityError("record '" + record.id + "' quality length mismatch");
    if (max_error.num < 0 || max_error.num > max_error.den)
        throw std::invalid_argument("error threshold must lie in [0, 1]");

    const ErrorProfile profile = ErrorProfile::from_qualities(record.qualities);
    // mean error <= p/q  <=>  sum over the segment of (p·10^12 - q·units_k) >= 0.
    // The common gcd(q, 10^12) is divided out to keep magnitudes small.
    const std::int64_t g = std::gcd(max_error.den, kErrorUnitScale);
    const Int128 shift = static_cast<Int128>(max_error.num) * (kErrorUnitScale / g);
    const Int128 weight = max_error.den / g;
    std::vector<Int128> scores(profile.units.size());
    for (std::size_t t = 0; t < scores.size(); ++t)
        scores[t] = shift - weight * profile.units[t];
    const auto outcome = longest_segment_above<Int128>(scores, Int128{0});

    RegionReport report;
    report.id = record.id;
    if (outcome.segment) {
        report.start = outcome.segment->start;
        report.end = outcome.segment->end;
        Int128 unit_sum = 0;
        for (std::int64_t t = report.start; t <= report.end; ++t)
            unit_sum += profile.units[t - 1];
        report.metric_num = unit_sum;
        report.metric_den = static_cast<Int128>(kErrorUnitScale) * report.length();
    }
    return report;
}

bool contains_n(const SequenceRecord& record) {
    return record.residues.find_first_of("Nn") != std::string::npos;
}

bool FastaReader::next(SequenceRecord& out) {
    std::string line;
    if (!have_pending_) {
        for (;;) {
            if (!get_line(in_, line, line_no_)) return false;
            if (blank(line)) continue;
            if (line[0] != '>')
                throw ParseError(line_no_, "expected '>' header, got '" + line + "'");
            pending_id_ = first_word(std::string_view(line).substr(1));
            if (pending_id_.empty()) throw ParseError(line_no_, "empty FASTA id");
            have_pending_ = true;
            break;
        }
    }
    out.id = pending_id_;
    out.residues.clear();
    out.qualities.clear();
    have_pending_ = false;
    for (;;) {
        if (!get_line(in_, line, line_no_)) return true; // EOF ends the record
        if (blank(line)) continue;
        if (line[0] == '>') {
            pending_id_ = first_word(std::string_view(line).substr(1));
            if (pending_id_.empty()) throw ParseError(line_no_, "empty FASTA id");
            have_pending_ = true;
            return true;
        }
        out.residues += line;
    }
}

bool FastqReader::next(SequenceRecord& out) {
    std::string header;
    for (;;) {
        if (!get_line(in_, header, line_no_)) return false;
        if (!blank(header)) break; // blank lines tolerated between records only
    }
    if (header[0] != '@')
        throw ParseError(line_no_, "expected '@' header, got '" + header + "'");
    out.id = first_word(std::string_view(header).substr(1));
    if (out.id.empty()) throw ParseError(line_no_, "empty FASTQ id");

    std::string seq, plus, qual;
    if (!get_line(in_, seq, line_no_)) throw ParseError(line_no_, "truncated record: missing sequence");
    if (!get_line(in_, plus, line_no_)) throw ParseError(line_no_, "truncated record: missing '+' line");
    if (plus.empty() || plus[0] != '+') throw ParseError(line_no_, "expected '+' separator");
    if (!get_line(in_, qual, line_no_)) throw ParseError(line_no_, "truncated record: missing qualities");
    if (qual.size() != seq.size())
        throw ParseError(line_no_, "quality length " + std::to_string(qual.size()) +
                                       " != sequence length " + std::to_string(seq.size()));
    for (char c : qual)
        if (static_cast<unsigned char>(c) > 126)
            throw ParseError(line_no_, "non-printable quality character");
    out.residues = std::move(seq);
    try {
        out.qualities = phred_decode(qual, offset_);
    } catch (const QualityError& err) {
        throw ParseError(line_no_, err.what());
    }
    return true;
}

void write_fasta(const SequenceRecord& record, std::ostream& out) {
    out << '>' << record.id << '\n' << record.residues << '\n';
}

void write_fastq(const SequenceRecord& record, std::ostream& out, int offset) {
    out << '@' << record.id << '\n' << record.residues << "\n+\n";
    for (int q : record.qualities)
        out << static_cast<char>(std::min(q + offset, 126));
    out << '\n';
}

SequenceRecord slice(const SequenceRecord& record, std::int64_t start, std::int64_t end) {
    SequenceRecord out;
    out.id = record.id;
    if (start >= 1 && end >= start) {
        out.residues = record.residues.substr(start - 1, end - start + 1);
        if (record.has_qualities())
            out.qualities.assign(record.qualities.begin() + (start - 1),
                                 record.qualities.begin() + end);
    }
    return out;
}

void write_trimmed_fastq(const SequenceRecord& record, const RegionReport& region,
                         std::ostream& out, bool skip_empty, int offset) {
    if (!region.found() && skip_empty) return;
    write_fastq(slice(record, region.start, region.end), out, offset);
}

} // namespace longseg::bio
