#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "longseg/bench.hpp"
#include "longseg/bio.hpp"
#include "longseg/core.hpp"
#include "longseg/errors.hpp"
#include "longseg/oracle.hpp"
#include "longseg/rational.hpp"
#include "longseg/score_sequence.hpp"

namespace {

using namespace longseg;

constexpr int kExitFound = 0;
constexpr int kExitNone = 1;
constexpr int kExitError = 2;

struct InputStream {
    std::unique_ptr<std::ifstream> file;
    std::istream* stream = nullptr;
};

InputStream open_input(const std::string& path) {
    InputStream in;
    if (path.empty() || path == "-") {
        in.stream = &std::cin;
        return in;
    }
    in.file = std::make_unique<std::ifstream>(path);
    if (!*in.file) throw std::runtime_error("cannot open '" + path + "'");
    in.stream = in.file.get();
    return in;
}

std::vector<std::string> read_tokens(std::istream& in) {
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

bool any_non_integral(const std::vector<std::string>& tokens) {
    for (const auto& t : tokens)
        if (looks_non_integral(t)) return true;
    return false;
}

std::int64_t parse_i64(const std::string& text) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw std::invalid_argument("bad integer '" + text + "'");
    return v;
}

std::int64_t rational_ceil(const Rational& r) {
    std::int64_t c = r.num / r.den;
    if (r.num % r.den > 0) ++c;
    return c;
}

/// Scores scaled by `scale`, each required to land on an integer.
std::vector<std::int64_t> scaled_integers(const std::vector<std::string>& tokens,
                                          std::int64_t scale) {
    std::vector<std::int64_t> scores;
    scores.reserve(tokens.size());
    for (const auto& t : tokens) {
        const Rational r = parse_rational(t);
        const Int128 scaled = static_cast<Int128>(r.num) * scale;
        if (scaled % r.den != 0)
            throw std::invalid_argument("'" + t + "' times " + std::to_string(scale) +
                                        " is not an integer");
        const Int128 v = scaled / r.den;
        if (v < INT64_MIN || v > INT64_MAX)
            throw std::invalid_argument("scaled score out of range: '" + t + "'");
        scores.push_back(static_cast<std::int64_t>(v));
    }
    return scores;
}

std::vector<double> parse_reals(const std::vector<std::string>& tokens) {
    std::vector<double> scores;
    scores.reserve(tokens.size());
    for (const auto& t : tokens) {
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(t, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad number '" + t + "'");
        }
        if (used != t.size()) throw std::invalid_argument("bad number '" + t + "'");
        scores.push_back(v);
    }
    return scores;
}

std::vector<std::int64_t> parse_integers(const std::vector<std::string>& tokens) {
    std::vector<std::int64_t> scores;
    scores.reserve(tokens.size());
    for (const auto& t : tokens) scores.push_back(parse_i64(t));
    return scores;
}

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

/// Exact decimal rendering of num/den; falls back to "p/q" if the expansion
/// does not terminate within 30 digits (cannot happen for decimal inputs).
std::string format_exact(std::int64_t num, std::int64_t den) {
    const Rational r(num, den);
    if (r.den == 1) return std::to_string(r.num);
    std::string out = r.num < 0 ? "-" : "";
    const std::uint64_t d = static_cast<std::uint64_t>(r.den);
    std::uint64_t whole = static_cast<std::uint64_t>(r.num < 0 ? -r.num : r.num);
    out += std::to_string(whole / d);
    out += '.';
    std::uint64_t rem = whole % d;
    for (int digits = 0; rem != 0; ++digits) {
        if (digits == 30) return r.str();
        rem *= 10;
        out += static_cast<char>('0' + rem / d);
        rem %= d;
    }
    return out;
}

int print_outcome(const GenericOutcome& outcome, std::int64_t scale) {
    if (!outcome.segment) {
        std::cout << "nil\n";
        return kExitNone;
    }
    const auto& seg = *outcome.segment;
    std::string score;
    if (seg.score.index() == 0)
        score = scale == 1 ? std::to_string(std::get<0>(seg.score))
                           : format_exact(std::get<0>(seg.score), scale);
    else
        score = format_double(std::get<1>(seg.score));
    std::cout << seg.start << '\t' << seg.end << '\t' << seg.length() << '\t' << score
              << '\n';
    return kExitFound;
}

struct ScoreOptions {
    std::string input = "-";
    std::int64_t exact_scale = 0; // 0 = not given
};

ScoreSequence load_sequence(const ScoreOptions& opt, std::istream& in, bool& exact) {
    const auto tokens = read_tokens(in);
    if (opt.exact_scale != 0) {
        exact = true;
        return ScoreSequence::of_integers(scaled_integers(tokens, opt.exact_scale));
    }
    if (any_non_integral(tokens)) {
        exact = false;
        return ScoreSequence::of_reals(parse_reals(tokens));
    }
    exact = true;
    return ScoreSequence::of_integers(parse_integers(tokens));
}

int cmd_run(const ScoreOptions& opt, const std::string& alpha_text) {
    auto in = open_input(opt.input);
    bool exact = false;
    const ScoreSequence seq = load_sequence(opt, *in.stream, exact);
    const std::int64_t scale = opt.exact_scale != 0 ? opt.exact_scale : 1;
    GenericOutcome outcome;
    if (exact) {
        // Integer sums: comparing against ceil(scale·alpha) is exact for any
        // rational alpha.
        Rational alpha = parse_rational(alpha_text);
        if (scale != 1) alpha = alpha * Rational(scale, 1);
        outcome = longest_segment_above(seq, ScoreValue{rational_ceil(alpha)});
    } else {
        outcome = longest_segment_above(seq, ScoreValue{std::stod(alpha_text)});
    }
    return print_outcome(outcome, scale);
}

int cmd_avg(const ScoreOptions& opt, const std::string& beta_text) {
    auto in = open_input(opt.input);
    bool exact = false;
    const ScoreSequence seq = load_sequence(opt, *in.stream, exact);
    const std::int64_t scale = opt.exact_scale != 0 ? opt.exact_scale : 1;
    GenericOutcome outcome;
    const bool rational_form = beta_text.find('/') != std::string::npos;
    if (exact && (rational_form || scale != 1 || !looks_non_integral(beta_text))) {
        Rational beta = parse_rational(beta_text);
        if (scale != 1) beta = beta * Rational(scale, 1);
        outcome = longest_segment_avg_above(seq, beta);
    } else if (rational_form) {
        throw std::invalid_argument(
            "a p/q threshold needs integer scores; rerun with --exact-scale");
    } else {
        outcome = longest_segment_avg_above(seq, std::stod(beta_text));
    }
    return print_outcome(outcome, scale);
}

int cmd_minlen(const ScoreOptions& opt, std::int64_t min_len) {
    auto in = open_input(opt.input);
    bool exact = false;
    const ScoreSequence seq = load_sequence(opt, *in.stream, exact);
    const std::int64_t scale = opt.exact_scale != 0 ? opt.exact_scale : 1;
    return print_outcome(max_score_with_min_length(seq, min_len), scale);
}

struct GcOptions {
    std::string input = "-";
    std::string min_gc;
    bool strict = false;
    bool exclude_n = false;
};

int cmd_gc(const GcOptions& opt) {
    const Rational threshold = parse_rational(opt.min_gc);
    auto in = open_input(opt.input);
    bio::FastaReader reader(*in.stream);
    bio::SequenceRecord record;
    bool all_found = true;
    bool any = false;
    while (reader.next(record)) {
        if (opt.exclude_n && bio::contains_n(record)) continue;
        const bio::RegionReport report = bio::gc_longest_region(record, threshold, opt.strict);
        std::cout << report.tsv_row() << '\n';
        any = true;
        if (!report.found()) all_found = false;
    }
    return any && !all_found ? kExitNone : kExitFound;
}

struct TrimOptions {
    std::string input = "-";
    std::string max_error;
    int phred_offset = 33;
    std::string report_path;
    bool skip_empty = false;
};

int cmd_trim(const TrimOptions& opt) {
    const Rational threshold = parse_rational(opt.max_error);
    auto in = open_input(opt.input);
    std::ofstream report_file;
    if (!opt.report_path.empty()) {
        report_file.open(opt.report_path);
        if (!report_file) throw std::runtime_error("cannot open '" + opt.report_path + "'");
    }
    bio::FastqReader reader(*in.stream, opt.phred_offset);
    bio::SequenceRecord record;
    bool all_found = true;
    bool any = false;
    while (reader.next(record)) {
        const bio::RegionReport report = bio::trim_longest(record, threshold);
        bio::write_trimmed_fastq(record, report, std::cout, opt.skip_empty, opt.phred_offset);
        if (report_file.is_open()) report_file << report.tsv_row() << '\n';
        any = true;
        if (!report.found()) all_found = false;
    }
    return any && !all_found ? kExitNone : kExitFound;
}

struct BenchOptions {
    std::vector<std::int64_t> sizes{1000, 10000, 100000};
    std::uint64_t seed = 42;
    std::int64_t alpha = 0;
    std::string max_error = "1/50";
    std::int64_t window = 10;
    std::int64_t reads = 20;
    std::int64_t read_length = 150;
};

int cmd_bench(const BenchOptions& opt) {
    const Rational threshold = parse_rational(opt.max_error);
    std::cout << "workload\tn\tseed\twall_ms\titerations\titer_budget\tresult\t"
                 "oracle_ms\toptimal_len\theuristic_len\tdeficit\n";
    for (auto kind : {bench::WorkloadKind::Uniform, bench::WorkloadKind::Sawtooth,
                      bench::WorkloadKind::Monotone}) {
        for (std::int64_t n : opt.sizes) {
            const bench::Workload workload{kind, n, opt.seed};
            const auto scores = bench::generate_scores(workload);
            bench::Stopwatch watch;
            const auto outcome = longest_segment_above<std::int64_t>(scores, opt.alpha);
            const double ms = watch.ms();
            std::string result = "nil";
            if (outcome.segment)
                result = std::to_string(outcome.segment->start) + ":" +
                         std::to_string(outcome.segment->end);
            std::string oracle_ms = "-";
            if (n <= static_cast<std::int64_t>(oracle::kDefaultCap)) {
                bench::Stopwatch oracle_watch;
                const auto truth = oracle::brute_longest_above(
                    std::span<const std::int64_t>(scores), opt.alpha);
                oracle_ms = format_double(oracle_watch.ms());
                const std::int64_t got = outcome.segment ? outcome.segment->length() : 0;
                if (got != truth.best_length) oracle_ms += "(DISAGREE)";
            }
            std::cout << bench::workload_name(kind) << '\t' << n << '\t' << opt.seed << '\t'
                      << format_double(ms) << '\t' << outcome.iterations << '\t'
                      << 4 * (n + 1) << '\t' << result << '\t' << oracle_ms << "\t-\t-\t-\n";
        }
    }
    for (auto kind : {bench::WorkloadKind::UnimodalError, bench::WorkloadKind::TwoHumpError}) {
        for (std::int64_t r = 0; r < opt.reads; ++r) {
            const bench::Workload workload{kind, opt.read_length, opt.seed + static_cast<std::uint64_t>(r)};
            const auto record = bench::generate_read(workload);
            bench::Stopwatch watch;
            const auto optimal = bio::trim_longest(record, threshold);
            const double ms = watch.ms();
            const auto heuristic = bench::sliding_window_trim(record, threshold, opt.window);
            std::string result = "nil";
            if (optimal.found())
                result = std::to_string(optimal.start) + ":" + std::to_string(optimal.end);
            std::cout << bench::workload_name(kind) << '\t' << opt.read_length << '\t'
                      << workload.seed << '\t' << format_double(ms) << "\t-\t-\t" << result
                      << "\t-\t" << optimal.length() << '\t' << heuristic.length() << '\t'
                      << optimal.length() - heuristic.length() << '\n';
        }
    }
    return kExitFound;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"longest segment above a threshold, in linear time"};
    app.require_subcommand(1);

    ScoreOptions run_opt;
    std::string alpha = "0";
    auto* run = app.add_subcommand("run", "longest segment with sum >= alpha");
    run->add_option("input", run_opt.input, "numbers file, or - for stdin");
    run->add_option("--alpha", alpha, "score threshold (integer, decimal or p/q)")->required();
    run->add_option("--exact-scale", run_opt.exact_scale,
                    "multiply scores by this integer and stay in exact mode");

    ScoreOptions avg_opt;
    std::string beta = "0";
    auto* avg = app.add_subcommand("avg", "longest segment with average >= beta");
    avg->add_option("input", avg_opt.input, "numbers file, or - for stdin");
    avg->add_option("--beta", beta, "average threshold (p/q form is exact)")->required();
    avg->add_option("--exact-scale", avg_opt.exact_scale,
                    "multiply scores by this integer and stay in exact mode");

    ScoreOptions minlen_opt;
    std::int64_t min_len = 1;
    auto* minlen = app.add_subcommand("minlen", "max-score segment of length >= L");
    minlen->add_option("input", minlen_opt.input, "numbers file, or - for stdin");
    minlen->add_option("--min-len", min_len, "length lower bound")->required()
        ->check(CLI::PositiveNumber);
    minlen->add_option("--exact-scale", minlen_opt.exact_scale,
                       "multiply scores by this integer and stay in exact mode");

    GcOptions gc_opt;
    auto* gc = app.add_subcommand("gc", "longest GC-rich region per FASTA record");
    gc->add_option("input", gc_opt.input, "FASTA file, or - for stdin");
    gc->add_option("--min-gc", gc_opt.min_gc, "GC fraction threshold (p/q or decimal)")
        ->required();
    gc->add_flag("--strict", gc_opt.strict, "reject residues outside ACGTN");
    gc->add_flag("--exclude-n", gc_opt.exclude_n, "skip records containing N");

    TrimOptions trim_opt;
    auto* trim = app.add_subcommand("trim", "quality-trim FASTQ reads");
    trim->add_option("input", trim_opt.input, "FASTQ file, or - for stdin");
    trim->add_option("--max-error", trim_opt.max_error,
                     "mean error threshold (p/q or decimal)")->required();
    trim->add_option("--phred-offset", trim_opt.phred_offset, "quality encoding offset")
        ->check(CLI::IsMember({33, 64}));
    trim->add_option("--report", trim_opt.report_path, "write per-record TSV report here");
    trim->add_flag("--skip-empty", trim_opt.skip_empty, "drop reads with no usable region");

    BenchOptions bench_opt;
    auto* bench_cmd = app.add_subcommand("bench", "synthetic workload measurements");
    bench_cmd->add_option("--sizes", bench_opt.sizes, "score-sequence sizes")->delimiter(',');
    bench_cmd->add_option("--seed", bench_opt.seed, "base RNG seed");
    bench_cmd->add_option("--alpha", bench_opt.alpha, "threshold for score workloads");
    bench_cmd->add_option("--max-error", bench_opt.max_error, "threshold for read workloads");
    bench_cmd->add_option("--window", bench_opt.window, "heuristic window width");
    bench_cmd->add_option("--reads", bench_opt.reads, "reads per read workload");
    bench_cmd->add_option("--read-length", bench_opt.read_length, "generated read length");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (run->parsed()) return cmd_run(run_opt, alpha);
        if (avg->parsed()) return cmd_avg(avg_opt, beta);
        if (minlen->parsed()) return cmd_minlen(minlen_opt, min_len);
        if (gc->parsed()) return cmd_gc(gc_opt);
        if (trim->parsed()) return cmd_trim(trim_opt);
        if (bench_cmd->parsed()) return cmd_bench(bench_opt);
    } catch (const std::exception& e) {
        std::cerr << "longseg: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
