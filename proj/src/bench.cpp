#include "longseg/bench.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "longseg/errors.hpp"

namespace longseg::bench {

namespace {

std::mt19937_64 engine_for(const Workload& w) {
    std::seed_seq seq{w.seed, static_cast<std::uint64_t>(w.kind),
                      static_cast<std::uint64_t>(w.n)};
    return std::mt19937_64(seq);
}

char random_base(std::mt19937_64& rng) {
    static constexpr char kBases[] = {'A', 'C', 'G', 'T'};
    return kBases[rng() % 4];
}

// Appends `count` copies of quality q.
void fill_q(std::vector<int>& qualities, std::int64_t count, int q) {
    qualities.insert(qualities.end(), static_cast<std::size_t>(count), q);
}

// Error valley: flat bad stretches at both ends, monotone staircase ramps
// down to a good middle plateau. The error profile never decreases outward
// from the middle, which is the shape chain-termination traces are assumed
// to have; most seeds force a real trim at thresholds around 0.02.
std::vector<int> unimodal_profile(std::int64_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> lo_dist(2, 4), hi_dist(25, 40);
    const int q_lo = lo_dist(rng), q_hi = hi_dist(rng);
    const auto cap = [n](std::int64_t v) { return std::min<std::int64_t>(n / 6, v); };
    const std::int64_t flat_l = cap(3 + static_cast<std::int64_t>(rng() % 8));
    const std::int64_t ramp_l = cap(5 + static_cast<std::int64_t>(rng() % 11));
    const std::int64_t flat_r = cap(3 + static_cast<std::int64_t>(rng() % 8));
    const std::int64_t ramp_r = cap(5 + static_cast<std::int64_t>(rng() % 11));
    std::vector<int> qualities;
    qualities.reserve(n);
    fill_q(qualities, flat_l, q_lo);
    for (std::int64_t t = 0; t < ramp_l; ++t)
        qualities.push_back(q_lo + static_cast<int>((q_hi - q_lo) * (t + 1) / (ramp_l + 1)));
    fill_q(qualities, n - flat_l - ramp_l - flat_r - ramp_r, q_hi);
    for (std::int64_t t = ramp_r; t >= 1; --t)
        qualities.push_back(q_lo + static_cast<int>((q_hi - q_lo) * t / (ramp_r + 1)));
    fill_q(qualities, flat_r, q_lo);
    qualities.resize(n, q_lo);
    return qualities;
}

// Two low-error plateaus (Q20, e = 0.01 exactly) of different widths around
// a short Q0 spike (e = 1), with high-error tails. At E = 0.02 no feasible
// segment can contain a spike base (1 > 0.01·P + 0.02 for P < 98, and the
// plateaus are kept below that), so the optimal trim lives inside one
// plateau; a fixed-window heuristic that seeds leftmost commits to the left
// plateau, the shorter one for about half the seeds.
std::vector<int> two_hump_profile(std::int64_t n, std::mt19937_64& rng) {
    const int q_tail = 2 + static_cast<int>(rng() % 2); // e ~ 0.50..0.63
    const std::int64_t spike = 2 + static_cast<std::int64_t>(rng() % 2);
    const std::int64_t tail_l = 5 + static_cast<std::int64_t>(rng() % 11);
    const std::int64_t tail_r = 5 + static_cast<std::int64_t>(rng() % 11);
    const std::int64_t body = n - tail_l - tail_r - spike;
    std::vector<int> qualities;
    if (body < 25) { // too short for two humps: one plateau
        fill_q(qualities, n, 20);
        qualities.resize(n, 20);
        return qualities;
    }
    const std::int64_t short_p = 12 + static_cast<std::int64_t>(rng() % 13);
    const std::int64_t long_p = std::min<std::int64_t>(body - short_p, 90);
    const bool left_short = rng() % 2 == 0;
    const std::int64_t plateau_l = left_short ? short_p : long_p;
    const std::int64_t plateau_r = left_short ? long_p : short_p;
    qualities.reserve(n);
    fill_q(qualities, tail_l, q_tail);
    fill_q(qualities, plateau_l, 20);
    fill_q(qualities, spike, 0);
    fill_q(qualities, plateau_r, 20);
    fill_q(qualities, n - static_cast<std::int64_t>(qualities.size()), q_tail);
    return qualities;
}

} // namespace

const char* workload_name(WorkloadKind kind) {
    switch (kind) {
        case WorkloadKind::Uniform: return "uniform";
        case WorkloadKind::Sawtooth: return "sawtooth";
        case WorkloadKind::Monotone: return "monotone";
        case WorkloadKind::UnimodalError: return "unimodal-error";
        case WorkloadKind::TwoHumpError: return "two-hump-error";
    }
    return "?";
}

bool is_read_workload(WorkloadKind kind) {
    return kind == WorkloadKind::UnimodalError || kind == WorkloadKind::TwoHumpError;
}

std::vector<std::int64_t> generate_scores(const Workload& workload) {
    if (is_read_workload(workload.kind))
        throw std::invalid_argument("read workload asked for scores");
    auto rng = engine_for(workload);
    std::vector<std::int64_t> scores(static_cast<std::size_t>(workload.n));
    switch (workload.kind) {
        case WorkloadKind::Uniform: {
            std::uniform_int_distribution<std::int64_t> dist(-10, 10);
            for (auto& s : scores) s = dist(rng);
            break;
        }
        case WorkloadKind::Sawtooth: {
            const std::int64_t rise = 1 + static_cast<std::int64_t>(rng() % 3);
            const std::int64_t drop = rise + 1 + static_cast<std::int64_t>(rng() % 3);
            for (std::size_t t = 0; t < scores.size(); ++t)
                scores[t] = (t % 2 == 0) ? rise : -drop;
            break;
        }
        case WorkloadKind::Monotone: {
            std::int64_t value = -static_cast<std::int64_t>(workload.n);
            for (auto& s : scores) {
                value += 1 + static_cast<std::int64_t>(rng() % 3);
                s = value;
            }
            break;
        }
        default:
            break;
    }
    return scores;
}

bio::SequenceRecord generate_read(const Workload& workload) {
    if (!is_read_workload(workload.kind))
        throw std::invalid_argument("score workload asked for a read");
    auto rng = engine_for(workload);
    bio::SequenceRecord record;
    record.id = std::string(workload_name(workload.kind)) + "-" +
                std::to_string(workload.seed);
    record.residues.reserve(workload.n);
    for (std::int64_t t = 0; t < workload.n; ++t) record.residues.push_back(random_base(rng));
    record.qualities = workload.kind == WorkloadKind::UnimodalError
                           ? unimodal_profile(workload.n, rng)
                           : two_hump_profile(workload.n, rng);
    return record;
}

bio::RegionReport sliding_window_trim(const bio::SequenceRecord& record,
                                      const Rational& max_error, std::int64_t window) {
    if (window < 1) throw std::invalid_argument("window must be >= 1");
    if (!record.has_qualities())
        throw QualityError("record '" + record.id + "' has no qualities");
    bio::RegionReport report;
    report.id = record.id;
    const auto n = static_cast<std::int64_t>(record.qualities.size());
    if (n == 0) return report;

    const bio::ErrorProfile profile = bio::ErrorProfile::from_qualities(record.qualities);
    const auto& u = profile.units;
    const std::int64_t w = std::min(window, n);

    // Seed window: smallest error sum, leftmost on ties.
    Int128 sum = 0;
    for (std::int64_t t = 0; t < w; ++t) sum += u[t];
    Int128 best_sum = sum;
    std::int64_t best_start = 1;
    for (std::int64_t start = 2; start + w - 1 <= n; ++start) {
        sum += u[start + w - 2];
        sum -= u[start - 2];
        if (sum < best_sum) {
            best_sum = sum;
            best_start = start;
        }
    }
    if (!bio::mean_at_most(best_sum, w, max_error)) return report;

    // Bidirectional greedy growth: take the cheaper admissible neighbour.
    std::int64_t lo = best_start, hi = best_start + w - 1;
    Int128 region_sum = best_sum;
    for (;;) {
        const bool can_left =
            lo > 1 && bio::mean_at_most(region_sum + u[lo - 2], hi - lo + 2, max_error);
        const bool can_right =
            hi < n && bio::mean_at_most(region_sum + u[hi], hi - lo + 2, max_error);
        if (!can_left && !can_right) break;
        const bool take_left =
            can_left && (!can_right || u[lo - 2] <= u[hi]);
        if (take_left) {
            --lo;
            region_sum += u[lo - 1];
        } else {
            ++hi;
            region_sum += u[hi - 1];
        }
    }
    report.start = lo;
    report.end = hi;
    report.metric_num = region_sum;
    report.metric_den = static_cast<Int128>(bio::kErrorUnitScale) * (hi - lo + 1);
    return report;
}

} // namespace longseg::bench
