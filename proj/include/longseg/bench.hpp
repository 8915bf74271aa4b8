#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "longseg/bio.hpp"
#include "longseg/rational.hpp"

namespace longseg::bench {

/// Synthetic inputs for benchmarks and acceptance runs. The same
/// (kind, n, seed) always regenerates the identical sequence.
///  - Uniform: integer scores uniform in [-10, 10].
///  - Sawtooth: descending zigzag (alternating small rise, larger drop), the
///    ladder-heavy adversarial shape.
///  - Monotone: strictly increasing scores.
///  - UnimodalError: read whose error profile falls monotonically to a
///    low-error plateau and rises again toward the 3' end.
///  - TwoHumpError: read with two low-error plateaus of different widths
///    split by a short uncrossable spike; a window heuristic commits to one
///    plateau and cannot know whether the other is longer.
enum class WorkloadKind { Uniform, Sawtooth, Monotone, UnimodalError, TwoHumpError };

struct Workload {
    WorkloadKind kind = WorkloadKind::Uniform;
    std::int64_t n = 0;
    std::uint64_t seed = 0;
};

const char* workload_name(WorkloadKind kind);
bool is_read_workload(WorkloadKind kind);

/// Score-sequence workloads (Uniform, Sawtooth, Monotone).
std::vector<std::int64_t> generate_scores(const Workload& workload);

/// Read workloads (UnimodalError, TwoHumpError). The record's qualities
/// encode the designed error profile; n is the read length.
bio::SequenceRecord generate_read(const Workload& workload);

/// The heuristic foil: locate the window of `window` bases with the smallest
/// error sum (leftmost on ties), reject it if its mean error exceeds
/// max_error, then greedily grow one base at a time toward the side with the
/// smaller error while the running mean stays within the threshold. The
/// returned region always satisfies the threshold; it is not guaranteed to be
/// the longest one.
bio::RegionReport sliding_window_trim(const bio::SequenceRecord& record,
                                      const Rational& max_error, std::int64_t window = 10);

class Stopwatch {
public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

} // namespace longseg::bench
