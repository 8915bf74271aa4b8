"""Linear-time longest-segment searches with genomics front ends.

Exact integer and floating score modes; GC-rich region finding and FASTQ
quality trimming decided in exact rational arithmetic.
"""

from ._longseg import (
    Region,
    SearchResult,
    Segment,
    QualityError,
    ResidueError,
    ScoreOverflowError,
    __version__,
    gc_longest_region,
    left_minima,
    longest_segment_above,
    longest_segment_avg_above,
    longest_segment_avg_above_rational,
    max_score_with_min_length,
    phred_decode,
    prefix_scores,
    right_maxima,
    trim_longest,
)

__all__ = [
    "Region",
    "SearchResult",
    "Segment",
    "QualityError",
    "ResidueError",
    "ScoreOverflowError",
    "__version__",
    "gc_longest_region",
    "left_minima",
    "longest_segment_above",
    "longest_segment_avg_above",
    "longest_segment_avg_above_rational",
    "max_score_with_min_length",
    "phred_decode",
    "prefix_scores",
    "right_maxima",
    "trim_longest",
]
