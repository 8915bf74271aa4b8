#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "longseg/bench.hpp"
#include "longseg/bio.hpp"
#include "longseg/core.hpp"
#include "longseg/errors.hpp"
#include "longseg/rational.hpp"

namespace py = pybind11;
using namespace longseg;

namespace {

// Exchange types kept independent of the C++ score templates: positions as
// plain ints, scores as python numbers (exact ints stay exact).
struct PySegment {
    std::int64_t start;
    std::int64_t end;
    py::object score;

    std::int64_t length() const { return end - start + 1; }
};

struct PyResult {
    std::optional<PySegment> segment;
    std::uint64_t iterations;
};

struct PyRegion {
    std::int64_t start;
    std::int64_t end;
    py::object metric_num;
    py::object metric_den;

    std::int64_t length() const { return end - start + 1; }
};

py::object int_from_128(Int128 v) {
    return py::module_::import("builtins").attr("int")(to_string(v));
}

template <class S>
PyResult wrap(const SearchOutcome<S>& outcome) {
    PyResult out{std::nullopt, outcome.iterations};
    if (outcome.segment)
        out.segment = PySegment{outcome.segment->start, outcome.segment->end,
                                py::cast(outcome.segment->score)};
    return out;
}

std::optional<PyRegion> wrap_region(const bio::RegionReport& report) {
    if (!report.found()) return std::nullopt;
    return PyRegion{report.start, report.end, int_from_128(report.metric_num),
                    int_from_128(report.metric_den)};
}

bio::SequenceRecord make_record(const std::string& sequence, const std::string& qualities,
                                int offset) {
    bio::SequenceRecord record;
    record.id = "py";
    record.residues = sequence;
    if (!qualities.empty()) record.qualities = bio::phred_decode(qualities, offset);
    return record;
}

} // namespace

PYBIND11_MODULE(_longseg, m) {
    m.doc() = "linear-time longest-segment searches with genomics front ends";

    py::class_<PySegment>(m, "Segment")
        .def_readonly("start", &PySegment::start)
        .def_readonly("end", &PySegment::end)
        .def_readonly("score", &PySegment::score)
        .def_property_readonly("length", &PySegment::length)
        .def("__repr__", [](const PySegment& s) {
            return "Segment(start=" + std::to_string(s.start) +
                   ", end=" + std::to_string(s.end) +
                   ", score=" + py::str(s.score).cast<std::string>() + ")";
        });

    py::class_<PyResult>(m, "SearchResult")
        .def_readonly("segment", &PyResult::segment)
        .def_readonly("iterations", &PyResult::iterations)
        .def("__bool__", [](const PyResult& r) { return r.segment.has_value(); });

    py::class_<PyRegion>(m, "Region")
        .def_readonly("start", &PyRegion::start)
        .def_readonly("end", &PyRegion::end)
        .def_readonly("metric_num", &PyRegion::metric_num)
        .def_readonly("metric_den", &PyRegion::metric_den)
        .def_property_readonly("length", &PyRegion::length);

    m.def(
        "longest_segment_above",
        [](const std::vector<std::int64_t>& scores, std::int64_t alpha) {
            return wrap(longest_segment_above<std::int64_t>(scores, alpha));
        },
        py::arg("scores"), py::arg("alpha"),
        "Longest segment with sum >= alpha (exact integer mode).");
    m.def(
        "longest_segment_above",
        [](const std::vector<double>& scores, double alpha) {
            return wrap(longest_segment_above<double>(scores, alpha));
        },
        py::arg("scores"), py::arg("alpha"),
        "Longest segment with sum >= alpha (floating mode).");

    m.def(
        "longest_segment_avg_above",
        [](const std::vector<double>& scores, double beta) {
            return wrap(longest_segment_avg_above(scores, beta));
        },
        py::arg("scores"), py::arg("beta"),
        "Longest segment with average >= beta (floating mode).");
    m.def(
        "longest_segment_avg_above_rational",
        [](const std::vector<std::int64_t>& scores, std::int64_t p, std::int64_t q) {
            return wrap(longest_segment_avg_above_rational(scores, p, q));
        },
        py::arg("scores"), py::arg("p"), py::arg("q"),
        "Longest segment with average >= p/q, decided exactly.");

    m.def(
        "max_score_with_min_length",
        [](const std::vector<std::int64_t>& scores, std::int64_t min_len) {
            return wrap(max_score_with_min_length<std::int64_t>(scores, min_len));
        },
        py::arg("scores"), py::arg("min_len"));
    m.def(
        "max_score_with_min_length",
        [](const std::vector<double>& scores, std::int64_t min_len) {
            return wrap(max_score_with_min_length<double>(scores, min_len));
        },
        py::arg("scores"), py::arg("min_len"));

    m.def(
        "prefix_scores",
        [](const std::vector<std::int64_t>& scores) {
            return prefix_scores<std::int64_t>(scores);
        },
        py::arg("scores"));
    m.def(
        "left_minima",
        [](const std::vector<std::int64_t>& f) { return left_minima<std::int64_t>(f).positions; },
        py::arg("prefix_scores"));
    m.def(
        "right_maxima",
        [](const std::vector<std::int64_t>& f) { return right_maxima<std::int64_t>(f).positions; },
        py::arg("prefix_scores"));

    m.def("phred_decode", &bio::phred_decode, py::arg("text"), py::arg("offset") = 33);

    m.def(
        "gc_longest_region",
        [](const std::string& sequence, std::int64_t p, std::int64_t q, bool strict) {
            return wrap_region(
                bio::gc_longest_region(make_record(sequence, "", 33), Rational(p, q), strict));
        },
        py::arg("sequence"), py::arg("p"), py::arg("q"), py::arg("strict") = false,
        "Longest region with GC fraction >= p/q; None when there is none.");

    m.def(
        "trim_longest",
        [](const std::string& sequence, const std::string& qualities, std::int64_t p,
           std::int64_t q, int offset) {
            return wrap_region(
                bio::trim_longest(make_record(sequence, qualities, offset), Rational(p, q)));
        },
        py::arg("sequence"), py::arg("qualities"), py::arg("p"), py::arg("q"),
        py::arg("offset") = 33,
        "Longest region with mean error probability <= p/q; None when there is none.");

    py::register_exception<OverflowError>(m, "ScoreOverflowError", PyExc_OverflowError);
    py::register_exception<QualityError>(m, "QualityError", PyExc_ValueError);
    py::register_exception<ResidueError>(m, "ResidueError", PyExc_ValueError);

    m.attr("__version__") = "0.1.0";
}
