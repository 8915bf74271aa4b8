#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace longseg {

/// Exact-integer accumulation left the representable range.
class OverflowError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed FASTA/FASTQ or numeric input; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(std::uint64_t line, const std::string& reason)
        : std::runtime_error("line " + std::to_string(line) + ": " + reason), line_(line) {}

    std::uint64_t line() const noexcept { return line_; }

private:
    std::uint64_t line_;
};

/// Quality string problems: character below the encoding offset, missing or
/// length-mismatched qualities.
class QualityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Residue outside {A,C,G,T,N} (either case) under strict residue checking.
class ResidueError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Brute-force oracle asked to enumerate beyond its configured cap.
class CapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace longseg
