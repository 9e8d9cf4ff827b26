#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "degreal/errors.hpp"

namespace degreal {

/// One run of equal values in a nonincreasing sequence.
struct Block {
    i64 value = 0;
    i64 count = 0;

    friend bool operator==(const Block&, const Block&) = default;
};

/// A degree sequence: positive integers stored in nonincreasing order.
///
/// The text form accepted by parse() is a list of tokens separated by
/// whitespace and/or commas, where each token is either a value `v` or a
/// run `v^c` (c >= 1). Input order is irrelevant; the constructor sorts.
/// Rendering uses the run syntax for repeated values, e.g. "8^2 4^3".
class DegreeSequence {
public:
    DegreeSequence() = default;
    explicit DegreeSequence(std::vector<i64> degrees);

    static DegreeSequence parse(std::string_view text);

    bool empty() const noexcept { return degrees_.empty(); }
    std::size_t size() const noexcept { return degrees_.size(); }
    i64 operator[](std::size_t i) const { return degrees_[i]; }
    const std::vector<i64>& degrees() const noexcept { return degrees_; }

    /// Sum of all entries (checked against 64-bit overflow at construction).
    i64 volume() const noexcept { return volume_; }
    i64 max_degree() const noexcept { return degrees_.empty() ? 0 : degrees_.front(); }

    /// Run-length view; concatenating the blocks reproduces the sequence.
    std::vector<Block> blocks() const;

    /// Merge of two sequences, kept nonincreasing (the `d (+) d'` operator).
    DegreeSequence concat(const DegreeSequence& other) const;
    /// Shorthand for concatenating `count` copies of `value`.
    DegreeSequence append_run(i64 value, i64 count) const;

    std::string to_string() const;

    friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
    friend std::strong_ordering operator<=>(const DegreeSequence& lhs, const DegreeSequence& rhs) {
        return lhs.degrees_ <=> rhs.degrees_;
    }

private:
    std::vector<i64> degrees_;
    i64 volume_ = 0;
};

/// Conjugate sequence d*: d*_j = |{i : d_i >= j}| for j = 1..d_1.
/// The result has d_1 entries, so callers must keep d_1 within memory bounds.
DegreeSequence conjugate(const DegreeSequence& d);

/// Erdos-Gallai differences of a sequence.
///
/// deltas[l-1] holds Delta_l = sum_{i<=l} d_i - (l(l-1) + sum_{i>l} min{l, d_i})
/// for l = 1..n. beta is the largest index i with d_i > i (0 when d_1 <= 1);
/// inequalities past beta are redundant. delta_max is the maximum of Delta_l
/// over 2 <= l <= beta, defined as 0 when that range is empty.
struct EgReport {
    std::vector<i64> deltas;
    std::size_t beta = 0;
    i64 delta1 = 0;
    i64 delta_max = 0;
};

EgReport eg_report(const DegreeSequence& d);

/// An ordered pair of sequences with equal volume: one balanced partition.
class PartitionPair {
public:
    PartitionPair(DegreeSequence a, DegreeSequence b);

    /// Parses "a-side | b-side", each side in sequence text form.
    static PartitionPair parse(std::string_view text);

    const DegreeSequence& a() const noexcept { return a_; }
    const DegreeSequence& b() const noexcept { return b_; }

    /// Half the merged volume, i.e. volume(a) == volume(b).
    i64 side_volume() const noexcept { return a_.volume(); }

    DegreeSequence merged() const { return a_.concat(b_); }

    std::string to_string() const;

    friend bool operator==(const PartitionPair&, const PartitionPair&) = default;
    friend std::strong_ordering operator<=>(const PartitionPair&, const PartitionPair&) = default;

private:
    DegreeSequence a_;
    DegreeSequence b_;
};

} // namespace degreal
