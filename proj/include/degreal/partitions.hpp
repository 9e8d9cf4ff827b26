#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "degreal/sequence.hpp"

namespace degreal {

struct EnumerationStats {
    i64 dp_invocations = 0;    // pruning queries against the subset-sum table
    i64 partitions_emitted = 0;
    i64 node_visits = 0;
};

/// Reachability table of the signed-difference subset-sum DP over block
/// suffixes of d. reachable(k, D) answers: can the suffix starting at block k
/// (1-based; block_count() + 1 is the empty suffix) be split between the two
/// sides so that it cancels a running difference of D? The empty suffix
/// cancels exactly D = 0. Built once per sequence and shared by the whole
/// enumeration; immutable afterwards.
class SubsetSumTable {
public:
    explicit SubsetSumTable(const DegreeSequence& d);

    bool reachable(std::size_t k, i64 difference) const;
    std::size_t block_count() const noexcept { return blocks_.size(); }
    i64 suffix_volume(std::size_t k) const { return suffix_vol_.at(k - 1); }

private:
    std::vector<Block> blocks_;
    std::vector<i64> suffix_vol_;            // suffix_vol_[k-1], k = 1..q+1
    std::vector<std::vector<char>> levels_;  // levels_[k-1][D + suffix_vol]
};

/// Whether some split (X, Y) of the whole multiset has sum(X) - sum(Y) == target.
bool subset_sum_reachable(std::span<const i64> values, i64 target);

/// Streams every unordered balanced partition of d exactly once, in
/// lexicographically decreasing order of the a-side. The a-side of each
/// emitted pair is the lexicographically greater side (equal sides collapse
/// to a == b). Single-owner cursor; the underlying DP table is immutable.
class BalancedPartitionCursor {
public:
    explicit BalancedPartitionCursor(DegreeSequence d);
    ~BalancedPartitionCursor();
    BalancedPartitionCursor(BalancedPartitionCursor&&) noexcept;
    BalancedPartitionCursor& operator=(BalancedPartitionCursor&&) noexcept;

    /// Next partition, or nullopt when the stream is exhausted.
    std::optional<PartitionPair> next();

    const EnumerationStats& stats() const noexcept;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Visits partitions in cursor order until the visitor returns false.
EnumerationStats for_each_balanced_partition(const DegreeSequence& d,
                                             const std::function<bool(const PartitionPair&)>& visit);

struct PartitionList {
    std::vector<PartitionPair> partitions;
    bool truncated = false;
    EnumerationStats stats;
};

/// Materializes the stream; an emission limit truncates it and sets the marker.
PartitionList list_balanced_partitions(const DegreeSequence& d,
                                       std::optional<i64> limit = std::nullopt);

/// |BP(d)| without materializing partitions (counting DP over blocks).
/// Throws errc::overflow if the count does not fit in 64 bits.
i64 count_balanced_partitions(const DegreeSequence& d);

} // namespace degreal
