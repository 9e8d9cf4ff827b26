#pragma once

#include <optional>

#include "degreal/sequence.hpp"

namespace degreal {

/// Result of a multiplicity optimization. Whole-sequence bipartite optima
/// additionally carry the partition witnessing the value.
struct OptimalValue {
    enum class Status { feasible, infeasible, budget_exceeded };

    Status status = Status::infeasible;
    i64 value = 0;
    std::optional<PartitionPair> witness;

    bool feasible() const noexcept { return status == Status::feasible; }
    bool infeasible() const noexcept { return status == Status::infeasible; }
    bool budget_exceeded() const noexcept { return status == Status::budget_exceeded; }

    static OptimalValue of(i64 v) { return {Status::feasible, v, std::nullopt}; }
    static OptimalValue none() { return {Status::infeasible, 0, std::nullopt}; }
    static OptimalValue aborted() { return {Status::budget_exceeded, 0, std::nullopt}; }

    friend bool operator==(const OptimalValue&, const OptimalValue&) = default;
};

/// Least r such that d has a multigraph realization with every multiplicity
/// <= r (binary search over [1, d_1]); infeasible iff can_multigraph fails.
/// Throws on odd volume.
OptimalValue max_mult(const DegreeSequence& d);

/// Minimum total number of excess edge copies over all multigraph
/// realizations: max{Delta_1, ceil(Delta_max / 2)} clamped at 0.
/// Infeasible iff can_multigraph fails. Throws on odd volume.
OptimalValue tot_mult(const DegreeSequence& d);

/// Least r such that the pair has a bipartite realization with multiplicities
/// <= r. Always feasible (r = b_1 suffices).
OptimalValue max_mult_bi_pair(const PartitionPair& p);

/// Minimum total excess over bipartite realizations of the pair:
/// max over prefixes of (LHS - RHS) of the Gale-Ryser family, clamped at 0.
OptimalValue tot_mult_bi_pair(const PartitionPair& p);

struct OptimizeOptions {
    /// Abort with budget_exceeded once more than this many partitions would
    /// have to be evaluated.
    std::optional<i64> partition_budget;
    /// Parallel partition evaluation; results are identical to jobs == 1.
    int jobs = 1;
};

/// Minimum of max_mult_bi_pair over all balanced partitions of d, with the
/// argmin partition as witness (ties resolved to the lexicographically
/// largest a-side). Infeasible iff d has no balanced partition.
OptimalValue max_mult_bi(const DegreeSequence& d, const OptimizeOptions& opts = {});

/// Same, minimizing tot_mult_bi_pair.
OptimalValue tot_mult_bi(const DegreeSequence& d, const OptimizeOptions& opts = {});

} // namespace degreal
