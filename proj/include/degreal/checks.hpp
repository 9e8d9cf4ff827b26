#pragma once

#include <optional>

#include "degreal/sequence.hpp"

namespace degreal {

enum class VerdictReason {
    satisfied,
    inequality_violated,
    odd_volume,
};

/// Outcome of one inequality-family test.
///
/// failing_index is the 1-based index of the first violated inequality and is
/// present exactly when an inequality failed. slack is the minimum of
/// RHS - LHS over the whole family (negative when the check fails), absent
/// when the family is empty. Odd-volume rejections carry reason == odd_volume
/// with no failing index.
struct CheckVerdict {
    bool holds = false;
    std::optional<std::size_t> failing_index;
    std::optional<i64> slack;
    VerdictReason reason = VerdictReason::satisfied;

    explicit operator bool() const noexcept { return holds; }
};

/// Owens-Trent: a multigraph realization exists iff d_1 <= sum of the rest.
/// Throws on odd volume.
CheckVerdict can_multigraph(const DegreeSequence& d);

/// Erdos-Gallai, checked only for indices 1..beta(d). Odd volume yields
/// holds = false with reason odd_volume instead of an error.
CheckVerdict is_graphic(const DegreeSequence& d);

/// Chungphaisan: realizable with every edge multiplicity <= r.
/// Throws when r < 1 or the volume is odd.
CheckVerdict is_r_max_graphic(const DegreeSequence& d, i64 r);

/// Realizable with at most t excess edge copies in total; evaluated as
/// Delta_l <= t * min{l, 2} for l = 1..beta(d). Throws when t < 0, the volume
/// is odd, or no multigraph realization exists at all.
CheckVerdict is_t_tot_graphic(const DegreeSequence& d, i64 t);

/// Gale-Ryser for a fixed partition.
CheckVerdict is_bigraphic_pair(const PartitionPair& p);

/// Berge: bipartite realization of the pair with edge multiplicities <= r.
/// Throws when r < 1.
CheckVerdict is_r_max_bigraphic_pair(const PartitionPair& p, i64 r);

/// Bipartite realization of the pair with at most t excess copies:
/// prefix sums of a bounded by sum_i min{l, b_i} + t. Throws when t < 0.
CheckVerdict is_t_tot_bigraphic_pair(const PartitionPair& p, i64 t);

/// One-sided fast path: a_1 * b_1 <= r * vol(d)/2 + r forces the Berge check.
/// A false result is inconclusive. Throws when r < 1.
bool sufficient_r_max(const PartitionPair& p, i64 r);

/// One-sided fast path for total multiplicity: a_1 * b_1 <= vol(d)/2 + t + 1.
/// Throws when t < 0.
bool sufficient_t_tot(const PartitionPair& p, i64 t);

} // namespace degreal
