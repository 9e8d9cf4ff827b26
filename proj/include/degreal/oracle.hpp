#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "degreal/multigraph.hpp"
#include "degreal/optimize.hpp"
#include "degreal/sequence.hpp"

namespace degreal::oracle {

/// Instance-size guard for the exhaustive routines: accepted when n <= max_n
/// or volume <= max_volume; force disables the guard.
struct Limits {
    std::size_t max_n = 7;
    i64 max_volume = 16;
    bool force = false;
};

/// Streams every labeled multigraph with degree multiset d and per-edge
/// multiplicity <= mult_cap (and total excess <= tot_cap when given), by
/// backtracking over the upper-triangular multiplicity matrix. The visitor
/// returns false to stop.
void enumerate_multigraphs(const DegreeSequence& d, i64 mult_cap,
                           const std::function<bool(const Multigraph&)>& visit,
                           Limits limits = {}, std::optional<i64> tot_cap = std::nullopt);

bool exists_multigraph(const DegreeSequence& d, i64 mult_cap, Limits limits = {});

/// Exact minima by exhaustive enumeration.
OptimalValue oracle_max_mult(const DegreeSequence& d, Limits limits = {});
OptimalValue oracle_tot_mult(const DegreeSequence& d, Limits limits = {});
OptimalValue oracle_max_mult_bi(const DegreeSequence& d, Limits limits = {});
OptimalValue oracle_tot_mult_bi(const DegreeSequence& d, Limits limits = {});

/// All unordered balanced partitions by subset enumeration, in the same
/// canonical form and order as the enumeration module.
std::vector<PartitionPair> oracle_partitions(const DegreeSequence& d, Limits limits = {});

/// Ground truth for a fixed partition (bipartite realizations of (a, b)).
bool pair_bigraphic(const PartitionPair& p, Limits limits = {});
i64 pair_min_max_mult(const PartitionPair& p, Limits limits = {});
i64 pair_min_tot_mult(const PartitionPair& p, Limits limits = {});
/// Minimum total excess among realizations with multiplicities <= mult_cap;
/// nullopt when no such realization exists.
std::optional<i64> pair_min_tot_mult_with_cap(const PartitionPair& p, i64 mult_cap,
                                              Limits limits = {});

} // namespace degreal::oracle
