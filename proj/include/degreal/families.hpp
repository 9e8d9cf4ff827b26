#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "degreal/sequence.hpp"

namespace degreal {

/// A generated sequence (or pair) together with the optimal values it is
/// known to attain; test fixtures and CLI demos.
struct FamilyFixture {
    DegreeSequence sequence;
    std::optional<PartitionPair> pair;
    std::map<std::string, i64> expected;
    std::string provenance;
    bool degenerate = false;
};

/// ((2n-2)^2, (n-1)^(n-2)) for n >= 5: total and maximum multiplicity optima
/// pull apart by n - 2.
FamilyFixture gap_general(i64 n);

/// (n^2, (n/2)^(n-2)) for even n >= 4: the bipartite counterpart.
FamilyFixture gap_bipartite(i64 n);

/// a = b = (q^(k-1), q-1) with q = r*k: realizable at multiplicity cap r and
/// no lower. r >= 1, k >= 2.
FamilyFixture tight_rmax(i64 r, i64 k);

/// a = b = (k^(k-1), 1): realizable with k-2 excess copies but not k-3.
/// k >= 3; k == 3 is flagged degenerate (the failing bound collapses to 0).
FamilyFixture tight_ttot(i64 k);

/// The length-(2n+2) structured instance built from a positive sequence a
/// with B = sum(a): entries 2B + a_j, then n copies of 2B, then B, B.
/// Exercises sound permutations and path realizations.
DegreeSequence partition_prime_instance(const std::vector<i64>& a);

} // namespace degreal
