#pragma once

#include <optional>

#include "degreal/multigraph.hpp"
#include "degreal/sequence.hpp"

namespace degreal {

/// Builds a simple graph realizing d, or throws errc::not_graphic. Vertices
/// are labeled by position in the sorted sequence.
Multigraph havel_hakimi(const DegreeSequence& d);

/// Builds a simple bipartite graph with side degree sequences exactly (a, b):
/// the largest remaining a-vertex is connected to the largest remaining
/// b-vertices, repeatedly. Throws errc::not_bigraphic when the pair fails the
/// Gale-Ryser test. A-side vertices are 0..p-1, B-side p..p+q-1.
BipartiteMultigraph gale_ryser_build(const PartitionPair& p);

/// Multigraph realizing d with total excess exactly tot_mult(d): realizes
/// d plus tot_mult(d) helper vertices of degree 2 as a simple graph, then
/// contracts each helper into a direct (possibly excess) edge.
/// Throws errc::infeasible when no multigraph realization exists.
Multigraph realize_tot_mult(const DegreeSequence& d);

/// Multigraph realizing d with every multiplicity <= r, via a capped greedy
/// lay-off (largest residual first, up to r copies per neighbor). The result
/// is validated; small instances fall back to exact search if the greedy
/// misses, larger ones throw errc::validation_failed.
/// Throws errc::infeasible_at_r when d is not r-max-graphic.
Multigraph realize_max_mult(const DegreeSequence& d, i64 r);

/// Bipartite multigraph realizing the pair with total excess exactly
/// tot_mult_bi_pair(p): builds the simple realization of (a (+) 1^t, b (+) 1^t)
/// and merges the added pendant vertices back across the sides.
BipartiteMultigraph realize_tot_mult_bi(const PartitionPair& p);

/// Capped greedy bipartite construction; counterpart of realize_max_mult.
/// Throws errc::infeasible_at_r when the pair is not r-max-bigraphic.
BipartiteMultigraph realize_max_mult_bi(const PartitionPair& p, i64 r);

/// Any bipartite multigraph realization of the pair: repeatedly joins the two
/// largest residual vertices across the sides with the full possible
/// multiplicity. Always succeeds for a balanced pair.
BipartiteMultigraph arbitrary_bipartite_fill(const PartitionPair& p);

/// Vertex ordering whose backward alternating prefix sums stay positive and
/// telescope to zero; certifies a path-shaped multigraph realization.
/// perm[k] is the 0-based index into d of the vertex at path position k.
struct SoundPermutation {
    std::vector<std::size_t> perm;
    std::vector<i64> prefix_alternating; // s_1..s_n; s_k > 0 for k < n, s_n == 0
};

/// Exhaustive search for a sound permutation (definitive NONE within the
/// supported size, guarded at n <= 24). Structured instances produced by
/// the partition-reduction generator are laid out directly.
std::optional<SoundPermutation> find_sound_permutation(const DegreeSequence& d);

/// Path multigraph from a sound permutation: edge k joins perm[k-1] to
/// perm[k] with multiplicity s_k.
Multigraph path_realization(const SoundPermutation& sp, const DegreeSequence& d);

/// What a constructed graph is supposed to witness.
struct RealizationClaim {
    std::optional<DegreeSequence> degrees;   // degree multiset (general graphs)
    std::optional<PartitionPair> pair;       // side degree sequences (bipartite)
    std::optional<i64> max_mult_at_most;
    std::optional<i64> tot_mult_exact;
};

/// Checks degrees (or side degrees), absence of self-loops, bipartiteness
/// when claimed, and the measured multiplicities against the claim.
bool verify_realization(const Multigraph& h, const RealizationClaim& claim);
bool verify_realization(const BipartiteMultigraph& h, const RealizationClaim& claim);

/// A claim bundled with the measurements taken from a concrete graph.
struct RealizationCertificate {
    i64 measured_max_mult = 0;
    i64 measured_tot_mult = 0;
    RealizationClaim claim;
    bool valid = false;
};

RealizationCertificate certify(const Multigraph& h, RealizationClaim claim);
RealizationCertificate certify(const BipartiteMultigraph& h, RealizationClaim claim);

} // namespace degreal
