#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "degreal/sequence.hpp"

namespace degreal {

/// Labeled loopless multigraph: vertices 0..n-1 plus an edge multiplicity map
/// keyed by (u, v) with u < v. Values are immutable once built.
class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(std::size_t n) : n_(n) {}

    std::size_t order() const noexcept { return n_; }

    /// Adds `mult` parallel copies of edge (u, v). Rejects self-loops.
    void add_edge(std::size_t u, std::size_t v, i64 mult = 1);

    i64 multiplicity(std::size_t u, std::size_t v) const;
    const std::map<std::pair<std::size_t, std::size_t>, i64>& edges() const noexcept {
        return edges_;
    }

    std::vector<i64> vertex_degrees() const;
    DegreeSequence degree_sequence() const;

    /// Largest edge multiplicity; 0 for an edgeless graph.
    i64 max_mult() const;
    /// Total number of excess copies, i.e. sum of (multiplicity - 1).
    i64 tot_mult() const;
    /// Number of edges counted with multiplicity.
    i64 edge_count() const;

    /// Deterministic JSON rendering: {"n": ..., "edges": [{"u", "v", "mult"}, ...]}
    /// with edges sorted by (u, v).
    std::string to_json() const;

    friend bool operator==(const Multigraph&, const Multigraph&) = default;

private:
    std::size_t n_ = 0;
    std::map<std::pair<std::size_t, std::size_t>, i64> edges_;
};

enum class Side : char { A, B };

/// Multigraph whose every edge joins side A to side B; the underlying graph
/// is bipartite by construction. Edge keys are (u, v) with u in A, v in B.
class BipartiteMultigraph {
public:
    BipartiteMultigraph() = default;
    explicit BipartiteMultigraph(std::vector<Side> sides) : sides_(std::move(sides)) {}

    std::size_t order() const noexcept { return sides_.size(); }
    const std::vector<Side>& sides() const noexcept { return sides_; }
    Side side_of(std::size_t v) const { return sides_.at(v); }

    void add_edge(std::size_t a_vertex, std::size_t b_vertex, i64 mult = 1);

    i64 multiplicity(std::size_t a_vertex, std::size_t b_vertex) const;
    const std::map<std::pair<std::size_t, std::size_t>, i64>& edges() const noexcept {
        return edges_;
    }

    std::vector<i64> vertex_degrees() const;
    /// Degrees of the A side (respectively B side), sorted nonincreasing.
    DegreeSequence a_degrees() const;
    DegreeSequence b_degrees() const;

    i64 max_mult() const;
    i64 tot_mult() const;
    i64 edge_count() const;

    /// Drops the side structure, renormalizing edge keys to u < v.
    Multigraph to_multigraph() const;

    /// JSON with a "sides" array of "A"/"B" between "n" and "edges".
    std::string to_json() const;

    friend bool operator==(const BipartiteMultigraph&, const BipartiteMultigraph&) = default;

private:
    std::vector<Side> sides_;
    std::map<std::pair<std::size_t, std::size_t>, i64> edges_;
};

} // namespace degreal
