#include "degreal/oracle.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace degreal::oracle {

namespace {

void check_limits(std::size_t n, i64 volume, const Limits& limits) {
    if (limits.force) return;
    if (n <= limits.max_n || volume <= limits.max_volume) return;
    fail(errc::invalid_argument,
         "oracle size guard: n = " + std::to_string(n) + ", volume = " + std::to_string(volume) +
             " (set force to override)");
}

/// Backtracking over the upper-triangular multiplicity matrix with residual
/// pruning; edges picked so far live on an explicit stack.
struct MultigraphSearch {
    std::vector<i64> res;
    i64 mult_cap = 0;
    std::optional<i64> tot_cap;
    const std::function<bool(const Multigraph&)>* visit = nullptr;
    std::vector<std::tuple<std::size_t, std::size_t, i64>> chosen;
    bool stopped = false;

    void run() {
        if (res.empty()) {
            emit();
            return;
        }
        step(0, 1, 0);
    }

    void emit() {
        Multigraph g(res.size());
        for (const auto& [u, v, m] : chosen) g.add_edge(u, v, m);
        stopped = !(*visit)(g);
    }

    void step(std::size_t i, std::size_t j, i64 excess) {
        if (stopped) return;
        const std::size_t n = res.size();
        if (i + 1 >= n) {
            if (res[n - 1] == 0) emit();
            return;
        }
        if (j >= n) {
            if (res[i] != 0) return;
            step(i + 1, i + 2, excess);
            return;
        }
        i64 room = 0;
        for (std::size_t k = j; k < n; ++k) room += std::min(mult_cap, res[k]);
        if (room < res[i]) return;
        const i64 top = std::min({mult_cap, res[i], res[j]});
        for (i64 m = top; m >= 0 && !stopped; --m) {
            const i64 extra = m > 0 ? m - 1 : 0;
            if (tot_cap && excess + extra > *tot_cap) continue;
            res[i] -= m;
            res[j] -= m;
            if (m > 0) chosen.push_back({i, j, m});
            step(i, j + 1, excess + extra);
            if (m > 0) chosen.pop_back();
            res[i] += m;
            res[j] += m;
        }
    }
};

} // namespace

void enumerate_multigraphs(const DegreeSequence& d, i64 mult_cap,
                           const std::function<bool(const Multigraph&)>& visit, Limits limits,
                           std::optional<i64> tot_cap) {
    check_limits(d.size(), d.volume(), limits);
    MultigraphSearch search;
    search.res = d.degrees();
    search.mult_cap = std::max<i64>(0, mult_cap);
    search.tot_cap = tot_cap;
    search.visit = &visit;
    search.run();
}

namespace {

bool exists_multigraph_capped(const DegreeSequence& d, i64 mult_cap, std::optional<i64> tot_cap,
                              Limits limits) {
    bool found = false;
    enumerate_multigraphs(
        d, mult_cap,
        [&](const Multigraph&) {
            found = true;
            return false;
        },
        limits, tot_cap);
    return found;
}

} // namespace

bool exists_multigraph(const DegreeSequence& d, i64 mult_cap, Limits limits) {
    return exists_multigraph_capped(d, mult_cap, std::nullopt, limits);
}

OptimalValue oracle_max_mult(const DegreeSequence& d, Limits limits) {
    check_limits(d.size(), d.volume(), limits);
    if (d.empty()) return OptimalValue::of(0);
    for (i64 r = 1; r <= d.max_degree(); ++r) {
        if (exists_multigraph(d, r, limits)) return OptimalValue::of(r);
    }
    return OptimalValue::none();
}

OptimalValue oracle_tot_mult(const DegreeSequence& d, Limits limits) {
    check_limits(d.size(), d.volume(), limits);
    if (d.empty()) return OptimalValue::of(0);
    if (!exists_multigraph(d, d.max_degree(), limits)) return OptimalValue::none();
    for (i64 tot = 0;; ++tot) {
        if (exists_multigraph_capped(d, d.max_degree(), tot, limits)) return OptimalValue::of(tot);
    }
}

namespace {

struct BipartiteSearch {
    std::vector<i64> ra, rb;
    i64 mult_cap = 0;
    std::optional<i64> tot_cap;
    const std::function<bool(const std::vector<std::vector<i64>>&)>* visit = nullptr;
    std::vector<std::vector<i64>> m;
    bool stopped = false;

    void step(std::size_t i, std::size_t j, i64 excess) {
        if (stopped) return;
        if (i >= ra.size()) {
            for (i64 r : rb)
                if (r != 0) return;
            stopped = !(*visit)(m);
            return;
        }
        if (j >= rb.size()) {
            if (ra[i] != 0) return;
            step(i + 1, 0, excess);
            return;
        }
        i64 room = 0;
        for (std::size_t k = j; k < rb.size(); ++k) room += std::min(mult_cap, rb[k]);
        if (room < ra[i]) return;
        const i64 top = std::min({mult_cap, ra[i], rb[j]});
        for (i64 x = top; x >= 0 && !stopped; --x) {
            const i64 extra = x > 0 ? x - 1 : 0;
            if (tot_cap && excess + extra > *tot_cap) continue;
            ra[i] -= x;
            rb[j] -= x;
            m[i][j] = x;
            step(i, j + 1, excess + extra);
            ra[i] += x;
            rb[j] += x;
            m[i][j] = 0;
        }
    }
};

void enumerate_bipartite_matrices(
    const PartitionPair& p, i64 mult_cap, std::optional<i64> tot_cap,
    const std::function<bool(const std::vector<std::vector<i64>>&)>& visit, Limits limits) {
    check_limits(p.a().size() + p.b().size(), 2 * p.side_volume(), limits);
    BipartiteSearch search;
    search.ra = p.a().degrees();
    search.rb = p.b().degrees();
    search.mult_cap = std::max<i64>(0, mult_cap);
    search.tot_cap = tot_cap;
    search.visit = &visit;
    search.m.assign(search.ra.size(), std::vector<i64>(search.rb.size(), 0));
    search.step(0, 0, 0);
}

bool exists_bipartite(const PartitionPair& p, i64 mult_cap, std::optional<i64> tot_cap,
                      Limits limits) {
    bool found = false;
    enumerate_bipartite_matrices(
        p, mult_cap, tot_cap,
        [&](const std::vector<std::vector<i64>>&) {
            found = true;
            return false;
        },
        limits);
    return found;
}

} // namespace

bool pair_bigraphic(const PartitionPair& p, Limits limits) {
    return exists_bipartite(p, 1, std::nullopt, limits);
}

i64 pair_min_max_mult(const PartitionPair& p, Limits limits) {
    if (p.a().empty()) return 0;
    for (i64 r = 1; r <= p.b().max_degree(); ++r)
        if (exists_bipartite(p, r, std::nullopt, limits)) return r;
    fail(errc::validation_failed, "pair_min_max_mult: no realization found for a balanced pair");
}

std::optional<i64> pair_min_tot_mult_with_cap(const PartitionPair& p, i64 mult_cap, Limits limits) {
    if (!exists_bipartite(p, mult_cap, std::nullopt, limits)) return std::nullopt;
    for (i64 tot = 0;; ++tot) {
        if (exists_bipartite(p, mult_cap, tot, limits)) return tot;
    }
}

i64 pair_min_tot_mult(const PartitionPair& p, Limits limits) {
    auto best = pair_min_tot_mult_with_cap(p, std::max<i64>(1, p.b().max_degree()), limits);
    if (!best) fail(errc::validation_failed, "pair_min_tot_mult: no realization for a balanced pair");
    return *best;
}

std::vector<PartitionPair> oracle_partitions(const DegreeSequence& d, Limits limits) {
    if (d.size() > 20 && !limits.force)
        fail(errc::invalid_argument, "oracle_partitions: subset enumeration needs n <= 20");
    const std::size_t n = d.size();
    if (d.volume() % 2 != 0) return {};
    std::set<std::pair<std::vector<i64>, std::vector<i64>>> seen;
    const i64 half = d.volume() / 2;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<i64> left, right;
        i64 sum = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (std::size_t{1} << i)) {
                left.push_back(d[i]);
                sum += d[i];
            } else {
                right.push_back(d[i]);
            }
        }
        if (sum != half) continue;
        if (left < right) std::swap(left, right); // canonical: a-side lexicographically larger
        seen.insert({std::move(left), std::move(right)});
    }
    std::vector<PartitionPair> out;
    for (auto it = seen.rbegin(); it != seen.rend(); ++it)
        out.emplace_back(DegreeSequence(std::vector<i64>(it->first)),
                         DegreeSequence(std::vector<i64>(it->second)));
    return out;
}

OptimalValue oracle_max_mult_bi(const DegreeSequence& d, Limits limits) {
    check_limits(d.size(), d.volume(), limits);
    OptimalValue best = OptimalValue::none();
    for (const PartitionPair& p : oracle_partitions(d, limits)) {
        const i64 value = pair_min_max_mult(p, limits);
        if (!best.feasible() || value < best.value) {
            best = OptimalValue::of(value);
            best.witness = p;
        }
    }
    return best;
}

OptimalValue oracle_tot_mult_bi(const DegreeSequence& d, Limits limits) {
    check_limits(d.size(), d.volume(), limits);
    OptimalValue best = OptimalValue::none();
    for (const PartitionPair& p : oracle_partitions(d, limits)) {
        const i64 value = pair_min_tot_mult(p, limits);
        if (!best.feasible() || value < best.value) {
            best = OptimalValue::of(value);
            best.witness = p;
        }
    }
    return best;
}

} // namespace degreal::oracle
