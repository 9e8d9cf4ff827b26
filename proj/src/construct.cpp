#include "degreal/construct.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>

#include "degreal/checks.hpp"
#include "degreal/optimize.hpp"
#include "degreal/partitions.hpp"

namespace degreal {

namespace {

/// Mutable edge map used while a construction is in flight.
struct WorkGraph {
    std::map<std::pair<std::size_t, std::size_t>, i64> edges; // u < v
    std::vector<i64> deg;

    explicit WorkGraph(std::size_t n) : deg(n, 0) {}

    void add(std::size_t u, std::size_t v, i64 m) {
        if (u > v) std::swap(u, v);
        edges[{u, v}] += m;
        deg[u] += m;
        deg[v] += m;
    }

    void remove(std::size_t u, std::size_t v, i64 m) {
        if (u > v) std::swap(u, v);
        auto it = edges.find({u, v});
        assert(it != edges.end() && it->second >= m);
        it->second -= m;
        if (it->second == 0) edges.erase(it);
        deg[u] -= m;
        deg[v] -= m;
    }

    std::vector<std::pair<std::size_t, i64>> incident(std::size_t v) const {
        std::vector<std::pair<std::size_t, i64>> out;
        for (const auto& [key, m] : edges) {
            if (key.first == v) out.push_back({key.second, m});
            else if (key.second == v) out.push_back({key.first, m});
        }
        return out;
    }
};

/// Connects `v` to its res(v) largest-residual other vertices (ties toward
/// smaller index), one copy each. Valid lay-off for any vertex of a graphic
/// residual sequence.
bool lay_off_simple(std::vector<i64>& res, std::size_t v, WorkGraph& g) {
    const i64 want = res[v];
    if (want == 0) return true;
    std::vector<std::size_t> order;
    for (std::size_t u = 0; u < res.size(); ++u)
        if (u != v && res[u] > 0) order.push_back(u);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return res[x] > res[y]; });
    if (static_cast<i64>(order.size()) < want) return false;
    for (i64 i = 0; i < want; ++i) {
        g.add(v, order[static_cast<std::size_t>(i)], 1);
        --res[order[static_cast<std::size_t>(i)]];
    }
    res[v] = 0;
    return true;
}

std::size_t argmax_residual(const std::vector<i64>& res) {
    std::size_t best = 0;
    for (std::size_t v = 1; v < res.size(); ++v)
        if (res[v] > res[best]) best = v;
    return best;
}

Multigraph graph_from_work(const WorkGraph& g, std::size_t n) {
    Multigraph out(n);
    for (const auto& [key, m] : g.edges) out.add_edge(key.first, key.second, m);
    return out;
}

/// Exact backtracking search over the upper-triangular multiplicity matrix;
/// used only as a small-instance fallback when a greedy construction misses.
bool exact_search_step(std::vector<i64>& res, std::size_t i, std::size_t j, i64 cap,
                       std::optional<i64> excess_cap, i64 excess, WorkGraph& g) {
    const std::size_t n = res.size();
    if (i + 1 >= n) return res[n - 1] == 0;
    if (j >= n) {
        if (res[i] != 0) return false;
        return exact_search_step(res, i + 1, i + 2, cap, excess_cap, excess, g);
    }
    i64 room = 0; // what vertex i can still place on its remaining slots
    for (std::size_t k = j; k < n; ++k) room += std::min(cap, res[k]);
    if (room < res[i]) return false;
    const i64 top = std::min({cap, res[i], res[j]});
    for (i64 m = top; m >= 0; --m) {
        const i64 extra = m > 0 ? m - 1 : 0;
        if (excess_cap && excess + extra > *excess_cap) continue;
        res[i] -= m;
        res[j] -= m;
        if (m > 0) g.add(i, j, m);
        if (exact_search_step(res, i, j + 1, cap, excess_cap, excess + extra, g)) return true;
        if (m > 0) g.remove(i, j, m);
        res[i] += m;
        res[j] += m;
    }
    return false;
}

std::optional<Multigraph> exact_search(const std::vector<i64>& degrees, i64 cap,
                                       std::optional<i64> excess_cap) {
    std::vector<i64> res = degrees;
    WorkGraph g(res.size());
    if (res.empty()) return graph_from_work(g, 0);
    if (exact_search_step(res, 0, 1, cap, excess_cap, 0, g))
        return graph_from_work(g, res.size());
    return std::nullopt;
}

bool exact_search_bi_step(std::vector<i64>& ra, std::vector<i64>& rb, std::size_t i, std::size_t j,
                          i64 cap, std::optional<i64> excess_cap, i64 excess,
                          std::vector<std::vector<i64>>& m) {
    const std::size_t p = ra.size(), q = rb.size();
    if (i >= p) {
        for (i64 r : rb)
            if (r != 0) return false;
        return true;
    }
    if (j >= q) {
        if (ra[i] != 0) return false;
        return exact_search_bi_step(ra, rb, i + 1, 0, cap, excess_cap, excess, m);
    }
    i64 room = 0;
    for (std::size_t k = j; k < q; ++k) room += std::min(cap, rb[k]);
    if (room < ra[i]) return false;
    const i64 top = std::min({cap, ra[i], rb[j]});
    for (i64 x = top; x >= 0; --x) {
        const i64 extra = x > 0 ? x - 1 : 0;
        if (excess_cap && excess + extra > *excess_cap) continue;
        ra[i] -= x;
        rb[j] -= x;
        m[i][j] = x;
        if (exact_search_bi_step(ra, rb, i, j + 1, cap, excess_cap, excess + extra, m)) return true;
        ra[i] += x;
        rb[j] += x;
        m[i][j] = 0;
    }
    return false;
}

BipartiteMultigraph bipartite_from_matrix(const std::vector<i64>& a, const std::vector<i64>& b,
                                          const std::vector<std::vector<i64>>& m) {
    std::vector<Side> sides(a.size() + b.size(), Side::B);
    for (std::size_t i = 0; i < a.size(); ++i) sides[i] = Side::A;
    BipartiteMultigraph out(std::move(sides));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            if (m[i][j] > 0) out.add_edge(i, a.size() + j, m[i][j]);
    return out;
}

std::optional<BipartiteMultigraph> exact_search_bipartite(const std::vector<i64>& a,
                                                          const std::vector<i64>& b, i64 cap,
                                                          std::optional<i64> excess_cap) {
    std::vector<i64> ra = a, rb = b;
    std::vector<std::vector<i64>> m(a.size(), std::vector<i64>(b.size(), 0));
    if (exact_search_bi_step(ra, rb, 0, 0, cap, excess_cap, 0, m))
        return bipartite_from_matrix(a, b, m);
    return std::nullopt;
}

constexpr std::size_t kExactFallbackLimit = 8;

} // namespace

Multigraph havel_hakimi(const DegreeSequence& d) {
    if (!is_graphic(d).holds) fail(errc::not_graphic, "sequence is not graphic");
    const std::size_t n = d.size();
    std::vector<i64> res = d.degrees();
    WorkGraph g(n);
    while (true) {
        const std::size_t v = argmax_residual(res);
        if (n == 0 || res[v] == 0) break;
        if (!lay_off_simple(res, v, g))
            fail(errc::validation_failed, "havel_hakimi: lay-off failed on a graphic sequence");
    }
    return graph_from_work(g, n);
}

BipartiteMultigraph gale_ryser_build(const PartitionPair& p) {
    if (!is_bigraphic_pair(p).holds) fail(errc::not_bigraphic, "partition is not bigraphic");
    const std::size_t pa = p.a().size(), qb = p.b().size();
    std::vector<i64> ra = p.a().degrees(), rb = p.b().degrees();
    std::vector<Side> sides(pa + qb, Side::B);
    for (std::size_t i = 0; i < pa; ++i) sides[i] = Side::A;
    BipartiteMultigraph out(std::move(sides));

    while (true) {
        std::size_t v = pa;
        for (std::size_t i = 0; i < pa; ++i)
            if (v == pa || ra[i] > ra[v]) v = i;
        if (v == pa || ra[v] == 0) break;
        std::vector<std::size_t> order;
        for (std::size_t j = 0; j < qb; ++j)
            if (rb[j] > 0) order.push_back(j);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t x, std::size_t y) { return rb[x] > rb[y]; });
        if (static_cast<i64>(order.size()) < ra[v])
            fail(errc::validation_failed, "gale_ryser_build: greedy ran out of targets");
        for (i64 k = 0; k < ra[v]; ++k) {
            const std::size_t j = order[static_cast<std::size_t>(k)];
            out.add_edge(v, pa + j, 1);
            --rb[j];
        }
        ra[v] = 0;
    }
    for (i64 r : rb)
        if (r != 0) fail(errc::validation_failed, "gale_ryser_build: residuals left on the b side");
    return out;
}

namespace {

/// Relabels the survivors of a contraction so that vertex k carries the k-th
/// largest degree; positions therefore match the sorted input sequence.
Multigraph relabel_survivors(const WorkGraph& g, const std::vector<std::size_t>& survivors) {
    std::vector<std::size_t> order = survivors;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return g.deg[x] > g.deg[y]; });
    std::map<std::size_t, std::size_t> new_id;
    for (std::size_t k = 0; k < order.size(); ++k) new_id[order[k]] = k;
    Multigraph out(order.size());
    for (const auto& [key, m] : g.edges) out.add_edge(new_id.at(key.first), new_id.at(key.second), m);
    return out;
}

} // namespace

Multigraph realize_tot_mult(const DegreeSequence& d) {
    const OptimalValue opt = tot_mult(d);
    if (!opt.feasible()) fail(errc::infeasible, "no multigraph realization exists");
    const i64 t = opt.value;
    if (t == 0) return havel_hakimi(d);

    const DegreeSequence full = d.append_run(2, t);
    const std::size_t total = full.size();
    // Any t vertices of degree 2 can play the helper role; take the tail of
    // the run of 2s.
    std::vector<std::size_t> twos;
    for (std::size_t v = 0; v < total; ++v)
        if (full[v] == 2) twos.push_back(v);
    assert(static_cast<i64>(twos.size()) >= t);

    // Lay the helpers off first, so their edges land on the main vertices
    // while those still have residual capacity.
    std::vector<i64> res = full.degrees();
    WorkGraph g(total);
    for (std::size_t k = twos.size(); k-- > twos.size() - static_cast<std::size_t>(t);) {
        if (!lay_off_simple(res, twos[k], g))
            fail(errc::validation_failed, "realize_tot_mult: helper lay-off failed");
    }
    while (true) {
        const std::size_t v = argmax_residual(res);
        if (res[v] == 0) break;
        if (!lay_off_simple(res, v, g))
            fail(errc::validation_failed, "realize_tot_mult: lay-off failed");
    }

    // Contract t degree-2 vertices, each into a direct copy between its two
    // neighbors. Neighbors are distinct whenever possible; a double edge to a
    // single neighbor is untangled with one swap.
    std::set<std::size_t> pool(twos.begin(), twos.end());
    std::vector<std::size_t> survivors;
    i64 remaining = t;
    while (remaining > 0) {
        std::size_t chosen = total;
        std::size_t cx = 0, cy = 0;
        i64 best_score = -1;
        for (std::size_t c : pool) {
            const auto inc = g.incident(c);
            std::size_t x, y;
            if (inc.size() == 2) {
                x = inc[0].first;
                y = inc[1].first;
            } else {
                continue; // both copies on one neighbor; needs the swap below
            }
            const i64 score = g.deg[x] + g.deg[y];
            if (score > best_score) {
                best_score = score;
                chosen = c;
                cx = x;
                cy = y;
            }
        }
        if (chosen == total) {
            // Every remaining pool vertex sits on a double edge. Untangle one
            // with a degree-preserving swap against an edge away from it.
            bool repaired = false;
            for (std::size_t c : pool) {
                const auto inc = g.incident(c);
                if (inc.size() != 1) continue;
                const std::size_t x = inc[0].first;
                for (const auto& [key, m] : g.edges) {
                    const auto [u, w] = key;
                    (void)m;
                    if (u == c || w == c || u == x || w == x) continue;
                    g.remove(c, x, 1);
                    g.remove(u, w, 1);
                    g.add(c, u, 1);
                    g.add(x, w, 1);
                    repaired = true;
                    break;
                }
                if (repaired) break;
            }
            if (!repaired) {
                if (d.size() <= kExactFallbackLimit) {
                    auto exact = exact_search(d.degrees(), d.max_degree(), t);
                    if (exact) return *exact;
                }
                fail(errc::validation_failed, "realize_tot_mult: contraction got stuck");
            }
            continue;
        }
        g.remove(chosen, cx, 1);
        g.remove(chosen, cy, 1);
        g.add(cx, cy, 1);
        pool.erase(chosen);
        --remaining;
    }
    std::set<std::size_t> contracted(twos.begin(), twos.end());
    for (std::size_t v : pool) contracted.erase(v);
    for (std::size_t v = 0; v < total; ++v)
        if (!contracted.count(v)) survivors.push_back(v);

    Multigraph out = relabel_survivors(g, survivors);
    if (out.degree_sequence() != d || out.tot_mult() != t) {
        if (d.size() <= kExactFallbackLimit) {
            auto exact = exact_search(d.degrees(), d.max_degree(), t);
            if (exact) return *exact;
        }
        fail(errc::validation_failed, "realize_tot_mult: result failed validation");
    }
    return out;
}

Multigraph realize_max_mult(const DegreeSequence& d, i64 r) {
    if (!is_r_max_graphic(d, r).holds)
        fail(errc::infeasible_at_r, "sequence is not realizable with multiplicities <= r");
    const std::size_t n = d.size();
    std::vector<i64> res = d.degrees();
    WorkGraph g(n);
    bool greedy_ok = true;
    while (greedy_ok) {
        const std::size_t v = n == 0 ? 0 : argmax_residual(res);
        if (n == 0 || res[v] == 0) break;
        std::vector<std::size_t> order;
        for (std::size_t u = 0; u < n; ++u)
            if (u != v && res[u] > 0) order.push_back(u);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t x, std::size_t y) { return res[x] > res[y]; });
        i64 want = res[v];
        for (std::size_t u : order) {
            if (want == 0) break;
            const i64 m = std::min({r, res[u], want});
            if (m > 0) {
                g.add(v, u, m);
                res[u] -= m;
                want -= m;
            }
        }
        if (want > 0) greedy_ok = false;
        res[v] = 0;
    }
    if (greedy_ok) {
        Multigraph out = graph_from_work(g, n);
        if (out.degree_sequence() == d && out.max_mult() <= r) return out;
    }
    if (n <= kExactFallbackLimit) {
        auto exact = exact_search(d.degrees(), r, std::nullopt);
        if (exact) return *exact;
    }
    fail(errc::validation_failed, "realize_max_mult: greedy construction failed validation");
}

BipartiteMultigraph realize_tot_mult_bi(const PartitionPair& p) {
    const i64 t = tot_mult_bi_pair(p).value;
    if (t == 0) return gale_ryser_build(p);

    const DegreeSequence ext_a = p.a().append_run(1, t);
    const DegreeSequence ext_b = p.b().append_run(1, t);
    BipartiteMultigraph g = gale_ryser_build(PartitionPair(ext_a, ext_b));

    const std::size_t pa = ext_a.size(), qb = ext_b.size();
    // The added pendants are interchangeable with original degree-1 vertices;
    // take the tails of the degree-1 runs.
    std::vector<std::size_t> added_x, added_y;
    for (std::size_t v = pa; v-- > 0 && static_cast<i64>(added_x.size()) < t;)
        if (ext_a[v] == 1) added_x.push_back(v);
    for (std::size_t v = qb; v-- > 0 && static_cast<i64>(added_y.size()) < t;)
        if (ext_b[v] == 1) added_y.push_back(pa + v);
    assert(static_cast<i64>(added_x.size()) == t && static_cast<i64>(added_y.size()) == t);

    std::map<std::pair<std::size_t, std::size_t>, i64> edges(g.edges().begin(), g.edges().end());
    const std::set<std::size_t> xs(added_x.begin(), added_x.end());
    const std::set<std::size_t> ys(added_y.begin(), added_y.end());

    // Each pendant has exactly one edge; record its endpoint in one pass.
    std::map<std::size_t, std::size_t> pendant_neighbor;
    for (const auto& [key, m] : edges) {
        (void)m;
        if (xs.count(key.first)) pendant_neighbor[key.first] = key.second;
        if (ys.count(key.second)) pendant_neighbor[key.second] = key.first;
    }
    const auto neighbor_of = [&](std::size_t v) -> std::size_t {
        auto it = pendant_neighbor.find(v);
        if (it == pendant_neighbor.end())
            fail(errc::validation_failed, "realize_tot_mult_bi: pendant lost its edge");
        return it->second;
    };

    // Pendant pairs joined to each other cancel directly; the rest are merged
    // crosswise, one x with one y, adding at most one excess copy each.
    std::vector<std::size_t> rest_x, rest_y;
    std::set<std::size_t> consumed;
    for (std::size_t x : added_x) {
        const std::size_t nx = neighbor_of(x);
        if (ys.count(nx)) {
            edges.erase({x, nx});
            consumed.insert(x);
            consumed.insert(nx);
        }
    }
    for (std::size_t x : added_x)
        if (!consumed.count(x)) rest_x.push_back(x);
    for (std::size_t y : added_y)
        if (!consumed.count(y)) rest_y.push_back(y);
    assert(rest_x.size() == rest_y.size());

    for (std::size_t i = 0; i < rest_x.size(); ++i) {
        const std::size_t x = rest_x[i], y = rest_y[i];
        const std::size_t yp = neighbor_of(x); // original b-side vertex
        const std::size_t xp = neighbor_of(y); // original a-side vertex
        auto drop_one = [&](std::size_t u, std::size_t v) {
            auto it = edges.find({u, v});
            assert(it != edges.end());
            if (--it->second == 0) edges.erase(it);
        };
        drop_one(x, yp);
        drop_one(xp, y);
        edges[{xp, yp}] += 1;
    }

    // Relabel: original a-side vertices keep their order, then the b side.
    std::vector<std::size_t> old_ids;
    for (std::size_t v = 0; v < pa + qb; ++v)
        if (!xs.count(v) && !ys.count(v)) old_ids.push_back(v);
    std::map<std::size_t, std::size_t> new_id;
    for (std::size_t k = 0; k < old_ids.size(); ++k) new_id[old_ids[k]] = k;

    std::vector<Side> sides(p.a().size() + p.b().size(), Side::B);
    for (std::size_t i = 0; i < p.a().size(); ++i) sides[i] = Side::A;
    BipartiteMultigraph out(std::move(sides));
    for (const auto& [key, m] : edges)
        if (m > 0) out.add_edge(new_id.at(key.first), new_id.at(key.second), m);

    if (out.a_degrees() != p.a() || out.b_degrees() != p.b() || out.tot_mult() != t)
        fail(errc::validation_failed, "realize_tot_mult_bi: result failed validation");
    return out;
}

BipartiteMultigraph realize_max_mult_bi(const PartitionPair& p, i64 r) {
    if (!is_r_max_bigraphic_pair(p, r).holds)
        fail(errc::infeasible_at_r, "pair is not realizable with multiplicities <= r");
    const std::size_t pa = p.a().size(), qb = p.b().size();
    std::vector<i64> ra = p.a().degrees(), rb = p.b().degrees();
    std::vector<std::vector<i64>> m(pa, std::vector<i64>(qb, 0));
    bool greedy_ok = true;
    while (greedy_ok) {
        std::size_t v = pa;
        for (std::size_t i = 0; i < pa; ++i)
            if (v == pa || ra[i] > ra[v]) v = i;
        if (v == pa || ra[v] == 0) break;
        std::vector<std::size_t> order;
        for (std::size_t j = 0; j < qb; ++j)
            if (rb[j] > 0) order.push_back(j);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t x, std::size_t y) { return rb[x] > rb[y]; });
        i64 want = ra[v];
        for (std::size_t j : order) {
            if (want == 0) break;
            const i64 x = std::min({r, rb[j], want});
            if (x > 0) {
                m[v][j] += x;
                rb[j] -= x;
                want -= x;
            }
        }
        if (want > 0) greedy_ok = false;
        ra[v] = 0;
    }
    if (greedy_ok) {
        BipartiteMultigraph out = bipartite_from_matrix(p.a().degrees(), p.b().degrees(), m);
        if (out.a_degrees() == p.a() && out.b_degrees() == p.b() && out.max_mult() <= r) return out;
    }
    if (pa + qb <= kExactFallbackLimit) {
        auto exact = exact_search_bipartite(p.a().degrees(), p.b().degrees(), r, std::nullopt);
        if (exact) return *exact;
    }
    fail(errc::validation_failed, "realize_max_mult_bi: greedy construction failed validation");
}

BipartiteMultigraph arbitrary_bipartite_fill(const PartitionPair& p) {
    const std::size_t pa = p.a().size(), qb = p.b().size();
    std::vector<i64> ra = p.a().degrees(), rb = p.b().degrees();
    std::vector<Side> sides(pa + qb, Side::B);
    for (std::size_t i = 0; i < pa; ++i) sides[i] = Side::A;
    BipartiteMultigraph out(std::move(sides));
    while (true) {
        std::size_t i = pa, j = qb;
        for (std::size_t k = 0; k < pa; ++k)
            if (i == pa || ra[k] > ra[i]) i = k;
        for (std::size_t k = 0; k < qb; ++k)
            if (j == qb || rb[k] > rb[j]) j = k;
        if (i == pa || ra[i] == 0) break;
        const i64 m = std::min(ra[i], rb[j]);
        assert(m > 0);
        out.add_edge(i, pa + j, m);
        ra[i] -= m;
        rb[j] -= m;
    }
    return out;
}

namespace {

std::vector<i64> prefix_alternating_of(const DegreeSequence& d,
                                       const std::vector<std::size_t>& perm) {
    std::vector<i64> s(perm.size(), 0);
    i64 prev = 0;
    for (std::size_t k = 0; k < perm.size(); ++k) {
        s[k] = d[perm[k]] - prev;
        prev = s[k];
    }
    return s;
}

bool sums_sound(const std::vector<i64>& s) {
    for (std::size_t k = 0; k + 1 < s.size(); ++k)
        if (s[k] <= 0) return false;
    return s.empty() || s.back() == 0;
}

/// Direct layout for instances shaped like the partition-reduction family:
/// even length, the two smallest entries equal to B, everything else >= 2B,
/// volume (2n-1)B. One balanced half goes to the odd positions, framed by the
/// two B vertices at the ends.
std::optional<SoundPermutation> structured_layout(const DegreeSequence& d) {
    const std::size_t n = d.size();
    if (n < 4 || n % 2 != 0) return std::nullopt;
    const i64 B = d[n - 1];
    if (d[n - 2] != B) return std::nullopt;
    for (std::size_t i = 0; i + 2 < n; ++i)
        if (d[i] < 2 * B) return std::nullopt;
    if (d.volume() != (2 * static_cast<i64>(n) - 1) * B) return std::nullopt;

    // Find one balanced split of the multiset.
    SubsetSumTable table(d);
    const auto blocks = d.blocks();
    std::vector<i64> counts(blocks.size(), 0);
    i64 diff = 0;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        bool placed = false;
        for (i64 i = blocks[k].count; i >= 0 && !placed; --i) {
            const i64 next = diff + (2 * i - blocks[k].count) * blocks[k].value;
            if (table.reachable(k + 2, next)) {
                counts[k] = i;
                diff = next;
                placed = true;
            }
        }
        if (!placed) return std::nullopt;
    }
    if (diff != 0) return std::nullopt;

    // Queues of indices per value, walked from the front for the left side.
    std::vector<std::size_t> left, right;
    std::size_t pos = 0;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        for (i64 i = 0; i < blocks[k].count; ++i) {
            (i < counts[k] ? left : right).push_back(pos);
            ++pos;
        }
    }
    // Each side should hold exactly one of the two B entries (indices n-2, n-1).
    auto is_b_index = [&](std::size_t idx) { return idx >= n - 2; };
    std::vector<std::size_t> l_rest, r_rest;
    std::optional<std::size_t> l_b, r_b;
    for (std::size_t idx : left) {
        if (is_b_index(idx) && !l_b)
            l_b = idx;
        else
            l_rest.push_back(idx);
    }
    for (std::size_t idx : right) {
        if (is_b_index(idx) && !r_b)
            r_b = idx;
        else
            r_rest.push_back(idx);
    }
    if (!l_b || !r_b || l_rest.size() != n / 2 - 1 || r_rest.size() != n / 2 - 1)
        return std::nullopt;

    SoundPermutation sp;
    sp.perm.resize(n);
    sp.perm[0] = *l_b;
    sp.perm[n - 1] = *r_b;
    for (std::size_t k = 0; k < l_rest.size(); ++k) sp.perm[2 * k + 2] = l_rest[k];
    for (std::size_t k = 0; k < r_rest.size(); ++k) sp.perm[2 * k + 1] = r_rest[k];
    sp.prefix_alternating = prefix_alternating_of(d, sp.perm);
    if (!sums_sound(sp.prefix_alternating)) return std::nullopt;
    return sp;
}

struct SoundSearch {
    const std::vector<i64>& values; // nonincreasing
    std::vector<char> used;
    std::vector<std::size_t> perm;
    i64 half_volume;
    i64 acc = 0;

    explicit SoundSearch(const DegreeSequence& d)
        : values(d.degrees()), used(d.size(), 0), half_volume(d.volume() / 2) {}

    bool dfs(std::size_t k, i64 prev) {
        const std::size_t n = values.size();
        if (k == n) return prev == 0;
        i64 last_tried = -1;
        for (std::size_t i = 0; i < n; ++i) {
            if (used[i] || values[i] == last_tried) continue;
            const i64 s = values[i] - prev;
            last_tried = values[i];
            if (k + 1 < n) {
                if (s <= 0) continue;
                if (acc + s > half_volume) continue;
                // the successor needs a strictly larger remaining value, or an
                // equal one if it is the final position
                bool feasible = false;
                for (std::size_t j = 0; j < n && !feasible; ++j) {
                    if (used[j] || j == i) continue;
                    feasible = (k + 2 < n) ? values[j] > s : values[j] == s;
                }
                if (!feasible) continue;
            } else {
                if (s != 0) continue;
            }
            used[i] = 1;
            perm.push_back(i);
            acc += (k + 1 < n) ? s : 0;
            if (dfs(k + 1, s)) return true;
            acc -= (k + 1 < n) ? s : 0;
            perm.pop_back();
            used[i] = 0;
        }
        return false;
    }
};

} // namespace

std::optional<SoundPermutation> find_sound_permutation(const DegreeSequence& d) {
    const std::size_t n = d.size();
    if (n == 0) return SoundPermutation{{}, {}};
    if (d.volume() % 2 != 0) return std::nullopt; // the telescoping sums need even volume
    if (auto sp = structured_layout(d)) return sp;
    if (n > 24) fail(errc::invalid_argument, "sound-permutation search supports n <= 24");
    SoundSearch search(d);
    if (!search.dfs(0, 0)) return std::nullopt;
    SoundPermutation sp;
    sp.perm = std::move(search.perm);
    sp.prefix_alternating = prefix_alternating_of(d, sp.perm);
    assert(sums_sound(sp.prefix_alternating));
    return sp;
}

Multigraph path_realization(const SoundPermutation& sp, const DegreeSequence& d) {
    const std::size_t n = d.size();
    if (sp.perm.size() != n) fail(errc::invalid_argument, "permutation length mismatch");
    std::vector<char> seen(n, 0);
    for (std::size_t v : sp.perm) {
        if (v >= n || seen[v]) fail(errc::invalid_argument, "not a permutation of the sequence indices");
        seen[v] = 1;
    }
    const std::vector<i64> s = prefix_alternating_of(d, sp.perm);
    if (s != sp.prefix_alternating || !sums_sound(s))
        fail(errc::invalid_argument, "permutation is not sound for this sequence");
    Multigraph out(n);
    for (std::size_t k = 0; k + 1 < n; ++k) out.add_edge(sp.perm[k], sp.perm[k + 1], s[k]);
    return out;
}

namespace {

bool degrees_match(const std::vector<i64>& got, const DegreeSequence& want) {
    if (got.size() != want.size()) return false;
    std::vector<i64> sorted = got;
    std::sort(sorted.begin(), sorted.end(), std::greater<i64>());
    return sorted == want.degrees();
}

bool multiplicities_match(i64 max_mult, i64 tot_mult, const RealizationClaim& claim) {
    if (claim.max_mult_at_most && max_mult > *claim.max_mult_at_most) return false;
    if (claim.tot_mult_exact && tot_mult != *claim.tot_mult_exact) return false;
    return true;
}

} // namespace

bool verify_realization(const Multigraph& h, const RealizationClaim& claim) {
    if (claim.pair) return false; // side structure cannot be witnessed here
    for (const auto& [key, m] : h.edges())
        if (key.first == key.second || m < 1) return false;
    if (claim.degrees && !degrees_match(h.vertex_degrees(), *claim.degrees)) return false;
    return multiplicities_match(h.max_mult(), h.tot_mult(), claim);
}

bool verify_realization(const BipartiteMultigraph& h, const RealizationClaim& claim) {
    for (const auto& [key, m] : h.edges()) {
        if (m < 1) return false;
        if (h.side_of(key.first) != Side::A || h.side_of(key.second) != Side::B) return false;
    }
    const std::vector<i64> deg = h.vertex_degrees();
    if (claim.pair) {
        std::vector<i64> a_deg, b_deg;
        for (std::size_t v = 0; v < h.order(); ++v)
            (h.side_of(v) == Side::A ? a_deg : b_deg).push_back(deg[v]);
        if (!degrees_match(a_deg, claim.pair->a()) || !degrees_match(b_deg, claim.pair->b()))
            return false;
    }
    if (claim.degrees && !degrees_match(deg, *claim.degrees)) return false;
    return multiplicities_match(h.max_mult(), h.tot_mult(), claim);
}

RealizationCertificate certify(const Multigraph& h, RealizationClaim claim) {
    RealizationCertificate cert;
    cert.measured_max_mult = h.max_mult();
    cert.measured_tot_mult = h.tot_mult();
    cert.valid = verify_realization(h, claim);
    cert.claim = std::move(claim);
    return cert;
}

RealizationCertificate certify(const BipartiteMultigraph& h, RealizationClaim claim) {
    RealizationCertificate cert;
    cert.measured_max_mult = h.max_mult();
    cert.measured_tot_mult = h.tot_mult();
    cert.valid = verify_realization(h, claim);
    cert.claim = std::move(claim);
    return cert;
}

} // namespace degreal
