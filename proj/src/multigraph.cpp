#include "degreal/multigraph.hpp"

#include <algorithm>

#include <json.hpp>

namespace degreal {

namespace {

template <typename EdgeMap>
i64 map_max_mult(const EdgeMap& edges) {
    i64 best = 0;
    for (const auto& [key, mult] : edges) best = std::max(best, mult);
    return best;
}

template <typename EdgeMap>
i64 map_tot_mult(const EdgeMap& edges) {
    i64 excess = 0;
    for (const auto& [key, mult] : edges) excess = checked_add(excess, mult - 1);
    return excess;
}

template <typename EdgeMap>
i64 map_edge_count(const EdgeMap& edges) {
    i64 count = 0;
    for (const auto& [key, mult] : edges) count = checked_add(count, mult);
    return count;
}

nlohmann::ordered_json edges_json(
    const std::map<std::pair<std::size_t, std::size_t>, i64>& edges) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& [key, mult] : edges) {
        nlohmann::ordered_json e;
        e["u"] = key.first;
        e["v"] = key.second;
        e["mult"] = mult;
        out.push_back(std::move(e));
    }
    return out;
}

} // namespace

void Multigraph::add_edge(std::size_t u, std::size_t v, i64 mult) {
    if (u == v) fail(errc::invalid_argument, "self-loops are not allowed");
    if (u >= n_ || v >= n_) fail(errc::invalid_argument, "edge endpoint out of range");
    if (mult < 1) fail(errc::invalid_argument, "edge multiplicity must be positive");
    if (u > v) std::swap(u, v);
    edges_[{u, v}] += mult;
}

i64 Multigraph::multiplicity(std::size_t u, std::size_t v) const {
    if (u > v) std::swap(u, v);
    auto it = edges_.find({u, v});
    return it == edges_.end() ? 0 : it->second;
}

std::vector<i64> Multigraph::vertex_degrees() const {
    std::vector<i64> deg(n_, 0);
    for (const auto& [key, mult] : edges_) {
        deg[key.first] = checked_add(deg[key.first], mult);
        deg[key.second] = checked_add(deg[key.second], mult);
    }
    return deg;
}

DegreeSequence Multigraph::degree_sequence() const {
    std::vector<i64> deg = vertex_degrees();
    return DegreeSequence(std::move(deg));
}

i64 Multigraph::max_mult() const { return map_max_mult(edges_); }
i64 Multigraph::tot_mult() const { return map_tot_mult(edges_); }
i64 Multigraph::edge_count() const { return map_edge_count(edges_); }

std::string Multigraph::to_json() const {
    nlohmann::ordered_json out;
    out["n"] = n_;
    out["edges"] = edges_json(edges_);
    return out.dump(2) + "\n";
}

void BipartiteMultigraph::add_edge(std::size_t a_vertex, std::size_t b_vertex, i64 mult) {
    if (a_vertex >= sides_.size() || b_vertex >= sides_.size())
        fail(errc::invalid_argument, "edge endpoint out of range");
    if (sides_[a_vertex] != Side::A || sides_[b_vertex] != Side::B)
        fail(errc::invalid_argument, "bipartite edges must join side A to side B");
    if (mult < 1) fail(errc::invalid_argument, "edge multiplicity must be positive");
    edges_[{a_vertex, b_vertex}] += mult;
}

i64 BipartiteMultigraph::multiplicity(std::size_t a_vertex, std::size_t b_vertex) const {
    auto it = edges_.find({a_vertex, b_vertex});
    return it == edges_.end() ? 0 : it->second;
}

std::vector<i64> BipartiteMultigraph::vertex_degrees() const {
    std::vector<i64> deg(sides_.size(), 0);
    for (const auto& [key, mult] : edges_) {
        deg[key.first] = checked_add(deg[key.first], mult);
        deg[key.second] = checked_add(deg[key.second], mult);
    }
    return deg;
}

DegreeSequence BipartiteMultigraph::a_degrees() const {
    std::vector<i64> out;
    const std::vector<i64> deg = vertex_degrees();
    for (std::size_t v = 0; v < sides_.size(); ++v)
        if (sides_[v] == Side::A) out.push_back(deg[v]);
    return DegreeSequence(std::move(out));
}

DegreeSequence BipartiteMultigraph::b_degrees() const {
    std::vector<i64> out;
    const std::vector<i64> deg = vertex_degrees();
    for (std::size_t v = 0; v < sides_.size(); ++v)
        if (sides_[v] == Side::B) out.push_back(deg[v]);
    return DegreeSequence(std::move(out));
}

i64 BipartiteMultigraph::max_mult() const { return map_max_mult(edges_); }
i64 BipartiteMultigraph::tot_mult() const { return map_tot_mult(edges_); }
i64 BipartiteMultigraph::edge_count() const { return map_edge_count(edges_); }

Multigraph BipartiteMultigraph::to_multigraph() const {
    Multigraph out(sides_.size());
    for (const auto& [key, mult] : edges_) out.add_edge(key.first, key.second, mult);
    return out;
}

std::string BipartiteMultigraph::to_json() const {
    nlohmann::ordered_json out;
    out["n"] = sides_.size();
    nlohmann::ordered_json side_names = nlohmann::ordered_json::array();
    for (Side s : sides_) side_names.push_back(s == Side::A ? "A" : "B");
    out["sides"] = std::move(side_names);

    // Keys already store the A-side endpoint first, sorted by (u, v).
    out["edges"] = edges_json(edges_);
    return out.dump(2) + "\n";
}

} // namespace degreal
