#include "degreal/families.hpp"

namespace degreal {

FamilyFixture gap_general(i64 n) {
    if (n < 5) fail(errc::invalid_argument, "gap_general needs n >= 5");
    std::vector<i64> deg;
    deg.insert(deg.end(), 2, 2 * n - 2);
    deg.insert(deg.end(), static_cast<std::size_t>(n - 2), n - 1);
    FamilyFixture out;
    out.sequence = DegreeSequence(std::move(deg));
    out.expected = {
        {"tot_mult", n - 1},
        {"max_mult", 2},
        {"max_mult_of_tot_optimal", n},
        {"tot_mult_of_max_optimal_lb", 2 * n - 3},
    };
    out.provenance = "gap-general";
    return out;
}

FamilyFixture gap_bipartite(i64 n) {
    if (n < 4 || n % 2 != 0) fail(errc::invalid_argument, "gap_bipartite needs even n >= 4");
    std::vector<i64> deg;
    deg.insert(deg.end(), 2, n);
    deg.insert(deg.end(), static_cast<std::size_t>(n - 2), n / 2);
    FamilyFixture out;
    out.sequence = DegreeSequence(std::move(deg));
    out.expected = {
        {"tot_mult_bi", n / 2},
        {"max_mult_bi", 2},
        {"tot_of_max_optimal_lb", n - 2},
    };
    out.provenance = "gap-bipartite";
    return out;
}

FamilyFixture tight_rmax(i64 r, i64 k) {
    if (r < 1 || k < 2) fail(errc::invalid_argument, "tight_rmax needs r >= 1 and k >= 2");
    const i64 q = checked_mul(r, k);
    std::vector<i64> side;
    side.insert(side.end(), static_cast<std::size_t>(k - 1), q);
    side.push_back(q - 1);
    DegreeSequence a(std::move(side));
    DegreeSequence b = a;
    FamilyFixture out;
    out.pair = PartitionPair(a, b);
    out.sequence = a.concat(b);
    out.expected = {{"max_mult_bi_pair", r}};
    out.provenance = "tight-rmax";
    return out;
}

FamilyFixture tight_ttot(i64 k) {
    if (k < 3) fail(errc::invalid_argument, "tight_ttot needs k >= 3");
    std::vector<i64> side;
    side.insert(side.end(), static_cast<std::size_t>(k - 1), k);
    side.push_back(1);
    DegreeSequence a(std::move(side));
    DegreeSequence b = a;
    FamilyFixture out;
    out.pair = PartitionPair(a, b);
    out.sequence = a.concat(b);
    out.expected = {
        {"t_pass", k - 2},
        {"t_fail", k - 3},
    };
    out.provenance = "tight-ttot";
    out.degenerate = (k == 3); // the failing bound is t = 0, outside the lemma's range
    return out;
}

DegreeSequence partition_prime_instance(const std::vector<i64>& a) {
    if (a.empty()) fail(errc::invalid_argument, "partition_prime_instance needs a nonempty sequence");
    i64 big = 0;
    for (i64 v : a) {
        if (v < 1) fail(errc::invalid_argument, "partition_prime_instance entries must be positive");
        big = checked_add(big, v);
    }
    std::vector<i64> out;
    out.reserve(2 * a.size() + 2);
    for (i64 v : a) out.push_back(checked_add(checked_mul(2, big), v));
    out.insert(out.end(), a.size(), checked_mul(2, big));
    out.insert(out.end(), 2, big);
    return DegreeSequence(std::move(out));
}

} // namespace degreal
