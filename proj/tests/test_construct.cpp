#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <chrono>
#include <random>
#include <set>

#include "degreal/checks.hpp"
#include "degreal/construct.hpp"
#include "degreal/families.hpp"
#include "degreal/optimize.hpp"
#include "test_support.hpp"

using namespace degreal;
using namespace degreal::testsupport;

namespace {

RealizationClaim degree_claim(const DegreeSequence& d) {
    RealizationClaim claim;
    claim.degrees = d;
    return claim;
}

RealizationClaim pair_claim(const PartitionPair& p) {
    RealizationClaim claim;
    claim.pair = p;
    return claim;
}

/// Random bigraphic pair read off a random bipartite graph.
PartitionPair random_bigraphic_pair(std::mt19937_64& rng, std::size_t p, std::size_t q,
                                    double density) {
    std::bernoulli_distribution edge(density);
    std::uniform_int_distribution<std::size_t> col(0, q - 1), row(0, p - 1);
    std::vector<std::vector<char>> m(p, std::vector<char>(q, 0));
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < q; ++j) m[i][j] = edge(rng) ? 1 : 0;
    for (std::size_t i = 0; i < p; ++i) {
        bool any = false;
        for (std::size_t j = 0; j < q; ++j) any = any || m[i][j];
        if (!any) m[i][col(rng)] = 1;
    }
    for (std::size_t j = 0; j < q; ++j) {
        bool any = false;
        for (std::size_t i = 0; i < p; ++i) any = any || m[i][j];
        if (!any) m[row(rng)][j] = 1;
    }
    std::vector<i64> a(p, 0), b(q, 0);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < q; ++j)
            if (m[i][j]) {
                ++a[i];
                ++b[j];
            }
    return PartitionPair(DegreeSequence(std::move(a)), DegreeSequence(std::move(b)));
}

} // namespace

TEST_CASE("havel_hakimi") {
    const Multigraph k4 = havel_hakimi(seq({3, 3, 3, 3}));
    CHECK(k4.degree_sequence() == seq({3, 3, 3, 3}));
    CHECK(k4.max_mult() == 1);
    CHECK(k4.edges().size() == 6);

    const Multigraph triangle = havel_hakimi(seq({2, 2, 2}));
    CHECK(triangle.edges().size() == 3);

    CHECK_THROWS_AS(havel_hakimi(seq({4, 4})), Error);
    CHECK_THROWS_AS(havel_hakimi(seq({1})), Error);
    CHECK(havel_hakimi(DegreeSequence()).order() == 0);
}

TEST_CASE("havel_hakimi succeeds exactly on graphic sequences") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 400; ++round) {
        const DegreeSequence d = random_sequence(rng, 9, 8);
        if (is_graphic(d).holds) {
            const Multigraph g = havel_hakimi(d);
            CHECK(g.degree_sequence() == d);
            CHECK(g.max_mult() <= 1);
        } else {
            CHECK_THROWS_AS(havel_hakimi(d), Error);
        }
    }
}

TEST_CASE("gale_ryser_build") {
    const BipartiteMultigraph c4 = gale_ryser_build(pair({2, 2}, {2, 2}));
    CHECK(c4.a_degrees() == seq({2, 2}));
    CHECK(c4.b_degrees() == seq({2, 2}));
    CHECK(c4.max_mult() == 1);
    CHECK(c4.edge_count() == 4);

    const BipartiteMultigraph star = gale_ryser_build(pair({3, 1}, {1, 1, 1, 1}));
    CHECK(star.a_degrees() == seq({3, 1}));
    CHECK(star.b_degrees() == seq({1, 1, 1, 1}));

    const BipartiteMultigraph path = gale_ryser_build(pair({2, 1, 1}, {2, 2}));
    CHECK(verify_realization(path, pair_claim(pair({2, 1, 1}, {2, 2}))));

    CHECK_THROWS_AS(gale_ryser_build(pair({4, 3}, {4, 3})), Error);
}

TEST_CASE("gale_ryser_build on random bigraphic pairs, including n = 200") {
    std::mt19937_64 rng(22);
    for (int round = 0; round < 30; ++round) {
        const PartitionPair p = random_bigraphic_pair(rng, 8, 9, 0.4);
        const BipartiteMultigraph g = gale_ryser_build(p);
        CHECK(verify_realization(g, pair_claim(p)));
        CHECK(g.max_mult() == 1);
    }
    const PartitionPair big = random_bigraphic_pair(rng, 100, 100, 0.3);
    const auto start = std::chrono::steady_clock::now();
    const BipartiteMultigraph g = gale_ryser_build(big);
    const auto elapsed = std::chrono::steady_clock::now() - start;
    CHECK(verify_realization(g, pair_claim(big)));
    CHECK(std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count() < 100);
}

TEST_CASE("realize_tot_mult: stated examples") {
    const DegreeSequence fig1 = seq({8, 8, 4, 4, 4});
    const Multigraph h1 = realize_tot_mult(fig1);
    CHECK(h1.degree_sequence() == fig1);
    CHECK(h1.tot_mult() == 4);
    CHECK(h1.max_mult() == 5); // the optimum forces the five-fold edge

    const Multigraph quad = realize_tot_mult(seq({4, 4}));
    CHECK(quad.edges().size() == 1);
    CHECK(quad.max_mult() == 4);
    CHECK(quad.tot_mult() == 3);

    const Multigraph triangle = realize_tot_mult(seq({2, 2, 2}));
    CHECK(triangle.tot_mult() == 0);

    CHECK_THROWS_AS(realize_tot_mult(seq({6, 1, 1})), Error);
}

TEST_CASE("realize_max_mult: stated examples") {
    const Multigraph doubled = realize_max_mult(seq({8, 8, 4, 4, 4}), 2);
    CHECK(doubled.degree_sequence() == seq({8, 8, 4, 4, 4}));
    CHECK(doubled.max_mult() <= 2);
    CHECK(doubled.tot_mult() == 7);

    const Multigraph quad = realize_max_mult(seq({4, 4}), 4);
    CHECK(quad.edges().size() == 1);

    const Multigraph two_doubles = realize_max_mult(seq({4, 2, 2}), 2);
    CHECK(two_doubles.max_mult() <= 2);
    CHECK(two_doubles.degree_sequence() == seq({4, 2, 2}));

    CHECK_THROWS_AS(realize_max_mult(seq({8, 8, 4, 4, 4}), 1), Error);
}

TEST_CASE("realize_tot_mult_bi: stated examples") {
    const PartitionPair fig2 = pair({6, 3, 3}, {6, 3, 3});
    const BipartiteMultigraph h = realize_tot_mult_bi(fig2);
    CHECK(verify_realization(h, pair_claim(fig2)));
    CHECK(h.tot_mult() == 3);

    const BipartiteMultigraph c4 = realize_tot_mult_bi(pair({2, 2}, {2, 2}));
    CHECK(c4.tot_mult() == 0);

    const BipartiteMultigraph triple = realize_tot_mult_bi(pair({3}, {3}));
    CHECK(triple.tot_mult() == 2);
    CHECK(triple.edges().size() == 1);
}

TEST_CASE("realize_max_mult_bi: stated examples") {
    const PartitionPair fig2 = pair({6, 3, 3}, {6, 3, 3});
    const BipartiteMultigraph h = realize_max_mult_bi(fig2, 2);
    CHECK(verify_realization(h, pair_claim(fig2)));
    CHECK(h.max_mult() <= 2);

    const BipartiteMultigraph kfold = realize_max_mult_bi(pair({4}, {4}), 4);
    CHECK(kfold.edges().size() == 1);

    const BipartiteMultigraph tight = realize_max_mult_bi(pair({4, 3}, {4, 3}), 2);
    CHECK(verify_realization(tight, pair_claim(pair({4, 3}, {4, 3}))));
    CHECK(tight.max_mult() <= 2);

    CHECK_THROWS_AS(realize_max_mult_bi(pair({4, 3}, {4, 3}), 1), Error);
}

TEST_CASE("arbitrary_bipartite_fill") {
    const BipartiteMultigraph g1 = arbitrary_bipartite_fill(pair({3}, {2, 1}));
    CHECK(verify_realization(g1, pair_claim(pair({3}, {2, 1}))));
    std::multiset<i64> mults;
    for (const auto& [key, m] : g1.edges()) mults.insert(m);
    CHECK(mults == std::multiset<i64>{1, 2});

    const BipartiteMultigraph g2 = arbitrary_bipartite_fill(pair({5, 1}, {3, 3}));
    CHECK(verify_realization(g2, pair_claim(pair({5, 1}, {3, 3}))));

    const BipartiteMultigraph matching = arbitrary_bipartite_fill(pair({1, 1}, {1, 1}));
    CHECK(matching.max_mult() == 1);
    CHECK(matching.edge_count() == 2);
}

TEST_CASE("find_sound_permutation") {
    // all-equal sequences stall at the second prefix sum
    CHECK_FALSE(find_sound_permutation(seq({2, 2, 2, 2})).has_value());
    CHECK_FALSE(find_sound_permutation(seq({3, 1})).has_value());
    CHECK_FALSE(find_sound_permutation(seq({2, 1, 1})).has_value()); // odd volume

    const auto single = find_sound_permutation(seq({1, 1}));
    REQUIRE(single.has_value());
    CHECK(single->prefix_alternating == std::vector<i64>{1, 0});

    const auto small = find_sound_permutation(seq({3, 2, 1}));
    REQUIRE(small.has_value());
    CHECK(small->prefix_alternating.back() == 0);
    for (std::size_t k = 0; k + 1 < small->prefix_alternating.size(); ++k)
        CHECK(small->prefix_alternating[k] > 0);
}

TEST_CASE("sound permutations for structured partition instances") {
    const DegreeSequence inst = partition_prime_instance({1, 1});
    CHECK(inst == seq({5, 5, 4, 4, 2, 2}));
    const auto sp = find_sound_permutation(inst);
    REQUIRE(sp.has_value());
    const Multigraph path = path_realization(*sp, inst);
    CHECK(verify_realization(path, degree_claim(inst)));

    for (const std::vector<i64>& base :
         {std::vector<i64>{1}, std::vector<i64>{2, 2, 2}, std::vector<i64>{3, 1, 2}}) {
        const DegreeSequence d = partition_prime_instance(base);
        const auto found = find_sound_permutation(d);
        REQUIRE(found.has_value());
        const Multigraph g = path_realization(*found, d);
        CHECK(verify_realization(g, degree_claim(d)));
    }
}

TEST_CASE("path_realization structure") {
    const DegreeSequence d = seq({3, 2, 1});
    const auto sp = find_sound_permutation(d);
    REQUIRE(sp.has_value());
    const Multigraph g = path_realization(*sp, d);
    CHECK(g.degree_sequence() == d);
    CHECK(g.edge_count() == d.volume() / 2);
    // support is a path: n-1 distinct edges, two endpoints of support degree 1
    CHECK(g.edges().size() == d.size() - 1);
    std::vector<int> support_deg(d.size(), 0);
    for (const auto& [key, m] : g.edges()) {
        (void)m;
        ++support_deg[key.first];
        ++support_deg[key.second];
    }
    CHECK(std::count(support_deg.begin(), support_deg.end(), 1) == 2);

    const Multigraph single = path_realization(*find_sound_permutation(seq({1, 1})), seq({1, 1}));
    CHECK(single.edge_count() == 1);

    SoundPermutation bogus;
    bogus.perm = {0, 1, 2};
    bogus.prefix_alternating = {3, -1, 0};
    CHECK_THROWS_AS(path_realization(bogus, d), Error);
}

TEST_CASE("verify_realization catches mismatches") {
    Multigraph g(2);
    g.add_edge(0, 1, 2);
    CHECK(verify_realization(g, degree_claim(seq({2, 2}))));
    CHECK_FALSE(verify_realization(g, degree_claim(seq({2, 1}))));
    RealizationClaim claim = degree_claim(seq({2, 2}));
    claim.max_mult_at_most = 1;
    CHECK_FALSE(verify_realization(g, claim));
    claim.max_mult_at_most = 2;
    claim.tot_mult_exact = 1;
    CHECK(verify_realization(g, claim));
    claim.tot_mult_exact = 0;
    CHECK_FALSE(verify_realization(g, claim));

    const RealizationCertificate cert = certify(g, degree_claim(seq({2, 2})));
    CHECK(cert.valid);
    CHECK(cert.measured_max_mult == 2);
    CHECK(cert.measured_tot_mult == 1);
}

TEST_CASE("exhaustive soundness on small even sequences") {
    std::mt19937_64 rng(3344);
    for (int round = 0; round < 300; ++round) {
        const DegreeSequence d = random_even_sequence(rng, 6, 7);
        if (d.volume() > 16 || !can_multigraph(d).holds) continue;

        const i64 t = tot_mult(d).value;
        const Multigraph ht = realize_tot_mult(d);
        RealizationClaim tot_claim = degree_claim(d);
        tot_claim.tot_mult_exact = t;
        CHECK(verify_realization(ht, tot_claim));

        const i64 r = max_mult(d).value;
        const Multigraph hr = realize_max_mult(d, r);
        RealizationClaim max_claim = degree_claim(d);
        max_claim.max_mult_at_most = r;
        CHECK(verify_realization(hr, max_claim));
    }
}

TEST_CASE("soundness on random pairs") {
    std::mt19937_64 rng(5566);
    for (int round = 0; round < 200; ++round) {
        const PartitionPair p = random_pair(rng, 6, 7);

        const BipartiteMultigraph fill = arbitrary_bipartite_fill(p);
        CHECK(verify_realization(fill, pair_claim(p)));

        const i64 t = tot_mult_bi_pair(p).value;
        const BipartiteMultigraph ht = realize_tot_mult_bi(p);
        RealizationClaim tot_claim = pair_claim(p);
        tot_claim.tot_mult_exact = t;
        CHECK(verify_realization(ht, tot_claim));

        const i64 r = max_mult_bi_pair(p).value;
        const BipartiteMultigraph hr = realize_max_mult_bi(p, r);
        RealizationClaim max_claim = pair_claim(p);
        max_claim.max_mult_at_most = r;
        CHECK(verify_realization(hr, max_claim));
    }
}

TEST_CASE("soundness on larger random instances") {
    std::mt19937_64 rng(7788);
    for (int round = 0; round < 20; ++round) {
        std::uniform_int_distribution<std::size_t> len(50, 200);
        std::uniform_int_distribution<i64> deg(1, 12);
        std::vector<i64> values(len(rng));
        for (auto& v : values) v = deg(rng);
        DegreeSequence d(std::move(values));
        if (d.volume() % 2 != 0) d = d.concat(seq({1}));
        if (!can_multigraph(d).holds) continue;

        const Multigraph ht = realize_tot_mult(d);
        RealizationClaim tot_claim = degree_claim(d);
        tot_claim.tot_mult_exact = tot_mult(d).value;
        CHECK(verify_realization(ht, tot_claim));

        const i64 r = max_mult(d).value;
        const Multigraph hr = realize_max_mult(d, r);
        RealizationClaim max_claim = degree_claim(d);
        max_claim.max_mult_at_most = r;
        CHECK(verify_realization(hr, max_claim));
    }
}

TEST_CASE("heavy tot_mult constructions keep the exact excess") {
    // top-heavy shapes exercise the helper contraction path hard
    for (const DegreeSequence& d :
         {seq({9, 9, 2, 2, 2}), seq({12, 4, 4, 2, 2}), seq({7, 7, 7, 7, 2, 2}),
          seq({20, 20, 20, 20, 2, 2, 2, 2, 2, 2}), seq({6, 2, 2, 1, 1}), seq({6, 6})}) {
        const OptimalValue t = tot_mult(d);
        REQUIRE(t.feasible());
        const Multigraph h = realize_tot_mult(d);
        CHECK(h.degree_sequence() == d);
        CHECK(h.tot_mult() == t.value);
    }
}
