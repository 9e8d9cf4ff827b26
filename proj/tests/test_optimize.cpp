#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "degreal/checks.hpp"
#include "degreal/optimize.hpp"
#include "degreal/partitions.hpp"
#include "test_support.hpp"

using namespace degreal;
using namespace degreal::testsupport;

TEST_CASE("max_mult examples") {
    CHECK(max_mult(seq({8, 8, 4, 4, 4})) == OptimalValue::of(2));
    CHECK(max_mult(seq({4, 2, 2})) == OptimalValue::of(2));
    CHECK(max_mult(seq({1, 1})) == OptimalValue::of(1));
    CHECK(max_mult(seq({6, 1, 1})).infeasible());
    CHECK(max_mult(DegreeSequence()) == OptimalValue::of(0));
    CHECK_THROWS_AS(max_mult(seq({3})), Error);
}

TEST_CASE("tot_mult examples") {
    CHECK(tot_mult(seq({8, 8, 4, 4, 4})) == OptimalValue::of(4));
    CHECK(tot_mult(seq({4, 4})) == OptimalValue::of(3));
    CHECK(tot_mult(seq({3, 3, 3, 3})) == OptimalValue::of(0));
    CHECK(tot_mult(seq({6, 1, 1})).infeasible());
}

TEST_CASE("pair optima examples") {
    CHECK(max_mult_bi_pair(pair({6, 3, 3}, {6, 3, 3})) == OptimalValue::of(2));
    CHECK(max_mult_bi_pair(pair({4, 3}, {4, 3})) == OptimalValue::of(2));
    for (i64 k = 1; k <= 6; ++k) CHECK(max_mult_bi_pair(pair({k}, {k})) == OptimalValue::of(k));

    CHECK(tot_mult_bi_pair(pair({6, 3, 3}, {6, 3, 3})) == OptimalValue::of(3));
    CHECK(tot_mult_bi_pair(pair({2, 2}, {2, 2})) == OptimalValue::of(0));
    CHECK(tot_mult_bi_pair(pair({3}, {1, 1, 1})) == OptimalValue::of(0));
    CHECK(tot_mult_bi_pair(pair({3}, {3})) == OptimalValue::of(2));
}

TEST_CASE("tot_mult_bi_pair is symmetric in the sides") {
    std::mt19937_64 rng(123);
    for (int round = 0; round < 500; ++round) {
        const PartitionPair p = random_pair(rng, 7, 9);
        const PartitionPair swapped(p.b(), p.a());
        CHECK(tot_mult_bi_pair(p).value == tot_mult_bi_pair(swapped).value);
        CHECK(max_mult_bi_pair(p).value == max_mult_bi_pair(swapped).value);
    }
}

TEST_CASE("whole-sequence optima") {
    const OptimalValue tot = tot_mult_bi(seq({6, 6, 3, 3, 3, 3}));
    CHECK(tot.value == 3);
    CHECK(tot.witness == pair({6, 3, 3}, {6, 3, 3}));

    const OptimalValue mx = max_mult_bi(seq({6, 6, 3, 3, 3, 3}));
    CHECK(mx.value == 2);
    // both partitions tie at 2; the lexicographically larger a-side wins
    CHECK(mx.witness == pair({6, 6}, {3, 3, 3, 3}));

    CHECK(tot_mult_bi(seq({2, 2, 2, 2})) ==
          OptimalValue{OptimalValue::Status::feasible, 0, pair({2, 2}, {2, 2})});
    CHECK(max_mult_bi(seq({2, 2, 2, 2})).value == 1);
    CHECK(tot_mult_bi(seq({3, 1, 1, 1})).value == 0); // the star fits one partition
    CHECK(tot_mult_bi(seq({5, 3})).infeasible());
    CHECK_THROWS_AS(tot_mult_bi(seq({3, 2})), Error); // odd volume
}

TEST_CASE("definitional cross-checks: formula vs least passing parameter") {
    std::mt19937_64 rng(456);
    int done = 0;
    while (done < 400) {
        const DegreeSequence d = random_even_sequence(rng, 8, 9);
        if (!can_multigraph(d).holds) continue;
        ++done;

        const i64 t_star = tot_mult(d).value;
        i64 t = 0;
        while (!is_t_tot_graphic(d, t).holds) ++t;
        CHECK(t == t_star);

        const i64 r_star = max_mult(d).value;
        i64 r = 1;
        while (!is_r_max_graphic(d, r).holds) ++r;
        CHECK(r == r_star);
    }
}

TEST_CASE("general optima never exceed bipartite optima") {
    std::mt19937_64 rng(789);
    for (int round = 0; round < 300; ++round) {
        const DegreeSequence d = random_even_sequence(rng, 8, 6);
        if (!can_multigraph(d).holds) continue;
        const OptimalValue bi_tot = tot_mult_bi(d);
        const OptimalValue bi_max = max_mult_bi(d);
        if (bi_tot.feasible()) CHECK(tot_mult(d).value <= bi_tot.value);
        if (bi_max.feasible()) CHECK(max_mult(d).value <= bi_max.value);
    }
}

TEST_CASE("gap family closed forms") {
    for (i64 n = 5; n <= 9; ++n) {
        std::vector<i64> deg;
        deg.insert(deg.end(), 2, 2 * n - 2);
        deg.insert(deg.end(), static_cast<std::size_t>(n - 2), n - 1);
        const DegreeSequence d(std::move(deg));
        CHECK(tot_mult(d) == OptimalValue::of(n - 1));
        CHECK(max_mult(d) == OptimalValue::of(2));
    }
    for (i64 n = 4; n <= 10; n += 2) {
        std::vector<i64> deg;
        deg.insert(deg.end(), 2, n);
        deg.insert(deg.end(), static_cast<std::size_t>(n - 2), n / 2);
        const DegreeSequence d(std::move(deg));
        CHECK(tot_mult_bi(d).value == n / 2);
        CHECK(max_mult_bi(d).value == 2);
    }
}

TEST_CASE("partition budget aborts undecided runs") {
    // 1..12 has many balanced splits; a budget of 10 cannot settle the optimum.
    std::vector<i64> deg;
    for (i64 v = 12; v >= 1; --v) deg.push_back(v);
    const DegreeSequence d(std::move(deg));
    CHECK(count_balanced_partitions(d) > 10);

    OptimizeOptions opts;
    opts.partition_budget = 10;
    CHECK(max_mult_bi(d, opts).budget_exceeded());

    // A budget large enough to finish returns the plain result.
    opts.partition_budget = count_balanced_partitions(d);
    CHECK(max_mult_bi(d, opts) == max_mult_bi(d));

    // Feasibility alone is still decidable by the subset-sum path.
    CHECK(subset_sum_reachable(d.degrees(), 0));
}

TEST_CASE("short-circuit may settle within the budget") {
    // tot = 0 on the first (lexicographically largest) partition decides early.
    const DegreeSequence d = seq({2, 2, 2, 2});
    OptimizeOptions opts;
    opts.partition_budget = 1;
    CHECK(tot_mult_bi(d, opts).value == 0);
}

TEST_CASE("parallel evaluation matches sequential") {
    std::mt19937_64 rng(31415);
    for (int round = 0; round < 60; ++round) {
        const DegreeSequence d = random_even_sequence(rng, 10, 6);
        OptimizeOptions par;
        par.jobs = 4;
        CHECK(tot_mult_bi(d, par) == tot_mult_bi(d));
        CHECK(max_mult_bi(d, par) == max_mult_bi(d));
    }
}
