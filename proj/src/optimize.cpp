#include "degreal/optimize.hpp"

#include <algorithm>
#include <future>
#include <vector>

#include "degreal/checks.hpp"
#include "degreal/partitions.hpp"

namespace degreal {

namespace {

void require_even_volume(const DegreeSequence& d, const char* who) {
    if (d.volume() % 2 != 0)
        fail(errc::invalid_argument, std::string(who) + ": volume is odd");
}

} // namespace

OptimalValue max_mult(const DegreeSequence& d) {
    require_even_volume(d, "max_mult");
    if (d.empty()) return OptimalValue::of(0);
    if (!can_multigraph(d).holds) return OptimalValue::none();
    i64 lo = 1, hi = d.max_degree();
    while (lo < hi) {
        const i64 mid = lo + (hi - lo) / 2;
        if (is_r_max_graphic(d, mid).holds)
            hi = mid;
        else
            lo = mid + 1;
    }
    return OptimalValue::of(lo);
}

OptimalValue tot_mult(const DegreeSequence& d) {
    require_even_volume(d, "tot_mult");
    if (d.empty()) return OptimalValue::of(0);
    if (!can_multigraph(d).holds) return OptimalValue::none();
    const EgReport report = eg_report(d);
    const i64 half_up = report.delta_max > 0 ? (report.delta_max + 1) / 2 : 0;
    return OptimalValue::of(std::max<i64>({report.delta1, half_up, 0}));
}

OptimalValue max_mult_bi_pair(const PartitionPair& p) {
    if (p.a().empty()) return OptimalValue::of(0);
    i64 lo = 1, hi = p.b().max_degree();
    while (lo < hi) {
        const i64 mid = lo + (hi - lo) / 2;
        if (is_r_max_bigraphic_pair(p, mid).holds)
            hi = mid;
        else
            lo = mid + 1;
    }
    return OptimalValue::of(lo);
}

OptimalValue tot_mult_bi_pair(const PartitionPair& p) {
    const CheckVerdict verdict = is_bigraphic_pair(p);
    if (!verdict.slack) return OptimalValue::of(0); // empty pair
    return OptimalValue::of(std::max<i64>(0, -*verdict.slack));
}

namespace {

/// Scans partitions in cursor order, keeping the first (hence lexicographically
/// largest a-side) among value ties, stopping early at the lower bound or when
/// the budget would be exceeded. Parallel evaluation replays exactly the same
/// in-order decision sequence, so the outcome matches jobs == 1.
OptimalValue optimize_over_partitions(const DegreeSequence& d, const OptimizeOptions& opts,
                                      i64 (*pair_value)(const PartitionPair&), i64 lower_bound) {
    require_even_volume(d, "bipartite optimization");

    OptimalValue best = OptimalValue::none();
    i64 processed = 0;
    bool exceeded = false;

    const auto consume = [&](const PartitionPair& p, i64 value) -> bool {
        ++processed;
        if (!best.feasible() || value < best.value) {
            best = OptimalValue::of(value);
            best.witness = p;
        }
        return value > lower_bound; // reaching the bound settles the optimum
    };

    BalancedPartitionCursor cursor(d);
    const int jobs = std::max(1, opts.jobs);
    const std::size_t chunk_size = jobs == 1 ? 1 : static_cast<std::size_t>(jobs) * 8;

    while (true) {
        std::vector<PartitionPair> chunk;
        while (chunk.size() < chunk_size) {
            if (opts.partition_budget && processed + static_cast<i64>(chunk.size()) == *opts.partition_budget)
                break;
            auto p = cursor.next();
            if (!p) break;
            chunk.push_back(std::move(*p));
        }
        if (chunk.empty()) {
            // Either the stream is exhausted or the budget is used up with
            // partitions still pending.
            if (opts.partition_budget && processed == *opts.partition_budget && cursor.next())
                exceeded = true;
            break;
        }

        std::vector<i64> values(chunk.size());
        if (jobs == 1 || chunk.size() == 1) {
            for (std::size_t i = 0; i < chunk.size(); ++i) values[i] = pair_value(chunk[i]);
        } else {
            std::vector<std::future<void>> workers;
            std::size_t stride = (chunk.size() + jobs - 1) / jobs;
            for (int w = 0; w < jobs; ++w) {
                const std::size_t begin = static_cast<std::size_t>(w) * stride;
                const std::size_t end = std::min(chunk.size(), begin + stride);
                if (begin >= end) break;
                workers.push_back(std::async(std::launch::async, [&, begin, end] {
                    for (std::size_t i = begin; i < end; ++i) values[i] = pair_value(chunk[i]);
                }));
            }
            for (auto& w : workers) w.get();
        }

        bool decided = false;
        for (std::size_t i = 0; i < chunk.size(); ++i) {
            if (!consume(chunk[i], values[i])) {
                decided = true;
                break;
            }
        }
        if (decided) break;
    }

    if (exceeded) return OptimalValue::aborted();
    return best;
}

i64 pair_max_value(const PartitionPair& p) { return max_mult_bi_pair(p).value; }
i64 pair_tot_value(const PartitionPair& p) { return tot_mult_bi_pair(p).value; }

} // namespace

OptimalValue max_mult_bi(const DegreeSequence& d, const OptimizeOptions& opts) {
    return optimize_over_partitions(d, opts, &pair_max_value, 1);
}

OptimalValue tot_mult_bi(const DegreeSequence& d, const OptimizeOptions& opts) {
    return optimize_over_partitions(d, opts, &pair_tot_value, 0);
}

} // namespace degreal
