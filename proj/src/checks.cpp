#include "degreal/checks.hpp"

#include <algorithm>
#include <limits>

namespace degreal {

namespace {

using i128 = __int128;

i64 clamp_to_i64(i128 v) {
    constexpr i128 lo = std::numeric_limits<i64>::min();
    constexpr i128 hi = std::numeric_limits<i64>::max();
    return static_cast<i64>(std::min(hi, std::max(lo, v)));
}

/// Accumulates a family of inequalities LHS_l <= RHS_l, l = 1, 2, ...
struct FamilyScan {
    std::optional<std::size_t> failing;
    i128 min_slack = 0;
    bool any = false;

    void feed(std::size_t l, i128 lhs, i128 rhs) {
        const i128 slack = rhs - lhs;
        if (!any || slack < min_slack) min_slack = slack;
        any = true;
        if (!failing && slack < 0) failing = l;
    }

    CheckVerdict verdict() const {
        CheckVerdict v;
        v.holds = !failing.has_value();
        v.failing_index = failing;
        if (any) v.slack = clamp_to_i64(min_slack);
        v.reason = v.holds ? VerdictReason::satisfied : VerdictReason::inequality_violated;
        return v;
    }
};

/// sum_i min{x, v_i} over a fixed nonincreasing vector, for a nondecreasing
/// stream of queries x. Amortized O(1) per query after O(n) setup.
class MinSumSweep {
public:
    explicit MinSumSweep(const std::vector<i64>& v) : v_(v), m_(v.size()) {
        prefix_.resize(v.size() + 1, 0);
        for (std::size_t i = 0; i < v.size(); ++i) prefix_[i + 1] = checked_add(prefix_[i], v[i]);
    }

    i128 full(i64 x) {
        advance(x);
        return i128(m_) * x + (prefix_.back() - prefix_[m_]);
    }

    /// sum over entries with index > skip (0-based count of leading entries skipped).
    i128 suffix(i64 x, std::size_t skip) {
        advance(x);
        if (m_ > skip) return i128(m_ - skip) * x + (prefix_.back() - prefix_[m_]);
        return prefix_.back() - prefix_[std::min(skip, v_.size())];
    }

    i64 prefix_sum(std::size_t l) const { return prefix_[std::min(l, v_.size())]; }

private:
    void advance(i64 x) {
        while (m_ > 0 && v_[m_ - 1] < x) --m_;
    }

    const std::vector<i64>& v_;
    std::vector<i64> prefix_;
    std::size_t m_;
};

void require_even_volume(const DegreeSequence& d, const char* who) {
    if (d.volume() % 2 != 0)
        fail(errc::invalid_argument, std::string(who) + ": volume is odd, no realization can exist");
}

} // namespace

CheckVerdict can_multigraph(const DegreeSequence& d) {
    require_even_volume(d, "can_multigraph");
    CheckVerdict v;
    if (d.empty()) {
        v.holds = true;
        return v;
    }
    const i64 rest = d.volume() - d.max_degree();
    FamilyScan scan;
    scan.feed(1, d.max_degree(), rest);
    return scan.verdict();
}

CheckVerdict is_graphic(const DegreeSequence& d) {
    if (d.volume() % 2 != 0) {
        CheckVerdict v;
        v.holds = false;
        v.reason = VerdictReason::odd_volume;
        return v;
    }
    const EgReport report = eg_report(d);
    FamilyScan scan;
    for (std::size_t l = 1; l <= report.beta; ++l) scan.feed(l, report.deltas[l - 1], 0);
    return scan.verdict();
}

CheckVerdict is_r_max_graphic(const DegreeSequence& d, i64 r) {
    if (r < 1) fail(errc::invalid_argument, "is_r_max_graphic: r must be at least 1");
    require_even_volume(d, "is_r_max_graphic");
    MinSumSweep sweep(d.degrees());
    FamilyScan scan;
    for (std::size_t l = 1; l <= d.size(); ++l) {
        const i64 threshold = checked_mul(r, static_cast<i64>(l));
        const i128 rhs = i128(r) * l * (l - 1) + sweep.suffix(threshold, l);
        scan.feed(l, sweep.prefix_sum(l), rhs);
    }
    return scan.verdict();
}

CheckVerdict is_t_tot_graphic(const DegreeSequence& d, i64 t) {
    if (t < 0) fail(errc::invalid_argument, "is_t_tot_graphic: t must be nonnegative");
    require_even_volume(d, "is_t_tot_graphic");
    if (!can_multigraph(d).holds)
        fail(errc::invalid_argument,
             "is_t_tot_graphic: d_1 exceeds the sum of the rest, no multigraph realization exists");
    const EgReport report = eg_report(d);
    FamilyScan scan;
    for (std::size_t l = 1; l <= report.beta; ++l) {
        const i128 budget = i128(t) * std::min<i64>(static_cast<i64>(l), 2);
        scan.feed(l, report.deltas[l - 1], budget);
    }
    return scan.verdict();
}

namespace {

CheckVerdict pair_family(const PartitionPair& p, i64 multiplier, i64 addend) {
    const auto& a = p.a().degrees();
    MinSumSweep sweep(p.b().degrees());
    FamilyScan scan;
    i64 lhs = 0;
    for (std::size_t l = 1; l <= a.size(); ++l) {
        lhs = checked_add(lhs, a[l - 1]);
        const i64 threshold = checked_mul(multiplier, static_cast<i64>(l));
        scan.feed(l, lhs, sweep.full(threshold) + addend);
    }
    return scan.verdict();
}

} // namespace

CheckVerdict is_bigraphic_pair(const PartitionPair& p) {
    return pair_family(p, 1, 0);
}

CheckVerdict is_r_max_bigraphic_pair(const PartitionPair& p, i64 r) {
    if (r < 1) fail(errc::invalid_argument, "is_r_max_bigraphic_pair: r must be at least 1");
    return pair_family(p, r, 0);
}

CheckVerdict is_t_tot_bigraphic_pair(const PartitionPair& p, i64 t) {
    if (t < 0) fail(errc::invalid_argument, "is_t_tot_bigraphic_pair: t must be nonnegative");
    return pair_family(p, 1, t);
}

bool sufficient_r_max(const PartitionPair& p, i64 r) {
    if (r < 1) fail(errc::invalid_argument, "sufficient_r_max: r must be at least 1");
    const i128 product = i128(p.a().max_degree()) * p.b().max_degree();
    return product <= i128(r) * p.side_volume() + r;
}

bool sufficient_t_tot(const PartitionPair& p, i64 t) {
    if (t < 0) fail(errc::invalid_argument, "sufficient_t_tot: t must be nonnegative");
    const i128 product = i128(p.a().max_degree()) * p.b().max_degree();
    return product <= i128(p.side_volume()) + t + 1;
}

} // namespace degreal
