#include "degreal/partitions.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace degreal {

namespace {

constexpr i64 kMaxTableVolume = 20'000'000;

void require_table_size(i64 volume) {
    if (volume > kMaxTableVolume)
        fail(errc::invalid_argument, "subset-sum table too large (volume " + std::to_string(volume) + ")");
}

} // namespace

SubsetSumTable::SubsetSumTable(const DegreeSequence& d) : blocks_(d.blocks()) {
    require_table_size(d.volume());
    const std::size_t q = blocks_.size();
    suffix_vol_.assign(q + 1, 0);
    for (std::size_t k = q; k >= 1; --k) {
        suffix_vol_[k - 1] = suffix_vol_[k] + blocks_[k - 1].value * blocks_[k - 1].count;
        if (k == 1) break;
    }

    levels_.resize(q + 1);
    levels_[q] = {1}; // empty suffix cancels only D = 0
    for (std::size_t k = q; k >= 1; --k) {
        const i64 vol_here = suffix_vol_[k - 1];
        const i64 vol_next = suffix_vol_[k];
        const Block& blk = blocks_[k - 1];
        std::vector<char> level(static_cast<std::size_t>(2 * vol_here + 1), 0);
        for (i64 diff = -vol_here; diff <= vol_here; ++diff) {
            bool ok = false;
            for (i64 i = 0; i <= blk.count && !ok; ++i) {
                const i64 child = diff + (2 * i - blk.count) * blk.value;
                if (child >= -vol_next && child <= vol_next)
                    ok = levels_[k][static_cast<std::size_t>(child + vol_next)] != 0;
            }
            level[static_cast<std::size_t>(diff + vol_here)] = ok ? 1 : 0;
        }
        levels_[k - 1] = std::move(level);
        if (k == 1) break;
    }
}

bool SubsetSumTable::reachable(std::size_t k, i64 difference) const {
    const i64 vol = suffix_vol_.at(k - 1);
    if (difference < -vol || difference > vol) return false;
    return levels_[k - 1][static_cast<std::size_t>(difference + vol)] != 0;
}

bool subset_sum_reachable(std::span<const i64> values, i64 target) {
    i64 total = 0;
    for (i64 v : values) {
        if (v < 1) fail(errc::invalid_argument, "subset_sum_reachable: values must be positive");
        total = checked_add(total, v);
    }
    require_table_size(total);
    if (target < -total || target > total) return false;
    if ((total - target) % 2 != 0) return false;
    // sum(X) - sum(Y) == target with X + Y = all values <=> some subset sums to (total + target) / 2.
    const i64 goal = (total + target) / 2;
    std::vector<char> hit(static_cast<std::size_t>(total + 1), 0);
    hit[0] = 1;
    i64 covered = 0;
    for (i64 v : values) {
        covered = std::min(checked_add(covered, v), goal);
        for (i64 s = covered; s >= v; --s) {
            if (hit[static_cast<std::size_t>(s - v)]) hit[static_cast<std::size_t>(s)] = 1;
        }
    }
    return hit[static_cast<std::size_t>(goal)] != 0;
}

struct BalancedPartitionCursor::Impl {
    struct Node {
        std::size_t depth;   // block index this node will branch on (0-based); depth == q is a leaf
        bool entering;       // node-entry actions (guard query) still pending
        bool tied;           // all shallower blocks split exactly in half
        i64 next_i;          // next child: copies of block[depth] assigned to the a-side
        i64 min_i;
        i64 applied_l, applied_r; // contribution of the edge from the parent (for undo)
    };

    DegreeSequence d;
    std::vector<Block> blocks;
    SubsetSumTable table;
    EnumerationStats stats;
    std::vector<Node> stack;
    std::vector<i64> counts; // counts[k] = copies of block k currently on the a-side
    i64 sum_l = 0, sum_r = 0;
    bool exhausted = false;

    explicit Impl(DegreeSequence seq)
        : d(std::move(seq)), blocks(d.blocks()), table(d), counts(blocks.size(), 0) {
        if (d.volume() % 2 != 0) {
            exhausted = true; // parity rules out any balanced split; no DP query needed
        } else {
            stack.push_back(Node{0, true, true, 0, 0, 0, 0});
        }
    }

    PartitionPair make_pair() const {
        std::vector<i64> left, right;
        for (std::size_t k = 0; k < blocks.size(); ++k) {
            left.insert(left.end(), static_cast<std::size_t>(counts[k]), blocks[k].value);
            right.insert(right.end(), static_cast<std::size_t>(blocks[k].count - counts[k]),
                         blocks[k].value);
        }
        return PartitionPair(DegreeSequence(std::move(left)), DegreeSequence(std::move(right)));
    }

    void pop() {
        const Node& node = stack.back();
        sum_l -= node.applied_l;
        sum_r -= node.applied_r;
        stack.pop_back();
    }

    std::optional<PartitionPair> next() {
        while (!exhausted && !stack.empty()) {
            Node& node = stack.back();
            if (node.entering) {
                node.entering = false;
                ++stats.node_visits;
                if (node.depth == blocks.size()) {
                    // Exact DP pruning already implies balance here; kept as an assertion.
                    assert(sum_l == sum_r);
                    if (sum_l == sum_r) {
                        ++stats.partitions_emitted;
                        PartitionPair out = make_pair();
                        pop();
                        return out;
                    }
                    pop();
                    continue;
                }
                ++stats.dp_invocations;
                if (!table.reachable(node.depth + 1, sum_l - sum_r)) {
                    pop();
                    continue;
                }
                const Block& blk = blocks[node.depth];
                node.next_i = blk.count;
                // While the sides are tied, only the canonical half is walked:
                // the a-side must take at least as many copies as the b-side.
                node.min_i = node.tied ? (blk.count + 1) / 2 : 0;
            }
            if (node.next_i < node.min_i) {
                pop();
                continue;
            }
            const Block& blk = blocks[node.depth];
            const i64 i = node.next_i--;
            counts[node.depth] = i;
            const i64 dl = i * blk.value;
            const i64 dr = (blk.count - i) * blk.value;
            sum_l += dl;
            sum_r += dr;
            const bool child_tied = node.tied && (2 * i == blk.count);
            stack.push_back(Node{node.depth + 1, true, child_tied, 0, 0, dl, dr});
        }
        exhausted = true;
        return std::nullopt;
    }
};

BalancedPartitionCursor::BalancedPartitionCursor(DegreeSequence d)
    : impl_(std::make_unique<Impl>(std::move(d))) {}
BalancedPartitionCursor::~BalancedPartitionCursor() = default;
BalancedPartitionCursor::BalancedPartitionCursor(BalancedPartitionCursor&&) noexcept = default;
BalancedPartitionCursor& BalancedPartitionCursor::operator=(BalancedPartitionCursor&&) noexcept =
    default;

std::optional<PartitionPair> BalancedPartitionCursor::next() { return impl_->next(); }

const EnumerationStats& BalancedPartitionCursor::stats() const noexcept { return impl_->stats; }

EnumerationStats for_each_balanced_partition(
    const DegreeSequence& d, const std::function<bool(const PartitionPair&)>& visit) {
    BalancedPartitionCursor cursor(d);
    while (auto p = cursor.next()) {
        if (!visit(*p)) break;
    }
    return cursor.stats();
}

PartitionList list_balanced_partitions(const DegreeSequence& d, std::optional<i64> limit) {
    PartitionList out;
    BalancedPartitionCursor cursor(d);
    while (true) {
        if (limit && static_cast<i64>(out.partitions.size()) == *limit) {
            // Peek one more to tell truncation apart from exact exhaustion.
            out.truncated = cursor.next().has_value();
            break;
        }
        auto p = cursor.next();
        if (!p) break;
        out.partitions.push_back(std::move(*p));
    }
    out.stats = cursor.stats();
    return out;
}

i64 count_balanced_partitions(const DegreeSequence& d) {
    if (d.volume() % 2 != 0) return 0;
    require_table_size(d.volume());
    const i64 half = d.volume() / 2;
    const auto blocks = d.blocks();

    // ways[s] = number of count-vectors (c_k <= n_k) with sum c_k * v_k == s.
    std::vector<i64> ways(static_cast<std::size_t>(half + 1), 0);
    ways[0] = 1;
    i64 covered = 0;
    for (const Block& blk : blocks) {
        covered = std::min(checked_add(covered, blk.value * blk.count), half);
        std::vector<i64> next(static_cast<std::size_t>(half + 1), 0);
        for (i64 s = 0; s <= covered; ++s) {
            i64 acc = 0;
            for (i64 i = 0; i <= blk.count; ++i) {
                const i64 base = s - i * blk.value;
                if (base < 0) break;
                acc = checked_add(acc, ways[static_cast<std::size_t>(base)]);
            }
            next[static_cast<std::size_t>(s)] = acc;
        }
        ways = std::move(next);
    }
    const i64 ordered = ways[static_cast<std::size_t>(half)];

    // Unordered pairs: the complement map pairs count-vectors two by one,
    // with the exact-half vector (all block sizes even) as the lone fixpoint.
    bool all_even = true;
    for (const Block& blk : blocks) all_even = all_even && blk.count % 2 == 0;
    const i64 fixpoints = all_even ? 1 : 0;
    return (checked_add(ordered, fixpoints)) / 2;
}

} // namespace degreal
