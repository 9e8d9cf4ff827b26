#include "degreal/sequence.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <sstream>

namespace degreal {

namespace {

constexpr i64 kMaxExpandedLength = 50'000'000;

i64 parse_int(std::string_view token, std::string_view piece) {
    i64 value = 0;
    const char* first = piece.data();
    const char* last = piece.data() + piece.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        fail(errc::parse, "bad token '" + std::string(token) + "': '" + std::string(piece) +
                              "' is not an integer");
    }
    return value;
}

} // namespace

DegreeSequence::DegreeSequence(std::vector<i64> degrees) : degrees_(std::move(degrees)) {
    for (i64 v : degrees_) {
        if (v < 1) fail(errc::invalid_argument, "degree " + std::to_string(v) + " is not positive");
    }
    std::sort(degrees_.begin(), degrees_.end(), std::greater<i64>());
    volume_ = 0;
    for (i64 v : degrees_) volume_ = checked_add(volume_, v);
}

DegreeSequence DegreeSequence::parse(std::string_view text) {
    std::vector<i64> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
            ++pos;
        if (pos >= text.size()) break;
        std::size_t end = pos;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])) && text[end] != ',')
            ++end;
        std::string_view token = text.substr(pos, end - pos);
        pos = end;

        std::string_view value_part = token;
        std::string_view count_part;
        if (auto caret = token.find('^'); caret != std::string_view::npos) {
            value_part = token.substr(0, caret);
            count_part = token.substr(caret + 1);
        }
        i64 value = parse_int(token, value_part);
        if (value < 1) fail(errc::parse, "bad token '" + std::string(token) + "': value must be positive");
        i64 count = 1;
        if (!count_part.empty() || token.find('^') != std::string_view::npos) {
            count = parse_int(token, count_part);
            if (count < 1) fail(errc::parse, "bad token '" + std::string(token) + "': count must be positive");
        }
        if (static_cast<i64>(out.size()) + count > kMaxExpandedLength)
            fail(errc::invalid_argument, "sequence too long to expand in memory");
        out.insert(out.end(), static_cast<std::size_t>(count), value);
    }
    return DegreeSequence(std::move(out));
}

std::vector<Block> DegreeSequence::blocks() const {
    std::vector<Block> out;
    for (i64 v : degrees_) {
        if (!out.empty() && out.back().value == v) {
            ++out.back().count;
        } else {
            out.push_back({v, 1});
        }
    }
    return out;
}

DegreeSequence DegreeSequence::concat(const DegreeSequence& other) const {
    std::vector<i64> merged;
    merged.reserve(size() + other.size());
    std::merge(degrees_.begin(), degrees_.end(), other.degrees_.begin(), other.degrees_.end(),
               std::back_inserter(merged), std::greater<i64>());
    return DegreeSequence(std::move(merged));
}

DegreeSequence DegreeSequence::append_run(i64 value, i64 count) const {
    if (count < 0) fail(errc::invalid_argument, "negative run length");
    if (static_cast<i64>(size()) + count > kMaxExpandedLength)
        fail(errc::invalid_argument, "sequence too long to expand in memory");
    std::vector<i64> run(static_cast<std::size_t>(count), value);
    return concat(DegreeSequence(std::move(run)));
}

std::string DegreeSequence::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (const Block& b : blocks()) {
        if (!first) out << ' ';
        first = false;
        out << b.value;
        if (b.count > 1) out << '^' << b.count;
    }
    return out.str();
}

DegreeSequence conjugate(const DegreeSequence& d) {
    const i64 width = d.max_degree();
    if (width > 10'000'000) fail(errc::invalid_argument, "conjugate too large to materialize");
    std::vector<i64> conj(static_cast<std::size_t>(width), 0);
    // d is nonincreasing, so the entries >= j form a prefix that shrinks with j.
    std::size_t m = d.size();
    for (i64 j = 1; j <= width; ++j) {
        while (m > 0 && d[m - 1] < j) --m;
        conj[static_cast<std::size_t>(j - 1)] = static_cast<i64>(m);
    }
    return DegreeSequence(std::move(conj));
}

EgReport eg_report(const DegreeSequence& d) {
    const std::size_t n = d.size();
    EgReport report;
    report.deltas.resize(n);

    // prefix sums and a clamped conjugate: cnt[j] = |{i : d_i >= j}| for j <= n.
    std::vector<i64> prefix(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = checked_add(prefix[i], d[i]);
    std::vector<i64> hist(n + 2, 0);
    for (std::size_t i = 0; i < n; ++i) {
        i64 clamped = std::min<i64>(d[i], static_cast<i64>(n));
        ++hist[static_cast<std::size_t>(clamped)];
    }
    std::vector<i64> cnt(n + 2, 0); // cnt[j], j = 1..n
    for (std::size_t j = n; j >= 1; --j) {
        cnt[j] = cnt[j + 1] + hist[j];
        if (j == 1) break;
    }
    // minsum[x] = sum_i min{x, d_i} = sum_{j<=x} cnt[j], for x = 0..n.
    std::vector<i64> minsum(n + 1, 0);
    for (std::size_t x = 1; x <= n; ++x) minsum[x] = checked_add(minsum[x - 1], cnt[x]);

    for (std::size_t l = 1; l <= n; ++l) {
        const i64 m = cnt[l]; // entries >= l
        i64 head; // sum_{i<=l} min{l, d_i}
        if (m >= static_cast<i64>(l)) {
            head = checked_mul(static_cast<i64>(l), static_cast<i64>(l));
        } else {
            head = m * static_cast<i64>(l) + (prefix[l] - prefix[static_cast<std::size_t>(m)]);
        }
        const i64 tail = minsum[l] - head; // sum_{i>l} min{l, d_i}
        const i64 rhs = checked_add(checked_mul(static_cast<i64>(l), static_cast<i64>(l - 1)), tail);
        report.deltas[l - 1] = prefix[l] - rhs;
    }

    report.beta = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        if (d[i - 1] > static_cast<i64>(i)) report.beta = i;
    }
    report.delta1 = n > 0 ? report.deltas[0] : 0;
    report.delta_max = 0;
    for (std::size_t l = 2; l <= report.beta; ++l)
        report.delta_max = std::max(report.delta_max, report.deltas[l - 1]);
    return report;
}

PartitionPair::PartitionPair(DegreeSequence a, DegreeSequence b)
    : a_(std::move(a)), b_(std::move(b)) {
    if (a_.volume() != b_.volume()) {
        fail(errc::invalid_argument,
             "partition sides are unbalanced: " + std::to_string(a_.volume()) + " vs " +
                 std::to_string(b_.volume()));
    }
}

PartitionPair PartitionPair::parse(std::string_view text) {
    auto bar = text.find('|');
    if (bar == std::string_view::npos)
        fail(errc::parse, "partition text needs the form \"a-side | b-side\"");
    if (text.find('|', bar + 1) != std::string_view::npos)
        fail(errc::parse, "partition text has more than one '|'");
    return PartitionPair(DegreeSequence::parse(text.substr(0, bar)),
                         DegreeSequence::parse(text.substr(bar + 1)));
}

std::string PartitionPair::to_string() const {
    return a_.to_string() + " | " + b_.to_string();
}

} // namespace degreal
