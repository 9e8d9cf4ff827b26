#pragma once

// Shared helpers for the test suites: tiny constructors, random instance
// generators, and naive quadratic reference implementations used as
// differential oracles. Test-only; never included by the library.

#include <algorithm>
#include <random>
#include <vector>

#include "degreal/sequence.hpp"

namespace degreal::testsupport {

inline DegreeSequence seq(std::initializer_list<i64> values) {
    return DegreeSequence(std::vector<i64>(values));
}

inline PartitionPair pair(std::initializer_list<i64> a, std::initializer_list<i64> b) {
    return PartitionPair(seq(a), seq(b));
}

inline DegreeSequence random_sequence(std::mt19937_64& rng, std::size_t max_n, i64 max_degree) {
    std::uniform_int_distribution<std::size_t> len(1, max_n);
    std::uniform_int_distribution<i64> deg(1, max_degree);
    std::vector<i64> values(len(rng));
    for (auto& v : values) v = deg(rng);
    return DegreeSequence(std::move(values));
}

/// Random sequence with even volume.
inline DegreeSequence random_even_sequence(std::mt19937_64& rng, std::size_t max_n,
                                           i64 max_degree) {
    while (true) {
        DegreeSequence d = random_sequence(rng, max_n, max_degree);
        if (d.volume() % 2 == 0) return d;
    }
}

/// Random balanced pair: a is random, b is a random composition of vol(a)
/// with entries <= max_degree.
inline PartitionPair random_pair(std::mt19937_64& rng, std::size_t max_side, i64 max_degree) {
    while (true) {
        DegreeSequence a = random_sequence(rng, max_side, max_degree);
        std::vector<i64> b;
        i64 rest = a.volume();
        bool ok = true;
        while (rest > 0) {
            std::uniform_int_distribution<i64> part(1, std::min(max_degree, rest));
            const i64 v = part(rng);
            b.push_back(v);
            rest -= v;
            if (b.size() > 4 * max_side + 8) {
                ok = false;
                break;
            }
        }
        if (ok) return PartitionPair(a, DegreeSequence(std::move(b)));
    }
}

// ---- naive reference implementations (quadratic, no conjugate tricks) ----

inline bool naive_is_graphic(const DegreeSequence& d) {
    if (d.volume() % 2 != 0) return false;
    const std::size_t n = d.size();
    for (std::size_t l = 1; l <= n; ++l) {
        i64 lhs = 0;
        for (std::size_t i = 0; i < l; ++i) lhs += d[i];
        i64 rhs = static_cast<i64>(l) * static_cast<i64>(l - 1);
        for (std::size_t i = l; i < n; ++i) rhs += std::min<i64>(static_cast<i64>(l), d[i]);
        if (lhs > rhs) return false;
    }
    return true;
}

inline bool naive_is_r_max_graphic(const DegreeSequence& d, i64 r) {
    const std::size_t n = d.size();
    for (std::size_t l = 1; l <= n; ++l) {
        i64 lhs = 0;
        for (std::size_t i = 0; i < l; ++i) lhs += d[i];
        i64 rhs = r * static_cast<i64>(l) * static_cast<i64>(l - 1);
        for (std::size_t i = l; i < n; ++i)
            rhs += std::min<i64>(r * static_cast<i64>(l), d[i]);
        if (lhs > rhs) return false;
    }
    return true;
}

inline bool naive_is_bigraphic_pair(const PartitionPair& p) {
    for (std::size_t l = 1; l <= p.a().size(); ++l) {
        i64 lhs = 0;
        for (std::size_t i = 0; i < l; ++i) lhs += p.a()[i];
        i64 rhs = 0;
        for (i64 bv : p.b().degrees()) rhs += std::min<i64>(static_cast<i64>(l), bv);
        if (lhs > rhs) return false;
    }
    return true;
}

} // namespace degreal::testsupport
