#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace degreal {

using i64 = std::int64_t;

enum class errc {
    parse,             // malformed sequence or partition text
    invalid_argument,  // rejected input: odd volume, r = 0, size guards, ...
    overflow,          // a 64-bit sum or count would wrap
    not_graphic,
    not_bigraphic,
    infeasible,        // no realization of the requested kind exists
    infeasible_at_r,
    validation_failed, // a construction failed its own postcondition check
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw Error(code, message);
}

inline i64 checked_add(i64 a, i64 b) {
    i64 out;
    if (__builtin_add_overflow(a, b, &out)) fail(errc::overflow, "integer sum overflows 64 bits");
    return out;
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 out;
    if (__builtin_mul_overflow(a, b, &out)) fail(errc::overflow, "integer product overflows 64 bits");
    return out;
}

} // namespace degreal
