#pragma once

#include <cstdint>
#include <stdexcept>

namespace ratseq {

/// Thrown when an operation would materialize more data than the configured
/// limits allow (row orders, oracle sizes). Distinct from std::overflow_error
/// so callers can map the two failure modes to different diagnostics.
class limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// All sequence arithmetic is exact int64 and must never wrap: the recurrences
// grow their entries roughly Fibonacci-fast, so any step that can leave the
// representable range goes through these helpers and aborts loudly.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("int64 overflow in addition");
    }
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw std::overflow_error("int64 overflow in subtraction");
    }
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("int64 overflow in multiplication");
    }
    return r;
}

} // namespace ratseq
