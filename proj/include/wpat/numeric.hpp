#pragma once

#include <cstdint>
#include <stdexcept>

namespace wpat {

// All combinatorial quantities (parts, beta numbers, weight coefficients)
// fit comfortably in a signed 64-bit integer at the scales this library
// targets. Counts use unsigned 64-bit with explicit overflow checks.
using Int = long long;

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s;
    if (__builtin_add_overflow(a, b, &s))
        throw std::overflow_error("count exceeds 64-bit unsigned range");
    return s;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t p;
    if (__builtin_mul_overflow(a, b, &p))
        throw std::overflow_error("count exceeds 64-bit unsigned range");
    return p;
}

// Binomial coefficient with overflow checking. Returns 0 for k < 0 or k > n.
inline std::uint64_t binomial(Int n, Int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t result = 1;
    for (Int i = 1; i <= k; ++i) {
        // multiply first, divide after; intermediate stays exact because
        // result*(n-k+i) is divisible by i at each step
        result = checked_mul(result, static_cast<std::uint64_t>(n - k + i));
        result /= static_cast<std::uint64_t>(i);
    }
    return result;
}

} // namespace wpat
