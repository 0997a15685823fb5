#ifndef QDL_CHECKED_HPP
#define QDL_CHECKED_HPP

#include <cstdint>

#include "qdl/errors.hpp"

namespace qdl {

// All lattice/certificate arithmetic is 64-bit with loud overflow.  Inputs
// are capped (|entry| <= 1e6, d <= 1e6) so an overflow always means a bug.

inline std::int64_t add64(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw internal_invariant_error("int64 overflow in addition");
    return r;
}

inline std::int64_t sub64(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw internal_invariant_error("int64 overflow in subtraction");
    return r;
}

inline std::int64_t mul64(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw internal_invariant_error("int64 overflow in multiplication");
    return r;
}

constexpr std::int64_t kEntryCap = 1'000'000;

inline void require_bounded(std::int64_t x, const char* what) {
    if (x > kEntryCap || x < -kEntryCap)
        throw domain_error(std::string(what) + " exceeds the 1e6 input cap");
}

} // namespace qdl

#endif
