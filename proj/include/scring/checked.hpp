#pragma once

#include <cstdint>

#include "scring/errors.hpp"

namespace scring {

// Exact int64 arithmetic. Every helper throws IntegerOverflow instead of
// wrapping; all group-ring and structure-constant computations go through
// these so an out-of-range q aborts loudly rather than corrupting results.

inline int64_t ck_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw IntegerOverflow("int64 add overflow");
    return r;
}

inline int64_t ck_sub(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw IntegerOverflow("int64 sub overflow");
    return r;
}

inline int64_t ck_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw IntegerOverflow("int64 mul overflow");
    return r;
}

inline int64_t ck_neg(int64_t a) { return ck_sub(0, a); }

}  // namespace scring
