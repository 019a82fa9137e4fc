#pragma once

#include <cstdint>
#include <string>

#include "radmom/errors.hpp"

namespace radmom {

// All moment values are exact 128-bit integers; projection bins are 64-bit.
using int128_t = __int128;
using uint128_t = unsigned __int128;

std::string to_string(int128_t v);

inline int128_t checked_add(int128_t a, int128_t b) {
    int128_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw internal_error("128-bit addition overflow");
    return r;
}

inline int128_t checked_sub(int128_t a, int128_t b) {
    int128_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw internal_error("128-bit subtraction overflow");
    return r;
}

inline int128_t checked_mul(int128_t a, int128_t b) {
    int128_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw internal_error("128-bit multiplication overflow");
    return r;
}

// Division that must be exact; a nonzero remainder means an upstream
// projection or moment value is corrupt.
inline int128_t exact_div(int128_t num, std::int64_t den, const char* what) {
    const int128_t q = num / den;
    if (q * den != num)
        throw internal_error(std::string("inexact division in ") + what);
    return q;
}

}  // namespace radmom
