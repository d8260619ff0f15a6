#pragma once

#include <cstdint>
#include <string>

#include "schurcalc/errors.hpp"

namespace schurcalc {

// Exact multiplicity type. Graded Schur-functor sweeps reach values around
// 9^30 ~ 4e28, past int64 but far inside the signed 128-bit range.
using Count = __int128;

inline Count checked_add(Count a, Count b) {
    Count r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("count addition overflow");
    return r;
}

inline Count checked_mul(Count a, Count b) {
    Count r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("count multiplication overflow");
    return r;
}

std::string count_to_string(Count v);

// Narrow to int64, throwing instead of truncating.
long long count_to_int64(Count v);

}  // namespace schurcalc
