#include "schurcalc/count.hpp"

#include <limits>

namespace schurcalc {

std::string count_to_string(Count v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    std::string digits;
    while (u > 0) {
        digits += static_cast<char>('0' + static_cast<int>(u % 10));
        u /= 10;
    }
    if (neg) digits += '-';
    return std::string(digits.rbegin(), digits.rend());
}

long long count_to_int64(Count v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw ArithmeticOverflow("count does not fit in 64 bits: " + count_to_string(v));
    return static_cast<long long>(v);
}

}  // namespace schurcalc
