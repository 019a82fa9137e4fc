#include "radmom/int128.hpp"

#include <algorithm>

namespace radmom {

std::string to_string(int128_t v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    // Two's-complement negation handles the most negative value too.
    uint128_t u = neg ? ~static_cast<uint128_t>(v) + 1 : static_cast<uint128_t>(v);
    std::string digits;
    while (u != 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

}  // namespace radmom
