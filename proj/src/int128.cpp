#include "longseg/int128.hpp"

#include <algorithm>

namespace longseg {

std::string to_string(Int128 value) {
    if (value == 0) return "0";
    const bool negative = value < 0;
    // Divide on the unsigned side; |INT128_MIN| is not representable signed.
    unsigned __int128 v = negative ? -static_cast<unsigned __int128>(value)
                                   : static_cast<unsigned __int128>(value);
    std::string digits;
    while (v != 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    if (negative) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

} // namespace longseg
