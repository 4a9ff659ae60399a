#pragma once

#include <cmath>
#include <cstdint>

namespace lolab {

using int128 = __int128;
using uint128 = unsigned __int128;

/// Exact comparison a <= r * f for nonnegative integers a, f < 2^75 and a
/// finite double r >= 0, treating r as the dyadic rational it is. No rounding
/// anywhere.
inline bool int_le_scaled_double(uint128 a, double r, uint128 f) {
    if (r < 0.0) return false;
    if (r == 0.0 || f == 0) return a == 0;
    int e = 0;
    const double frac = std::frexp(r, &e);
    auto m = uint128(std::ldexp(frac, 53));  // r == m * 2^(e-53) exactly
    int e2 = e - 53;
    while ((m & 1) == 0 && e2 < 0) {
        m >>= 1;
        ++e2;
    }
    constexpr uint128 kMax = ~uint128(0);
    const uint128 mf = m * f;  // m <= 2^53, f < 2^75: no overflow
    if (e2 >= 0) {
        if (e2 >= 128 || mf > (kMax >> e2)) return true;  // rhs >= 2^128 > a
        return a <= (mf << e2);
    }
    const int k = -e2;
    if (k >= 128 || a > (kMax >> k)) return a == 0;  // a*2^k >= 2^128 > mf
    return (a << k) <= mf;
}

/// a <= r exactly, for a nonnegative integer a and finite double r.
inline bool int_le_double(uint128 a, double r) { return int_le_scaled_double(a, r, 1); }

}  // namespace lolab
