#pragma once

#include <array>
#include <cstdint>

#include "cosetdht/errors.hpp"

namespace cosetdht {

// C(n, r) as an exact integer for 0 <= n <= 64.  The largest value, C(64,32),
// is about 1.83e18 and fits in uint64_t.  r > n yields 0.
inline uint64_t binomial(int n, int r) {
    static const auto table = [] {
        std::array<std::array<uint64_t, 65>, 65> t{};
        for (int i = 0; i <= 64; ++i) {
            t[i][0] = 1;
            for (int j = 1; j <= i; ++j)
                t[i][j] = t[i - 1][j - 1] + (j <= i - 1 ? t[i - 1][j] : 0);
        }
        return t;
    }();
    if (n < 0 || n > 64)
        throw OutOfRange("binomial: n = " + std::to_string(n) + " outside [0, 64]");
    if (r < 0)
        throw OutOfRange("binomial: r = " + std::to_string(r) + " is negative");
    if (r > n) return 0;
    return table[static_cast<size_t>(n)][static_cast<size_t>(r)];
}

}  // namespace cosetdht
