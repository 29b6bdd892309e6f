#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace cosetdht {

struct KahanSum {
    double sum = 0.0;
    double c = 0.0;
    void add(double x) {
        double y = x - c;
        double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

inline double u128_to_double(unsigned __int128 x) {
    uint64_t hi = static_cast<uint64_t>(x >> 64);
    uint64_t lo = static_cast<uint64_t>(x);
    return std::ldexp(static_cast<double>(hi), 64) + static_cast<double>(lo);
}

inline double log2_u128(unsigned __int128 x) { return std::log2(u128_to_double(x)); }

// log2(sum 2^x_i), stable against the spread of the x_i.
inline double log2_sum_exp2(const std::vector<double>& xs) {
    double m = -HUGE_VAL;
    for (double x : xs)
        if (x > m) m = x;
    if (m == -HUGE_VAL) return -HUGE_VAL;
    KahanSum s;
    for (double x : xs) s.add(std::exp2(x - m));
    return m + std::log2(s.sum);
}

}  // namespace cosetdht
