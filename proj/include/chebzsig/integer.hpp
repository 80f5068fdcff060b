#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace chebzsig {

// All public arithmetic is exact.  cpp_int keeps the library header-only;
// values at the scales handled here (a few thousand bits) are well within
// its comfort zone.
using bigint = boost::multiprecision::cpp_int;

// Least nonnegative residue of x mod m, for m >= 1.
inline bigint mod_reduce(const bigint& x, const bigint& m) {
    bigint r = x % m;
    if (r < 0) r += m;
    return r;
}

// Number of bits in |x|; bit_length(0) == 0.
inline unsigned bit_length(const bigint& x) {
    if (x == 0) return 0;
    return static_cast<unsigned>(boost::multiprecision::msb(
               x < 0 ? bigint(-x) : x)) +
           1;
}

inline bigint ipow(bigint base, unsigned exp) {
    bigint r = 1;
    while (exp) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

// If v == base^alpha for some alpha >= 1 returns alpha, otherwise nullopt.
inline std::optional<unsigned> power_exponent(bigint v, unsigned base) {
    if (base < 2 || v < base) return std::nullopt;
    unsigned alpha = 0;
    while (v % base == 0) {
        v /= base;
        ++alpha;
    }
    if (v != 1) return std::nullopt;
    return alpha;
}

// Strict decimal parse: optional leading '-', digits only.
inline std::optional<bigint> parse_bigint(const std::string& s) {
    if (s.empty()) return std::nullopt;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return std::nullopt;
    for (std::size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9') return std::nullopt;
    return bigint(s);
}

inline std::string to_string(const bigint& x) { return x.str(); }

}  // namespace chebzsig
