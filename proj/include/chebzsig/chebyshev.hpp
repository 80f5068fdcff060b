#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>

#include "chebzsig/errors.hpp"
#include "chebzsig/integer.hpp"
#include "chebzsig/polynomial.hpp"

// Chebyshev polynomials of the first kind over Z, evaluated exactly or
// modulo m.  T_0 = 1, T_1 = x, T_{n+2} = 2x T_{n+1} - T_n.
//
// Evaluation uses a paired doubling ladder on (T_k, T_{k+1}):
//
//   T_{2k}   = 2 T_k^2 - 1
//   T_{2k+1} = 2 T_k T_{k+1} - x
//   T_{2k+2} = 2 T_{k+1}^2 - 1
//
// (the first from T_2(T_k) = T_{2k}, the second from the product formula
// 2 T_a T_b = T_{a+b} + T_{|a-b|}), so T_n costs O(log n) multiplications.

namespace chebzsig {

// The pair (T_n(x), T_{n+1}(x)) at a fixed argument, the carrier of the
// doubling ladder.  Values may be residues when produced by cheb_pair_mod.
struct cheb_pair {
    bigint n;
    bigint t_n;
    bigint t_n1;
};

namespace detail {

// Shared ladder skeleton; Reduce post-processes every newly formed value
// (identity for exact evaluation, mod m otherwise).
template <typename Reduce>
inline std::pair<bigint, bigint> cheb_ladder(const bigint& n, const bigint& x, Reduce reduce) {
    bigint a = reduce(bigint(1));  // T_0
    bigint b = reduce(x);          // T_1
    if (n == 0) return {a, b};
    const bigint x_red = b;
    for (int bit = static_cast<int>(boost::multiprecision::msb(n)); bit >= 0; --bit) {
        if (boost::multiprecision::bit_test(n, static_cast<unsigned>(bit))) {
            // (T_k, T_{k+1}) -> (T_{2k+1}, T_{2k+2})
            bigint t = reduce(2 * a * b - x_red);
            b = reduce(2 * b * b - 1);
            a = std::move(t);
        } else {
            // (T_k, T_{k+1}) -> (T_{2k}, T_{2k+1})
            bigint t = reduce(2 * a * b - x_red);
            a = reduce(2 * a * a - 1);
            b = std::move(t);
        }
    }
    return {a, b};
}

}  // namespace detail

inline cheb_pair cheb_pair_at(const bigint& n, const bigint& x) {
    if (n < 0) throw std::domain_error("cheb_pair_at: n must be nonnegative");
    auto [a, b] = detail::cheb_ladder(n, x, [](bigint v) { return v; });
    return {n, std::move(a), std::move(b)};
}

// T_n(x), exact.
inline bigint cheb_eval(const bigint& n, const bigint& x) {
    return cheb_pair_at(n, x).t_n;
}

inline cheb_pair cheb_pair_mod(const bigint& n, const bigint& x, const bigint& m) {
    if (n < 0) throw std::domain_error("cheb_pair_mod: n must be nonnegative");
    if (m < 2) throw std::domain_error("cheb_pair_mod: modulus must be >= 2");
    auto [a, b] = detail::cheb_ladder(n, mod_reduce(x, m),
                                      [&m](bigint v) { return mod_reduce(v, m); });
    return {n, std::move(a), std::move(b)};
}

// T_n(x) mod m as the least nonnegative residue; m >= 2.
inline bigint cheb_eval_mod(const bigint& n, const bigint& x, const bigint& m) {
    return cheb_pair_mod(n, x, m).t_n;
}

// Exact coefficient vector of T_n, via the three-term recurrence.  Degree n,
// leading coefficient 2^{n-1} for n >= 1.
inline int_poly cheb_poly(unsigned n) {
    int_poly prev{1};
    if (n == 0) return prev;
    int_poly cur{0, 1};
    const int_poly two_x{0, 2};
    for (unsigned k = 1; k < n; ++k) {
        int_poly next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// Coefficient of x^k in T_n(x+1), by the closed form
//
//   [x^k] T_n(x+1) = 2^k prod_{i=0}^{k-1} (n^2 - i^2) / (2k)!
//
// The division is carried out exactly and a nonzero remainder trips
// integrality_violation (it never does; the quotient is an integer).
inline bigint shifted_coeff(unsigned n, unsigned k) {
    if (n < 1) throw std::domain_error("shifted_coeff: n must be positive");
    if (k > n) throw std::domain_error("shifted_coeff: k out of range [0, n]");
    if (k == 0) return 1;
    const bigint n2 = bigint(n) * n;
    bigint num = ipow(2, k);
    bigint den = 1;
    for (unsigned i = 0; i < k; ++i) {
        num *= n2 - bigint(i) * i;
        den *= (2 * i + 1) * (2 * i + 2);  // builds (2k)! incrementally
    }
    bigint quot;
    bigint rem;
    boost::multiprecision::divide_qr(num, den, quot, rem);
    if (rem != 0)
        throw integrality_violation("shifted_coeff: closed form not divisible by (2k)!");
    return quot;
}

}  // namespace chebzsig
