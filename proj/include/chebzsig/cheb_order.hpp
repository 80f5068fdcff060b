#pragma once

#include <stdexcept>

#include "chebzsig/chebyshev.hpp"
#include "chebzsig/errors.hpp"
#include "chebzsig/factorint.hpp"
#include "chebzsig/integer.hpp"

// The Chebyshev order Che_p(a): the least positive m with T_m(a) = 1 mod p.
// Two facts make it computable in O(log p) evaluations:
//
//   - T_n(a) = 1 mod p  iff  Che_p(a) | n       (divisor lattice)
//   - for odd p, Che_p(a) divides p-1 or p+1; Che_2(a) is 1 (a odd) or 2
//
// so it suffices to test the two candidate sides and strip prime factors
// while the congruence survives, exactly as for multiplicative orders.

namespace chebzsig {

enum class order_side {
    p_minus_1,
    p_plus_1,
    unit,  // p = 2, or an order dividing gcd(p-1, p+1) = 2
};

struct cheb_order_result {
    bigint p;
    bigint a;  // reduced mod p; the order depends only on this residue
    bigint order;
    order_side side;
};

// True iff T_n(a) = 1 mod p.  p must be prime.
inline bool is_cheb_one(const bigint& n, const bigint& a, const bigint& p) {
    if (n < 1) throw std::domain_error("is_cheb_one: n must be positive");
    if (!is_prime(p).prime) throw std::domain_error("is_cheb_one: p is not prime");
    return cheb_eval_mod(n, a, p) == 1;
}

inline cheb_order_result che_order(const bigint& p, const bigint& a,
                                   const factor_budget& budget = {}) {
    if (!is_prime(p).prime) throw std::domain_error("che_order: p is not prime");
    const bigint a_red = mod_reduce(a, p);
    if (p == 2) return {p, a_red, a_red == 1 ? 1 : 2, order_side::unit};

    bigint best = 0;
    const bigint sides[2] = {bigint(p - 1), bigint(p + 1)};
    for (const bigint& side : sides) {
        if (cheb_eval_mod(side, a_red, p) != 1) continue;
        const factorization fac = factorize(side, budget);
        if (!fac.complete())
            throw std::runtime_error("che_order: factorization budget exhausted on " +
                                     to_string(side));
        bigint m = side;
        for (const auto& [q, e] : fac.factors) {
            (void)e;
            while (m % q == 0 && cheb_eval_mod(m / q, a_red, p) == 1) m /= q;
        }
        if (best == 0 || m < best) best = m;
    }
    if (best == 0)
        throw theorem_violation("che_order: neither side of " + to_string(p) +
                                " satisfies the congruence");
    if (best % p == 0)
        throw theorem_violation("che_order: order not coprime to " + to_string(p));

    order_side side;
    if (best <= 2)
        side = order_side::unit;
    else if ((p - 1) % best == 0)
        side = order_side::p_minus_1;
    else
        side = order_side::p_plus_1;
    return {p, a_red, best, side};
}

}  // namespace chebzsig
