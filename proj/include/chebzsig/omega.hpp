#pragma once

#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>

#include "chebzsig/chebyshev.hpp"
#include "chebzsig/integer.hpp"
#include "chebzsig/polynomial.hpp"

// The cyclotomic-analogue factors of T_n - 1:
//
//   T_n(x) - 1 = prod_{d | n} Omega_d(x)^{sigma_d},  sigma_d = 1 for d in {1,2}, else 2
//
// with Omega_1 = x - 1, Omega_2 = 2x + 2, and for n >= 3 a degree-phi(n)/2
// polynomial with leading coefficient 2^{phi(n)/2}.  Omega_n is what
// separates T_n - 1 from every T_d - 1 below it: a prime whose Chebyshev
// order is exactly n must divide Omega_n(a).
//
// Construction never leaves Z[x]: divide T_n - 1 by the lower factors
// exactly, then take the exact square root of the quotient.  Both steps are
// guaranteed to succeed; if one ever fails it raises and means a bug.

namespace chebzsig {

struct omega_entry {
    unsigned n = 0;
    int_poly poly;
    unsigned sigma = 1;  // exponent of this factor inside T_m - 1 for n | m

    unsigned degree() const { return static_cast<unsigned>(poly.degree()); }
};

namespace detail {

// Requires every proper divisor of n to be present in memo already.
inline omega_entry build_omega(unsigned n, const std::map<unsigned, omega_entry>& memo) {
    omega_entry e;
    e.n = n;
    e.sigma = n <= 2 ? 1 : 2;
    if (n == 1) {
        e.poly = int_poly{-1, 1};
        return e;
    }
    if (n == 2) {
        e.poly = int_poly{2, 2};
        return e;
    }
    int_poly q = cheb_poly(n) - int_poly{1};
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const omega_entry& od = memo.at(d);
        for (unsigned s = 0; s < od.sigma; ++s) q = q.exact_div(od.poly);
    }
    e.poly = q.sqrt_exact();  // comes out with positive leading coefficient
    return e;
}

}  // namespace detail

// Memoized; entries are immutable once built and returned by value, so the
// result can be used freely across threads.
inline omega_entry omega(unsigned n) {
    if (n < 1) throw std::domain_error("omega: n must be positive");
    static std::mutex mu;
    static std::map<unsigned, omega_entry> memo;
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(n);
    if (it == memo.end()) {
        for (unsigned d = 1; d <= n; ++d)
            if (n % d == 0 && !memo.count(d)) memo.emplace(d, detail::build_omega(d, memo));
        it = memo.find(n);
    }
    return it->second;
}

inline bigint omega_eval(unsigned n, const bigint& a) { return omega(n).poly.eval(a); }

// One polynomial per line: "n: c0 c1 ... ck" in decimal, ascending degree.
inline void dump_omega_table(std::ostream& os, unsigned n_max) {
    for (unsigned n = 1; n <= n_max; ++n) os << n << ": " << omega(n).poly.coeff_string() << '\n';
}

}  // namespace chebzsig
