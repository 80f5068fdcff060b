#pragma once

#include <chrono>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "chebzsig/cheb_order.hpp"
#include "chebzsig/chebyshev.hpp"
#include "chebzsig/factorint.hpp"
#include "chebzsig/integer.hpp"
#include "chebzsig/omega.hpp"
#include "chebzsig/polynomial.hpp"
#include "chebzsig/zsigmondy.hpp"

// The property suite: every algebraic law the library relies on, checked
// against independent reference computations (linear recurrence, naive
// order scan, smallest-prime-factor sieve, closed-form family enumeration)
// over fixed exhaustive ranges.  The CLI `selftest` subcommand and the
// acceptance tests both run this.

namespace chebzsig::selftest {

struct check_result {
    std::string name;
    bool passed = true;
    std::string detail;  // failure description, or brief stats
    double ms = 0.0;
};

namespace reference {

// O(n) three-term recurrence, deliberately independent of the ladder.
inline bigint cheb_linear(std::uint64_t n, const bigint& x) {
    bigint prev = 1, cur = x;
    if (n == 0) return prev;
    for (std::uint64_t k = 1; k < n; ++k) {
        bigint next = 2 * x * cur - prev;
        prev.swap(cur);
        cur.swap(next);
    }
    return cur;
}

inline bigint cheb_linear_mod(std::uint64_t n, const bigint& x, const bigint& m) {
    bigint prev = mod_reduce(1, m), cur = mod_reduce(x, m);
    const bigint x_red = cur;
    if (n == 0) return prev;
    for (std::uint64_t k = 1; k < n; ++k) {
        bigint next = mod_reduce(2 * x_red * cur - prev, m);
        prev.swap(cur);
        cur.swap(next);
    }
    return cur;
}

// Least m >= 1 with T_m(a) = 1 mod p, by linear scan.
inline std::uint64_t che_order_naive(std::uint64_t p, std::uint64_t a) {
    bigint prev = mod_reduce(1, p), cur = mod_reduce(a, p);
    const bigint x_red = cur;
    for (std::uint64_t m = 1;; ++m) {
        if (cur == 1) return m;
        bigint next = mod_reduce(2 * x_red * cur - prev, p);
        prev.swap(cur);
        cur.swap(next);
    }
}

// The shared sieve only grows, so it can hold primes beyond the requested
// bound; copy out exactly the range asked for.
inline std::vector<std::uint32_t> primes_upto(std::uint32_t bound) {
    const auto table = detail::prime_table(bound);
    std::vector<std::uint32_t> out;
    for (const auto p : *table)
        if (p <= bound) out.push_back(p);
    return out;
}

inline std::vector<std::uint32_t> odd_primes_upto(std::uint32_t bound) {
    auto out = primes_upto(bound);
    if (!out.empty() && out.front() == 2) out.erase(out.begin());
    return out;
}

}  // namespace reference

namespace detail {

struct check_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <typename... Parts>
[[noreturn]] inline void fail(Parts&&... parts) {
    std::ostringstream os;
    (os << ... << parts);
    throw check_failure(os.str());
}

inline void require(bool ok, const std::string& what) {
    if (!ok) throw check_failure(what);
}

}  // namespace detail

inline std::vector<check_result> run_selftest(unsigned workers = 1) {
    using clock = std::chrono::steady_clock;
    namespace d = detail;
    std::vector<check_result> out;
    auto run = [&out](const std::string& name, auto&& body) {
        check_result r;
        r.name = name;
        const auto t0 = clock::now();
        try {
            body(r);
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = e.what();
        }
        r.ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
        out.push_back(std::move(r));
    };

    run("recurrence vs doubling ladder (n <= 2000)", [](check_result&) {
        std::vector<bigint> xs{-3, -2, -1, 0, 1, 2, 3, 10, ipow(10, 10)};
        for (const bigint& x : xs) {
            bigint prev = 1, cur = x;
            d::require(cheb_eval(0, x) == prev, "T_0 mismatch");
            for (std::uint64_t n = 1; n <= 2000; ++n) {
                if (cheb_eval(n, x) != cur)
                    d::fail("ladder != recurrence at n=", n, ", x=", x);
                bigint next = 2 * x * cur - prev;
                prev.swap(cur);
                cur.swap(next);
            }
        }
    });

    run("composition identity T_m(T_n) = T_mn (m,n <= 30)", [](check_result&) {
        for (std::uint64_t m = 0; m <= 30; ++m)
            for (std::uint64_t n = 0; n <= 30; ++n)
                for (int xi = -10; xi <= 10; ++xi) {
                    const bigint x = xi;
                    if (cheb_eval(m, cheb_eval(n, x)) != cheb_eval(m * n, x))
                        d::fail("composition fails at m=", m, " n=", n, " x=", xi);
                }
    });

    run("product identity (T_{a+b}-1)(T_{|a-b|}-1) = (T_a-T_b)^2 (a,b <= 40)",
        [](check_result&) {
            for (std::uint64_t a = 0; a <= 40; ++a)
                for (std::uint64_t b = 0; b <= 40; ++b)
                    for (int xi = -5; xi <= 5; ++xi) {
                        const bigint x = xi;
                        const bigint lhs =
                            (cheb_eval(a + b, x) - 1) * (cheb_eval(a > b ? a - b : b - a, x) - 1);
                        const bigint diff = cheb_eval(a, x) - cheb_eval(b, x);
                        if (lhs != diff * diff)
                            d::fail("product identity fails at a=", a, " b=", b, " x=", xi);
                    }
        });

    run("Fermat analogue mod p (odd p <= 200)", [](check_result&) {
        for (const auto p : reference::odd_primes_upto(200)) {
            for (std::uint64_t x = 0; x < p; ++x) {
                if (cheb_eval_mod(p, x, p) != x)
                    d::fail("T_p(x) != x mod p at p=", p, " x=", x);
                if (cheb_eval_mod(p - 1, x, p) != 1 && cheb_eval_mod(p + 1, x, p) != 1)
                    d::fail("neither T_{p-1} nor T_{p+1} is 1 mod p at p=", p, " x=", x);
            }
        }
    });

    run("T_n(1) = 1 (n <= 1000)", [](check_result&) {
        for (std::uint64_t n = 0; n <= 1000; ++n)
            if (cheb_eval(n, 1) != 1) d::fail("T_n(1) != 1 at n=", n);
    });

    run("shifted expansion matches exact shift (n <= 40)", [](check_result&) {
        for (unsigned n = 1; n <= 40; ++n) {
            const int_poly shifted = cheb_poly(n).compose(int_poly{1, 1});
            for (unsigned k = 0; k <= n; ++k)
                if (shifted_coeff(n, k) != shifted.coeff(k))
                    d::fail("shifted coefficient mismatch at n=", n, " k=", k);
        }
    });

    run("shifted leading coefficient 2^{n-1} (n <= 128)", [](check_result&) {
        for (unsigned n = 1; n <= 128; ++n)
            if (shifted_coeff(n, n) != ipow(2, n - 1))
                d::fail("leading shifted coefficient wrong at n=", n);
    });

    run("order divisor characterization and side containment (p <= 100)", [](check_result&) {
        for (const auto p : reference::primes_upto(100)) {
            for (std::uint64_t a = 0; a < p; ++a) {
                const auto r = che_order(p, a);
                for (std::uint64_t n = 1; n <= 60; ++n) {
                    const bool one = is_cheb_one(n, a, p);
                    const bool divides = bigint(n) % r.order == 0;
                    if (one != divides)
                        d::fail("divisor lattice fails at p=", p, " a=", a, " n=", n);
                }
                if (p > 2) {
                    if ((p - 1) % r.order != 0 && (p + 1) % r.order != 0)
                        d::fail("order divides neither p-1 nor p+1 at p=", p, " a=", a);
                    if (boost::multiprecision::gcd(r.order, bigint(p)) != 1)
                        d::fail("order not coprime to p at p=", p, " a=", a);
                }
            }
        }
    });

    run("order matches naive linear scan (p <= 60)", [](check_result&) {
        for (const auto p : reference::primes_upto(60)) {
            for (std::uint64_t a = 0; a < p; ++a) {
                const auto naive = reference::che_order_naive(p, a);
                const auto fast = che_order(p, a);
                if (fast.order != naive)
                    d::fail("order mismatch at p=", p, " a=", a, ": fast=", fast.order,
                            " naive=", naive);
            }
        }
    });

    run("order depends only on a mod p (p <= 60)", [](check_result&) {
        for (const auto p : reference::primes_upto(60))
            for (std::uint64_t a = 0; a < p; ++a)
                for (const std::uint64_t k : {1ull, 7ull}) {
                    if (che_order(p, a).order != che_order(p, bigint(a) + bigint(k) * p).order)
                        d::fail("order changed under a -> a + ", k, "p at p=", p, " a=", a);
                }
    });

    run("omega construction integral (n <= 200)", [](check_result&) {
        for (unsigned n = 1; n <= 200; ++n) (void)omega(n);  // throws on any violation
    });

    run("omega factorization identity (n <= 64)", [](check_result&) {
        for (unsigned n = 1; n <= 64; ++n) {
            int_poly prod{1};
            for (unsigned dd = 1; dd <= n; ++dd) {
                if (n % dd != 0) continue;
                const auto e = omega(dd);
                for (unsigned s = 0; s < e.sigma; ++s) prod *= e.poly;
            }
            if (prod != cheb_poly(n) - int_poly{1})
                d::fail("product over divisors != T_n - 1 at n=", n);
        }
    });

    run("omega degree phi(n)/2 and leading coefficient 2^{phi(n)/2} (n <= 200)",
        [](check_result&) {
            for (unsigned n = 3; n <= 200; ++n) {
                const auto e = omega(n);
                const auto half_phi = euler_phi(n) / 2;
                if (e.degree() != half_phi)
                    d::fail("degree != phi/2 at n=", n);
                if (e.poly.leading() != ipow(2, static_cast<unsigned>(half_phi)))
                    d::fail("leading coefficient != 2^{phi/2} at n=", n);
            }
        });

    run("omega composition reduction (mn <= 120)", [](check_result&) {
        for (unsigned m = 1; m <= 60; ++m) {
            for (unsigned n = 1; m * n <= 120; ++n) {
                const auto big = omega(m * n);
                const int_poly composed = omega(n).poly.compose(cheb_poly(m));
                try {
                    (void)composed.exact_div(big.poly);
                } catch (const integrality_violation&) {
                    d::fail("Omega_mn does not divide Omega_n(T_m) at m=", m, " n=", n);
                }
                if (n >= 3 && m >= 2) {
                    bool radical = true;  // every prime of m divides n
                    for (const auto& [p, e] : factorize(bigint(m)).factors) {
                        (void)e;
                        if (bigint(n) % p != 0) radical = false;
                    }
                    if (radical && big.poly != composed)
                        d::fail("Omega_mn != Omega_n(T_m) under radical condition at m=", m,
                                " n=", n);
                }
            }
        }
    });

    run("omega odd constant term is +-1 (odd n <= 199)", [](check_result&) {
        for (unsigned n = 1; n <= 199; n += 2) {
            const bigint c0 = omega(n).poly.coeff(0);
            if (c0 != 1 && c0 != -1) d::fail("constant coefficient not +-1 at n=", n);
        }
    });

    run("omega reflection Omega_2n(x) = (-1)^{phi(n)/2} Omega_n(-x) (odd n <= 99)",
        [](check_result&) {
            for (unsigned n = 3; n <= 99; n += 2) {
                const auto base = omega(n);
                const bool flip = (euler_phi(n) / 2) % 2 == 1;
                std::vector<bigint> coeffs(base.poly.coeffs());
                for (std::size_t k = 0; k < coeffs.size(); ++k) {
                    if (k % 2 == 1) coeffs[k] = -coeffs[k];
                    if (flip) coeffs[k] = -coeffs[k];
                }
                if (omega(2 * n).poly != int_poly(std::move(coeffs)))
                    d::fail("reflection identity fails at n=", n);
            }
        });

    run("factorization reconstructs input (10^4 random n <= 10^12)", [](check_result&) {
        std::uint64_t state = 0x5eed5eed5eedull;
        for (int trial = 0; trial < 10'000; ++trial) {
            const bigint n = chebzsig::detail::splitmix64(state) % 1'000'000'000'000ull + 1;
            const auto f = factorize(n);
            bigint prod = f.cofactor ? *f.cofactor : bigint(1);
            for (const auto& [p, e] : f.factors) {
                prod *= ipow(p, e);
                if (!is_prime(p).prime) d::fail("listed factor not prime: ", p);
            }
            if (prod != n) d::fail("factor product != n for n=", n);
        }
    });

    run("factorization agrees with trial-division sieve (n <= 10^6)", [](check_result&) {
        constexpr std::uint32_t kLimit = 1'000'000;
        std::vector<std::uint32_t> spf(kLimit + 1, 0);
        for (std::uint32_t i = 2; i <= kLimit; ++i) {
            if (spf[i]) continue;
            for (std::uint64_t j = i; j <= kLimit; j += i)
                if (!spf[j]) spf[j] = i;
        }
        for (std::uint32_t n = 1; n <= kLimit; ++n) {
            std::vector<std::pair<bigint, unsigned>> expect;
            std::uint32_t m = n;
            while (m > 1) {
                const std::uint32_t p = spf[m];
                unsigned e = 0;
                while (m % p == 0) {
                    m /= p;
                    ++e;
                }
                expect.emplace_back(p, e);
            }
            const auto f = factorize(n);
            if (!f.complete() || f.factors != expect) d::fail("factorization differs at n=", n);
        }
    });

    // One rectangle scan feeds the structural checks.
    scan_config rect40;
    rect40.n_min = 2;
    rect40.n_max = 40;
    rect40.a_min = 2;
    rect40.a_max = 40;
    rect40.workers = workers;
    scan_result rows40;

    run("structure law n = Che_p(a) p^i over [2,40]^2", [&](check_result&) {
        rows40 = verify_rectangle(rect40);
        d::require(rows40.summary.violations == 0, "scan reported theorem violations");
        d::require(rows40.summary.undecided == 0, "scan left undecided cells");
        for (const auto& row : rows40.rows) {
            for (const auto& c : row.classifications) {
                if (row.omega_value % c.p != 0) d::fail("listed p does not divide omega");
                bigint expect_n = bigint(c.f) * ipow(c.p, c.i);
                if (expect_n != row.n)
                    d::fail("n != f p^i at n=", row.n, " a=", row.a, " p=", c.p);
                if (c.i > 0 && !c.greatest_prime_of_n)
                    d::fail("i > 0 without greatest-prime flag at n=", row.n, " p=", c.p);
                if (c.i > 0 && c.p_squared_divides_omega) {
                    const bool ok = (c.p == 2 && (row.n == 2 || row.n == 4)) ||
                                    (c.p == 3 && (row.n == 3 || row.n == 6));
                    if (!ok) d::fail("p^2 clause violated at n=", row.n, " p=", c.p);
                }
            }
        }
    });

    run("order via divisor lattice matches p+-1 route over [2,40]^2", [&](check_result&) {
        d::require(!rows40.rows.empty(), "rectangle scan unavailable");
        const bigint cap = bigint(1) << 48;
        for (const auto& row : rows40.rows)
            for (const auto& c : row.classifications) {
                if (c.p > cap) continue;  // keep p+-1 factorizations cheap
                if (che_order(c.p, row.a).order != c.f)
                    d::fail("order routes disagree at n=", row.n, " a=", row.a, " p=", c.p);
            }
    });

    run("corollary: no primitive prime iff omega is 2^k or gpf(n)^k over [2,40]^2",
        [&](check_result&) {
            d::require(!rows40.rows.empty(), "rectangle scan unavailable");
            for (const auto& row : rows40.rows) {
                const std::uint64_t q = greatest_prime_factor(row.n);
                bool shape = power_exponent(row.omega_value, 2).has_value();
                if (!shape && q % 2 == 1)
                    shape = power_exponent(row.omega_value, static_cast<unsigned>(q)).has_value();
                const bool has_primitive = row.prime.has_value();
                if (has_primitive == shape)
                    d::fail("corollary equivalence fails at n=", row.n, " a=", row.a);
            }
        });

    run("primitivity certificates sound over [2,40]^2", [&](check_result&) {
        d::require(!rows40.rows.empty(), "rectangle scan unavailable");
        for (const auto& row : rows40.rows) {
            if (!row.prime) continue;
            const bigint& p = *row.prime;
            if (!is_cheb_one(row.n, row.a, p))
                d::fail("certificate prime fails T_n = 1 at n=", row.n, " a=", row.a);
            for (const auto dd : divisors(row.n)) {
                if (dd == row.n) continue;
                if (is_cheb_one(dd, row.a, p))
                    d::fail("certificate prime not primitive: T_", dd, " = 1 at n=", row.n,
                            " a=", row.a);
            }
        }
    });

    run("growth bound Omega_n(a) > (2(a-1))^{phi(n)/2} (n <= 40, a in [3,40])",
        [](check_result&) {
            for (std::uint64_t n = 5; n <= 40; ++n) {
                if (n == 6) continue;
                for (std::uint64_t a = 3; a <= 40; ++a) {
                    const bigint bound = ipow(bigint(2) * (a - 1),
                                              static_cast<unsigned>(euler_phi(n) / 2));
                    if (omega_eval(static_cast<unsigned>(n), a) <= bound)
                        d::fail("growth bound fails at n=", n, " a=", a);
                }
            }
        });

    run("main theorem rectangle [2,30] x [2,200]", [&](check_result& r) {
        scan_config cfg;
        cfg.n_min = 2;
        cfg.n_max = 30;
        cfg.a_min = 2;
        cfg.a_max = 200;
        cfg.workers = workers;
        const auto res = verify_rectangle(cfg);
        d::require(res.summary.violations == 0, "scan reported theorem violations");
        d::require(res.summary.undecided == 0, "scan left undecided cells");
        // expected exceptional set from the closed forms
        std::set<std::pair<std::uint64_t, bigint>> expect;
        for (bigint a = 3; a <= 200; a = 2 * a + 1) expect.insert({2, a});          // 2^k - 1
        for (bigint t = 9; (t - 1) / 2 <= 200; t *= 3) expect.insert({3, (t - 1) / 2});
        for (bigint a = 2; a <= 200; a *= 2) expect.insert({4, a});                 // 2^k
        for (bigint t = 3; (t + 1) / 2 <= 200; t *= 3) expect.insert({6, (t + 1) / 2});
        std::set<std::pair<std::uint64_t, bigint>> got;
        for (const auto& row : res.rows)
            if (row.verdict == verdict_kind::exceptional) got.insert({row.n, row.a});
        if (got != expect) d::fail("exceptional set does not match the closed forms");
        std::ostringstream os;
        os << res.summary.cells << " pairs, " << res.summary.exceptional << " exceptional";
        r.detail = os.str();
    });

    return out;
}

inline bool all_passed(const std::vector<check_result>& results) {
    for (const auto& r : results)
        if (!r.passed) return false;
    return true;
}

}  // namespace chebzsig::selftest
