#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chebzsig/integer.hpp"

// Primality testing and integer factorization sized for this library's
// needs: trial division against a cached sieve, then Brent's variant of
// Pollard rho (Brent, BIT 20 (1980)) under an iteration budget.  Arithmetic
// is dispatched by operand size: plain 64-bit with 128-bit products, a
// Montgomery context for moduli up to 2^125, and cpp_int beyond that.
// Everything is deterministic: rho is seeded from the number being split,
// so results are reproducible and calls are independent across threads.

namespace chebzsig {

enum class certainty { proven, probable };

struct primality {
    bool prime;
    certainty cert;
};

// Default rho budget sized so that splitting a semiprime with a ~53-bit
// smallest factor (the worst the desk-scale scans produce) still has a
// several-fold margin over the expected ~1.2 sqrt(p) iterations.
struct factor_budget {
    std::uint32_t trial_division_bound = 10'000;
    std::uint64_t rho_iterations = 1ull << 29;
};

struct factorization {
    bigint n;
    // sorted by prime, exponents positive
    std::vector<std::pair<bigint, unsigned>> factors;
    certainty cert = certainty::proven;
    // composite (or unknown) remainder left when the rho budget ran out
    std::optional<bigint> cofactor;

    bool complete() const { return !cofactor.has_value(); }
};

namespace detail {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 splitmix64(u64& state) {
    state += 0x9e3779b97f4a7c15ull;
    u64 z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline u64 mulmod64(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

// a + b mod m for a, b in [0, m); safe for m up to 2^64 - 1
inline u64 addmod64(u64 a, u64 b, u64 m) {
    return a >= m - b ? a - (m - b) : a + b;
}

inline u64 powmod64(u64 base, u64 exp, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod64(r, base, m);
        base = mulmod64(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin below 2^64.  The witness set
// {2,3,5,7,11,13,17,19,23,29,31,37} (the first twelve primes) is known to
// be exact for all n < 3.3 * 10^24, comfortably covering the 64-bit range.
inline bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

inline std::pair<u128, u128> mul128_full(u128 a, u128 b) {
    const u64 a0 = static_cast<u64>(a), a1 = static_cast<u64>(a >> 64);
    const u64 b0 = static_cast<u64>(b), b1 = static_cast<u64>(b >> 64);
    const u128 p00 = static_cast<u128>(a0) * b0;
    const u128 p01 = static_cast<u128>(a0) * b1;
    const u128 p10 = static_cast<u128>(a1) * b0;
    const u128 p11 = static_cast<u128>(a1) * b1;
    u128 mid = p01 + p10;
    const u128 mid_carry = static_cast<u128>(mid < p01) << 64;
    u128 lo = p00 + (mid << 64);
    const u128 lo_carry = lo < p00;
    const u128 hi = p11 + (mid >> 64) + mid_carry + lo_carry;
    return {hi, lo};
}

// Montgomery context for odd moduli below 2^125 (headroom keeps every
// intermediate sum inside u128).
struct mont128 {
    u128 mod;
    u128 neg_inv;  // -mod^{-1} mod 2^128
    u128 one;      // R mod mod, R = 2^128
    u128 r2;       // R^2 mod mod

    explicit mont128(u128 m) : mod(m) {
        u128 inv = m;  // correct mod 2^3 for odd m, Newton doubles the bits
        for (int i = 0; i < 6; ++i) inv *= 2 - m * inv;
        neg_inv = static_cast<u128>(0) - inv;
        one = (static_cast<u128>(0) - m) % m;
        u128 r = one;
        for (int i = 0; i < 128; ++i) r = add(r, r);
        r2 = r;
    }

    u128 add(u128 a, u128 b) const {
        u128 s = a + b;
        if (s >= mod) s -= mod;
        return s;
    }
    u128 sub(u128 a, u128 b) const { return a >= b ? a - b : mod - b + a; }

    u128 redc(u128 hi, u128 lo) const {
        const u128 q = lo * neg_inv;
        const auto [qm_hi, qm_lo] = mul128_full(q, mod);
        (void)qm_lo;  // lo + qm_lo == 0 mod 2^128 by construction
        u128 t = hi + qm_hi + (lo != 0 ? 1 : 0);
        if (t >= mod) t -= mod;
        return t;
    }

    u128 mul(u128 a, u128 b) const {
        const auto [hi, lo] = mul128_full(a, b);
        return redc(hi, lo);
    }

    u128 to(u128 x) const { return mul(x % mod, r2); }
    u128 from(u128 x) const { return redc(0, x); }

    u128 pow(u128 base, u128 exp) const {
        u128 r = one;
        while (exp) {
            if (exp & 1) r = mul(r, base);
            base = mul(base, base);
            exp >>= 1;
        }
        return r;
    }
};

inline u128 gcd_u128(u128 a, u128 b) {
    while (b) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Strong-pseudoprime test, `rounds` deterministic pseudo-random bases.
inline bool is_probable_prime_u128(u128 n, int rounds) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u128 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    const mont128 M(n);
    const u128 minus1 = M.sub(0, M.one);
    u64 seed = static_cast<u64>(n) ^ 0xc0ffee0ddba11ull;
    for (int round = 0; round < rounds; ++round) {
        const u128 base = (static_cast<u128>(splitmix64(seed)) << 64 | splitmix64(seed)) % (n - 3) + 2;
        u128 x = M.pow(M.to(base), d);
        if (x == M.one || x == minus1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = M.mul(x, x);
            if (x == minus1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

// Brent-rho on 64-bit n.  Returns a nontrivial factor, or 0 when the budget
// ran out.  n must be composite, odd, with no factor among the first primes.
inline u64 brent_rho_u64(u64 n, u64& iters_left) {
    u64 seed = n ^ 0x9e3779b97f4a7c15ull;
    for (int attempt = 0; attempt < 64 && iters_left > 0; ++attempt) {
        const u64 c = splitmix64(seed) % (n - 1) + 1;
        u64 y = splitmix64(seed) % n;
        u64 g = 1, q = 1, xs = 0, x = 0;
        const u64 batch = 128;
        for (u64 r = 1; g == 1; r <<= 1) {
            if (iters_left < 2 * r) {
                iters_left = 0;
                return 0;
            }
            iters_left -= 2 * r;
            x = y;
            for (u64 i = 0; i < r; ++i) y = addmod64(mulmod64(y, y, n), c, n);
            for (u64 k = 0; k < r && g == 1; k += batch) {
                xs = y;
                const u64 limit = std::min(batch, r - k);
                for (u64 i = 0; i < limit; ++i) {
                    y = addmod64(mulmod64(y, y, n), c, n);
                    q = mulmod64(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
            }
        }
        if (g == n) {
            // walk forward from the last snapshot to isolate the factor
            g = 1;
            for (u64 i = 0; i < 4 * batch && g == 1; ++i) {
                xs = addmod64(mulmod64(xs, xs, n), c, n);
                g = std::gcd(x > xs ? x - xs : xs - x, n);
            }
            if (g == 1) g = n;  // degenerate run; retry with a new c
        }
        if (g != n && g != 1) return g;
    }
    return 0;
}

// Same algorithm on a Montgomery context, for n up to 2^125.  The rho
// iterate stays in Montgomery form throughout; gcd(q*R, n) == gcd(q, n)
// for odd n, so the accumulated product never needs converting out.
inline u128 brent_rho_u128(u128 n, u64& iters_left) {
    const mont128 M(n);
    u64 seed = static_cast<u64>(n) ^ 0xb5ad4eceda1ce2a9ull;
    for (int attempt = 0; attempt < 64 && iters_left > 0; ++attempt) {
        const u128 c = M.to((static_cast<u128>(splitmix64(seed)) << 64 | splitmix64(seed)) % (n - 1) + 1);
        u128 y = (static_cast<u128>(splitmix64(seed)) << 64 | splitmix64(seed)) % n;
        u128 g = 1, q = M.one, xs = 0, x = 0;
        const u64 batch = 256;
        for (u64 r = 1; g == 1; r <<= 1) {
            if (iters_left < 2 * r) {
                iters_left = 0;
                return 0;
            }
            iters_left -= 2 * r;
            x = y;
            for (u64 i = 0; i < r; ++i) y = M.add(M.mul(y, y), c);
            for (u64 k = 0; k < r && g == 1; k += batch) {
                xs = y;
                const u64 limit = std::min(batch, r - k);
                for (u64 i = 0; i < limit; ++i) {
                    y = M.add(M.mul(y, y), c);
                    q = M.mul(q, M.sub(x, y));
                }
                g = gcd_u128(q, n);
            }
        }
        if (g == n) {
            g = 1;
            for (u64 i = 0; i < 4 * batch && g == 1; ++i) {
                xs = M.add(M.mul(xs, xs), c);
                g = gcd_u128(M.sub(x, xs), n);
            }
            if (g == 1) g = n;
        }
        if (g != n && g != 1) return g;
    }
    return 0;
}

// cpp_int fallback for anything wider; same Brent structure.
inline bigint brent_rho_big(const bigint& n, u64& iters_left) {
    u64 seed = n.convert_to<u64>() ^ 0x2545f4914f6cdd1dull;
    for (int attempt = 0; attempt < 64 && iters_left > 0; ++attempt) {
        const bigint c = mod_reduce(bigint(splitmix64(seed)), n - 1) + 1;
        bigint y = mod_reduce(bigint(splitmix64(seed)), n);
        bigint g = 1, q = 1, xs = 0, x = 0;
        const u64 batch = 128;
        for (u64 r = 1; g == 1; r <<= 1) {
            if (iters_left < 2 * r) {
                iters_left = 0;
                return 0;
            }
            iters_left -= 2 * r;
            x = y;
            for (u64 i = 0; i < r; ++i) y = (y * y + c) % n;
            for (u64 k = 0; k < r && g == 1; k += batch) {
                xs = y;
                const u64 limit = std::min(batch, r - k);
                for (u64 i = 0; i < limit; ++i) {
                    y = (y * y + c) % n;
                    q = q * boost::multiprecision::abs(x - y) % n;
                }
                g = boost::multiprecision::gcd(q, n);
            }
        }
        if (g == n) {
            g = 1;
            for (u64 i = 0; i < 4 * batch && g == 1; ++i) {
                xs = (xs * xs + c) % n;
                g = boost::multiprecision::gcd(boost::multiprecision::abs(x - xs), n);
            }
            if (g == 1) g = n;
        }
        if (g != n && g != 1) return g;
    }
    return 0;
}

inline u128 to_u128(const bigint& x) {
    const u64 lo = (x & 0xffffffffffffffffull).convert_to<u64>();
    const u64 hi = (x >> 64).convert_to<u64>();
    return static_cast<u128>(hi) << 64 | lo;
}

inline bigint from_u128(u128 x) {
    bigint r = static_cast<u64>(x >> 64);
    r <<= 64;
    r |= static_cast<u64>(x);
    return r;
}

// Cached prime sieve, regrown on demand.
inline std::shared_ptr<const std::vector<u32>> prime_table(u32 bound) {
    static std::mutex mu;
    static std::shared_ptr<const std::vector<u32>> cache;
    static u32 cache_bound = 0;
    std::lock_guard<std::mutex> lock(mu);
    if (!cache || cache_bound < bound) {
        std::vector<bool> sieve(bound + 1, true);
        auto primes = std::make_shared<std::vector<u32>>();
        for (u64 i = 2; i <= bound; ++i) {
            if (!sieve[i]) continue;
            primes->push_back(static_cast<u32>(i));
            for (u64 j = i * i; j <= bound; j += i) sieve[j] = false;
        }
        cache = primes;
        cache_bound = bound;
    }
    return cache;
}

inline bigint kth_root_floor(const bigint& n, unsigned k) {
    if (n < 2 || k < 2) return n;
    unsigned bits = bit_length(n);
    bigint lo = 1, hi = bigint(1) << (bits / k + 1);
    while (lo < hi) {
        bigint mid = (lo + hi + 1) >> 1;
        if (ipow(mid, k) <= n)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

// Smallest-base representation n = r^k with k >= 2, if one exists.
inline std::optional<std::pair<bigint, unsigned>> perfect_power(const bigint& n) {
    const unsigned bits = bit_length(n);
    for (unsigned k = 2; k <= bits; ++k) {
        bigint r = kth_root_floor(n, k);
        if (r < 2) break;
        if (ipow(r, k) == n) return std::make_pair(r, k);
    }
    return std::nullopt;
}

}  // namespace detail

// Primality verdict.  Proven below 2^64 (fixed Miller-Rabin witness set);
// above that a prime verdict rests on 40 strong-pseudoprime rounds and is
// flagged probable.  Composite verdicts are always proven (a witness is a
// proof).  n must be >= 0.
inline primality is_prime(const bigint& n) {
    if (n < 0) throw std::domain_error("is_prime: n must be nonnegative");
    if (n < 2) return {false, certainty::proven};
    if (bit_length(n) <= 64)
        return {detail::is_prime_u64(n.convert_to<detail::u64>()), certainty::proven};
    constexpr int kRounds = 40;
    bool prime;
    if (bit_length(n) <= 125) {
        prime = detail::is_probable_prime_u128(detail::to_u128(n), kRounds);
    } else {
        // cpp_int Miller-Rabin
        bigint d = n - 1;
        int s = 0;
        while ((d & 1) == 0) {
            d >>= 1;
            ++s;
        }
        prime = true;
        detail::u64 seed = n.convert_to<detail::u64>() ^ 0xabcdef1234567ull;
        for (int round = 0; round < kRounds && prime; ++round) {
            const bigint base = mod_reduce(bigint(detail::splitmix64(seed)), n - 3) + 2;
            bigint x = boost::multiprecision::powm(base, d, n);
            if (x == 1 || x == n - 1) continue;
            bool witness = true;
            for (int i = 1; i < s; ++i) {
                x = x * x % n;
                if (x == n - 1) {
                    witness = false;
                    break;
                }
            }
            if (witness) prime = false;
        }
    }
    return {prime, prime ? certainty::probable : certainty::proven};
}

namespace detail {

// Splits composite m (> trial division range, odd, no tiny factors) into a
// nontrivial factor, dispatching on width.  0 means the budget ran out.
inline bigint rho_split(const bigint& m, u64& iters_left) {
    if (iters_left == 0) return 0;
    const unsigned bits = bit_length(m);
    if (bits <= 64) {
        const u64 f = brent_rho_u64(m.convert_to<u64>(), iters_left);
        return f ? bigint(f) : bigint(0);
    }
    if (bits <= 125) {
        const u128 f = brent_rho_u128(to_u128(m), iters_left);
        return f ? from_u128(f) : bigint(0);
    }
    return brent_rho_big(m, iters_left);
}

}  // namespace detail

// Trial division up to budget.trial_division_bound, then budgeted Brent-rho.
// Whatever remains unsplit when the budget is exhausted is reported as the
// cofactor, never silently dropped; the product of factors and cofactor
// always reconstructs n.
inline factorization factorize(const bigint& n, const factor_budget& budget = {}) {
    if (n < 1) throw std::domain_error("factorize: n must be >= 1");
    factorization out;
    out.n = n;
    if (n == 1) return out;

    std::map<bigint, unsigned> found;
    const detail::u32 bound = std::max<detail::u32>(budget.trial_division_bound, 2);
    // the shared sieve only grows; stop at the requested bound regardless of
    // how large the cached table happens to be
    const auto primes = detail::prime_table(bound);
    detail::u64 iters_left = budget.rho_iterations;
    bigint cofactor = 1;
    std::vector<bigint> pending;

    if (bit_length(n) <= 64) {
        // all-u64 trial division, the hot path for small inputs
        detail::u64 m = n.convert_to<detail::u64>();
        detail::u64 first_untried = 0;
        for (const detail::u32 p : *primes) {
            if (p > bound || static_cast<detail::u64>(p) * p > m) {
                first_untried = p;
                break;
            }
            while (m % p == 0) {
                m /= p;
                ++found[p];
            }
        }
        if (m > 1) {
            // the smallest factor m could still have is the first untried prime
            const detail::u128 q = first_untried ? first_untried
                                                 : static_cast<detail::u128>(bound) + 1;
            if (q * q > m)
                ++found[m];
            else
                pending.push_back(bigint(m));
        }
    } else {
        bigint rem = n;
        bigint first_untried = 0;
        for (const detail::u32 p : *primes) {
            if (p > bound || bigint(p) * p > rem) {
                first_untried = p;
                break;
            }
            while (rem % p == 0) {
                rem /= p;
                ++found[p];
            }
        }
        if (rem > 1) {
            const bigint q = first_untried != 0 ? first_untried : bigint(bound) + 1;
            if (q * q > rem)
                ++found[rem];
            else
                pending.push_back(rem);
        }
    }
    while (!pending.empty()) {
        bigint m = std::move(pending.back());
        pending.pop_back();
        const primality pr = is_prime(m);
        if (pr.prime) {
            ++found[m];
            if (pr.cert == certainty::probable) out.cert = certainty::probable;
            continue;
        }
        if (auto pp = detail::perfect_power(m)) {
            for (unsigned i = 0; i < pp->second; ++i) pending.push_back(pp->first);
            continue;
        }
        const bigint d = detail::rho_split(m, iters_left);
        if (d == 0) {
            cofactor *= m;
            continue;
        }
        pending.push_back(d);
        pending.push_back(m / d);
    }
    if (cofactor > 1) out.cofactor = cofactor;
    out.factors.assign(found.begin(), found.end());
    return out;
}

// "2^3 * 5 * 29" style; appends the unfactored cofactor in brackets.
inline std::string format_factorization(const factorization& f) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, e] : f.factors) {
        if (!first) os << " * ";
        os << p;
        if (e > 1) os << '^' << e;
        first = false;
    }
    if (f.cofactor) {
        if (!first) os << " * ";
        os << '[' << *f.cofactor << ']';
        first = false;
    }
    if (first) os << 1;
    return os.str();
}

inline std::uint64_t euler_phi(std::uint64_t n) {
    if (n == 0) throw std::domain_error("euler_phi: n must be positive");
    std::uint64_t phi = 1;
    const auto fac = factorize(bigint(n));
    for (const auto& [p, e] : fac.factors) {
        const auto pu = p.convert_to<std::uint64_t>();
        std::uint64_t pe = 1;
        for (unsigned i = 1; i < e; ++i) pe *= pu;
        phi *= pe * (pu - 1);
    }
    return phi;
}

inline std::uint64_t greatest_prime_factor(std::uint64_t n) {
    if (n < 2) throw std::domain_error("greatest_prime_factor: n must be >= 2");
    const auto fac = factorize(bigint(n));
    return fac.factors.back().first.convert_to<std::uint64_t>();
}

// All divisors of n, ascending.
inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
    if (n == 0) throw std::domain_error("divisors: n must be positive");
    std::vector<std::uint64_t> divs{1};
    const auto fac = factorize(bigint(n));
    for (const auto& [p, e] : fac.factors) {
        const auto pu = p.convert_to<std::uint64_t>();
        const std::size_t base = divs.size();
        std::uint64_t pe = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pe *= pu;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pe);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace chebzsig
