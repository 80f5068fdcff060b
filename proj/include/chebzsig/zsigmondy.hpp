#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "chebzsig/cheb_order.hpp"
#include "chebzsig/chebyshev.hpp"
#include "chebzsig/errors.hpp"
#include "chebzsig/factorint.hpp"
#include "chebzsig/integer.hpp"
#include "chebzsig/omega.hpp"

// Primitive-prime-divisor classification for the sequence T_n(a) - 1.
//
// A prime p is a primitive divisor at (n, a) when Che_p(a) = n.  Any such
// prime divides Omega_n(a), which is exponentially smaller than T_n(a) - 1,
// so the search factorizes Omega_n(a) only.  Every prime divisor p of
// Omega_n(a) obeys the structure law n = Che_p(a) * p^i with i >= 0; when
// i > 0, p is the greatest prime divisor of n, and p^2 | Omega_n(a) forces
// (p, n) into {(2,2), (2,4), (3,3), (3,6)}.  The pairs (n, a) with no
// primitive prime at all fall into four one-parameter families:
//
//   n = 2, a = 2^alpha - 1     n = 3, a = (3^alpha - 1)/2
//   n = 4, a = 2^alpha         n = 6, a = (3^alpha + 1)/2
//
// verify_rectangle audits all of this exhaustively over a rectangle of
// (n, a) pairs and reports any counterexample as a theorem violation.

namespace chebzsig {

struct prime_classification {
    bigint p;
    std::uint64_t n = 0;
    std::uint64_t f = 0;  // Che_p(a)
    unsigned i = 0;       // n = f * p^i
    bool greatest_prime_of_n = false;
    bool p_squared_divides_omega = false;
};

// Structure law for one prime divisor p of Omega_n(a).  Since p divides
// T_n(a) - 1, the order Che_p(a) divides n, so it is found as the least
// divisor d of n with T_d(a) = 1 mod p -- no factorization of p -+ 1 needed.
// Preconditions: p prime and p | Omega_n(a); violations of the proven
// structure raise theorem_violation.
inline prime_classification classify_prime(const bigint& p, std::uint64_t n, const bigint& a) {
    if (n < 1) throw std::domain_error("classify_prime: n must be positive");
    if (!is_prime(p).prime) throw std::domain_error("classify_prime: p is not prime");
    const bigint omega_value = omega_eval(static_cast<unsigned>(n), a);
    if (omega_value % p != 0)
        throw std::invalid_argument("classify_prime: p does not divide Omega_n(a)");

    prime_classification c;
    c.p = p;
    c.n = n;
    for (const std::uint64_t d : divisors(n)) {
        if (cheb_eval_mod(d, a, p) == 1) {
            c.f = d;
            break;
        }
    }
    if (c.f == 0)
        throw theorem_violation("classify_prime: no divisor of n gives T_d(a) = 1 mod p at n=" +
                                std::to_string(n));

    std::uint64_t q = n / c.f;
    if (p <= n) {
        const std::uint64_t pu = p.convert_to<std::uint64_t>();
        while (q % pu == 0) {
            q /= pu;
            ++c.i;
        }
    }
    if (q != 1)
        throw theorem_violation("classify_prime: n/f is not a power of p at n=" +
                                std::to_string(n) + ", p=" + to_string(p));

    c.greatest_prime_of_n = n >= 2 && bigint(greatest_prime_factor(n)) == p;
    c.p_squared_divides_omega = omega_value % (p * p) == 0;

    if (c.i > 0 && !c.greatest_prime_of_n)
        throw theorem_violation("classify_prime: i > 0 but p is not the greatest prime of n=" +
                                std::to_string(n) + ", p=" + to_string(p));
    if (c.i > 0 && c.p_squared_divides_omega) {
        const bool allowed = (p == 2 && (n == 2 || n == 4)) || (p == 3 && (n == 3 || n == 6));
        if (!allowed)
            throw theorem_violation("classify_prime: p^2 | Omega_n(a) outside the allowed pairs"
                                    " at n=" + std::to_string(n) + ", p=" + to_string(p));
    }
    return c;
}

enum class family : unsigned char { n2, n3, n4, n6 };

inline const char* family_name(family f) {
    switch (f) {
        case family::n2: return "n2";
        case family::n3: return "n3";
        case family::n4: return "n4";
        case family::n6: return "n6";
    }
    return "?";
}

struct exceptional_match {
    family fam;
    unsigned alpha;

    friend bool operator==(const exceptional_match&, const exceptional_match&) = default;
};

// Closed-form membership test for the four no-primitive-prime families.
// The alpha floors come from the hypothesis a >= 2: alpha = 1 would give
// a = 1 in the n = 2 and n = 3 families.
inline std::optional<exceptional_match> exceptional_family(std::uint64_t n, const bigint& a) {
    if (n < 2 || a < 2) throw std::domain_error("exceptional_family: requires n, a >= 2");
    switch (n) {
        case 2:
            if (auto al = power_exponent(a + 1, 2); al && *al >= 2)
                return exceptional_match{family::n2, *al};
            break;
        case 3:
            if (auto al = power_exponent(2 * a + 1, 3); al && *al >= 2)
                return exceptional_match{family::n3, *al};
            break;
        case 4:
            if (auto al = power_exponent(a, 2); al && *al >= 1)
                return exceptional_match{family::n4, *al};
            break;
        case 6:
            if (auto al = power_exponent(2 * a - 1, 3); al && *al >= 1)
                return exceptional_match{family::n6, *al};
            break;
        default:
            break;
    }
    return std::nullopt;
}

enum class verdict_kind : unsigned char { primitive_found, exceptional, undecided, violation };

inline const char* verdict_name(verdict_kind v) {
    switch (v) {
        case verdict_kind::primitive_found: return "primitive_found";
        case verdict_kind::exceptional: return "exceptional";
        case verdict_kind::undecided: return "undecided";
        case verdict_kind::violation: return "theorem_violation";
    }
    return "?";
}

struct zsigmondy_report {
    std::uint64_t n = 0;
    bigint a;
    bigint omega_value;
    verdict_kind verdict = verdict_kind::violation;
    std::optional<bigint> prime;                    // smallest known primitive prime
    std::optional<exceptional_match> family_match;  // set whenever the pair matches a family
    std::vector<prime_classification> classifications;
    std::optional<bigint> cofactor;  // unfactored part of Omega_n(a), if any
    std::string detail;              // human-readable note on violation/undecided
    double wall_ms = 0.0;
};

// Full audit of one cell (n, a): factorize Omega_n(a), classify every prime
// found, decide primitive-vs-exceptional, and cross-check the two verdicts
// against each other.  A pair is undecided only when the factorization is
// incomplete and no known prime certifies primitivity.
inline zsigmondy_report classify_pair(std::uint64_t n, const bigint& a,
                                      const factor_budget& budget = {}) {
    if (n < 2 || a < 2) throw std::domain_error("classify_pair: requires n, a >= 2");
    const auto t0 = std::chrono::steady_clock::now();
    zsigmondy_report rep;
    rep.n = n;
    rep.a = a;
    rep.omega_value = omega_eval(static_cast<unsigned>(n), a);

    const factorization fac = factorize(rep.omega_value, budget);
    rep.cofactor = fac.cofactor;

    std::optional<bigint> prim;
    std::string violation;
    for (const auto& [p, e] : fac.factors) {
        (void)e;
        try {
            prime_classification c = classify_prime(p, n, a);
            if (!prim && c.f == n) prim = p;
            rep.classifications.push_back(std::move(c));
        } catch (const theorem_violation& ex) {
            if (violation.empty()) violation = ex.what();
        }
    }
    rep.family_match = exceptional_family(n, a);

    if (!violation.empty()) {
        rep.verdict = verdict_kind::violation;
        rep.detail = violation;
    } else if (prim) {
        if (rep.family_match) {
            rep.verdict = verdict_kind::violation;
            rep.detail = "primitive prime " + to_string(*prim) + " found for an exceptional pair";
        } else {
            rep.verdict = verdict_kind::primitive_found;
            rep.prime = prim;
        }
    } else if (!fac.complete()) {
        rep.verdict = verdict_kind::undecided;
        rep.detail = "factorization incomplete and no primitive prime among known factors";
    } else if (rep.family_match) {
        rep.verdict = verdict_kind::exceptional;
    } else {
        rep.verdict = verdict_kind::violation;
        rep.detail = "no primitive prime and the pair matches no exceptional family";
    }
    rep.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

struct primitive_search {
    enum class status : unsigned char { found, none, undecided };
    status st = status::undecided;
    std::optional<bigint> prime;  // smallest known qualifying prime when found
    zsigmondy_report report;      // the full per-pair data backing the answer
};

// The smallest known prime p with Che_p(a) = n, if one exists.  "none" is
// only returned on a complete factorization of Omega_n(a); an exhausted
// budget with no qualifying prime yields "undecided" with the partial data.
inline primitive_search primitive_prime(std::uint64_t n, const bigint& a,
                                        const factor_budget& budget = {}) {
    primitive_search s;
    s.report = classify_pair(n, a, budget);
    if (s.report.prime) {
        s.st = primitive_search::status::found;
        s.prime = s.report.prime;
    } else if (s.report.verdict == verdict_kind::undecided) {
        s.st = primitive_search::status::undecided;
    } else {
        s.st = primitive_search::status::none;
    }
    return s;
}

struct scan_config {
    std::uint64_t n_min = 2, n_max = 30;
    std::uint64_t a_min = 2, a_max = 200;
    factor_budget budget{};
    unsigned workers = 1;
};

struct scan_summary {
    std::uint64_t cells = 0;
    std::uint64_t primitive_found = 0;
    std::uint64_t exceptional = 0;
    std::uint64_t undecided = 0;
    std::uint64_t violations = 0;
    double wall_ms = 0.0;
};

struct scan_result {
    scan_config config;
    std::vector<zsigmondy_report> rows;  // lexicographic by (n, a)
    scan_summary summary;
};

// Exhaustive audit over [n_min, n_max] x [a_min, a_max].  Cells are
// independent; workers pull them from an atomic counter and write into
// preallocated slots, so the report is identical whatever the worker count.
inline scan_result verify_rectangle(const scan_config& cfg) {
    if (cfg.n_min < 2 || cfg.a_min < 2)
        throw std::domain_error("verify_rectangle: ranges start at 2");
    if (cfg.n_max < cfg.n_min || cfg.a_max < cfg.a_min)
        throw std::domain_error("verify_rectangle: empty range");
    if (cfg.workers < 1) throw std::domain_error("verify_rectangle: workers must be >= 1");
    const std::uint64_t n_count = cfg.n_max - cfg.n_min + 1;
    const std::uint64_t a_count = cfg.a_max - cfg.a_min + 1;
    std::uint64_t cells = 0;
    if (__builtin_mul_overflow(n_count, a_count, &cells) || cells > (1ull << 32))
        throw std::domain_error("verify_rectangle: rectangle too large");

    const auto t0 = std::chrono::steady_clock::now();
    // build the omega table up front; workers then only read it
    for (std::uint64_t n = cfg.n_min; n <= cfg.n_max; ++n)
        (void)omega(static_cast<unsigned>(n));

    scan_result res;
    res.config = cfg;
    res.rows.resize(cells);
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mu;
    auto work = [&] {
        try {
            for (;;) {
                const std::uint64_t i = next.fetch_add(1, std::memory_order_relaxed);
                if (i >= cells) return;
                const std::uint64_t n = cfg.n_min + i / a_count;
                const std::uint64_t a = cfg.a_min + i % a_count;
                res.rows[i] = classify_pair(n, bigint(a), cfg.budget);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mu);
            if (!first_error) first_error = std::current_exception();
        }
    };
    const unsigned workers = static_cast<unsigned>(
        std::min<std::uint64_t>(cfg.workers, cells));
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    res.summary.cells = cells;
    for (const auto& row : res.rows) {
        switch (row.verdict) {
            case verdict_kind::primitive_found: ++res.summary.primitive_found; break;
            case verdict_kind::exceptional: ++res.summary.exceptional; break;
            case verdict_kind::undecided: ++res.summary.undecided; break;
            case verdict_kind::violation: ++res.summary.violations; break;
        }
    }
    res.summary.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

}  // namespace chebzsig
