// Command-line front end: exact/modular Chebyshev evaluation, Chebyshev
// orders, Omega tables, per-pair classification, rectangle scans, and the
// property selftest.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "chebzsig/cheb_order.hpp"
#include "chebzsig/chebyshev.hpp"
#include "chebzsig/factorint.hpp"
#include "chebzsig/integer.hpp"
#include "chebzsig/omega.hpp"
#include "chebzsig/report_io.hpp"
#include "chebzsig/selftest.hpp"
#include "chebzsig/zsigmondy.hpp"

namespace {

using chebzsig::bigint;

bigint parse_or_die(const std::string& s, const char* what) {
    auto v = chebzsig::parse_bigint(s);
    if (!v) {
        std::cerr << "error: " << what << " is not a decimal integer: '" << s << "'\n";
        std::exit(2);
    }
    return *v;
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& s, const char* what) {
    const auto dots = s.find("..");
    if (dots != std::string::npos) {
        try {
            const std::uint64_t lo = std::stoull(s.substr(0, dots));
            const std::uint64_t hi = std::stoull(s.substr(dots + 2));
            return {lo, hi};
        } catch (...) {
        }
    } else {
        try {
            const std::uint64_t v = std::stoull(s);
            return {v, v};
        } catch (...) {
        }
    }
    std::cerr << "error: " << what << " must look like A..B (got '" << s << "')\n";
    std::exit(2);
}

unsigned default_workers() {
    if (const char* env = std::getenv("CHEB_ZSIG_WORKERS")) {
        try {
            const unsigned w = static_cast<unsigned>(std::stoul(env));
            if (w >= 1) return w;
        } catch (...) {
        }
        std::cerr << "warning: ignoring invalid CHEB_ZSIG_WORKERS='" << env << "'\n";
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

const char* side_text(const chebzsig::cheb_order_result& r) {
    switch (r.side) {
        case chebzsig::order_side::p_minus_1: return "divides p-1";
        case chebzsig::order_side::p_plus_1: return "divides p+1";
        case chebzsig::order_side::unit:
            return r.p == 2 ? "p = 2" : "divides both p-1 and p+1";
    }
    return "?";
}

void print_classification_text(std::ostream& os, const chebzsig::zsigmondy_report& rep) {
    os << "n=" << rep.n << " a=" << rep.a << "\n";
    os << "Omega_" << rep.n << "(" << rep.a << ") = " << rep.omega_value << "\n";
    os << "verdict: " << chebzsig::verdict_name(rep.verdict);
    if (rep.prime) os << "  (primitive prime " << *rep.prime << ")";
    if (rep.family_match)
        os << "  (family " << chebzsig::family_name(rep.family_match->fam) << ", alpha="
           << rep.family_match->alpha << ")";
    os << "\n";
    if (rep.cofactor) os << "unfactored cofactor: " << *rep.cofactor << "\n";
    if (!rep.detail.empty()) os << "note: " << rep.detail << "\n";
    for (const auto& c : rep.classifications) {
        os << "  p=" << c.p << ": Che_p(a)=" << c.f << ", n = f*p^" << c.i;
        if (c.greatest_prime_of_n) os << ", greatest prime of n";
        if (c.p_squared_divides_omega) os << ", p^2 | Omega_n(a)";
        os << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chebyshev orders, Omega factors and primitive prime divisors of T_n(a)-1"};
    app.require_subcommand(1);

    // eval
    std::string eval_n, eval_x, eval_mod;
    auto* eval = app.add_subcommand("eval", "evaluate T_n(x), exactly or mod m");
    eval->add_option("n", eval_n, "index n >= 0")->required();
    eval->add_option("x", eval_x, "argument")->required();
    eval->add_option("--mod", eval_mod, "evaluate modulo this integer (>= 2)");

    // order
    std::string order_p, order_a;
    auto* order = app.add_subcommand("order", "Chebyshev order Che_p(a) for prime p");
    order->add_option("p", order_p, "prime modulus")->required();
    order->add_option("a", order_a, "argument")->required();

    // omega
    std::uint64_t omega_n = 0;
    std::string omega_at;
    std::uint64_t omega_table_max = 0;
    auto* om = app.add_subcommand("omega", "Omega_n coefficients, value, or table");
    om->add_option("n", omega_n, "index n >= 1");
    om->add_option("--at", omega_at, "evaluate at this integer and factorize");
    om->add_option("--table", omega_table_max, "dump Omega_1..Omega_N as 'n: c0 c1 ...'");

    // classify
    std::uint64_t cls_n = 0;
    std::string cls_a;
    std::string cls_format = "text";
    auto* cls = app.add_subcommand("classify", "classify the prime divisors of Omega_n(a)");
    cls->add_option("n", cls_n, "n >= 2")->required();
    cls->add_option("a", cls_a, "a >= 2")->required();
    cls->add_option("--format", cls_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // scan
    std::string scan_n = "2..30", scan_a = "2..200";
    std::string scan_format = "text", scan_out;
    unsigned scan_workers = default_workers();
    chebzsig::factor_budget scan_budget;
    auto* scan = app.add_subcommand("scan", "verify a rectangle of (n, a) pairs");
    scan->add_option("--n", scan_n, "n range, e.g. 2..30");
    scan->add_option("--a", scan_a, "a range, e.g. 2..200");
    scan->add_option("--workers", scan_workers, "worker threads (default: CHEB_ZSIG_WORKERS or cores)");
    scan->add_option("--format", scan_format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    scan->add_option("--out", scan_out, "write the report to this file");
    scan->add_option("--trial-bound", scan_budget.trial_division_bound, "trial division bound");
    scan->add_option("--rho-budget", scan_budget.rho_iterations, "Pollard rho iteration cap");

    // selftest
    unsigned st_workers = default_workers();
    auto* st = app.add_subcommand("selftest", "run the full property suite");
    st->add_option("--workers", st_workers, "worker threads for the rectangle scans");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*eval) {
            const bigint n = parse_or_die(eval_n, "n");
            const bigint x = parse_or_die(eval_x, "x");
            if (n < 0) {
                std::cerr << "error: n must be nonnegative\n";
                return 2;
            }
            if (!eval_mod.empty()) {
                const bigint m = parse_or_die(eval_mod, "modulus");
                std::cout << chebzsig::cheb_eval_mod(n, x, m) << "\n";
            } else {
                std::cout << chebzsig::cheb_eval(n, x) << "\n";
            }
            return 0;
        }

        if (*order) {
            const bigint p = parse_or_die(order_p, "p");
            const bigint a = parse_or_die(order_a, "a");
            if (p < 2 || !chebzsig::is_prime(p).prime) {
                std::cerr << "error: p is not prime: " << p;
                if (p >= 2)
                    std::cerr << " = " << chebzsig::format_factorization(chebzsig::factorize(p));
                std::cerr << "\n";
                return 1;
            }
            const auto r = chebzsig::che_order(p, a);
            std::cout << r.order << " (" << side_text(r) << ")\n";
            return 0;
        }

        if (*om) {
            if (om->count("--table")) {
                if (omega_table_max < 1) {
                    std::cerr << "error: --table needs N >= 1\n";
                    return 2;
                }
                chebzsig::dump_omega_table(std::cout, static_cast<unsigned>(omega_table_max));
                return 0;
            }
            if (!om->count("n")) {
                std::cerr << "error: give an index n or --table N\n";
                return 2;
            }
            if (omega_n < 1) {
                std::cerr << "error: n must be >= 1\n";
                return 2;
            }
            const auto entry = chebzsig::omega(static_cast<unsigned>(omega_n));
            if (!omega_at.empty()) {
                const bigint a = parse_or_die(omega_at, "--at");
                const bigint v = entry.poly.eval(a);
                std::cout << v;
                if (v > 1)
                    std::cout << " = "
                              << chebzsig::format_factorization(chebzsig::factorize(v));
                std::cout << "\n";
            } else {
                const auto& c = entry.poly.coeffs();
                std::cout << "[";
                for (std::size_t i = 0; i < c.size(); ++i)
                    std::cout << (i ? ", " : "") << c[i];
                std::cout << "]\n";
            }
            return 0;
        }

        if (*cls) {
            const bigint a = parse_or_die(cls_a, "a");
            const auto rep = chebzsig::classify_pair(cls_n, a);
            if (cls_format == "json")
                std::cout << chebzsig::to_json(rep).dump(2) << "\n";
            else
                print_classification_text(std::cout, rep);
            return rep.verdict == chebzsig::verdict_kind::violation ? 1 : 0;
        }

        if (*scan) {
            chebzsig::scan_config cfg;
            std::tie(cfg.n_min, cfg.n_max) = parse_range(scan_n, "--n");
            std::tie(cfg.a_min, cfg.a_max) = parse_range(scan_a, "--a");
            cfg.budget = scan_budget;
            cfg.workers = scan_workers;
            const auto res = chebzsig::verify_rectangle(cfg);

            std::ofstream file;
            const bool to_file = !scan_out.empty();
            if (to_file) {
                file.open(scan_out);
                if (!file) {
                    std::cerr << "error: cannot write " << scan_out << "\n";
                    return 2;
                }
            }
            std::ostream& report = to_file ? static_cast<std::ostream&>(file) : std::cout;
            if (scan_format == "json")
                report << chebzsig::to_json(res).dump(2) << "\n";
            else if (scan_format == "csv")
                chebzsig::write_csv(report, res);
            else
                chebzsig::write_text_report(report, res);
            // keep stdout byte-stable for json/csv: the summary goes to the
            // other stream
            chebzsig::write_summary(to_file ? std::cout : std::cerr, res);

            if (res.summary.violations) return 1;
            if (res.summary.undecided) return 2;
            return 0;
        }

        if (*st) {
            const auto results = chebzsig::selftest::run_selftest(st_workers);
            double total = 0;
            for (const auto& r : results) {
                total += r.ms;
                std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << "  ("
                          << std::fixed << std::setprecision(0) << r.ms << " ms)";
                if (!r.detail.empty()) std::cout << "  -- " << r.detail;
                std::cout << "\n";
            }
            std::cout << (chebzsig::selftest::all_passed(results) ? "all checks passed"
                                                                  : "FAILURES above")
                      << " (" << std::fixed << std::setprecision(1) << total / 1000.0
                      << " s)\n";
            return chebzsig::selftest::all_passed(results) ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
