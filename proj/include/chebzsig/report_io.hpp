#pragma once

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "chebzsig/zsigmondy.hpp"

// Wire formats for reports.  Unbounded integers travel as decimal strings;
// structurally small fields (n, f, i, alpha) stay JSON numbers.  JSON output
// carries no timing and no worker count, so identical configs produce
// byte-identical documents.  CSV has the fixed column set
// n,a,verdict,detail,omega_bits,wall_ms.

namespace chebzsig {

inline nlohmann::json to_json(const prime_classification& c) {
    return nlohmann::json{
        {"p", to_string(c.p)},
        {"f", c.f},
        {"i", c.i},
        {"greatest_prime_of_n", c.greatest_prime_of_n},
        {"p_squared_divides_omega", c.p_squared_divides_omega},
    };
}

inline nlohmann::json to_json(const zsigmondy_report& r) {
    nlohmann::json j{
        {"n", r.n},
        {"a", to_string(r.a)},
        {"omega_value", to_string(r.omega_value)},
        {"verdict", verdict_name(r.verdict)},
    };
    if (r.prime) j["prime"] = to_string(*r.prime);
    if (r.family_match) {
        j["family"] = family_name(r.family_match->fam);
        j["alpha"] = r.family_match->alpha;
    }
    if (r.cofactor) j["cofactor"] = to_string(*r.cofactor);
    if (!r.detail.empty()) j["detail"] = r.detail;
    auto cls = nlohmann::json::array();
    for (const auto& c : r.classifications) cls.push_back(to_json(c));
    j["classifications"] = std::move(cls);
    return j;
}

inline nlohmann::json to_json(const scan_result& s, bool include_rows = true) {
    nlohmann::json j;
    j["config"] = {
        {"n_min", s.config.n_min},
        {"n_max", s.config.n_max},
        {"a_min", s.config.a_min},
        {"a_max", s.config.a_max},
        {"trial_division_bound", s.config.budget.trial_division_bound},
        {"rho_iterations", s.config.budget.rho_iterations},
    };
    j["summary"] = {
        {"cells", s.summary.cells},
        {"primitive_found", s.summary.primitive_found},
        {"exceptional", s.summary.exceptional},
        {"undecided", s.summary.undecided},
        {"violations", s.summary.violations},
    };
    auto exceptional = nlohmann::json::array();
    auto undecided = nlohmann::json::array();
    auto violations = nlohmann::json::array();
    for (const auto& r : s.rows) {
        switch (r.verdict) {
            case verdict_kind::exceptional:
                exceptional.push_back(nlohmann::json{{"n", r.n},
                                                     {"a", to_string(r.a)},
                                                     {"family", family_name(r.family_match->fam)},
                                                     {"alpha", r.family_match->alpha}});
                break;
            case verdict_kind::undecided:
                undecided.push_back(nlohmann::json{{"n", r.n}, {"a", to_string(r.a)}});
                break;
            case verdict_kind::violation:
                violations.push_back(
                    nlohmann::json{{"n", r.n}, {"a", to_string(r.a)}, {"detail", r.detail}});
                break;
            case verdict_kind::primitive_found:
                break;
        }
    }
    j["exceptional_pairs"] = std::move(exceptional);
    j["undecided_pairs"] = std::move(undecided);
    j["violations"] = std::move(violations);
    if (include_rows) {
        auto rows = nlohmann::json::array();
        for (const auto& r : s.rows) rows.push_back(to_json(r));
        j["rows"] = std::move(rows);
    }
    return j;
}

inline std::string csv_header() { return "n,a,verdict,detail,omega_bits,wall_ms"; }

namespace detail {
// CSV detail field: single token stream, no commas
inline std::string csv_detail(const zsigmondy_report& r) {
    std::ostringstream os;
    switch (r.verdict) {
        case verdict_kind::primitive_found:
            os << "p=" << *r.prime;
            break;
        case verdict_kind::exceptional:
            os << "family=" << family_name(r.family_match->fam) << " alpha="
               << r.family_match->alpha;
            break;
        case verdict_kind::undecided:
            os << "cofactor_bits=" << (r.cofactor ? bit_length(*r.cofactor) : 0);
            break;
        case verdict_kind::violation: {
            std::string d = r.detail;
            for (auto& ch : d)
                if (ch == ',' || ch == '\n') ch = ';';
            os << d;
            break;
        }
    }
    return os.str();
}
}  // namespace detail

inline std::string to_csv_row(const zsigmondy_report& r) {
    std::ostringstream os;
    os << r.n << ',' << r.a << ',' << verdict_name(r.verdict) << ',' << detail::csv_detail(r)
       << ',' << bit_length(r.omega_value) << ',' << std::fixed << std::setprecision(3)
       << r.wall_ms;
    return os.str();
}

inline void write_csv(std::ostream& os, const scan_result& s) {
    os << csv_header() << '\n';
    for (const auto& r : s.rows) os << to_csv_row(r) << '\n';
}

inline void write_summary(std::ostream& os, const scan_result& s) {
    os << "scan n=" << s.config.n_min << ".." << s.config.n_max << " a=" << s.config.a_min
       << ".." << s.config.a_max << ": " << s.summary.cells << " pairs in " << std::fixed
       << std::setprecision(1) << s.summary.wall_ms << " ms\n"
       << "  primitive prime found : " << s.summary.primitive_found << '\n'
       << "  exceptional (no primitive prime): " << s.summary.exceptional << '\n'
       << "  undecided             : " << s.summary.undecided << '\n'
       << "  theorem violations    : " << s.summary.violations << '\n';
    if (s.summary.exceptional) {
        os << "  exceptional pairs:\n";
        for (const auto& r : s.rows)
            if (r.verdict == verdict_kind::exceptional)
                os << "    n=" << r.n << " a=" << r.a << "  family " <<
                    family_name(r.family_match->fam) << ", alpha=" << r.family_match->alpha
                   << '\n';
    }
    for (const auto& r : s.rows) {
        if (r.verdict == verdict_kind::violation)
            os << "  VIOLATION at n=" << r.n << " a=" << r.a << ": " << r.detail << '\n';
        else if (r.verdict == verdict_kind::undecided)
            os << "  undecided at n=" << r.n << " a=" << r.a << " (cofactor of "
               << (r.cofactor ? bit_length(*r.cofactor) : 0) << " bits)\n";
    }
}

inline void write_text_report(std::ostream& os, const scan_result& s) {
    os << "   n          a  verdict           detail\n";
    for (const auto& r : s.rows) {
        std::ostringstream line;
        line << std::setw(4) << r.n << ' ' << std::setw(10) << r.a << "  " << std::left
             << std::setw(18) << verdict_name(r.verdict) << std::right
             << detail::csv_detail(r);
        os << line.str() << '\n';
    }
    write_summary(os, s);
}

}  // namespace chebzsig
