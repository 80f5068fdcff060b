#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "chebzsig/report_io.hpp"
#include "chebzsig/zsigmondy.hpp"

using namespace chebzsig;

TEST_CASE("classify_prime point values") {
    auto c = classify_prime(5, 3, 2);
    CHECK(c.f == 3);
    CHECK(c.i == 0);
    CHECK_FALSE(c.greatest_prime_of_n);
    CHECK_FALSE(c.p_squared_divides_omega);

    c = classify_prime(2, 4, 2);  // Omega_4(2) = 4
    CHECK(c.f == 2);
    CHECK(c.i == 1);
    CHECK(c.greatest_prime_of_n);
    CHECK(c.p_squared_divides_omega);

    c = classify_prime(29, 15, 2);
    CHECK(c.f == 15);
    CHECK(c.i == 0);
}

TEST_CASE("classify_prime with p^2 | omega at i = 0") {
    // Omega_2(8) = 18 = 2 * 3^2: p = 3 has order 2 = n, so i = 0 and the
    // square is allowed
    auto c = classify_prime(3, 2, 8);
    CHECK(c.f == 2);
    CHECK(c.i == 0);
    CHECK(c.p_squared_divides_omega);

    // Omega_3(12) = 25
    c = classify_prime(5, 3, 12);
    CHECK(c.f == 3);
    CHECK(c.i == 0);
    CHECK(c.p_squared_divides_omega);
}

TEST_CASE("classify_prime rejects bad inputs") {
    CHECK_THROWS_AS(classify_prime(7, 3, 2), std::invalid_argument);  // 7 does not divide 5
    CHECK_THROWS_AS(classify_prime(6, 3, 2), std::domain_error);      // composite p
}

TEST_CASE("primitive_prime point values") {
    CHECK(primitive_prime(3, 2).prime == bigint(5));

    // At (2,2): Omega_2(2) = 6 = 2 * 3 and Che_2(2) = 2 = n, so 2 itself is
    // primitive and is the smallest such prime; 3 qualifies as well.
    const auto s22 = primitive_prime(2, 2);
    CHECK(s22.st == primitive_search::status::found);
    CHECK(s22.prime == bigint(2));
    CHECK(che_order(3, 2).order == 2);

    CHECK(primitive_prime(4, 2).st == primitive_search::status::none);
    CHECK(primitive_prime(2, 7).st == primitive_search::status::none);
    CHECK(primitive_prime(6, 5).st == primitive_search::status::none);

    const auto s53 = primitive_prime(5, 3);  // Omega_5(3) = 41
    REQUIRE(s53.prime.has_value());
    CHECK(che_order(*s53.prime, 3).order == 5);

    CHECK_THROWS_AS(primitive_prime(1, 5), std::domain_error);
    CHECK_THROWS_AS(primitive_prime(5, 1), std::domain_error);
}

TEST_CASE("primitive_prime undecided under a starved budget") {
    // Omega_23(172) has no factor below 10^8; with no trial primes and a
    // token rho budget nothing is recovered
    const factor_budget starved{2, 4};
    const auto s = primitive_prime(23, 172, starved);
    CHECK(s.st == primitive_search::status::undecided);
    CHECK(s.report.verdict == verdict_kind::undecided);
    REQUIRE(s.report.cofactor.has_value());
    CHECK(*s.report.cofactor == s.report.omega_value);

    // the default budget settles the same cell
    const auto full = primitive_prime(23, 172);
    CHECK(full.st == primitive_search::status::found);
}

TEST_CASE("exceptional_family closed forms") {
    auto e = exceptional_family(3, 13);
    REQUIRE(e.has_value());
    CHECK(e->fam == family::n3);
    CHECK(e->alpha == 3);

    CHECK_FALSE(exceptional_family(5, 100));
    CHECK_FALSE(exceptional_family(4, 6));
    CHECK_FALSE(exceptional_family(2, 2));

    e = exceptional_family(2, 3);
    REQUIRE(e.has_value());
    CHECK(e->fam == family::n2);
    CHECK(e->alpha == 2);

    e = exceptional_family(6, 2);
    REQUIRE(e.has_value());
    CHECK(e->fam == family::n6);
    CHECK(e->alpha == 1);

    e = exceptional_family(6, 122);
    REQUIRE(e.has_value());
    CHECK(e->alpha == 5);

    e = exceptional_family(4, 128);
    REQUIRE(e.has_value());
    CHECK(e->alpha == 7);

    CHECK_THROWS_AS(exceptional_family(1, 5), std::domain_error);
    CHECK_THROWS_AS(exceptional_family(2, 1), std::domain_error);
}

TEST_CASE("verify_rectangle on the 6 x 5 corner") {
    scan_config cfg;
    cfg.n_max = 6;
    cfg.a_max = 5;
    const auto res = verify_rectangle(cfg);
    CHECK(res.summary.cells == 5 * 4);
    CHECK(res.summary.violations == 0);
    CHECK(res.summary.undecided == 0);

    std::set<std::pair<std::uint64_t, std::uint64_t>> exceptional;
    for (const auto& r : res.rows)
        if (r.verdict == verdict_kind::exceptional)
            exceptional.insert({r.n, r.a.convert_to<std::uint64_t>()});
    const std::set<std::pair<std::uint64_t, std::uint64_t>> expected{
        {2, 3}, {3, 4}, {4, 2}, {4, 4}, {6, 2}, {6, 5}};
    CHECK(exceptional == expected);

    for (const auto& r : res.rows) {
        if (r.verdict != verdict_kind::primitive_found) continue;
        REQUIRE(r.prime.has_value());
        CHECK(is_cheb_one(r.n, r.a, *r.prime));
        for (const auto d : divisors(r.n))
            if (d != r.n) CHECK_FALSE(is_cheb_one(d, r.a, *r.prime));
    }
}

TEST_CASE("verify_rectangle is worker-count independent") {
    scan_config one;
    one.n_max = 8;
    one.a_max = 24;
    scan_config four = one;
    one.workers = 1;
    four.workers = 4;
    const auto res1 = verify_rectangle(one);
    const auto res4 = verify_rectangle(four);
    REQUIRE(res1.rows.size() == res4.rows.size());
    // timing fields aside, the reports must be identical
    CHECK(to_json(res1) == to_json(res4));
    for (std::size_t i = 0; i < res1.rows.size(); ++i)
        CHECK(to_json(res1.rows[i]) == to_json(res4.rows[i]));
}

TEST_CASE("verify_rectangle validates its config") {
    scan_config cfg;
    cfg.n_min = 1;
    CHECK_THROWS_AS(verify_rectangle(cfg), std::domain_error);
    cfg = {};
    cfg.a_min = 5;
    cfg.a_max = 4;
    CHECK_THROWS_AS(verify_rectangle(cfg), std::domain_error);
    cfg = {};
    cfg.workers = 0;
    CHECK_THROWS_AS(verify_rectangle(cfg), std::domain_error);
}

TEST_CASE("report serialization") {
    const auto rep = classify_pair(3, 2);
    const auto j = to_json(rep);
    CHECK(j.at("n") == 3);
    CHECK(j.at("a") == "2");
    CHECK(j.at("omega_value") == "5");
    CHECK(j.at("verdict") == "primitive_found");
    CHECK(j.at("prime") == "5");
    REQUIRE(j.at("classifications").size() == 1);
    CHECK(j.at("classifications")[0].at("p") == "5");
    CHECK(j.at("classifications")[0].at("f") == 3);

    const auto exc = classify_pair(4, 8);
    const auto je = to_json(exc);
    CHECK(je.at("verdict") == "exceptional");
    CHECK(je.at("family") == "n4");
    CHECK(je.at("alpha") == 3);

    CHECK(csv_header() == "n,a,verdict,detail,omega_bits,wall_ms");
    const auto row = to_csv_row(rep);
    CHECK(row.substr(0, 24).find("3,2,primitive_found,p=5,") == 0);
}
