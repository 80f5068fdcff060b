#include <catch2/catch_amalgamated.hpp>

#include "chebzsig/factorint.hpp"

using namespace chebzsig;

namespace {
bigint product_of(const factorization& f) {
    bigint prod = f.cofactor ? *f.cofactor : bigint(1);
    for (const auto& [p, e] : f.factors) prod *= ipow(p, e);
    return prod;
}
}  // namespace

TEST_CASE("is_prime") {
    CHECK(is_prime(29).prime);
    CHECK(is_prime(29).cert == certainty::proven);
    CHECK_FALSE(is_prime(0).prime);
    CHECK_FALSE(is_prime(1).prime);
    CHECK_FALSE(is_prime(361).prime);
    CHECK_FALSE(is_prime(561).prime);  // Carmichael
    CHECK(is_prime(2).prime);
    CHECK(is_prime(bigint("2305843009213693951")).prime);  // 2^61 - 1, still proven
    CHECK(is_prime(bigint("2305843009213693951")).cert == certainty::proven);

    // above 2^64 a prime verdict is probabilistic, a composite verdict is not
    const bigint p120("1131731508330868578315202343492583751");
    CHECK(is_prime(p120).prime);
    CHECK(is_prime(p120).cert == certainty::probable);
    CHECK_FALSE(is_prime(p120 * 3).prime);
    CHECK(is_prime(p120 * 3).cert == certainty::proven);

    CHECK_THROWS_AS(is_prime(-7), std::domain_error);
}

TEST_CASE("factorize point values") {
    auto f = factorize(145);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == std::pair<bigint, unsigned>{5, 1});
    CHECK(f.factors[1] == std::pair<bigint, unsigned>{29, 1});
    CHECK(f.complete());

    f = factorize(25);
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0] == std::pair<bigint, unsigned>{5, 2});

    f = factorize(1024);
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0] == std::pair<bigint, unsigned>{2, 10});

    CHECK(factorize(1).factors.empty());
    CHECK(factorize(1).complete());
    CHECK_THROWS_AS(factorize(0), std::domain_error);
    CHECK_THROWS_AS(factorize(-6), std::domain_error);
}

TEST_CASE("factorize reconstructs random inputs") {
    std::uint64_t state = 0x1234abcd5678ull;
    for (int trial = 0; trial < 2000; ++trial) {
        const bigint n = detail::splitmix64(state) % 10'000'000'000ull + 1;
        const auto f = factorize(n);
        CHECK(f.complete());
        CHECK(product_of(f) == n);
        for (const auto& [p, e] : f.factors) {
            (void)e;
            CHECK(is_prime(p).prime);
        }
    }
}

TEST_CASE("factorize beyond 64 bits") {
    const bigint n("2808114166320660573949");  // 36-bit * 36-bit semiprime
    const auto f = factorize(n);
    REQUIRE(f.complete());
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == bigint("44560482149"));
    CHECK(f.factors[1].first == bigint("63018038201"));
    CHECK(product_of(f) == n);

    // deterministic across calls
    const auto again = factorize(n);
    CHECK(f.factors == again.factors);
}

TEST_CASE("budget exhaustion leaves a flagged cofactor") {
    const bigint n("2808114166320660573949");
    const factor_budget tiny{2, 8};
    const auto f = factorize(n, tiny);
    CHECK_FALSE(f.complete());
    REQUIRE(f.cofactor.has_value());
    CHECK(product_of(f) == n);
}

TEST_CASE("perfect powers split cleanly") {
    const bigint p("1099511627791");  // 41-bit prime
    const auto f = factorize(p * p * p);
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0] == std::pair<bigint, unsigned>{p, 3});
}

TEST_CASE("euler_phi and greatest_prime_factor") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(2) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(97) == 96);
    CHECK(euler_phi(360) == 96);
    CHECK_THROWS_AS(euler_phi(0), std::domain_error);

    CHECK(greatest_prime_factor(2) == 2);
    CHECK(greatest_prime_factor(12) == 3);
    CHECK(greatest_prime_factor(97) == 97);
    CHECK_THROWS_AS(greatest_prime_factor(1), std::domain_error);
}

TEST_CASE("divisors") {
    CHECK(divisors(1) == std::vector<std::uint64_t>{1});
    CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(97) == std::vector<std::uint64_t>{1, 97});
    CHECK(divisors(8) == std::vector<std::uint64_t>{1, 2, 4, 8});
}

TEST_CASE("format_factorization") {
    CHECK(format_factorization(factorize(145)) == "5 * 29");
    CHECK(format_factorization(factorize(25)) == "5^2");
    CHECK(format_factorization(factorize(1)) == "1");
}
