#include <catch2/catch_amalgamated.hpp>

#include "chebzsig/polynomial.hpp"

using namespace chebzsig;

namespace {
// tiny deterministic generator for property loops
std::uint64_t rng_state = 0x243f6a8885a308d3ull;
std::int64_t next_coeff() {
    rng_state ^= rng_state << 13;
    rng_state ^= rng_state >> 7;
    rng_state ^= rng_state << 17;
    return static_cast<std::int64_t>(rng_state % 41) - 20;
}
int_poly random_poly(int max_degree) {
    std::vector<bigint> c(static_cast<std::size_t>(max_degree) + 1);
    for (auto& x : c) x = next_coeff();
    return int_poly(std::move(c));
}
}  // namespace

TEST_CASE("normalization and degree") {
    CHECK(int_poly{}.degree() == -1);
    CHECK(int_poly{}.is_zero());
    CHECK(int_poly{0, 0, 0}.is_zero());
    CHECK(int_poly{5}.degree() == 0);
    CHECK(int_poly{1, 2, 0, 0}.degree() == 1);
    CHECK(int_poly{1, 2}.coeff(5) == 0);
    CHECK_THROWS_AS(int_poly{}.leading(), std::domain_error);
}

TEST_CASE("arithmetic basics") {
    const int_poly xm1{-1, 1}, xp1{1, 1};
    CHECK(xm1 * xp1 == int_poly{-1, 0, 1});
    CHECK(xm1 + xp1 == int_poly{0, 2});
    CHECK(xm1 - xm1 == int_poly{});
    CHECK(-xm1 == int_poly{1, -1});
    CHECK(bigint(3) * xp1 == int_poly{3, 3});
    CHECK(int_poly{1, 2, 3}.eval(-2) == 1 - 4 + 12);
}

TEST_CASE("compose") {
    const int_poly sq{0, 0, 1};
    CHECK(sq.compose(int_poly{1, 1}) == int_poly{1, 2, 1});
    CHECK(int_poly{3}.compose(sq) == int_poly{3});
    CHECK(int_poly{}.compose(sq) == int_poly{});
}

TEST_CASE("exact division") {
    const int_poly t6_minus_1{-2, 0, 18, 0, -48, 0, 32};  // T_6 - 1
    const int_poly lower = int_poly{-1, 1} * int_poly{2, 2} * int_poly{1, 2} * int_poly{1, 2};
    CHECK(t6_minus_1.exact_div(lower) == int_poly{-1, 2} * int_poly{-1, 2});

    CHECK_THROWS_AS((int_poly{1, 0, 1}.exact_div(int_poly{1, 1})), integrality_violation);
    CHECK_THROWS_AS((int_poly{0, 1}.exact_div(int_poly{0, 2})), integrality_violation);
    CHECK_THROWS_AS((int_poly{1, 1}.exact_div(int_poly{})), std::domain_error);
    CHECK(int_poly{}.exact_div(int_poly{1, 1}) == int_poly{});

    SECTION("round trip on random pairs") {
        for (int trial = 0; trial < 200; ++trial) {
            int_poly p = random_poly(trial % 7);
            int_poly q = random_poly(trial % 5);
            if (q.is_zero()) continue;
            CHECK((p * q).exact_div(q) == p);
        }
    }
}

TEST_CASE("polynomial square root") {
    CHECK(int_poly{1, -2, 1}.sqrt_exact() == int_poly{-1, 1});
    CHECK((int_poly{1, 2} * int_poly{1, 2}).sqrt_exact() == int_poly{1, 2});
    CHECK(int_poly{}.sqrt_exact() == int_poly{});
    CHECK_THROWS_AS((int_poly{2, 4, 4}.sqrt_exact()), not_a_square);   // 4x^2+4x+2
    CHECK_THROWS_AS((int_poly{0, 1}.sqrt_exact()), not_a_square);      // odd degree
    CHECK_THROWS_AS((int_poly{0, 0, -1}.sqrt_exact()), not_a_square);  // negative leading
    CHECK_THROWS_AS((int_poly{0, 0, 2}.sqrt_exact()), not_a_square);   // lc not a square

    SECTION("round trip recovers the positive-leading representative") {
        for (int trial = 0; trial < 200; ++trial) {
            int_poly p = random_poly(trial % 6);
            if (p.is_zero()) continue;
            if (p.leading() < 0) p = -p;
            CHECK((p * p).sqrt_exact() == p);
        }
    }
}

TEST_CASE("eval is multiplicative") {
    for (int trial = 0; trial < 100; ++trial) {
        const int_poly p = random_poly(trial % 6), q = random_poly(trial % 4);
        const bigint a = next_coeff();
        CHECK((p * q).eval(a) == p.eval(a) * q.eval(a));
    }
}

TEST_CASE("coefficient string") {
    CHECK(int_poly{}.coeff_string() == "0");
    CHECK(int_poly{-1, 0, 2}.coeff_string() == "-1 0 2");
}
