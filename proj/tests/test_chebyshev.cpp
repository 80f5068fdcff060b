#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "chebzsig/chebyshev.hpp"

using namespace chebzsig;

namespace {
bigint cheb_linear(std::uint64_t n, const bigint& x) {
    bigint prev = 1, cur = x;
    if (n == 0) return prev;
    for (std::uint64_t k = 1; k < n; ++k) {
        bigint next = 2 * x * cur - prev;
        prev.swap(cur);
        cur.swap(next);
    }
    return cur;
}
}  // namespace

TEST_CASE("cheb_eval point values") {
    CHECK(cheb_eval(0, 5) == 1);
    CHECK(cheb_eval(1, 7) == 7);
    CHECK(cheb_eval(2, 3) == 17);
    for (int x = -6; x <= 6; ++x) CHECK(cheb_eval(2, x) == 2 * x * x - 1);
    CHECK(cheb_eval(3, 2) == 26);
    CHECK(cheb_eval(3, 2) - 1 == 25);
    CHECK(cheb_eval(5, 2) == 362);
    CHECK(cheb_eval(5, 2) - 1 == 361);
    CHECK(cheb_eval(bigint(0), -5) == 1);
    CHECK_THROWS_AS(cheb_eval(bigint(-1), 2), std::domain_error);
}

TEST_CASE("cheb_pair carries consecutive values") {
    for (std::uint64_t n = 0; n <= 40; ++n)
        for (int x : {-3, 0, 2, 11}) {
            const auto pr = cheb_pair_at(n, x);
            CHECK(pr.t_n == cheb_linear(n, x));
            CHECK(pr.t_n1 == cheb_linear(n + 1, x));
        }
}

TEST_CASE("ladder agrees with the linear recurrence") {
    for (const bigint& x : {bigint(-2), bigint(3), ipow(10, 6)}) {
        bigint prev = 1, cur = x;
        for (std::uint64_t n = 1; n <= 300; ++n) {
            CHECK(cheb_eval(n, x) == cur);
            bigint next = 2 * x * cur - prev;
            prev.swap(cur);
            cur.swap(next);
        }
    }
}

TEST_CASE("cheb_eval_mod") {
    CHECK(cheb_eval_mod(2, 4, 9) == 4);

    std::set<bigint> t2_image, t3_image;
    for (int x = 0; x < 9; ++x) {
        t2_image.insert(cheb_eval_mod(2, x, 9));
        t3_image.insert(cheb_eval_mod(3, x, 9));
    }
    CHECK(t2_image == std::set<bigint>{1, 4, 7, 8});
    CHECK(t3_image == std::set<bigint>{0, 1, 8});

    SECTION("million-step linear oracle") {
        const bigint direct = cheb_eval_mod(1'000'000, 2, 97);
        bigint prev = 1, cur = 2;
        for (int k = 1; k < 1'000'000; ++k) {
            bigint next = (4 * cur - prev) % 97;
            prev.swap(cur);
            cur.swap(next);
        }
        CHECK(direct == cur);
        CHECK(direct == 1);  // frozen from the oracle
        CHECK(cheb_eval_mod(1'000'000, 2, 1'000'003) == 97);
    }

    SECTION("reduction and negatives") {
        CHECK(cheb_eval_mod(3, -2, 7) == mod_reduce(cheb_eval(3, -2), 7));
        CHECK(cheb_eval_mod(17, 19, 7) == cheb_eval_mod(17, 5, 7));
        CHECK(cheb_eval_mod(4, 3, 2) == mod_reduce(cheb_eval(4, 3), 2));
    }

    CHECK_THROWS_AS(cheb_eval_mod(3, 2, 1), std::domain_error);
    CHECK_THROWS_AS(cheb_eval_mod(3, 2, 0), std::domain_error);
    CHECK_THROWS_AS(cheb_eval_mod(3, 2, -5), std::domain_error);
}

TEST_CASE("cheb_poly coefficients") {
    CHECK(cheb_poly(0) == int_poly{1});
    CHECK(cheb_poly(1) == int_poly{0, 1});
    CHECK(cheb_poly(2) == int_poly{-1, 0, 2});
    CHECK(cheb_poly(6).eval(2) == cheb_eval(6, 2));
    for (unsigned n = 1; n <= 50; ++n) {
        CHECK(cheb_poly(n).degree() == static_cast<int>(n));
        CHECK(cheb_poly(n).leading() == ipow(2, n - 1));
        CHECK(cheb_poly(n).eval(1) == 1);
    }
}

TEST_CASE("composition identity, small ranges") {
    for (std::uint64_t m = 0; m <= 12; ++m)
        for (std::uint64_t n = 0; n <= 12; ++n)
            for (int x = -3; x <= 3; ++x)
                CHECK(cheb_eval(m, cheb_eval(n, x)) == cheb_eval(m * n, x));
}

TEST_CASE("product identity, small ranges") {
    for (std::uint64_t a = 0; a <= 16; ++a)
        for (std::uint64_t b = 0; b <= 16; ++b)
            for (int x = -3; x <= 3; ++x) {
                const bigint lhs =
                    (cheb_eval(a + b, x) - 1) * (cheb_eval(a > b ? a - b : b - a, x) - 1);
                const bigint diff = cheb_eval(a, x) - cheb_eval(b, x);
                CHECK(lhs == diff * diff);
            }
}

TEST_CASE("shifted_coeff") {
    for (unsigned n : {2u, 3u, 5u, 10u}) CHECK(shifted_coeff(n, 1) == bigint(n) * n);
    CHECK(shifted_coeff(3, 2) == 12);
    for (unsigned n = 1; n <= 40; ++n) {
        CHECK(shifted_coeff(n, 0) == 1);
        CHECK(shifted_coeff(n, n) == ipow(2, n - 1));
    }
    SECTION("full vector against the exact polynomial shift") {
        for (unsigned n = 1; n <= 40; ++n) {
            const int_poly shifted = cheb_poly(n).compose(int_poly{1, 1});
            for (unsigned k = 0; k <= n; ++k) CHECK(shifted_coeff(n, k) == shifted.coeff(k));
        }
    }
    CHECK_THROWS_AS(shifted_coeff(3, 4), std::domain_error);
    CHECK_THROWS_AS(shifted_coeff(0, 0), std::domain_error);
}
