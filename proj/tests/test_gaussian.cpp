#include <doctest.h>

#include "cmlt/errors.hpp"
#include "cmlt/gaussian.hpp"
#include "cmlt/modarith.hpp"
#include "support/oracles.hpp"

using namespace cmlt;

TEST_SUITE("gaussian") {

TEST_CASE("multiplication") {
    CHECK(gi_mul({1, 1}, {1, -1}) == GaussianInt(2, 0));
    CHECK(gi_mul({0, 0}, {3, 2}).is_zero());
    CHECK(gi_mul({-3, 2}, {-3, -2}) == GaussianInt(13, 0));
    CHECK((GaussianInt(2, 3) * GaussianInt(2, 3)).norm() == 169);
}

TEST_CASE("divmod with nearest rounding, ties toward -infinity") {
    const auto [q, r] = gi_divmod({5, 3}, {2, 0});
    CHECK(q == GaussianInt(2, 1));
    CHECK(r == GaussianInt(1, 1));
    CHECK(r.norm() <= 2);

    const auto unit = gi_divmod({7, -4}, {1, 0});
    CHECK(unit.q == GaussianInt(7, -4));
    CHECK(unit.r.is_zero());

    const auto d = gi_divmod({7, 0}, {-3, 2});
    CHECK(d.r.norm() < 13);
    CHECK(d.q * GaussianInt(-3, 2) + d.r == GaussianInt(7, 0));

    CHECK_THROWS_AS(gi_divmod({1, 1}, {0, 0}), PreconditionError);
}

TEST_CASE("gcd is normalized") {
    CHECK(gi_gcd({2, 0}, {1, 1}) == GaussianInt(1, 1));
    CHECK(gi_gcd({5, 0}, {3, 0}) == GaussianInt(1, 0));
    const GaussianInt g = gi_gcd({13, 0}, {2, 3});
    CHECK(g == GaussianInt(3, -2));
    CHECK(is_primary(g));
    CHECK(gi_gcd({0, 0}, {3, 2}) == make_primary({3, 2}).w);
    CHECK_THROWS_AS(gi_gcd({0, 0}, {0, 0}), PreconditionError);
}

TEST_CASE("primary associates") {
    auto p = make_primary({2, 3});
    CHECK(p.k == 3);
    CHECK(p.w == GaussianInt(3, -2));
    p = make_primary({1, 4});
    CHECK(p.k == 0);
    CHECK(p.w == GaussianInt(1, 4));
    p = make_primary({3, 2});
    CHECK(p.k == 0);
    CHECK(p.w == GaussianInt(3, 2));
    CHECK(is_primary({-3, 0}));
    CHECK_FALSE(is_primary({3, 0}));
    CHECK_THROWS_AS(make_primary({1, 1}), PreconditionError);
    CHECK_THROWS_AS(make_primary({2, 0}), PreconditionError);
    CHECK_THROWS_AS(make_primary({0, -1}), PreconditionError);
    CHECK_THROWS_AS(make_primary({0, 0}), PreconditionError);
}

TEST_CASE("square root of -1") {
    for (u64 p : {5ULL, 13ULL, 17ULL, 1'000'000'009ULL, 18446744073709551557ULL}) {
        if (p % 4 != 1) continue;
        const u64 z = sqrt_minus_one(p);
        CHECK(z > 0);
        CHECK(z < p);
        CHECK(mulmod(z, z, p) == p - 1);
    }
    CHECK((sqrt_minus_one(5) == 2 || sqrt_minus_one(5) == 3));
    CHECK((sqrt_minus_one(13) == 5 || sqrt_minus_one(13) == 8));
    CHECK((sqrt_minus_one(17) == 4 || sqrt_minus_one(17) == 13));
    CHECK_THROWS_AS(sqrt_minus_one(7), PreconditionError);
    CHECK_THROWS_AS(sqrt_minus_one(21), PreconditionError);
}

TEST_CASE("two squares") {
    auto t = two_squares(5);
    CHECK(t.alpha == 1);
    CHECK(t.beta == 2);
    t = two_squares(13);
    CHECK(t.alpha == -3);
    CHECK(t.beta == 2);
    t = two_squares(17);
    CHECK(t.alpha == 1);
    CHECK(t.beta == 4);

    // largest prime = 1 (mod 4) below 2^64
    const u64 big = 18446744073709551557ULL;
    if (big % 4 == 1) {
        t = two_squares(big);
        const u128 sum = static_cast<u128>(static_cast<i128>(t.alpha) * t.alpha) +
                         static_cast<u128>(static_cast<i128>(t.beta) * t.beta);
        CHECK(sum == big);
    }
    CHECK_THROWS_AS(two_squares(7), PreconditionError);
    CHECK_THROWS_AS(two_squares(2), PreconditionError);
    CHECK_THROWS_AS(two_squares(25), PreconditionError);
}

TEST_CASE("two squares matches exhaustive search below 10^4") {
    for (u64 p = 5; p < 10'000; p += 4) {
        if (!oracle::is_prime_trial(p)) continue;
        const TwoSquares fast = two_squares(p);
        const TwoSquares slow = oracle::two_squares_scan(p);
        CHECK(fast.alpha == slow.alpha);
        CHECK(fast.beta == slow.beta);
    }
}

TEST_CASE("string form") {
    CHECK(GaussianInt(-3, 2).str() == "-3+2i");
    CHECK(GaussianInt(1, -4).str() == "1-4i");
    CHECK(GaussianInt(0, 0).str() == "0+0i");
}

} // TEST_SUITE
