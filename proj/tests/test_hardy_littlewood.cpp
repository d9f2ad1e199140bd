#include <doctest.h>

#include <cmath>
#include <set>

#include "cmlt/errors.hpp"
#include "cmlt/hardy_littlewood.hpp"
#include "support/oracles.hpp"

using namespace cmlt;

TEST_SUITE("hardy_littlewood") {

TEST_CASE("admissibility") {
    CHECK(hl_admissible(1, 0, 1));
    CHECK_FALSE(hl_admissible(1, 0, -1));
    CHECK_FALSE(hl_admissible(2, 2, 2));
    CHECK_FALSE(hl_admissible(1, 1, 2));   // a+b and c both even
    CHECK_FALSE(hl_admissible(0, 1, 1));
    CHECK_FALSE(hl_admissible(-1, 0, 1));
    CHECK_FALSE(hl_admissible(1, 0, 0));   // disc 0 is a square
    CHECK(hl_admissible(1, 1, 41));
    CHECK(hl_admissible(2, 0, 1));
}

TEST_CASE("constant") {
    CHECK(hl_delta({1, 0, 1}, 3) == doctest::Approx(1.5));
    CHECK(hl_delta({1, 0, 1}, 10'000'000) == doctest::Approx(1.3728).epsilon(0.02));
    // (1, 0, 9) differs from (1, 0, 1) only in the factor at 3
    CHECK(hl_delta({1, 0, 9}, 100'000) * 1.5 == doctest::Approx(hl_delta({1, 0, 1}, 100'000)));
    // (2, 0, 1): gcd(2, a+b) = 2, 1/sqrt(2), the factor at p = 2 is skipped anyway
    const double d = hl_delta({2, 0, 1}, 3);
    CHECK(d == doctest::Approx(2.0 / std::sqrt(2.0) * (1.0 - 1.0 / 2.0)));
    // p | gcd(a, b), p > 2
    CHECK(hl_delta({3, 3, 1}, 3) == doctest::Approx(2.0 / std::sqrt(3.0) * 1.5));
    CHECK_THROWS_AS(hl_delta({1, 0, -1}, 100), PreconditionError);
    CHECK_THROWS_AS(hl_delta({1, 0, 1}, 2), PreconditionError);
}

TEST_CASE("counting") {
    CHECK(hl_count({1, 0, 1}, 100) == 4);
    CHECK(hl_count({1, 0, 4}, 100) == 4);
    CHECK(hl_count({1, 0, 1}, 2) == 1);
    CHECK(hl_count({1, 1, 41}, 1681) == 40);
    CHECK_THROWS_AS(hl_count({1, 0, 1}, 1), PreconditionError);
}

TEST_CASE("counting matches direct enumeration") {
    struct Case {
        HLPoly f;
        std::uint64_t n;
    };
    for (const Case& c : {Case{{1, 0, 1}, 50'000}, Case{{2, -6, 7}, 30'000}, Case{{1, -7, 13}, 20'000},
                          Case{{3, 2, -5}, 40'000}, Case{{1, 0, 49}, 60'000}}) {
        std::set<std::int64_t> primes;
        for (std::int64_t x = 0;; ++x) {
            const std::int64_t v = c.f.a * x * x + c.f.b * x + c.f.c;
            if (v > static_cast<std::int64_t>(c.n) && x > -c.f.b) break;
            if (v >= 2 && v <= static_cast<std::int64_t>(c.n) && oracle::is_prime_trial(static_cast<std::uint64_t>(v)))
                primes.insert(v);
        }
        CHECK(hl_count(c.f, c.n) == primes.size());
    }
}

} // TEST_SUITE
