#include <doctest.h>

#include <algorithm>

#include "cmlt/arith.hpp"
#include "cmlt/errors.hpp"
#include "support/oracles.hpp"

using namespace cmlt;

TEST_SUITE("arith") {

TEST_CASE("tau") {
    CHECK(tau(5) == 3);
    CHECK(tau(21) == 21);
    CHECK(tau(25) == 15);
    CHECK(tau(1) == 1);
    CHECK(tau(-1) == 1);
    CHECK(tau(-21) == 21);
    CHECK(tau(8) == 8);
    CHECK(tau(13 * 13 * 13) == 13 * 13 * 11);
    CHECK_THROWS_AS(tau(0), PreconditionError);
}

TEST_CASE("euler phi and odd radical") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(9) == 6);
    CHECK(euler_phi(10) == 4);
    CHECK_THROWS_AS(euler_phi(0), PreconditionError);
    CHECK(rad_odd(72) == 3);
    CHECK(rad_odd(-21) == 21);
    CHECK(rad_odd(16) == 1);
    CHECK_THROWS_AS(rad_odd(0), PreconditionError);
}

TEST_CASE("factorization") {
    using F = std::vector<std::pair<std::uint64_t, int>>;
    CHECK(factorize(360) == F{{2, 3}, {3, 2}, {5, 1}});
    CHECK(factorize(-97) == F{{97, 1}});
    CHECK(factorize(1).empty());
    CHECK(factorize(INT64_MIN) == F{{2, 63}});
}

TEST_CASE("shape") {
    DShape s = shape_of(-21);
    CHECK(s.sign == -1);
    CHECK(s.sigma == 0);
    CHECK(s.p_list == std::vector<std::uint64_t>{3, 7});
    CHECK(s.r_counts[3] == 1);
    CHECK(s.r_counts[7] == 1);
    CHECK(s.s() == 0);
    CHECK(s.t() == 0);

    s = shape_of(72);
    CHECK(s.sign == 1);
    CHECK(s.sigma == 3);
    CHECK(s.q_list == std::vector<std::uint64_t>{3});
    CHECK(s.s() == 1);

    s = shape_of(250);
    CHECK(s.sigma == 1);
    CHECK(s.p_list.empty());
    CHECK(s.l_list == std::vector<std::uint64_t>{5});
    CHECK(s.t_counts[5] == 1);

    CHECK_THROWS_AS(shape_of(48), PreconditionError);
    CHECK_THROWS_AS(shape_of(0), PreconditionError);
}

TEST_CASE("split relative to r") {
    DSplit s = split_d(-21, 9);
    CHECK(s.d == 3);
    CHECK(s.dbar == -7);
    CHECK(s.r_pp() == 1);
    CHECK(s.r_pp(7) == 1);
    CHECK(s.r_p(3) == 1);

    s = split_d(-21, 5);
    CHECK(s.d == 1);
    CHECK(s.dbar == -21);

    s = split_d(15, 3);
    CHECK(s.d == 3);
    CHECK(s.dbar == 5);

    s = split_d(-2 * 27 * 5, 6);
    CHECK(s.d == 27);
    CHECK(s.dbar == -10);
    CHECK(s.t_p(3) == 1);

    CHECK_THROWS_AS(split_d(0, 1), PreconditionError);
    CHECK_THROWS_AS(split_d(3, 0), PreconditionError);
}

TEST_CASE("progression sets") {
    ProgressionSet ps = progression_set(5, 1);
    CHECK(ps.ks == std::vector<std::uint64_t>{2, 3, 5, 7, 8, 10});
    CHECK(ps.ks.size() == 2 * tau(5));
    CHECK(ps.h_odd == std::vector<std::uint64_t>{3, 5, 7});
    CHECK(ps.h_even == std::vector<std::uint64_t>{2, 8, 10});

    ps = progression_set(3, 1);
    CHECK(ps.ks == std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6});

    ps = progression_set(1, 1);
    CHECK(ps.ks == std::vector<std::uint64_t>{1, 2});
    CHECK(ps.step() == 4);

    ps = progression_set(-7, 2);
    CHECK(ps.D_abs == 7);
    CHECK(ps.offset(3) == 7);

    CHECK_THROWS_AS(progression_set(0, 1), PreconditionError);
    CHECK_THROWS_AS(progression_set(1, 0), PreconditionError);
}

TEST_CASE("rho") {
    CHECK(rho(3) == 0);
    CHECK(rho(4) == 1);
    CHECK(rho(-1) == 0);
    CHECK(rho(-2) == 1);
}

} // TEST_SUITE
