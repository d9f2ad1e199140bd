#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "cmlt/arith.hpp"
#include "cmlt/kernels.hpp"
#include "cmlt/modarith.hpp"
#include "cmlt/parallel.hpp"
#include "cmlt/primes.hpp"
#include "support/oracles.hpp"

using namespace cmlt;

namespace {

// Runs the body once per worker count and restores the default.
template <class F>
void for_thread_counts(F body) {
    for (int n : {1, 2, 3, 4, 7}) {
        set_worker_count(n);
        CAPTURE(n);
        body();
    }
    set_worker_count(0);
}

} // namespace

TEST_SUITE("kernels") {

TEST_CASE("prime sieve") {
    CHECK(primes_up_to(1).empty());
    CHECK(primes_up_to(2) == std::vector<std::uint64_t>{2});
    CHECK(primes_up_to(30) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
    CHECK(primes_up_to(1'000'000).size() == 78498);
    const auto ps = primes_up_to(5000);
    std::size_t i = 0;
    for (std::uint64_t n = 0; n <= 5000; ++n) {
        if (oracle::is_prime_trial(n)) {
            REQUIRE(i < ps.size());
            CHECK(ps[i++] == n);
        }
    }
    CHECK(i == ps.size());
}

TEST_CASE("worker count override") {
    set_worker_count(3);
    CHECK(worker_count() == 3);
    set_worker_count(0);
    CHECK(worker_count() >= 1);
}

TEST_CASE("trace sum") {
    for_thread_counts([] {
        for (std::uint64_t p : {3ULL, 13ULL, 1009ULL, 65537ULL}) {
            for (std::uint64_t d : {std::uint64_t{1}, std::uint64_t{2}, p - 1}) {
                const kernels::TraceSumArgs a{d, p};
                CHECK(kernels::omp::trace_sum(a) == kernels::serial::trace_sum(a));
            }
        }
    });
}

TEST_CASE("first primes in progressions") {
    const ProgressionSet ps = progression_set(-105, 4);
    std::vector<std::uint64_t> offsets;
    for (auto k : ps.ks) offsets.push_back(ps.offset(k));
    const kernels::ProgressionSearchArgs a{4, ps.step(), offsets, 10'000};
    const auto ref = kernels::serial::first_primes(a);
    for_thread_counts([&] { CHECK(kernels::omp::first_primes(a) == ref); });

    const kernels::ProgressionSearchArgs tiny{4, ps.step(), offsets, 0};
    const auto none = kernels::omp::first_primes(tiny);
    CHECK(none == kernels::serial::first_primes(tiny));
    CHECK(std::count(none.begin(), none.end(), std::nullopt) > 0);
}

TEST_CASE("sweep") {
    for (const kernels::SweepArgs& a : {kernels::SweepArgs{-21, 1, 50'000'000}, kernels::SweepArgs{6, -2, 20'000'000},
                                        kernels::SweepArgs{5, 3, 10'000'000}, kernels::SweepArgs{1, 1, 2}}) {
        const auto ref = kernels::serial::sweep(a);
        for_thread_counts([&] { CHECK(kernels::omp::sweep(a) == ref); });
    }
}

TEST_CASE("euler product") {
    const auto primes = primes_up_to(2'000'000);
    for (__int128 disc : {__int128{-4}, __int128{-36}, __int128{5}, __int128{-163}}) {
        const kernels::EulerProductArgs a{primes, disc, 3};
        const long double ref = kernels::serial::euler_product(a);
        for_thread_counts([&] {
            CHECK(static_cast<double>(kernels::omp::euler_product(a)) ==
                  doctest::Approx(static_cast<double>(ref)).epsilon(1e-12));
        });
    }
}

TEST_CASE("quadratic primes") {
    for (const kernels::QuadraticValuesArgs& a :
         {kernels::QuadraticValuesArgs{1, 0, 1, 10'000'000}, kernels::QuadraticValuesArgs{1, -1000, 250'001, 1'000'000},
          kernels::QuadraticValuesArgs{3, 1, -7, 5'000'000}}) {
        const auto ref = kernels::serial::quadratic_primes(a);
        CHECK(std::is_sorted(ref.begin(), ref.end()));
        for_thread_counts([&] { CHECK(kernels::omp::quadratic_primes(a) == ref); });
    }
}

} // TEST_SUITE
