#include "cmlt/hardy_littlewood.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "cmlt/arith.hpp"
#include "cmlt/errors.hpp"
#include "cmlt/kernels.hpp"
#include "cmlt/primes.hpp"

namespace cmlt {

namespace {

bool is_square(__int128 v) {
    if (v < 0) return false;
    auto s = static_cast<__int128>(std::sqrt(static_cast<long double>(v)));
    while (s * s > v) --s;
    while ((s + 1) * (s + 1) <= v) ++s;
    return s * s == v;
}

std::string poly_str(const HLPoly& f) {
    return "(" + std::to_string(f.a) + ", " + std::to_string(f.b) + ", " + std::to_string(f.c) + ")";
}

} // namespace

bool hl_admissible(std::int64_t a, std::int64_t b, std::int64_t c) {
    if (a <= 0) return false;
    if (std::gcd(std::gcd(a, b), c) != 1) return false;
    if ((a + b) % 2 == 0 && c % 2 == 0) return false;
    return !is_square(HLPoly{a, b, c}.discriminant());
}

double hl_delta(const HLPoly& f, std::uint64_t prime_bound) {
    CMLT_REQUIRE(hl_admissible(f), "hl_delta: inadmissible polynomial " + poly_str(f));
    CMLT_REQUIRE(prime_bound >= 3, "hl_delta: prime_bound must be at least 3");
    long double out = static_cast<long double>(std::gcd<std::int64_t>(2, f.a + f.b)) /
                      std::sqrt(static_cast<long double>(f.a));
    const std::int64_t g = std::gcd(f.a, f.b);
    for (const auto& [p, e] : factorize(g)) {
        if (p > 2) out *= static_cast<long double>(p) / static_cast<long double>(p - 1);
    }
    const auto primes = primes_up_to(prime_bound);
    out *= kernels::omp::euler_product({primes, f.discriminant(), static_cast<std::uint64_t>(f.a)});
    return static_cast<double>(out);
}

std::uint64_t hl_count(const HLPoly& f, std::uint64_t n) {
    CMLT_REQUIRE(n >= 2, "hl_count: n must be at least 2");
    CMLT_REQUIRE(f.a > 0, "hl_count: leading coefficient must be positive");
    return kernels::omp::quadratic_primes({f.a, f.b, f.c, n}).size();
}

} // namespace cmlt
