#include "cmlt/modarith.hpp"

#include <cmath>
#include <string>

#include "cmlt/errors.hpp"

namespace cmlt {

namespace {

bool miller_rabin_witness(u64 n, u64 d, int s, u64 a) {
    a %= n;
    if (a == 0) return true;
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

} // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    static constexpr u64 small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 p : small) {
        if (n % p == 0) return n == p;
    }
    if (n < 41 * 41) return true;

    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Sinclair's seven bases: no strong pseudoprime below 2^64.
    static constexpr u64 bases[] = {2, 325, 9375, 28178, 450775, 9780504, 1795265022};
    for (u64 a : bases) {
        if (!miller_rabin_witness(n, d, s, a)) return false;
    }
    return true;
}

int legendre(i64 a, u64 p) {
    CMLT_REQUIRE(p > 2 && is_prime_u64(p),
                 "legendre: modulus " + std::to_string(p) + " is not an odd prime");
    return legendre_unchecked(mod_signed(a, p), p);
}

u64 sqrt_minus_one(u64 p) {
    CMLT_REQUIRE(p % 4 == 1 && is_prime_u64(p),
                 "sqrt_minus_one: " + std::to_string(p) + " is not a prime = 1 (mod 4)");
    for (u64 g = 2;; ++g) {
        if (legendre_unchecked(g % p, p) == -1) {
            u64 z = powmod(g, (p - 1) / 4, p);
            CMLT_ASSERT(mulmod(z, z, p) == p - 1, "nonresidue power is not a root of -1");
            return z;
        }
    }
}

u64 isqrt_u64(u64 n) {
    u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && static_cast<u128>(r) * r > n) --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

u64 gcd_u64(u64 a, u64 b) {
    while (b) {
        u64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace cmlt
