#pragma once

#include <cstdint>

namespace cmlt {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

inline u64 powmod(u64 base, u64 exp, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// Least non-negative residue of a signed value.
inline u64 mod_signed(i64 a, u64 m) {
    i128 r = static_cast<i128>(a) % static_cast<i128>(m);
    if (r < 0) r += m;
    return static_cast<u64>(r);
}

// Inverse of a modulo prime p (a must be a unit).
inline u64 invmod_prime(u64 a, u64 p) { return powmod(a, p - 2, p); }

// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime_u64(u64 n);

// Legendre symbol (a/p) by Euler's criterion. Throws if p is not an odd prime.
int legendre(i64 a, u64 p);

// Same, without the primality check; p must be an odd prime.
inline int legendre_unchecked(u64 a_mod_p, u64 p) {
    if (a_mod_p == 0) return 0;
    return powmod(a_mod_p, (p - 1) / 2, p) == 1 ? 1 : -1;
}

// z with z^2 = -1 (mod p), 0 < z < p. Requires p prime, p = 1 (mod 4).
u64 sqrt_minus_one(u64 p);

// floor(sqrt(n)) for the full 64-bit range.
u64 isqrt_u64(u64 n);

u64 gcd_u64(u64 a, u64 b);

} // namespace cmlt
