#pragma once

#include <cstdint>

namespace cmlt {

// a x^2 + b x + c.
struct HLPoly {
    std::int64_t a = 1;
    std::int64_t b = 0;
    std::int64_t c = 1;

    // b^2 - 4ac
    __int128 discriminant() const {
        return static_cast<__int128>(b) * b - static_cast<__int128>(4) * a * c;
    }
};

// a > 0, gcd(a, b, c) = 1, a + b and c not both even, discriminant not a square.
bool hl_admissible(std::int64_t a, std::int64_t b, std::int64_t c);
inline bool hl_admissible(const HLPoly& f) { return hl_admissible(f.a, f.b, f.c); }

// gcd(2, a+b)/sqrt(a) * prod_{p | gcd(a,b), p > 2} p/(p-1)
//   * prod_{p not dividing a, 2 < p <= prime_bound} (1 - (disc/p)/(p-1)).
double hl_delta(const HLPoly& f, std::uint64_t prime_bound);

// Number of distinct primes <= n of the form f(x), x >= 0.
std::uint64_t hl_count(const HLPoly& f, std::uint64_t n);

} // namespace cmlt
