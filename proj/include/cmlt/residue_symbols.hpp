#pragma once

#include <cstdint>
#include <string_view>

#include "cmlt/gaussian.hpp"

namespace cmlt {

// Fourth roots of unity, stored as the exponent of i.
enum class QuarticValue : std::uint8_t { One = 0, I = 1, MinusOne = 2, MinusI = 3 };

inline QuarticValue operator*(QuarticValue a, QuarticValue b) {
    return static_cast<QuarticValue>((static_cast<int>(a) + static_cast<int>(b)) & 3);
}

GaussianInt to_gaussian(QuarticValue v);
std::string_view to_string(QuarticValue v);

// Which of 1, -1, beta/alpha, -beta/alpha the residue D^((p-1)/4) mod p equals,
// with (alpha, beta) the normalized two-squares decomposition of p. Each class
// names the trace it produces: a_p = 2*alpha, -2*alpha, 2*beta, -2*beta.
enum class FourClass : std::uint8_t { PlusAlpha, MinusAlpha, PlusBeta, MinusBeta };

std::string_view to_string(FourClass c);

// Quartic residue symbol (lambda/pi)_4, evaluated as lambda^((N(pi)-1)/4) in
// Z[i]/(pi). pi must be a primary Gaussian prime not dividing 2 and lambda must
// be coprime to pi.
QuarticValue quartic_symbol(const GaussianInt& lambda, const GaussianInt& pi);

// True iff (lambda/pi)_4 = (pi/lambda)_4 * (-1)^(((N lambda-1)/4)((N pi-1)/4))
// for the given pair of coprime primary Gaussian primes.
bool reciprocity_check(const GaussianInt& lambda, const GaussianInt& pi);

// True iff pi is a Gaussian prime (up to units): prime norm, or a rational
// prime q = 3 (mod 4) times a unit.
bool is_gaussian_prime(const GaussianInt& pi);

// Class of D^((p-1)/4) mod p. Requires p prime, p = 1 (mod 4), p not dividing 2D.
FourClass quartic_class_of(std::int64_t D, std::uint64_t p);
FourClass quartic_class_of(const TwoSquares& ts, std::uint64_t D_mod_p);

// Closed form for the class of 2 read off beta mod 8.
FourClass two_quartic_class(std::uint64_t p);

} // namespace cmlt
