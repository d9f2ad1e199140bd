#pragma once

#include <gmpxx.h>

#include <cstdint>

#include "cmlt/gaussian.hpp"
#include "cmlt/residue_symbols.hpp"

namespace cmlt {

// The curve E_D : y^2 = x^3 + D x.
class CurveD {
public:
    explicit CurveD(mpz_class D);
    explicit CurveD(std::int64_t D) : CurveD(mpz_class(static_cast<long>(D))) {}

    const mpz_class& D() const { return D_; }
    std::uint64_t D_mod(std::uint64_t p) const;
    // p | 2D
    bool bad_at(std::uint64_t p) const;

private:
    mpz_class D_;
};

inline constexpr std::uint64_t kNaiveTraceCap = 10'000'000;

// Orientation of the beta classes: PlusBeta yields 2*s*beta. Fixed at +1 and
// checked against naive point counts by calibrate_beta_sign().
inline constexpr int kBetaSign = +1;

// a_p = -sum_x (x^3 + Dx / p), one Euler-criterion exponentiation per x.
std::int64_t ap_naive(const CurveD& E, std::uint64_t p, std::uint64_t cap = kNaiveTraceCap);

// binom((p-1)/2, (p-1)/4) mod p as a residue in (-p/2, p/2].
std::int64_t ap_binomial_residue(std::uint64_t p, std::uint64_t cap = kNaiveTraceCap);

// a_p from the two-squares split of p and the class of D^((p-1)/4).
std::int64_t ap_fast(const CurveD& E, std::uint64_t p);

// Same as ap_fast for a precomputed decomposition; D_mod_p must be nonzero.
std::int64_t ap_from_class(const TwoSquares& ts, FourClass cls);

// Fourth-power-free part of D, sign preserved.
std::int64_t reduce_quartic_twist(std::int64_t D);

struct BetaSignCalibration {
    int sign = 0;        // +1 or -1 when consistent, 0 otherwise
    int samples = 0;
    bool consistent = false;
};

// Compares the beta-class traces against naive point counts on the first
// `samples` primes whose class for reference_D is +/-beta; the sign must agree
// in every (p mod 8, beta mod 8) cell.
BetaSignCalibration calibrate_beta_sign(std::int64_t reference_D = 2, int samples = 50);

} // namespace cmlt
