#include "cmlt/residue_symbols.hpp"

#include <array>
#include <string>

#include "cmlt/errors.hpp"
#include "cmlt/modarith.hpp"

namespace cmlt {

GaussianInt to_gaussian(QuarticValue v) {
    switch (v) {
    case QuarticValue::One: return {1, 0};
    case QuarticValue::I: return {0, 1};
    case QuarticValue::MinusOne: return {-1, 0};
    case QuarticValue::MinusI: return {0, -1};
    }
    return {};
}

std::string_view to_string(QuarticValue v) {
    static constexpr std::array<std::string_view, 4> names{"1", "i", "-1", "-i"};
    return names[static_cast<int>(v)];
}

std::string_view to_string(FourClass c) {
    static constexpr std::array<std::string_view, 4> names{"+alpha", "-alpha", "+beta",
                                                           "-beta"};
    return names[static_cast<int>(c)];
}

bool is_gaussian_prime(const GaussianInt& pi) {
    if (pi.is_zero() || pi.is_unit()) return false;
    const mpz_class n = pi.norm();
    if (n.fits_ulong_p() && is_prime_u64(n.get_ui())) return true;
    if (pi.re != 0 && pi.im != 0) return false;
    mpz_class q = abs(pi.re + pi.im);
    return q.fits_ulong_p() && q.get_ui() % 4 == 3 && is_prime_u64(q.get_ui());
}

namespace {

GaussianInt reduce(const GaussianInt& z, const GaussianInt& m) { return gi_divmod(z, m).r; }

void require_symbol_args(const GaussianInt& lambda, const GaussianInt& pi) {
    CMLT_REQUIRE(is_primary(pi), "quartic_symbol: " + pi.str() + " is not primary");
    CMLT_REQUIRE(pi.is_odd(), "quartic_symbol: " + pi.str() + " divides 2");
    CMLT_REQUIRE(is_gaussian_prime(pi), "quartic_symbol: " + pi.str() + " is not prime");
    CMLT_REQUIRE(!gi_divides(pi, lambda),
                 "quartic_symbol: " + lambda.str() + " is not coprime to " + pi.str());
}

} // namespace

QuarticValue quartic_symbol(const GaussianInt& lambda, const GaussianInt& pi) {
    require_symbol_args(lambda, pi);
    const mpz_class n = pi.norm();
    mpz_class e = (n - 1) / 4;

    GaussianInt acc{1, 0};
    GaussianInt base = reduce(lambda, pi);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t b = 0; b < bits; ++b) {
        if (mpz_tstbit(e.get_mpz_t(), b)) acc = reduce(acc * base, pi);
        base = reduce(base * base, pi);
    }
    for (int k = 0; k < 4; ++k) {
        const auto v = static_cast<QuarticValue>(k);
        if (gi_divides(pi, acc - to_gaussian(v))) return v;
    }
    CMLT_ASSERT(false, "power residue of " + lambda.str() + " mod " + pi.str() +
                           " is not a fourth root of unity");
    return QuarticValue::One;
}

bool reciprocity_check(const GaussianInt& lambda, const GaussianInt& pi) {
    CMLT_REQUIRE(is_primary(lambda) && is_primary(pi), "reciprocity_check: arguments must be primary");
    CMLT_REQUIRE(lambda.is_odd() && pi.is_odd(), "reciprocity_check: arguments must have odd norm");
    CMLT_REQUIRE(is_gaussian_prime(lambda) && is_gaussian_prime(pi),
                 "reciprocity_check: arguments must be Gaussian primes");
    CMLT_REQUIRE(gi_gcd(lambda, pi).is_unit(), "reciprocity_check: arguments are not coprime");

    const QuarticValue lhs = quartic_symbol(lambda, pi);
    QuarticValue rhs = quartic_symbol(pi, lambda);
    const mpz_class e = ((lambda.norm() - 1) / 4) * ((pi.norm() - 1) / 4);
    if (mpz_odd_p(e.get_mpz_t())) rhs = rhs * QuarticValue::MinusOne;
    return lhs == rhs;
}

FourClass quartic_class_of(const TwoSquares& ts, std::uint64_t D_mod_p) {
    const u64 p = ts.p;
    const u64 c = powmod(D_mod_p, (p - 1) / 4, p);
    const u64 ratio = mulmod(mod_signed(ts.beta, p), invmod_prime(mod_signed(ts.alpha, p), p), p);

    int matches = 0;
    FourClass cls = FourClass::PlusAlpha;
    auto check = [&](u64 target, FourClass k) {
        if (c == target) {
            ++matches;
            cls = k;
        }
    };
    check(1, FourClass::PlusAlpha);
    check(p - 1, FourClass::MinusAlpha);
    check(ratio, FourClass::PlusBeta);
    check(ratio == 0 ? 0 : p - ratio, FourClass::MinusBeta);
    CMLT_ASSERT(matches == 1, "D^((p-1)/4) mod " + std::to_string(p) + " matched " +
                                  std::to_string(matches) + " classes");
    return cls;
}

FourClass quartic_class_of(std::int64_t D, std::uint64_t p) {
    CMLT_REQUIRE(p % 4 == 1 && is_prime_u64(p),
                 "quartic_class_of: " + std::to_string(p) + " is not a prime = 1 (mod 4)");
    const u64 d = mod_signed(D, p);
    CMLT_REQUIRE(d != 0, "quartic_class_of: p divides D");
    return quartic_class_of(two_squares(p), d);
}

FourClass two_quartic_class(std::uint64_t p) {
    const TwoSquares ts = two_squares(p);
    const std::int64_t b8 = ts.beta % 8;
    const std::int64_t a8 = ((ts.alpha % 8) + 8) % 8;
    if (b8 == 0) return FourClass::PlusAlpha;
    if (b8 == 4) return FourClass::MinusAlpha;
    if (b8 == (2 * a8) % 8) return FourClass::PlusBeta;
    CMLT_ASSERT(b8 == (6 * a8) % 8, "beta mod 8 outside the four cases");
    return FourClass::MinusBeta;
}

} // namespace cmlt
