#include "cmlt/frobenius.hpp"

#include <map>
#include <string>
#include <utility>

#include "cmlt/arith.hpp"
#include "cmlt/errors.hpp"
#include "cmlt/kernels.hpp"
#include "cmlt/modarith.hpp"

namespace cmlt {

CurveD::CurveD(mpz_class D) : D_(std::move(D)) {
    CMLT_REQUIRE(D_ != 0, "CurveD: D must be nonzero");
}

std::uint64_t CurveD::D_mod(std::uint64_t p) const {
    return mpz_fdiv_ui(D_.get_mpz_t(), p);
}

bool CurveD::bad_at(std::uint64_t p) const { return p == 2 || D_mod(p) == 0; }

namespace {

void require_good_prime(const CurveD& E, std::uint64_t p, const char* who) {
    CMLT_REQUIRE(p > 2 && is_prime_u64(p),
                 std::string(who) + ": " + std::to_string(p) + " is not an odd prime");
    CMLT_REQUIRE(!E.bad_at(p), std::string(who) + ": bad reduction at p = " + std::to_string(p));
}

} // namespace

std::int64_t ap_naive(const CurveD& E, std::uint64_t p, std::uint64_t cap) {
    require_good_prime(E, p, "ap_naive");
    CMLT_REQUIRE(p <= cap, "ap_naive: p = " + std::to_string(p) + " exceeds the cap " +
                               std::to_string(cap));
    return -kernels::omp::trace_sum({E.D_mod(p), p});
}

std::int64_t ap_binomial_residue(std::uint64_t p, std::uint64_t cap) {
    CMLT_REQUIRE(p % 4 == 1 && is_prime_u64(p),
                 "ap_binomial_residue: " + std::to_string(p) + " is not a prime = 1 (mod 4)");
    CMLT_REQUIRE(p <= cap, "ap_binomial_residue: p exceeds the cap");
    const u64 half = (p - 1) / 2, quarter = (p - 1) / 4;
    u64 num = 1, den = 1;
    for (u64 k = 1; k <= half; ++k) {
        num = mulmod(num, k, p);
        if (k == quarter) den = num;
    }
    const u64 res = mulmod(num, invmod_prime(mulmod(den, den, p), p), p);
    return res > p / 2 ? static_cast<std::int64_t>(res) - static_cast<std::int64_t>(p)
                       : static_cast<std::int64_t>(res);
}

std::int64_t ap_from_class(const TwoSquares& ts, FourClass cls) {
    switch (cls) {
    case FourClass::PlusAlpha: return 2 * ts.alpha;
    case FourClass::MinusAlpha: return -2 * ts.alpha;
    case FourClass::PlusBeta: return 2 * kBetaSign * ts.beta;
    case FourClass::MinusBeta: return -2 * kBetaSign * ts.beta;
    }
    return 0;
}

std::int64_t ap_fast(const CurveD& E, std::uint64_t p) {
    require_good_prime(E, p, "ap_fast");
    if (p % 4 == 3) return 0;
    const TwoSquares ts = two_squares(p);
    return ap_from_class(ts, quartic_class_of(ts, E.D_mod(p)));
}

std::int64_t reduce_quartic_twist(std::int64_t D) {
    CMLT_REQUIRE(D != 0, "reduce_quartic_twist: D must be nonzero");
    std::int64_t out = D < 0 ? -1 : 1;
    for (const auto& [prime, exp] : factorize(D)) {
        for (int i = 0; i < exp % 4; ++i) out *= static_cast<std::int64_t>(prime);
    }
    return out;
}

BetaSignCalibration calibrate_beta_sign(std::int64_t reference_D, int samples) {
    const CurveD E(reference_D);
    std::map<std::pair<int, int>, int> cell_sign;
    BetaSignCalibration out;
    out.consistent = true;
    for (u64 p = 5; out.samples < samples && p <= kNaiveTraceCap; p += 4) {
        if (!is_prime_u64(p) || E.bad_at(p)) continue;
        const TwoSquares ts = two_squares(p);
        const FourClass cls = quartic_class_of(ts, E.D_mod(p));
        if (cls != FourClass::PlusBeta && cls != FourClass::MinusBeta) continue;
        const std::int64_t oriented = cls == FourClass::PlusBeta ? 2 * ts.beta : -2 * ts.beta;
        const std::int64_t naive = ap_naive(E, p);
        int s = 0;
        if (naive == oriented) s = 1;
        else if (naive == -oriented) s = -1;
        const auto cell = std::make_pair(static_cast<int>(p % 8), static_cast<int>(ts.beta % 8));
        auto [it, inserted] = cell_sign.emplace(cell, s);
        if (s == 0 || (!inserted && it->second != s) || (out.sign != 0 && out.sign != s))
            out.consistent = false;
        if (out.sign == 0) out.sign = s;
        ++out.samples;
    }
    if (!out.consistent) out.sign = 0;
    return out;
}

} // namespace cmlt
