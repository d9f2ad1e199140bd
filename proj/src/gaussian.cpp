#include "cmlt/gaussian.hpp"

#include <cstdlib>

#include "cmlt/errors.hpp"
#include "cmlt/modarith.hpp"

namespace cmlt {

namespace {

// round(x / n) for n > 0, ties toward negative infinity: ceil((2x - n) / 2n).
mpz_class round_div(const mpz_class& x, const mpz_class& n) {
    mpz_class num = 2 * x - n;
    mpz_class den = 2 * n;
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

int mod4(const mpz_class& v) { return static_cast<int>(mpz_fdiv_ui(v.get_mpz_t(), 4)); }

} // namespace

std::string GaussianInt::str() const {
    std::string s = re.get_str();
    if (im >= 0) {
        s += "+" + im.get_str() + "i";
    } else {
        s += im.get_str() + "i";
    }
    return s;
}

GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussianInt gi_mul(const GaussianInt& a, const GaussianInt& b) { return a * b; }

GaussianDivMod gi_divmod(const GaussianInt& a, const GaussianInt& b) {
    CMLT_REQUIRE(!b.is_zero(), "gi_divmod: division by zero");
    const mpz_class n = b.norm();
    // a / b = a * conj(b) / N(b)
    const GaussianInt num = a * b.conj();
    GaussianInt q{round_div(num.re, n), round_div(num.im, n)};
    GaussianInt r = a - q * b;
    CMLT_ASSERT(r.norm() < n, "remainder not smaller than divisor");
    return {std::move(q), std::move(r)};
}

bool gi_divides(const GaussianInt& b, const GaussianInt& a) {
    CMLT_REQUIRE(!b.is_zero(), "gi_divides: zero divisor");
    const mpz_class n = b.norm();
    const GaussianInt num = a * b.conj();
    return mpz_divisible_p(num.re.get_mpz_t(), n.get_mpz_t()) &&
           mpz_divisible_p(num.im.get_mpz_t(), n.get_mpz_t());
}

GaussianInt times_i_pow(const GaussianInt& z, int k) {
    switch (((k % 4) + 4) % 4) {
    case 0: return z;
    case 1: return {-z.im, z.re};
    case 2: return {-z.re, -z.im};
    default: return {z.im, -z.re};
    }
}

bool is_primary(const GaussianInt& z) {
    if (z.is_zero() || z.is_unit()) return false;
    const int a = mod4(z.re), b = mod4(z.im);
    return (a == 1 && b == 0) || (a == 3 && b == 2);
}

PrimaryForm make_primary(const GaussianInt& z) {
    CMLT_REQUIRE(!z.is_zero() && !z.is_unit(), "make_primary: zero or unit argument");
    CMLT_REQUIRE(z.is_odd(), "make_primary: " + z.str() + " is divisible by 1+i");
    int found = -1;
    GaussianInt w;
    for (int k = 0; k < 4; ++k) {
        GaussianInt c = times_i_pow(z, k);
        if (is_primary(c)) {
            CMLT_ASSERT(found < 0, "two primary associates of " + z.str());
            found = k;
            w = std::move(c);
        }
    }
    CMLT_ASSERT(found >= 0, "no primary associate of " + z.str());
    return {found, std::move(w)};
}

GaussianInt gi_gcd(const GaussianInt& a, const GaussianInt& b) {
    CMLT_REQUIRE(!(a.is_zero() && b.is_zero()), "gi_gcd: both arguments zero");
    GaussianInt x = a, y = b;
    while (!y.is_zero()) {
        GaussianInt r = gi_divmod(x, y).r;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_unit()) return GaussianInt{1, 0};
    if (x.is_odd()) return make_primary(x).w;
    for (int k = 0; k < 4; ++k) {
        GaussianInt c = times_i_pow(x, k);
        if (c.re > 0 && c.im >= 0) return c;
    }
    CMLT_ASSERT(false, "no first-quadrant associate");
    return x;
}

TwoSquares two_squares(std::uint64_t p) {
    CMLT_REQUIRE(p % 4 == 1 && is_prime_u64(p),
                 "two_squares: " + std::to_string(p) + " is not a prime = 1 (mod 4)");
    // Euclid on (p, z) stops at the first remainder below sqrt(p).
    u64 a = p, b = sqrt_minus_one(p);
    if (b > p / 2) b = p - b;
    const u64 root = isqrt_u64(p);
    while (b > root) {
        u64 t = a % b;
        a = b;
        b = t;
    }
    const u64 x = b;
    const u64 rest = p - x * x;
    const u64 y = isqrt_u64(rest);
    CMLT_ASSERT(y * y == rest, "Cornacchia descent did not split " + std::to_string(p));

    std::int64_t odd = static_cast<std::int64_t>(x % 2 ? x : y);
    std::int64_t even = static_cast<std::int64_t>(x % 2 ? y : x);
    if (((odd % 4) + 4) % 4 != 1) odd = -odd;
    return {p, odd, even};
}

} // namespace cmlt
