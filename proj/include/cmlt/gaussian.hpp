#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

namespace cmlt {

// Element re + im*i of Z[i] with exact (GMP) coordinates.
struct GaussianInt {
    mpz_class re{0};
    mpz_class im{0};

    GaussianInt() = default;
    GaussianInt(mpz_class r, mpz_class i) : re(std::move(r)), im(std::move(i)) {}
    GaussianInt(long r, long i = 0) : re(r), im(i) {} // NOLINT(google-explicit-constructor)

    mpz_class norm() const { return re * re + im * im; }
    GaussianInt conj() const { return {re, -im}; }
    bool is_zero() const { return re == 0 && im == 0; }
    bool is_unit() const { return norm() == 1; }
    // Odd means not divisible by 1+i, i.e. odd norm.
    bool is_odd() const { return mpz_odd_p(norm().get_mpz_t()) != 0; }

    std::string str() const;

    friend bool operator==(const GaussianInt& a, const GaussianInt& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend GaussianInt operator+(const GaussianInt& a, const GaussianInt& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianInt operator-(const GaussianInt& a, const GaussianInt& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianInt operator-(const GaussianInt& a) { return {-a.re, -a.im}; }
    friend GaussianInt operator*(const GaussianInt& a, const GaussianInt& b);
    friend std::ostream& operator<<(std::ostream& os, const GaussianInt& z) {
        return os << z.str();
    }
};

GaussianInt gi_mul(const GaussianInt& a, const GaussianInt& b);

struct GaussianDivMod {
    GaussianInt q;
    GaussianInt r;
};

// a = q*b + r with norm(r) < norm(b). Each coordinate of a/b is rounded to the
// nearest integer, ties toward negative infinity. Throws on b = 0.
GaussianDivMod gi_divmod(const GaussianInt& a, const GaussianInt& b);

// True iff b | a exactly (b != 0).
bool gi_divides(const GaussianInt& b, const GaussianInt& a);

// gcd by Euclid. Normalized: a unit gcd is returned as 1; an odd nonunit gcd
// is returned primary; an even gcd is returned in the first quadrant
// (re > 0, im >= 0). Throws if both inputs are zero.
GaussianInt gi_gcd(const GaussianInt& a, const GaussianInt& b);

// i^k * z for k in 0..3.
GaussianInt times_i_pow(const GaussianInt& z, int k);

// a+bi is primary iff (a,b) = (1,0) or (3,2) modulo 4.
bool is_primary(const GaussianInt& z);

struct PrimaryForm {
    int k;          // w = i^k * z
    GaussianInt w;  // the primary associate
};

// The unique primary associate of an odd nonunit z.
PrimaryForm make_primary(const GaussianInt& z);

// p = alpha^2 + beta^2 with alpha = 1 (mod 4) and beta > 0 even.
struct TwoSquares {
    std::uint64_t p;
    std::int64_t alpha;
    std::int64_t beta;
};

// Cornacchia descent on (p, sqrt(-1) mod p). Requires p prime, p = 1 (mod 4).
TwoSquares two_squares(std::uint64_t p);

} // namespace cmlt
