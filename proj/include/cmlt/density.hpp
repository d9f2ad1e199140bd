#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cmlt/arith.hpp"
#include "cmlt/gaussian.hpp"
#include "cmlt/residue_symbols.hpp"

namespace cmlt {

// Predicted densities of a_p = +2r and a_p = -2r among primes p = r^2 + x^2.
struct DensityPair {
    mpq_class d_plus{0};
    mpq_class d_minus{0};

    friend bool operator==(const DensityPair& a, const DensityPair& b) {
        return a.d_plus == b.d_plus && a.d_minus == b.d_minus;
    }
};

std::string to_string(const DensityPair& d);

struct ClassCounts {
    std::uint64_t x_alpha = 0;
    std::uint64_t x_minus_alpha = 0;
    std::uint64_t x_beta = 0;
    std::uint64_t x_minus_beta = 0;

    std::uint64_t total() const { return x_alpha + x_minus_alpha + x_beta + x_minus_beta; }
    void add(FourClass c);
    friend bool operator==(const ClassCounts&, const ClassCounts&) = default;
};

// Closed-form density with the theorem branch that produced it.
struct FormulaResult {
    DensityPair density;
    std::int64_t D_reduced = 0;
    // alpha (odd r) or beta (even r) in the normalization the theorems use:
    // alpha = 1 (mod 4); beta = 2 (mod 8) when 2 || beta, beta > 0 when 4 | beta.
    std::int64_t r_normalized = 0;
    bool swapped = false; // r_normalized = -r
    std::string branch;
};

FormulaResult density_formula_traced(std::int64_t D, std::int64_t r);
DensityPair density_formula(std::int64_t D, std::int64_t r);

struct OracleResult {
    DensityPair density;
    ClassCounts counts;
    ProgressionSet progressions;
    std::vector<std::uint64_t> representatives; // one prime per k, in k order
    std::vector<FourClass> classes;             // class of D at each representative
    std::uint64_t n_plus = 0;                   // representatives with a_p = 2r
    std::uint64_t n_minus = 0;                  // a_p = -2r
};

inline constexpr std::uint64_t kDefaultOracleXMax = 100'000;

// Densities by enumerating residue classes: one representative prime per k in
// H(D, r), classified by ap_fast. Throws SearchBoundExceeded when some
// progression has no prime for x <= x_max.
OracleResult density_oracle(std::int64_t D, std::int64_t r,
                            std::uint64_t x_max = kDefaultOracleXMax);

// Same, using the serial representative search.
OracleResult density_oracle_serial(std::int64_t D, std::int64_t r,
                                   std::uint64_t x_max = kDefaultOracleXMax);

struct SigmaPart {
    std::int64_t sigma = 0;   // number of representatives
    std::int64_t sigma2 = 0;  // sum of Legendre symbols (D/p)
    GaussianInt sigma4;       // sum of quartic values of D at p
};

// Parts I (k odd) and II (k even) and their sum.
struct SigmaTriple {
    SigmaPart odd;
    SigmaPart even;
    SigmaPart total;
};

// Quartic value of D at p read from its class: +alpha -> 1, -alpha -> -1,
// +beta -> i, -beta -> -i.
QuarticValue quartic_value_of(FourClass c);

// Requires D odd.
SigmaTriple sigma_sums(std::int64_t D, std::int64_t r,
                       std::uint64_t x_max = kDefaultOracleXMax);

// A row of the tables listing every (D, r) with a vanishing density.
struct ZeroTableMatch {
    std::string row_id;
    bool plus_zero = false;
    bool minus_zero = false;
    // The row as printed disagrees with the density theorems on some inputs.
    bool flagged = false;
};

struct ZeroVerdict {
    bool plus_zero = false;
    bool minus_zero = false;
    std::optional<ZeroTableMatch> table_row;

    // Every zero claimed by the matched table row is a zero of the formula.
    bool table_consistent() const {
        return !table_row || ((!table_row->plus_zero || plus_zero) &&
                              (!table_row->minus_zero || minus_zero));
    }
};

std::optional<ZeroTableMatch> match_zero_table(std::int64_t D, std::int64_t r);
ZeroVerdict is_zero_pair(std::int64_t D, std::int64_t r);

inline constexpr std::uint64_t kDefaultPrimeBound = 1'000'000;

// delta(D, r) = delta(1, 0, r^2) * density(a_p = 2r).
double lt_constant(std::int64_t D, std::int64_t r,
                   std::uint64_t prime_bound = kDefaultPrimeBound);

} // namespace cmlt
