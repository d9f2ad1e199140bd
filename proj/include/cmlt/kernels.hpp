#pragma once

// Data-parallel inner loops. Each kernel has an OpenMP version used by the
// library and a serial reference kept for tests and benchmarks. Both return
// identical results; the OpenMP versions merge per-block results in block
// order so the outcome does not depend on the thread count.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace cmlt::kernels {

// sum_{x=0}^{p-1} ((x^3 + D x) / p)
struct TraceSumArgs {
    std::uint64_t D_mod_p;
    std::uint64_t p;
};

// First prime in each progression r^2 + (step*x + offset)^2, 0 <= x <= x_max.
struct ProgressionSearchArgs {
    std::uint64_t r_abs;
    std::uint64_t step;
    std::span<const std::uint64_t> offsets;
    std::uint64_t x_max;
};

// Classification of primes p = r^2 + x^2 <= N by a_p.
struct SweepArgs {
    std::int64_t D;
    std::int64_t r;
    std::uint64_t N;
};

struct SweepCounts {
    std::uint64_t n_primes = 0;
    std::uint64_t n_plus = 0;
    std::uint64_t n_minus = 0;
    std::uint64_t n_other = 0;
    std::uint64_t n_bad = 0; // primes dividing 2D, excluded from n_primes

    friend bool operator==(const SweepCounts&, const SweepCounts&) = default;
};

// prod over primes of (1 - (disc/p) / (p - 1)), skipping primes dividing `skip`.
struct EulerProductArgs {
    std::span<const std::uint64_t> primes;
    __int128 disc;
    std::uint64_t skip; // factor omitted for p | skip (0 means none)
};

// Distinct primes <= n among a x^2 + b x + c, x >= 0.
struct QuadraticValuesArgs {
    std::int64_t a, b, c;
    std::uint64_t n;
};

namespace serial {
std::int64_t trace_sum(const TraceSumArgs& args);
std::vector<std::optional<std::uint64_t>> first_primes(const ProgressionSearchArgs& args);
SweepCounts sweep(const SweepArgs& args);
long double euler_product(const EulerProductArgs& args);
std::vector<std::uint64_t> quadratic_primes(const QuadraticValuesArgs& args);
} // namespace serial

namespace omp {
std::int64_t trace_sum(const TraceSumArgs& args);
std::vector<std::optional<std::uint64_t>> first_primes(const ProgressionSearchArgs& args);
SweepCounts sweep(const SweepArgs& args);
long double euler_product(const EulerProductArgs& args);
std::vector<std::uint64_t> quadratic_primes(const QuadraticValuesArgs& args);
} // namespace omp

} // namespace cmlt::kernels
