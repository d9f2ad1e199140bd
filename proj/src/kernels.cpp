#include "cmlt/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <string>

#include "cmlt/errors.hpp"
#include "cmlt/frobenius.hpp"
#include "cmlt/modarith.hpp"
#include "cmlt/parallel.hpp"
#include "cmlt/residue_symbols.hpp"

namespace cmlt::kernels {

namespace {

constexpr std::uint64_t kSweepBlock = 1 << 12;
constexpr std::size_t kEulerChunk = 1 << 14;
constexpr std::uint64_t kQuadBlock = 1 << 12;
constexpr u128 kU64Max = ~std::uint64_t{0};

inline int trace_term(u64 x, u64 D_mod_p, u64 p) {
    const u64 v = mulmod((mulmod(x, x, p) + D_mod_p) % p, x, p);
    return legendre_unchecked(v, p);
}

std::optional<std::uint64_t> first_prime_in(const ProgressionSearchArgs& a, std::uint64_t offset) {
    const u128 r2 = static_cast<u128>(a.r_abs) * a.r_abs;
    for (std::uint64_t x = 0; x <= a.x_max; ++x) {
        const u128 v = static_cast<u128>(a.step) * x + offset;
        const u128 p = r2 + v * v;
        CMLT_REQUIRE(p <= kU64Max, "progression value exceeds 64 bits");
        if (is_prime_u64(static_cast<u64>(p))) return static_cast<u64>(p);
    }
    return std::nullopt;
}

struct SweepPlan {
    u64 r_abs;
    u128 r2;
    u64 x0;      // first x with parity opposite to r
    u64 count;   // number of candidates x0, x0 + 2, ...
};

SweepPlan plan_sweep(const SweepArgs& a) {
    CMLT_REQUIRE(a.r != 0, "sweep: r must be nonzero");
    CMLT_REQUIRE(a.D != 0, "sweep: D must be nonzero");
    SweepPlan plan{};
    plan.r_abs = a.r < 0 ? static_cast<u64>(-a.r) : static_cast<u64>(a.r);
    plan.r2 = static_cast<u128>(plan.r_abs) * plan.r_abs;
    CMLT_REQUIRE(plan.r2 < a.N, "sweep: N must be at least r^2 + 1");
    plan.x0 = plan.r_abs % 2 == 0 ? 1 : 0;
    const u64 x_top = isqrt_u64(static_cast<u64>(a.N - plan.r2));
    plan.count = x_top < plan.x0 ? 0 : (x_top - plan.x0) / 2 + 1;
    return plan;
}

void classify(const SweepArgs& a, const SweepPlan& plan, u64 x, SweepCounts& c) {
    const u64 p = static_cast<u64>(plan.r2 + static_cast<u128>(x) * x);
    if (!is_prime_u64(p)) return;
    const u64 dmod = mod_signed(a.D, p);
    if (p == 2 || dmod == 0) {
        ++c.n_bad;
        return;
    }
    ++c.n_primes;
    const TwoSquares ts = two_squares(p);
    const std::int64_t ap = ap_from_class(ts, quartic_class_of(ts, dmod));
    if (ap == 2 * a.r) ++c.n_plus;
    else if (ap == -2 * a.r) ++c.n_minus;
    else ++c.n_other;
}

void add_into(SweepCounts& acc, const SweepCounts& c) {
    acc.n_primes += c.n_primes;
    acc.n_plus += c.n_plus;
    acc.n_minus += c.n_minus;
    acc.n_other += c.n_other;
    acc.n_bad += c.n_bad;
}

inline long double euler_factor(__int128 disc, u64 p) {
    __int128 m = disc % static_cast<__int128>(p);
    if (m < 0) m += p;
    const int leg = legendre_unchecked(static_cast<u64>(m), p);
    return 1.0L - static_cast<long double>(leg) / static_cast<long double>(p - 1);
}

inline bool euler_included(const EulerProductArgs& a, u64 p) {
    return p > 2 && !(a.skip != 0 && a.skip % p == 0);
}

struct QuadPlan {
    u64 x_end; // exclusive
};

i128 quad_value(const QuadraticValuesArgs& a, u64 x) {
    const i128 X = static_cast<i128>(x);
    return static_cast<i128>(a.a) * X * X + static_cast<i128>(a.b) * X + a.c;
}

QuadPlan plan_quadratic(const QuadraticValuesArgs& a) {
    CMLT_REQUIRE(a.a > 0, "quadratic_primes: leading coefficient must be positive");
    // f is increasing for x >= x_inc
    u64 x_inc = 0;
    if (a.b < 0) x_inc = static_cast<u64>((-static_cast<i128>(a.b) + 2 * a.a - 1) / (2 * a.a));
    u64 lo = x_inc, hi = x_inc + 1;
    while (quad_value(a, hi) <= static_cast<i128>(a.n)) hi = lo + 2 * (hi - lo);
    // smallest x in (lo, hi] with f(x) > n
    while (hi - lo > 1) {
        const u64 mid = lo + (hi - lo) / 2;
        if (quad_value(a, mid) > static_cast<i128>(a.n)) hi = mid;
        else lo = mid;
    }
    if (quad_value(a, lo) > static_cast<i128>(a.n)) hi = lo;
    return {hi};
}

inline void collect_prime(const QuadraticValuesArgs& a, u64 x, std::vector<u64>& out) {
    const i128 v = quad_value(a, x);
    if (v >= 2 && v <= static_cast<i128>(a.n) && is_prime_u64(static_cast<u64>(v)))
        out.push_back(static_cast<u64>(v));
}

void sort_unique(std::vector<u64>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

namespace serial {

std::int64_t trace_sum(const TraceSumArgs& args) {
    std::int64_t sum = 0;
    for (u64 x = 0; x < args.p; ++x) sum += trace_term(x, args.D_mod_p, args.p);
    return sum;
}

std::vector<std::optional<std::uint64_t>> first_primes(const ProgressionSearchArgs& args) {
    std::vector<std::optional<std::uint64_t>> out;
    out.reserve(args.offsets.size());
    for (u64 off : args.offsets) out.push_back(first_prime_in(args, off));
    return out;
}

SweepCounts sweep(const SweepArgs& args) {
    const SweepPlan plan = plan_sweep(args);
    SweepCounts c;
    for (u64 i = 0; i < plan.count; ++i) classify(args, plan, plan.x0 + 2 * i, c);
    return c;
}

long double euler_product(const EulerProductArgs& args) {
    long double prod = 1.0L;
    for (u64 p : args.primes) {
        if (euler_included(args, p)) prod *= euler_factor(args.disc, p);
    }
    return prod;
}

std::vector<std::uint64_t> quadratic_primes(const QuadraticValuesArgs& args) {
    const QuadPlan plan = plan_quadratic(args);
    std::vector<u64> out;
    for (u64 x = 0; x < plan.x_end; ++x) collect_prime(args, x, out);
    sort_unique(out);
    return out;
}

} // namespace serial

namespace omp {

std::int64_t trace_sum(const TraceSumArgs& args) {
    const std::int64_t n = static_cast<std::int64_t>(args.p);
    std::int64_t sum = 0;
#pragma omp parallel for schedule(static) reduction(+ : sum) num_threads(worker_count())
    for (std::int64_t x = 0; x < n; ++x) sum += trace_term(static_cast<u64>(x), args.D_mod_p, args.p);
    return sum;
}

std::vector<std::optional<std::uint64_t>> first_primes(const ProgressionSearchArgs& args) {
    const std::int64_t n = static_cast<std::int64_t>(args.offsets.size());
    std::vector<std::optional<std::uint64_t>> out(args.offsets.size());
    // Exceptions must not escape the parallel region.
    std::vector<std::string> errors(args.offsets.size());
#pragma omp parallel for schedule(dynamic, 4) num_threads(worker_count())
    for (std::int64_t i = 0; i < n; ++i) {
        try {
            out[i] = first_prime_in(args, args.offsets[i]);
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    }
    for (const auto& e : errors) {
        if (!e.empty()) throw PreconditionError(e);
    }
    return out;
}

SweepCounts sweep(const SweepArgs& args) {
    const SweepPlan plan = plan_sweep(args);
    const std::int64_t blocks = static_cast<std::int64_t>((plan.count + kSweepBlock - 1) / kSweepBlock);
    std::vector<SweepCounts> partial(static_cast<std::size_t>(blocks));
#pragma omp parallel for schedule(dynamic) num_threads(worker_count())
    for (std::int64_t b = 0; b < blocks; ++b) {
        const u64 lo = static_cast<u64>(b) * kSweepBlock;
        const u64 hi = std::min<u64>(lo + kSweepBlock, plan.count);
        for (u64 i = lo; i < hi; ++i) classify(args, plan, plan.x0 + 2 * i, partial[b]);
    }
    SweepCounts total;
    for (const auto& c : partial) add_into(total, c);
    return total;
}

long double euler_product(const EulerProductArgs& args) {
    const std::size_t n = args.primes.size();
    const std::int64_t chunks = static_cast<std::int64_t>((n + kEulerChunk - 1) / kEulerChunk);
    std::vector<long double> partial(static_cast<std::size_t>(chunks), 1.0L);
#pragma omp parallel for schedule(static) num_threads(worker_count())
    for (std::int64_t c = 0; c < chunks; ++c) {
        const std::size_t lo = static_cast<std::size_t>(c) * kEulerChunk;
        const std::size_t hi = std::min(lo + kEulerChunk, n);
        long double prod = 1.0L;
        for (std::size_t i = lo; i < hi; ++i) {
            const u64 p = args.primes[i];
            if (euler_included(args, p)) prod *= euler_factor(args.disc, p);
        }
        partial[c] = prod;
    }
    long double prod = 1.0L;
    for (long double v : partial) prod *= v;
    return prod;
}

std::vector<std::uint64_t> quadratic_primes(const QuadraticValuesArgs& args) {
    const QuadPlan plan = plan_quadratic(args);
    const std::int64_t blocks = static_cast<std::int64_t>((plan.x_end + kQuadBlock - 1) / kQuadBlock);
    std::vector<std::vector<u64>> partial(static_cast<std::size_t>(blocks));
#pragma omp parallel for schedule(dynamic) num_threads(worker_count())
    for (std::int64_t b = 0; b < blocks; ++b) {
        const u64 lo = static_cast<u64>(b) * kQuadBlock;
        const u64 hi = std::min<u64>(lo + kQuadBlock, plan.x_end);
        for (u64 x = lo; x < hi; ++x) collect_prime(args, x, partial[b]);
    }
    std::vector<u64> out;
    for (auto& v : partial) out.insert(out.end(), v.begin(), v.end());
    sort_unique(out);
    return out;
}

} // namespace omp

} // namespace cmlt::kernels
