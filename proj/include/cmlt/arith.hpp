#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace cmlt {

// Prime factorization of |n| by trial division, ascending primes.
std::vector<std::pair<std::uint64_t, int>> factorize(std::int64_t n);

// Multiplicative: tau(2^e) = 2^e, tau(l^e) = l^e for l = 3 (mod 4),
// l^(e-1) (l-2) for l = 1 (mod 4); sign ignored.
std::uint64_t tau(std::int64_t D);

std::uint64_t euler_phi(std::uint64_t n);

// Product of the distinct odd primes dividing n (1 if none).
std::uint64_t rad_odd(std::int64_t n);

// 0 for odd r, 1 for even r.
inline int rho(std::int64_t r) { return r % 2 == 0 ? 1 : 0; }

// D = sign * 2^sigma * prod(p) * prod(q)^2 * prod(l)^3 for a fourth-power-free D.
struct DShape {
    int sign = 1;
    int sigma = 0;
    std::vector<std::uint64_t> p_list; // odd primes with exponent 1
    std::vector<std::uint64_t> q_list; // exponent 2
    std::vector<std::uint64_t> l_list; // exponent 3
    std::array<int, 8> r_counts{};     // r_counts[i] = #{p in p_list : p = i (mod 8)}
    std::array<int, 8> t_counts{};     // same over l_list

    int r() const { return static_cast<int>(p_list.size()); }
    int s() const { return static_cast<int>(q_list.size()); }
    int t() const { return static_cast<int>(l_list.size()); }
    bool has_odd_prime() const { return r() + s() + t() > 0; }
    std::int64_t value() const;
};

DShape shape_of(std::int64_t D);

// D = d * dbar with d > 0 odd, Rad(d) | r and gcd(r, dbar) having no odd prime.
// Counters with a single prime (r', t') refer to d, double primes to dbar.
struct DSplit {
    std::int64_t D = 0;
    std::int64_t r = 0;
    std::uint64_t d = 1;
    std::int64_t dbar = 1;
    DShape d_shape;
    DShape dbar_shape;

    int r_pp() const { return dbar_shape.r(); }
    int s_pp() const { return dbar_shape.s(); }
    int t_pp() const { return dbar_shape.t(); }
    int r_p(int i) const { return d_shape.r_counts[i]; }
    int t_p(int i) const { return d_shape.t_counts[i]; }
    int r_pp(int i) const { return dbar_shape.r_counts[i]; }
    int t_pp(int i) const { return dbar_shape.t_counts[i]; }
};

DSplit split_d(std::int64_t D, std::int64_t r);

// Residues k in 1..2|D| with gcd(|D|, (2k + rho(r))^2 + r^2) = 1. The primes
// p = r^2 + (4|D| x + 2k + rho(r))^2 of each k share a_p.
struct ProgressionSet {
    std::uint64_t D_abs = 0;
    std::int64_t r = 0;
    std::vector<std::uint64_t> ks;
    std::vector<std::uint64_t> h_odd;  // k odd
    std::vector<std::uint64_t> h_even; // k even

    std::uint64_t step() const { return 4 * D_abs; }
    std::uint64_t offset(std::uint64_t k) const { return 2 * k + static_cast<std::uint64_t>(rho(r)); }
};

ProgressionSet progression_set(std::int64_t D, std::int64_t r);

} // namespace cmlt
