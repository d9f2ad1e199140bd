#include "cmlt/arith.hpp"

#include <string>

#include "cmlt/errors.hpp"
#include "cmlt/modarith.hpp"

namespace cmlt {

namespace {

std::uint64_t abs_u64(std::int64_t n) {
    return n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
}

std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t out = 1;
    while (e-- > 0) out *= b;
    return out;
}

} // namespace

std::vector<std::pair<std::uint64_t, int>> factorize(std::int64_t n) {
    std::vector<std::pair<std::uint64_t, int>> out;
    std::uint64_t m = abs_u64(n);
    auto take = [&](std::uint64_t p) {
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    };
    take(2);
    for (std::uint64_t p = 3; p <= m / p; p += 2) take(p);
    if (m > 1) out.emplace_back(m, 1);
    return out;
}

std::uint64_t tau(std::int64_t D) {
    CMLT_REQUIRE(D != 0, "tau: D must be nonzero");
    std::uint64_t out = 1;
    for (const auto& [l, e] : factorize(D)) {
        if (l == 2 || l % 4 == 3) out *= ipow(l, e);
        else out *= ipow(l, e - 1) * (l - 2);
    }
    return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
    CMLT_REQUIRE(n != 0, "euler_phi: n must be positive");
    std::uint64_t out = 1;
    for (const auto& [l, e] : factorize(static_cast<std::int64_t>(n))) out *= ipow(l, e - 1) * (l - 1);
    return out;
}

std::uint64_t rad_odd(std::int64_t n) {
    CMLT_REQUIRE(n != 0, "rad_odd: n must be nonzero");
    std::uint64_t out = 1;
    for (const auto& [l, e] : factorize(n)) {
        if (l != 2) out *= l;
    }
    return out;
}

std::int64_t DShape::value() const {
    std::int64_t v = sign * static_cast<std::int64_t>(ipow(2, sigma));
    for (auto p : p_list) v *= static_cast<std::int64_t>(p);
    for (auto q : q_list) v *= static_cast<std::int64_t>(q * q);
    for (auto l : l_list) v *= static_cast<std::int64_t>(l * l * l);
    return v;
}

DShape shape_of(std::int64_t D) {
    CMLT_REQUIRE(D != 0, "shape_of: D must be nonzero");
    DShape s;
    s.sign = D < 0 ? -1 : 1;
    for (const auto& [l, e] : factorize(D)) {
        CMLT_REQUIRE(e < 4, "shape_of: " + std::to_string(D) + " is not fourth-power-free");
        if (l == 2) {
            s.sigma = e;
            continue;
        }
        switch (e) {
        case 1:
            s.p_list.push_back(l);
            ++s.r_counts[l % 8];
            break;
        case 2: s.q_list.push_back(l); break;
        default:
            s.l_list.push_back(l);
            ++s.t_counts[l % 8];
            break;
        }
    }
    return s;
}

DSplit split_d(std::int64_t D, std::int64_t r) {
    CMLT_REQUIRE(D != 0 && r != 0, "split_d: D and r must be nonzero");
    const std::uint64_t r_abs = abs_u64(r);
    DSplit out;
    out.D = D;
    out.r = r;
    std::int64_t rest = D;
    for (const auto& [l, e] : factorize(D)) {
        if (l != 2 && r_abs % l == 0) {
            const std::uint64_t part = ipow(l, e);
            out.d *= part;
            rest /= static_cast<std::int64_t>(part);
        }
    }
    out.dbar = rest;
    out.d_shape = shape_of(static_cast<std::int64_t>(out.d));
    out.dbar_shape = shape_of(out.dbar);
    return out;
}

ProgressionSet progression_set(std::int64_t D, std::int64_t r) {
    CMLT_REQUIRE(D != 0 && r != 0, "progression_set: D and r must be nonzero");
    ProgressionSet ps;
    ps.D_abs = abs_u64(D);
    ps.r = r;
    const u128 r2 = static_cast<u128>(abs_u64(r)) * abs_u64(r);
    for (std::uint64_t k = 1; k <= 2 * ps.D_abs; ++k) {
        const u128 off = ps.offset(k);
        const std::uint64_t v = static_cast<std::uint64_t>((off * off + r2) % ps.D_abs);
        if (gcd_u64(ps.D_abs, v) != 1) continue;
        ps.ks.push_back(k);
        (k % 2 ? ps.h_odd : ps.h_even).push_back(k);
    }
    return ps;
}

} // namespace cmlt
