#include "cmlt/density.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "cmlt/errors.hpp"
#include "cmlt/frobenius.hpp"
#include "cmlt/hardy_littlewood.hpp"
#include "cmlt/kernels.hpp"
#include "cmlt/modarith.hpp"

namespace cmlt {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
    const std::int64_t v = a % m;
    return v < 0 ? v + m : v;
}

int parity_sign(int e) { return e % 2 == 0 ? 1 : -1; }

std::uint64_t tau_product(const std::vector<std::uint64_t>& primes) {
    std::uint64_t out = 1;
    for (auto l : primes) out *= tau(static_cast<std::int64_t>(l));
    return out;
}

// prod tau(l) over the distinct odd primes l of dbar, by exponent class.
struct DbarTaus {
    std::uint64_t pl;  // l | dbar_p * dbar_l
    std::uint64_t pql; // l | dbar_p * dbar_q * dbar_l
};

DbarTaus dbar_taus(const DSplit& s) {
    const auto& sh = s.dbar_shape;
    const std::uint64_t pl = tau_product(sh.p_list) * tau_product(sh.l_list);
    return {pl, pl * tau_product(sh.q_list)};
}

mpq_class signed_ratio(int sign, std::uint64_t den) {
    mpq_class q(sign, static_cast<unsigned long>(den));
    q.canonicalize();
    return q;
}

const mpq_class kQuarter(1, 4);

std::string split_label(const DSplit& s) {
    if (s.d == 1) return "coprime";
    if (!s.dbar_shape.has_odd_prime()) return "rad-divides";
    return "split";
}

// Densities of a_p = 2*alpha and a_p = -2*alpha for alpha = 1 (mod 4).
std::pair<DensityPair, std::string> odd_branch(std::int64_t D, std::int64_t alpha) {
    const DSplit s = split_d(D, alpha);
    const DbarTaus t = dbar_taus(s);
    const mpq_class A = signed_ratio(parity_sign(s.r_pp() + s.t_pp()), t.pl);
    const int E = s.r_p(3) + s.r_p(5) + s.t_p(3) + s.t_p(5) + s.r_pp(1) + s.r_pp(7) +
                  s.t_pp(1) + s.t_pp(7) + s.s_pp();
    const mpq_class B = signed_ratio(parity_sign(E), t.pql);

    const int sigma = shape_of(D).sigma;
    const std::string tag = "odd r, " + split_label(s);
    auto biased = [&](const char* label) {
        return std::make_pair(DensityPair{kQuarter * (1 + A + 2 * B), kQuarter * (1 + A - 2 * B)},
                              tag + ", " + label);
    };
    auto balanced = [&](const char* label) {
        const mpq_class v = kQuarter * (1 + A);
        return std::make_pair(DensityPair{v, v}, tag + ", " + label);
    };
    switch (sigma) {
    case 0: return floor_mod(D, 4) == 1 ? biased("D = 1 mod 4") : balanced("D = 3 mod 4");
    case 2: return floor_mod(D / 4, 4) == 3 ? biased("D/4 = 3 mod 4") : balanced("D/4 = 1 mod 4");
    default: return {DensityPair{kQuarter, kQuarter}, "odd r, 2||D or 8||D"};
    }
}

// Densities of a_p = 2*beta and a_p = -2*beta for beta = 2 (mod 8) or 4 | beta.
std::pair<DensityPair, std::string> even_branch(std::int64_t D, std::int64_t beta) {
    const DSplit s = split_d(D, beta);
    const DbarTaus t = dbar_taus(s);
    const mpq_class A = signed_ratio(parity_sign(s.r_pp() + s.t_pp()), t.pl);
    const int sigma = shape_of(D).sigma;

    if (sigma == 0 || sigma == 2 || beta % 4 == 0) {
        const mpq_class v = kQuarter * (1 - A);
        std::string label = sigma % 2 == 0 ? "even r, D odd or 4||D" : "even r, 2||D or 8||D, 4 | beta";
        if (!s.dbar_shape.has_odd_prime()) label += ", no odd prime in dbar";
        return {DensityPair{v, v}, label};
    }

    if (!s.dbar_shape.has_odd_prime()) {
        // dbar = +-2^sigma: the sign of D/2^sigma decides the side.
        const std::int64_t odd = D / (sigma == 1 ? 2 : 8);
        const int e = static_cast<int>(floor_mod((odd - 1) / 2, 2));
        const int plus_half = sigma == 1 ? 1 + parity_sign(e) : 1 - parity_sign(e);
        mpq_class plus(plus_half, 2);
        plus.canonicalize();
        return {DensityPair{plus, 1 - plus},
                sigma == 1 ? "even r, 2||D, dbar = +-2" : "even r, 8||D, dbar = +-8"};
    }

    const int d_half = static_cast<int>(((s.d - 1) / 2) % 2);
    const int E = s.r_pp(1) + s.r_pp(5) + s.t_pp(1) + s.t_pp(5) + s.s_pp() + d_half;
    const mpq_class Bm = signed_ratio(parity_sign(E), t.pql);
    const int sgn = (sigma == 1) == (D > 0) ? 1 : -1;
    return {DensityPair{kQuarter * (1 + A + 2 * sgn * Bm), kQuarter * (1 + A - 2 * sgn * Bm)},
            sigma == 1 ? "even r, 2||D, dbar with odd prime" : "even r, 8||D, dbar with odd prime"};
}

QuarticValue class_value(FourClass c) {
    switch (c) {
    case FourClass::PlusAlpha: return QuarticValue::One;
    case FourClass::MinusAlpha: return QuarticValue::MinusOne;
    case FourClass::PlusBeta: return QuarticValue::I;
    case FourClass::MinusBeta: return QuarticValue::MinusI;
    }
    return QuarticValue::One;
}

template <class Search>
OracleResult run_oracle(std::int64_t D, std::int64_t r, std::uint64_t x_max, Search search) {
    CMLT_REQUIRE(D != 0, "density_oracle: D must be nonzero");
    CMLT_REQUIRE(r != 0, "density_oracle: r must be nonzero");
    CMLT_REQUIRE(x_max > 0, "density_oracle: x_max must be positive");
    const std::int64_t Dr = reduce_quartic_twist(D);

    OracleResult out;
    out.progressions = progression_set(Dr, r);
    const auto& ps = out.progressions;
    std::vector<std::uint64_t> offsets;
    offsets.reserve(ps.ks.size());
    for (auto k : ps.ks) offsets.push_back(ps.offset(k));

    const std::uint64_t r_abs = r < 0 ? static_cast<std::uint64_t>(-r) : static_cast<std::uint64_t>(r);
    const auto reps = search(kernels::ProgressionSearchArgs{r_abs, ps.step(), offsets, x_max});

    for (std::size_t i = 0; i < reps.size(); ++i) {
        if (!reps[i]) {
            throw NoRepresentativeFound(ps.ks[i], "density_oracle: no prime in the progression k = " +
                                                      std::to_string(ps.ks[i]) + " for x <= " +
                                                      std::to_string(x_max));
        }
        const std::uint64_t p = *reps[i];
        const TwoSquares ts = two_squares(p);
        const FourClass cls = quartic_class_of(ts, mod_signed(Dr, p));
        const std::int64_t ap = ap_from_class(ts, cls);
        out.representatives.push_back(p);
        out.classes.push_back(cls);
        out.counts.add(cls);
        if (ap == 2 * r) ++out.n_plus;
        else if (ap == -2 * r) ++out.n_minus;
    }
    const auto h = static_cast<unsigned long>(ps.ks.size());
    out.density.d_plus = mpq_class(static_cast<unsigned long>(out.n_plus), h);
    out.density.d_minus = mpq_class(static_cast<unsigned long>(out.n_minus), h);
    out.density.d_plus.canonicalize();
    out.density.d_minus.canonicalize();
    return out;
}

bool in_set(std::int64_t v, std::initializer_list<std::int64_t> set) {
    return std::find(set.begin(), set.end(), v) != set.end();
}

ZeroTableMatch row(std::string id, bool plus, bool minus, bool flagged) {
    return {std::move(id), plus, minus, flagged};
}

// Rows keyed to the normalized alpha; sides are a_p(2 alpha), a_p(-2 alpha).
std::optional<ZeroTableMatch> table_one(std::int64_t D, std::int64_t alpha) {
    const DShape sh = shape_of(D);
    const DSplit s = split_d(D, alpha);
    const bool one_mod_4 = sh.sigma == 0 && floor_mod(D, 4) == 1;
    const bool quarter_three = sh.sigma == 2 && floor_mod(D / 4, 4) == 3;

    if ((one_mod_4 || quarter_three) && in_set(s.dbar, {1, -1, 4, -4})) {
        const int S = sh.r_counts[3] + sh.r_counts[5] + sh.t_counts[3] + sh.t_counts[5];
        return row("Z1.1", S % 4 == 1, S % 4 == 0, true);
    }
    const int S1 = s.r_p(3) + s.r_p(5) + s.t_p(3) + s.t_p(5);
    // Printed minus-side condition, transcribed as is.
    const int S2 = s.r_p(3) + s.r_p(5) + s.t_p(3) + s.t_p(7);
    if (one_mod_4 && in_set(s.dbar, {5, -5, 3, -3, 125, -125, 27, -27}))
        return row("Z1.2", S1 % 2 == 1, S2 % 2 == 0, true);
    if (quarter_three && in_set(s.dbar, {20, -20, 12, -12, 500, -500, 108, -108}))
        return row("Z1.3", S1 % 2 == 1, S2 % 2 == 0, true);
    return std::nullopt;
}

// Rows keyed to the normalized beta; sides are a_p(2 beta), a_p(-2 beta).
std::optional<ZeroTableMatch> table_two(std::int64_t D, std::int64_t beta) {
    const DShape sh = shape_of(D);
    if (sh.sigma == 0 || sh.sigma == 2) {
        const std::int64_t b = beta < 0 ? -beta : beta;
        if (b % static_cast<std::int64_t>(rad_odd(D)) == 0) return row("Z2.1", true, true, false);
        return std::nullopt;
    }
    if (floor_mod(beta, 8) != 2) return std::nullopt;
    const DSplit s = split_d(D, beta);
    const bool d1 = s.d % 4 == 1;
    if (in_set(s.dbar, {2, -2})) {
        const bool q1 = floor_mod(D / 2, 4) == 1;
        return row("Z2.2", !q1, q1, false);
    }
    if (in_set(s.dbar, {8, -8})) {
        const bool q1 = floor_mod(D / 8, 4) == 1;
        return row("Z2.3", q1, !q1, false);
    }
    if (in_set(s.dbar, {10, 250, -6, -54, -40, -1000, 24, 216})) return row("Z2.4", d1, !d1, false);
    if (in_set(s.dbar, {6, 54, -10, -250, -24, -216, 40, 1000})) return row("Z2.5", !d1, d1, false);
    return std::nullopt;
}

} // namespace

std::string to_string(const DensityPair& d) {
    return "(" + d.d_plus.get_str() + ", " + d.d_minus.get_str() + ")";
}

void ClassCounts::add(FourClass c) {
    switch (c) {
    case FourClass::PlusAlpha: ++x_alpha; break;
    case FourClass::MinusAlpha: ++x_minus_alpha; break;
    case FourClass::PlusBeta: ++x_beta; break;
    case FourClass::MinusBeta: ++x_minus_beta; break;
    }
}

FormulaResult density_formula_traced(std::int64_t D, std::int64_t r) {
    CMLT_REQUIRE(D != 0, "density_formula: D must be nonzero");
    CMLT_REQUIRE(r != 0, "density_formula: r must be nonzero");
    FormulaResult out;
    out.D_reduced = reduce_quartic_twist(D);
    if (r % 2 != 0) {
        out.swapped = floor_mod(r, 4) != 1;
        out.r_normalized = out.swapped ? -r : r;
        std::tie(out.density, out.branch) = odd_branch(out.D_reduced, out.r_normalized);
    } else {
        out.swapped = r % 4 == 0 ? r < 0 : floor_mod(r, 8) != 2;
        out.r_normalized = out.swapped ? -r : r;
        std::tie(out.density, out.branch) = even_branch(out.D_reduced, out.r_normalized);
    }
    if (out.swapped) std::swap(out.density.d_plus, out.density.d_minus);
    return out;
}

DensityPair density_formula(std::int64_t D, std::int64_t r) {
    return density_formula_traced(D, r).density;
}

OracleResult density_oracle(std::int64_t D, std::int64_t r, std::uint64_t x_max) {
    return run_oracle(D, r, x_max, [](const auto& a) { return kernels::omp::first_primes(a); });
}

OracleResult density_oracle_serial(std::int64_t D, std::int64_t r, std::uint64_t x_max) {
    return run_oracle(D, r, x_max, [](const auto& a) { return kernels::serial::first_primes(a); });
}

QuarticValue quartic_value_of(FourClass c) { return class_value(c); }

SigmaTriple sigma_sums(std::int64_t D, std::int64_t r, std::uint64_t x_max) {
    CMLT_REQUIRE(D % 2 != 0, "sigma_sums: D must be odd");
    const OracleResult o = density_oracle(D, r, x_max);
    SigmaTriple out;
    for (std::size_t i = 0; i < o.representatives.size(); ++i) {
        const FourClass c = o.classes[i];
        SigmaPart& part = o.progressions.ks[i] % 2 ? out.odd : out.even;
        for (SigmaPart* s : {&part, &out.total}) {
            ++s->sigma;
            s->sigma2 += (c == FourClass::PlusAlpha || c == FourClass::MinusAlpha) ? 1 : -1;
            s->sigma4 = s->sigma4 + to_gaussian(class_value(c));
        }
    }
    return out;
}

std::optional<ZeroTableMatch> match_zero_table(std::int64_t D, std::int64_t r) {
    CMLT_REQUIRE(D != 0 && r != 0, "match_zero_table: D and r must be nonzero");
    const FormulaResult f = density_formula_traced(D, r);
    auto m = r % 2 != 0 ? table_one(f.D_reduced, f.r_normalized)
                        : table_two(f.D_reduced, f.r_normalized);
    if (m && f.swapped) std::swap(m->plus_zero, m->minus_zero);
    return m;
}

ZeroVerdict is_zero_pair(std::int64_t D, std::int64_t r) {
    const DensityPair d = density_formula(D, r);
    ZeroVerdict v;
    v.plus_zero = d.d_plus == 0;
    v.minus_zero = d.d_minus == 0;
    v.table_row = match_zero_table(D, r);
    return v;
}

double lt_constant(std::int64_t D, std::int64_t r, std::uint64_t prime_bound) {
    const DensityPair d = density_formula(D, r);
    if (d.d_plus == 0) return 0.0;
    return hl_delta(HLPoly{1, 0, r * r}, prime_bound) * d.d_plus.get_d();
}

} // namespace cmlt
