#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>

#include "cmlt/density.hpp"
#include "cmlt/errors.hpp"
#include "cmlt/frobenius.hpp"
#include "cmlt/gaussian.hpp"
#include "cmlt/hardy_littlewood.hpp"
#include "cmlt/lab.hpp"
#include "cmlt/residue_symbols.hpp"

namespace {

using namespace cmlt;

int cmd_ap(const std::string& D_text, std::uint64_t p, const std::string& method) {
    mpz_class D;
    if (D.set_str(D_text, 10) != 0) throw PreconditionError("--D is not an integer: " + D_text);
    const CurveD E(D);
    if (method == "naive") {
        std::cout << ap_naive(E, p) << '\n';
        return 0;
    }
    if (method == "fast") {
        std::cout << ap_fast(E, p) << '\n';
        return 0;
    }
    const std::int64_t fast = ap_fast(E, p), naive = ap_naive(E, p);
    std::cout << "fast  " << fast << "\nnaive " << naive << '\n';
    CMLT_ASSERT(fast == naive, "fast and naive traces disagree");
    return 0;
}

void print_counts(const ClassCounts& c) {
    std::cout << "classes  +alpha " << c.x_alpha << "  -alpha " << c.x_minus_alpha << "  +beta "
              << c.x_beta << "  -beta " << c.x_minus_beta << '\n';
}

int cmd_density(std::int64_t D, std::int64_t r, const std::string& mode, std::uint64_t xmax) {
    std::optional<FormulaResult> f;
    std::optional<OracleResult> o;
    if (mode != "oracle") {
        f = density_formula_traced(D, r);
        std::cout << "formula  d_plus " << f->density.d_plus << "  d_minus " << f->density.d_minus
                  << "  [" << f->branch << "]\n";
    }
    if (mode != "formula") {
        o = density_oracle(D, r, xmax);
        std::cout << "oracle   d_plus " << o->density.d_plus << "  d_minus " << o->density.d_minus
                  << "  |H| " << o->progressions.ks.size() << '\n';
        print_counts(o->counts);
    }
    if (f && o) CMLT_ASSERT(f->density == o->density, "formula and oracle disagree");
    return 0;
}

int cmd_sweep(std::int64_t D, std::int64_t r, std::uint64_t N, const std::string& out,
              const std::string& format) {
    const ReportFormat fmt = parse_report_format(format);
    const SweepReport rep = sweep(D, r, N);
    if (out.empty()) std::cout << report_string(rep, fmt);
    else report_emit(rep, fmt, out);
    return 0;
}

int cmd_hl(std::int64_t a, std::int64_t b, std::int64_t c, std::uint64_t bound,
           std::optional<std::uint64_t> count_to) {
    const HLPoly f{a, b, c};
    CMLT_REQUIRE(hl_admissible(f), "polynomial is not admissible");
    char line[96];
    std::snprintf(line, sizeof line, "delta(B=%llu)  %.6f\ndelta(B=%llu)  %.6f\n",
                  static_cast<unsigned long long>(bound / 2), hl_delta(f, std::max<std::uint64_t>(3, bound / 2)),
                  static_cast<unsigned long long>(bound), hl_delta(f, bound));
    std::cout << line;
    if (count_to) std::cout << "P(" << *count_to << ")  " << hl_count(f, *count_to) << '\n';
    return 0;
}

bool fourth_power_free(std::int64_t D) { return reduce_quartic_twist(D) == D; }

int cmd_zero_scan(std::int64_t dmax, std::int64_t rmax) {
    CMLT_REQUIRE(dmax > 0 && rmax > 0, "--dmax and --rmax must be positive");
    std::uint64_t zeros = 0, matched = 0, unmatched = 0, unsound = 0;
    std::cout << "D\tr\tplus_zero\tminus_zero\ttable_row\tstatus\n";
    for (std::int64_t D = -dmax; D <= dmax; ++D) {
        if (D == 0 || !fourth_power_free(D)) continue;
        for (std::int64_t r = -rmax; r <= rmax; ++r) {
            if (r == 0) continue;
            const ZeroVerdict v = is_zero_pair(D, r);
            const bool any_zero = v.plus_zero || v.minus_zero;
            const bool claims = v.table_row && (v.table_row->plus_zero || v.table_row->minus_zero);
            if (!any_zero && !claims) continue;
            std::string status = "ok";
            if (!v.table_consistent()) {
                status = "table-claims-nonzero-side";
                ++unsound;
            } else if (!claims || (v.plus_zero && !v.table_row->plus_zero) ||
                       (v.minus_zero && !v.table_row->minus_zero)) {
                status = "not-in-table";
                ++unmatched;
            } else {
                ++matched;
            }
            zeros += any_zero;
            std::cout << D << '\t' << r << '\t' << v.plus_zero << '\t' << v.minus_zero << '\t'
                      << (v.table_row ? v.table_row->row_id + (v.table_row->flagged ? "*" : "") : "-")
                      << '\t' << status << '\n';
        }
    }
    std::cout << "# zero pairs " << zeros << ", table-covered " << matched << ", not in table "
              << unmatched << ", table claims a nonzero side " << unsound << '\n';
    return 0;
}

int cmd_selftest() {
    int failures = 0;
    auto check = [&](bool ok, const std::string& what) {
        std::cout << (ok ? "ok    " : "FAIL  ") << what << '\n';
        failures += !ok;
    };
    check(ap_fast(CurveD(2), 13) == 4 && ap_naive(CurveD(2), 13) == 4, "a_13(E_2) = 4");
    check(ap_fast(CurveD(1), 13) == -6, "a_13(E_1) = -6");
    const TwoSquares t = two_squares(13);
    check(t.alpha == -3 && t.beta == 2, "13 = (-3)^2 + 2^2");
    check(two_quartic_class(17) == quartic_class_of(2, 17), "class of 2 at 17");
    const BetaSignCalibration cal = calibrate_beta_sign();
    check(cal.consistent && cal.sign == kBetaSign, "beta-sign calibration");
    check(density_formula(-21, 1) == DensityPair{mpq_class(11, 42), mpq_class(11, 42)},
          "density(-21, 1) = (11/42, 11/42)");
    check(density_oracle(-21, 1).density == density_formula(-21, 1), "oracle(-21, 1) = formula");
    check(density_formula(5, 3) == DensityPair{0, mpq_class(1, 3)}, "density(5, 3) = (0, 1/3)");
    const SweepReport rep = sweep(1, 1, 100);
    check(rep.n_primes == 3 && rep.n_plus == 3, "sweep(1, 1, 100)");
    check(hl_count({1, 0, 1}, 100) == 4, "P(100) for x^2 + 1");
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Traces of Frobenius, Lang-Trotter densities and Hardy-Littlewood constants "
                 "for y^2 = x^3 + Dx"};
    app.require_subcommand(1);

    std::string ap_D, ap_method = "both";
    std::uint64_t ap_p = 0;
    auto* ap = app.add_subcommand("ap", "trace of Frobenius a_p(E_D)");
    ap->add_option("--D", ap_D, "curve coefficient")->required();
    ap->add_option("--p", ap_p, "odd prime of good reduction")->required();
    ap->add_option("--method", ap_method)->check(CLI::IsMember({"naive", "fast", "both"}));

    std::int64_t den_D = 0, den_r = 0;
    std::string den_mode = "both";
    std::uint64_t den_xmax = kDefaultOracleXMax;
    auto* den = app.add_subcommand("density", "densities of a_p = +-2r among primes r^2 + x^2");
    den->add_option("--D", den_D)->required();
    den->add_option("--r", den_r)->required();
    den->add_option("--mode", den_mode)->check(CLI::IsMember({"formula", "oracle", "both"}));
    den->add_option("--xmax", den_xmax, "search bound per residue class");

    std::int64_t sw_D = 0, sw_r = 0;
    std::uint64_t sw_N = 0;
    std::string sw_out, sw_format = "json";
    auto* sw = app.add_subcommand("sweep", "classify a_p over primes r^2 + x^2 <= N");
    sw->add_option("--D", sw_D)->required();
    sw->add_option("--r", sw_r)->required();
    sw->add_option("--N", sw_N)->required();
    sw->add_option("--out", sw_out, "output file (default stdout)");
    sw->add_option("--format", sw_format)->check(CLI::IsMember({"json", "csv"}));

    std::int64_t hl_a = 1, hl_b = 0, hl_c = 1;
    std::uint64_t hl_bound = kDefaultPrimeBound;
    std::optional<std::uint64_t> hl_to;
    auto* hl = app.add_subcommand("hl", "Hardy-Littlewood constant of a x^2 + b x + c");
    hl->add_option("--a", hl_a)->required();
    hl->add_option("--b", hl_b)->required();
    hl->add_option("--c", hl_c)->required();
    hl->add_option("--bound", hl_bound, "Euler product truncation");
    hl->add_option("--count-to", hl_to, "also count primes <= n of this form");

    std::int64_t zs_dmax = 0, zs_rmax = 0;
    auto* zs = app.add_subcommand("zero-scan", "list (D, r) with a vanishing density");
    zs->add_option("--dmax", zs_dmax)->required();
    zs->add_option("--rmax", zs_rmax)->required();

    auto* st = app.add_subcommand("selftest", "quick consistency checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*ap) return cmd_ap(ap_D, ap_p, ap_method);
        if (*den) return cmd_density(den_D, den_r, den_mode, den_xmax);
        if (*sw) return cmd_sweep(sw_D, sw_r, sw_N, sw_out, sw_format);
        if (*hl) return cmd_hl(hl_a, hl_b, hl_c, hl_bound, hl_to);
        if (*zs) return cmd_zero_scan(zs_dmax, zs_rmax);
        if (*st) return cmd_selftest();
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
