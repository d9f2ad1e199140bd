#include "cmlt/lab.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "cmlt/errors.hpp"
#include "cmlt/kernels.hpp"

namespace cmlt {

namespace {

using ordered_json = nlohmann::ordered_json;

double six_digits(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return std::strtod(buf, nullptr);
}

std::string six_digits_str(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

ordered_json to_ordered(const SweepReport& r) {
    ordered_json j;
    j["D"] = r.D;
    j["r"] = r.r;
    j["N"] = r.N;
    j["n_primes"] = r.n_primes;
    j["n_plus"] = r.n_plus;
    j["n_minus"] = r.n_minus;
    j["n_other"] = r.n_other;
    j["empirical_plus"] = six_digits(r.empirical_plus);
    j["empirical_minus"] = six_digits(r.empirical_minus);
    j["predicted"] = {{"d_plus", r.predicted.d_plus.get_str()},
                      {"d_minus", r.predicted.d_minus.get_str()}};
    j["pi_lt"] = r.pi_lt;
    j["lt_predicted"] = six_digits(r.lt_predicted);
    j["elapsed_seconds"] = six_digits(r.elapsed_seconds);
    return j;
}

} // namespace

SweepReport sweep(std::int64_t D, std::int64_t r, std::uint64_t N) {
    const auto t0 = std::chrono::steady_clock::now();
    const kernels::SweepCounts c = kernels::omp::sweep({D, r, N});
    SweepReport rep;
    rep.D = D;
    rep.r = r;
    rep.N = N;
    rep.n_primes = c.n_primes;
    rep.n_plus = c.n_plus;
    rep.n_minus = c.n_minus;
    rep.n_other = c.n_other;
    if (c.n_primes > 0) {
        rep.empirical_plus = static_cast<double>(c.n_plus) / static_cast<double>(c.n_primes);
        rep.empirical_minus = static_cast<double>(c.n_minus) / static_cast<double>(c.n_primes);
    }
    rep.predicted = density_formula(D, r);
    rep.pi_lt = c.n_plus;
    rep.lt_predicted = lt_predict(D, r, N);
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

double lt_predict(std::int64_t D, std::int64_t r, std::uint64_t N, std::uint64_t prime_bound) {
    CMLT_REQUIRE(N >= 3, "lt_predict: N must be at least 3");
    const double c = lt_constant(D, r, prime_bound);
    const double n = static_cast<double>(N);
    return c * std::sqrt(n) / std::log(n);
}

ReportFormat parse_report_format(std::string_view s) {
    if (s == "json") return ReportFormat::Json;
    if (s == "csv") return ReportFormat::Csv;
    throw PreconditionError("unknown report format: " + std::string(s));
}

const std::string& csv_header() {
    static const std::string h =
        "D,r,N,n_primes,n_plus,n_minus,n_other,empirical_plus,empirical_minus,"
        "predicted_plus,predicted_minus,pi_lt,lt_predicted,elapsed_seconds";
    return h;
}

std::string csv_row(const SweepReport& r) {
    return std::to_string(r.D) + ',' + std::to_string(r.r) + ',' + std::to_string(r.N) + ',' +
           std::to_string(r.n_primes) + ',' + std::to_string(r.n_plus) + ',' +
           std::to_string(r.n_minus) + ',' + std::to_string(r.n_other) + ',' +
           six_digits_str(r.empirical_plus) + ',' + six_digits_str(r.empirical_minus) + ',' +
           r.predicted.d_plus.get_str() + ',' + r.predicted.d_minus.get_str() + ',' +
           std::to_string(r.pi_lt) + ',' + six_digits_str(r.lt_predicted) + ',' +
           six_digits_str(r.elapsed_seconds);
}

std::string to_json(const SweepReport& r) { return to_ordered(r).dump(); }

SweepReport parse_report_json(std::string_view text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw PreconditionError(std::string("report json: ") + e.what());
    }
    try {
        SweepReport r;
        r.D = j.at("D").get<std::int64_t>();
        r.r = j.at("r").get<std::int64_t>();
        r.N = j.at("N").get<std::uint64_t>();
        r.n_primes = j.at("n_primes").get<std::uint64_t>();
        r.n_plus = j.at("n_plus").get<std::uint64_t>();
        r.n_minus = j.at("n_minus").get<std::uint64_t>();
        r.n_other = j.at("n_other").get<std::uint64_t>();
        r.empirical_plus = j.at("empirical_plus").get<double>();
        r.empirical_minus = j.at("empirical_minus").get<double>();
        r.predicted.d_plus = mpq_class(j.at("predicted").at("d_plus").get<std::string>());
        r.predicted.d_minus = mpq_class(j.at("predicted").at("d_minus").get<std::string>());
        r.pi_lt = j.at("pi_lt").get<std::uint64_t>();
        r.lt_predicted = j.at("lt_predicted").get<double>();
        r.elapsed_seconds = j.at("elapsed_seconds").get<double>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw PreconditionError(std::string("report json: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw PreconditionError(std::string("report json: bad rational: ") + e.what());
    }
}

std::string report_string(const SweepReport& r, ReportFormat format) {
    if (format == ReportFormat::Json) return to_json(r) + '\n';
    return csv_header() + '\n' + csv_row(r) + '\n';
}

void report_emit(const SweepReport& r, ReportFormat format, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw PreconditionError("cannot open " + path.string() + " for writing");
    out << report_string(r, format);
    out.flush();
    if (!out) throw PreconditionError("write failed: " + path.string());
}

} // namespace cmlt
