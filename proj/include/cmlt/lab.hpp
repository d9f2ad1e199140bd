#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "cmlt/density.hpp"
#include "cmlt/modarith.hpp"

namespace cmlt {

struct SweepReport {
    std::int64_t D = 0;
    std::int64_t r = 0;
    std::uint64_t N = 0;
    std::uint64_t n_primes = 0; // primes r^2 + x^2 <= N not dividing 2D
    std::uint64_t n_plus = 0;   // a_p = 2r
    std::uint64_t n_minus = 0;  // a_p = -2r
    std::uint64_t n_other = 0;
    double empirical_plus = 0.0;
    double empirical_minus = 0.0;
    DensityPair predicted;
    std::uint64_t pi_lt = 0; // equals n_plus
    double lt_predicted = 0.0;
    double elapsed_seconds = 0.0;
};

SweepReport sweep(std::int64_t D, std::int64_t r, std::uint64_t N);

// lt_constant(D, r) * sqrt(N) / ln N
double lt_predict(std::int64_t D, std::int64_t r, std::uint64_t N,
                  std::uint64_t prime_bound = kDefaultPrimeBound);

enum class ReportFormat { Json, Csv };

ReportFormat parse_report_format(std::string_view s);

// Column order of the csv rows; equals the json key order.
const std::string& csv_header();
std::string csv_row(const SweepReport& r);
std::string to_json(const SweepReport& r);
SweepReport parse_report_json(std::string_view text);

// Json: one object. Csv: header line followed by one row.
std::string report_string(const SweepReport& r, ReportFormat format);
void report_emit(const SweepReport& r, ReportFormat format, const std::filesystem::path& path);

} // namespace cmlt
