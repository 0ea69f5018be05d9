#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "bggl/params.hpp"

namespace bggl {

struct StudyConfig {
    BgglParams theta_true;
    std::size_t n = 50;
    std::size_t replications = 5000;
    std::uint64_t seed = 0;
    unsigned threads = 0;  ///< 0: hardware concurrency
};

/// Summary of one parameter over the replications. variance uses the 1/R
/// divisor, so rmse^2 = variance + bias^2 exactly (up to rounding).
struct StudyRow {
    std::string name;
    double actual = 0.0;
    double mean = 0.0;
    double variance = 0.0;
    double rmse = 0.0;
    double mae = 0.0;       ///< mean absolute error
    double mean_se = 0.0;   ///< Monte Carlo standard error of mean
};

struct StudyReport {
    StudyConfig config;
    std::array<StudyRow, 3> rows;  ///< delta, sigma, mu
    std::size_t degenerate = 0;    ///< replications excluded as degenerate
    double wall_seconds = 0.0;
};

/// Replication study of (delta_hat, sigma_hat = sqrt(upsilon_hat), mu_hat).
/// Replication r draws from RngStream(seed, r), so the report does not depend
/// on the thread count. Requires n >= 3 and replications >= 1.
StudyReport run_study(const StudyConfig& config);

/// The eight (alpha, n) blocks of the reference simulation table, in the order
/// (1, 50), (1, 500), (0.25, 50), (0.25, 500), (2, 50), (2, 500), (5, 50), (5, 500).
/// beta = 1; (delta, sigma, mu) = (1, 2, 3) for alpha = 1 and (0, 1, 0) otherwise.
std::vector<StudyConfig> table1_configs(std::uint64_t seed, std::size_t replications = 5000);

/// Runs table1_configs; block k uses seed + k.
std::vector<StudyReport> run_table1_suite(std::uint64_t seed, std::size_t replications = 5000,
                                          unsigned threads = 0);

/// JSON serialization. wall_seconds is omitted when include_timing is false so
/// that equal seeds give byte-identical output.
std::string to_json(const std::vector<StudyReport>& reports, bool include_timing = false);

/// Aligned text table laid out like the reference table.
std::string to_text(const std::vector<StudyReport>& reports);

}  // namespace bggl
