#pragma once

#include <chrono>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "bggl/estimate.hpp"
#include "bggl/params.hpp"

namespace bggl {

/// Aligned index-level and volatility-index series. Dates strictly increase;
/// close and vol are positive.
struct VolSeries {
    std::vector<std::chrono::year_month_day> dates;
    std::vector<double> close;
    std::vector<double> vol;

    [[nodiscard]] std::size_t size() const { return dates.size(); }
    /// Throws DataError when the invariants do not hold.
    void validate() const;
};

/// Parses "YYYY-MM-DD". Throws DataError on malformed or invalid dates.
std::chrono::year_month_day parse_iso_date(std::string_view text);
std::string format_iso_date(std::chrono::year_month_day date);

/// Reads CSV with header `date,close,vol`. Throws DataError with the line
/// number on malformed input.
VolSeries read_vol_csv(std::istream& in);
VolSeries read_vol_csv_file(const std::string& path);

/// Daily to weekly: groups by ISO week (Monday to Sunday). Close is the last
/// close of the week, vol the average of the week's values, date the last
/// trading day. Weeks without data simply do not appear.
VolSeries aggregate_weekly(const VolSeries& daily);

/// Y(t) = ln S(t) - ln S(t-1), length n - 1.
std::vector<double> compute_returns(const VolSeries& series);

/// X(t) = exp(ln V(t) - a - b ln V(t-1)), length n - 1.
std::vector<double> compute_surprise_vol(const VolSeries& series, double a, double b);

/// CDF and quantile function of the marginal of Y, by numerical integration
/// of its density. The normalization is cached at construction.
class GalDistribution {
public:
    explicit GalDistribution(const BgglParams& theta, int segments = 256);

    [[nodiscard]] double cdf(double y) const;
    /// Inverse CDF to 1e-8 in probability, 0 < p < 1.
    [[nodiscard]] double quantile(double p) const;
    /// Integral of the density over the truncated support before normalization.
    [[nodiscard]] double raw_mass() const { return total_; }

private:
    // Contribution of [node s_lo, s_hi] on one side, in the s variable.
    [[nodiscard]] double piece(int side, double s_lo, double s_hi) const;
    [[nodiscard]] double map(int side, double s) const;
    [[nodiscard]] double partial(int side, int seg, double s) const;

    BgglParams theta_;
    int segments_;
    int power_;
    double reach_[2];  // reach below / above delta
    std::vector<double> cum_;  // cumulative mass at the 2*segments+1 breakpoints
    double total_ = 0.0;
};

enum class QqLaw { gamma, gal, normal };

struct QqPoint {
    double theoretical = 0.0;
    double empirical = 0.0;
};

/// Sorted values paired with law quantiles at (i - 0.5) / n. For QqLaw::gamma
/// only theta.alpha and theta.beta are used; theta is ignored for normal.
std::vector<QqPoint> qq_data(std::span<const double> values, QqLaw law, const BgglParams& theta = {});

struct PipelineResult {
    Ar1Fit ar1;
    PairedSample sample;   ///< (X(t), Y(t))
    FitResult fit;
    std::vector<double> z;  ///< (Y - delta_hat - mu_hat X) / (sigma_hat sqrt(X))
    std::vector<QqPoint> qq_x;  ///< X vs Gamma(alpha_hat, beta_hat)
    std::vector<QqPoint> qq_y;  ///< Y vs the fitted marginal; empty when upsilon_hat = 0
    std::vector<QqPoint> qq_z;  ///< Z vs N(0, 1); empty when upsilon_hat = 0
    bool upsilon_zero = false;
};

/// AR(1) on ln V, surprise volatility, returns, BGGL fit, residuals and QQ
/// data. Requires at least 10 observations.
PipelineResult run_pipeline(const VolSeries& series);

std::string to_json(const PipelineResult& result);
std::string qq_to_csv(std::span<const QqPoint> points);

}  // namespace bggl
