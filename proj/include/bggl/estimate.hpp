#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bggl/asympt.hpp"
#include "bggl/params.hpp"

namespace bggl {

struct GammaFit {
    double alpha = 0.0;
    double beta = 0.0;
};

struct LocationScaleFit {
    double delta = 0.0;
    double mu = 0.0;
    double upsilon = 0.0;
    /// False when all x are equal: any (delta, (ybar - delta) / xbar) maximizes
    /// the likelihood; delta is then reported as 0.
    bool delta_estimable = true;
};

/// Degeneracy markers attached to a fit.
struct DegenerateFlags {
    bool all_x_equal = false;
    bool small_n = false;    ///< n <= 2: upsilon_hat is identically 0
    bool collinear = false;  ///< n >= 3 and all points on one line y = delta + mu x
    [[nodiscard]] bool any() const { return all_x_equal || small_n || collinear; }
};

struct FitOptions {
    double boundary_tol = 0.02;  ///< |alpha_hat - 1| <= tol is the boundary regime
};

struct FitResult {
    /// theta_hat.sigma = sqrt(upsilon_hat); may be 0 for degenerate samples.
    BgglParams theta_hat;
    double upsilon_hat = 0.0;
    double s2 = 0.0;  ///< n / (n - 2) upsilon_hat for n >= 3, upsilon_hat otherwise
    std::size_t n = 0;
    Regime regime = Regime::regular;
    Vector5 d_n{};
    LimitLawSpec asympt;
    DegenerateFlags flags;
};

/// Gamma MLE: alpha_hat = w^{-1}(ln xbar - mean ln x), beta_hat = alpha_hat / xbar.
/// Throws DegenerateSampleError for n < 2 or all x equal.
GammaFit fit_gamma(std::span<const double> x);

/// Closed-form MLE of (delta, mu, upsilon), i.e. the weighted least squares fit
/// minimizing sum (y_i - delta - mu x_i)^2 / x_i. Throws DegenerateSampleError
/// for n = 1.
LocationScaleFit fit_location_scale(const PairedSample& sample);

/// Full five-parameter MLE with regime, scaling and limit-law description.
FitResult fit_bggl(const PairedSample& sample, const FitOptions& options = {});

/// sum (y_i - delta - mu x_i)^2 / x_i.
double weighted_sse(const PairedSample& sample, double delta, double mu);

/// Profile w(delta) = (ybar - delta)^2 / xbar - mean((y_i - delta)^2 / x_i) <= 0.
double delta_profile(const PairedSample& sample, double delta);

/// Exact covariance of (delta_hat, mu_hat) given x:
/// sigma^2 [[sum 1/x, n], [n, sum x]]^{-1}. Throws DegenerateSampleError when
/// all x are equal.
Eigen::Matrix2d conditional_sampling_law(std::span<const double> x, const BgglParams& theta);

struct Ar1Fit {
    double a = 0.0;
    double b = 0.0;
    std::vector<double> residuals;  ///< ln v_t - a - b ln v_{t-1}, t = 1..n-1
};

/// OLS of ln v_t on (1, ln v_{t-1}). Throws DegenerateSampleError for a
/// constant regressor.
Ar1Fit fit_ar1_log(std::span<const double> v);

}  // namespace bggl
