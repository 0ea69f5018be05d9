#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "bggl/params.hpp"
#include "bggl/rng.hpp"

namespace bggl {

/// Convergence regime of the location estimator, driven by the gamma shape.
enum class Regime {
    regular,   ///< alpha > 1: sqrt(n) everywhere, Gaussian limit N(0, I^{-1})
    boundary,  ///< alpha = 1: delta slot scaled by sqrt(n ln n)
    heavy,     ///< alpha < 1: delta slot scaled by n^{1/(2 alpha)}, stable-mixture limit
};

std::string_view to_string(Regime regime);

/// Classifies an (estimated) shape; |alpha - 1| <= boundary_tol is boundary.
Regime classify_regime(double alpha, double boundary_tol = 0.02);

enum class DeltaLawKind {
    gaussian,        ///< W_delta ~ N(0, delta_variance)
    stable_mixture,  ///< W_delta = delta_scale * xi_alpha^{-1/2} * Z
};

/// Limiting law of D_n (theta_hat - theta) in coordinates
/// (alpha, beta, delta, mu, upsilon). The groups (alpha, beta), (delta, mu)
/// and upsilon are independent in every regime; delta and mu are additionally
/// independent outside the regular regime.
struct LimitLawSpec {
    Regime regime = Regime::regular;
    double alpha = 1.0;  ///< shape used for the law (1 in the boundary regime)
    Eigen::Matrix2d sigma_alpha_beta = Eigen::Matrix2d::Zero();
    /// Covariance of (W_delta, W_mu). For the stable-mixture delta law the
    /// (0,0) entry is the second moment only when it is finite; see delta_scale.
    Eigen::Matrix2d sigma_delta_mu = Eigen::Matrix2d::Zero();
    DeltaLawKind delta_kind = DeltaLawKind::gaussian;
    double delta_scale = 0.0;  ///< sigma beta^{-1/2} Gamma(alpha+1)^{1/(2 alpha)} (heavy regime)
    double mu_variance = 0.0;        ///< sigma^2 beta / min(alpha, 1)
    double upsilon_variance = 0.0;   ///< 2 sigma^4
};

using Vector5 = std::array<double, 5>;

/// [alpha psi'(alpha) - 1]^{-1} [[alpha, beta], [beta, beta^2 psi'(alpha)]],
/// the inverse of the gamma Fisher block.
Eigen::Matrix2d sigma_alpha_beta(double alpha, double beta);

/// (sigma^2 / beta) [[alpha(alpha-1), -beta(alpha-1)], [-beta(alpha-1), beta^2]];
/// requires alpha > 1.
Eigen::Matrix2d sigma_delta_mu(const BgglParams& theta);

/// Diagonal of D_n.
Vector5 scaling_vector(Regime regime, double alpha, std::size_t n);

/// Limit law for the given regime; theta.alpha must be consistent with it
/// (regular: > 1, heavy: in (0, 1)). The boundary law uses alpha = 1.
LimitLawSpec make_limit_law(Regime regime, const BgglParams& theta);

/// One draw of W.
Vector5 sample_limit_vector(const LimitLawSpec& spec, RngStream& rng);

struct RateSlopeConfig {
    BgglParams theta;
    std::vector<std::size_t> n_grid;
    std::size_t replications = 2000;
    std::uint64_t seed = 0;
    unsigned threads = 0;  ///< 0: hardware concurrency
};

struct RateSlopeResult {
    double slope = 0.0;
    double intercept = 0.0;
    std::vector<std::size_t> n;
    std::vector<double> rmse;  ///< RMSE of delta_hat at each n
};

/// OLS slope of ln RMSE(delta_hat_n) on ln n. Expected about -1/(2 alpha)
/// for alpha < 1 and -1/2 for alpha > 1.
RateSlopeResult rate_slope(const RateSlopeConfig& config);

}  // namespace bggl
