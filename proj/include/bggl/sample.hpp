#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bggl/params.hpp"
#include "bggl/rng.hpp"

namespace bggl {

/// Path of the two-dimensional Levy process (G(t), W(G(t))).
struct LevyPath {
    std::vector<double> times;
    std::vector<double> g;  ///< gamma subordinator, nondecreasing, g[0] = 0
    std::vector<double> w;  ///< drifted Brownian motion evaluated at g, w[0] = 0
};

/// Gamma(alpha, rate beta) variate, mean alpha / beta. Marsaglia-Tsang
/// squeeze for alpha >= 1, U^{1/alpha} boost below. For extremely small
/// shapes the draw may underflow to 0.
double sample_gamma(double alpha, double beta, RngStream& rng);

/// n IID pairs X ~ Gamma(alpha, beta), Y = delta + mu X + sigma sqrt(X) Z.
PairedSample sample_bggl(const BgglParams& theta, std::size_t n, RngStream& rng);

/// Fills x with IID Gamma(alpha, beta) draws and y with the matching Y values.
void sample_bggl_into(const BgglParams& theta, std::span<double> x, std::span<double> y, RngStream& rng);

/// Positive stable variate xi with E exp(-u xi) = exp(-Gamma(1 - alpha) u^alpha),
/// 0 < alpha < 1 (Kanter's representation, then deterministic scaling).
double sample_stable_subordinator(double alpha, RngStream& rng);

/// Path on a nondecreasing time grid starting at 0; increments over [s, t]
/// follow BGGL(alpha (t - s), beta, 0, mu, sigma). theta.delta is ignored.
LevyPath sample_levy_path(const BgglParams& theta, std::span<const double> times, RngStream& rng);

}  // namespace bggl
