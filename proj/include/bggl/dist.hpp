#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

#include "bggl/params.hpp"

namespace bggl {

/// Generalized inverse Gaussian parameters with density
/// (a/b)^{p/2} / (2 K_p(sqrt(ab))) x^{p-1} exp(-(a x + b / x) / 2).
struct GigParams {
    double a = 0.0;
    double b = 0.0;
    double p = 0.0;
};

struct MomentSummary {
    double mean_x = 0.0;
    double mean_y = 0.0;
    Eigen::Matrix2d cov = Eigen::Matrix2d::Zero();
    double rho = 0.0;
};

using FisherMatrix = Eigen::Matrix<double, 5, 5>;
using StatVector = std::array<double, 6>;

/// ln f(x, y) of the joint density; x > 0.
double joint_log_pdf(const BgglParams& theta, double x, double y);

/// ln f_Y(y) of the generalized asymmetric Laplace marginal. Returns +inf at
/// y = delta when alpha <= 1/2 (the density is unbounded there).
double gal_marginal_log_pdf(const BgglParams& theta, double y);

/// exp(gal_marginal_log_pdf).
double gal_marginal_pdf(const BgglParams& theta, double y);

/// Law of X given Y = y.
GigParams gig_conditional(const BgglParams& theta, double y);

/// ln of the GIG density. b = 0 (with p > 0) degenerates to Gamma(p, a/2).
double gig_log_pdf(const GigParams& gig, double x);

/// Joint moment generating function E exp(sX + tY). Throws DomainError
/// outside {s + mu t + sigma^2 t^2 / 2 < beta}.
double mgf(const BgglParams& theta, double s, double t);

/// Joint characteristic function E exp(i(sX + tY)), principal branch.
std::complex<double> char_fn(const BgglParams& theta, double s, double t);

MomentSummary moments(const BgglParams& theta);

/// Shannon entropy -E ln f(X, Y).
double shannon_entropy(const BgglParams& theta);

/// Fisher information in the (alpha, beta, delta, mu, upsilon) parameterization.
/// Throws InfiniteInformationError for alpha <= 1 (E[1/X] is infinite).
FisherMatrix fisher_information(const BgglParams& theta);

/// Fisher information in the (alpha, beta, delta, mu, sigma) parameterization:
/// J^T I J with J = diag(1, 1, 1, 1, 2 sigma).
FisherMatrix fisher_information_sigma(const BgglParams& theta);

/// Sufficient statistics (ln x, x, y^2/x, y/x, 1/x, y).
StatVector sufficient_statistics(double x, double y);

/// Natural parameters paired with sufficient_statistics.
StatVector natural_parameters(const BgglParams& theta);

/// Log-partition A(theta) of the curved exponential-family form.
double log_partition(const BgglParams& theta);

/// ln h(x, y) = -ln(2 pi) / 2 - (3/2) ln x.
double log_base_measure(double x);

/// E exp(-t / X) for X ~ Gamma(alpha, beta), t >= 0.
double laplace_transform_inv_x(double alpha, double beta, double t);

}  // namespace bggl
