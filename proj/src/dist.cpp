#include "bggl/dist.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "bggl/error.hpp"
#include "bggl/special.hpp"

namespace bggl {

namespace {

constexpr double kLogTwoPi = 1.8378770664093454836;

void require_positive_x(double x, const char* who) {
    if (!(x > 0.0) || std::isinf(x)) {
        throw DomainError(std::string(who) + ": x must be finite and > 0");
    }
}

}  // namespace

void BgglParams::validate() const {
    if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(delta) ||
        !std::isfinite(mu) || !std::isfinite(sigma)) {
        throw DomainError("BgglParams: all parameters must be finite");
    }
    if (!(alpha > 0.0)) throw DomainError("BgglParams: alpha must be > 0");
    if (!(beta > 0.0)) throw DomainError("BgglParams: beta must be > 0");
    if (!(sigma > 0.0)) throw DomainError("BgglParams: sigma must be > 0");
}

double joint_log_pdf(const BgglParams& theta, double x, double y) {
    theta.validate();
    require_positive_x(x, "joint_log_pdf");
    const double resid = y - theta.delta - theta.mu * x;
    return -0.5 * kLogTwoPi - std::log(theta.sigma) + theta.alpha * std::log(theta.beta) -
           special::log_gamma(theta.alpha) + (theta.alpha - 1.5) * std::log(x) - theta.beta * x -
           resid * resid / (2.0 * theta.upsilon() * x);
}

double gal_marginal_log_pdf(const BgglParams& theta, double y) {
    theta.validate();
    if (!std::isfinite(y)) throw DomainError("gal_marginal_pdf: y must be finite");
    const double alpha = theta.alpha;
    const double dy = y - theta.delta;

    if (dy == 0.0) {
        if (alpha <= 0.5) return std::numeric_limits<double>::infinity();
        // Limit of the Bessel form: E[(2 pi sigma^2 X)^{-1/2} exp(-mu^2 X / (2 sigma^2))].
        const double rate = theta.beta + theta.mu * theta.mu / (2.0 * theta.upsilon());
        return -0.5 * kLogTwoPi - std::log(theta.sigma) + alpha * std::log(theta.beta) +
               special::log_gamma(alpha - 0.5) - special::log_gamma(alpha) -
               (alpha - 0.5) * std::log(rate);
    }

    // Reparameterization sigma~, mu~, kappa; kappa is kept internal.
    const double s_t = theta.sigma / std::sqrt(theta.beta);
    const double m_t = theta.mu / theta.beta;
    const double root = std::sqrt(2.0 * s_t * s_t + m_t * m_t);
    // Two algebraically equal forms of kappa; pick the one without cancellation.
    const double kappa = m_t >= 0.0 ? std::numbers::sqrt2 * s_t / (m_t + root)
                                    : (root - m_t) / (std::numbers::sqrt2 * s_t);
    const double k_minus = 1.0 / kappa - kappa;
    const double k_plus = 1.0 / kappa + kappa;
    const double c = std::numbers::sqrt2 / (2.0 * s_t);
    const double order = alpha - 0.5;
    const double ady = std::abs(dy);

    return 0.5 * std::log(2.0) + c * k_minus * dy - 0.5 * std::log(std::numbers::pi) -
           (alpha + 0.5) * std::log(s_t) - special::log_gamma(alpha) +
           order * (std::log(std::numbers::sqrt2 * ady) - std::log(k_plus)) +
           special::log_bessel_k(order, c * k_plus * ady);
}

double gal_marginal_pdf(const BgglParams& theta, double y) {
    return std::exp(gal_marginal_log_pdf(theta, y));
}

GigParams gig_conditional(const BgglParams& theta, double y) {
    theta.validate();
    const double v = theta.upsilon();
    const double dy = y - theta.delta;
    return {2.0 * theta.beta + theta.mu * theta.mu / v, dy * dy / v, theta.alpha - 0.5};
}

double gig_log_pdf(const GigParams& gig, double x) {
    if (!(gig.a >= 0.0) || !(gig.b >= 0.0)) throw DomainError("gig_log_pdf: a, b must be >= 0");
    if (!(x > 0.0)) return -std::numeric_limits<double>::infinity();
    if (gig.b == 0.0) {
        if (!(gig.p > 0.0) || !(gig.a > 0.0)) {
            throw DomainError("gig_log_pdf: b = 0 requires p > 0 and a > 0");
        }
        const double rate = 0.5 * gig.a;
        return gig.p * std::log(rate) - special::log_gamma(gig.p) + (gig.p - 1.0) * std::log(x) -
               rate * x;
    }
    if (gig.a == 0.0) {
        if (!(gig.p < 0.0)) throw DomainError("gig_log_pdf: a = 0 requires p < 0");
        // Inverse gamma with shape -p and scale b/2.
        const double shape = -gig.p;
        const double scale = 0.5 * gig.b;
        return shape * std::log(scale) - special::log_gamma(shape) - (shape + 1.0) * std::log(x) -
               scale / x;
    }
    return 0.5 * gig.p * std::log(gig.a / gig.b) - std::numbers::ln2 -
           special::log_bessel_k(gig.p, std::sqrt(gig.a * gig.b)) + (gig.p - 1.0) * std::log(x) -
           0.5 * (gig.a * x + gig.b / x);
}

double mgf(const BgglParams& theta, double s, double t) {
    theta.validate();
    const double u = s + theta.mu * t + 0.5 * theta.upsilon() * t * t;
    if (!(u < theta.beta)) {
        throw DomainError("mgf: (s, t) outside the domain s + mu t + sigma^2 t^2 / 2 < beta");
    }
    return std::exp(theta.delta * t + theta.alpha * (std::log(theta.beta) - std::log(theta.beta - u)));
}

std::complex<double> char_fn(const BgglParams& theta, double s, double t) {
    theta.validate();
    using namespace std::complex_literals;
    const std::complex<double> base(theta.beta + 0.5 * theta.upsilon() * t * t, -(s + theta.mu * t));
    const std::complex<double> log_phi =
        1i * (theta.delta * t) + theta.alpha * (std::log(theta.beta) - std::log(base));
    return std::exp(log_phi);
}

MomentSummary moments(const BgglParams& theta) {
    theta.validate();
    const double a = theta.alpha;
    const double b = theta.beta;
    const double m = theta.mu;
    MomentSummary out;
    out.mean_x = a / b;
    out.mean_y = theta.delta + m * a / b;
    out.cov(0, 0) = a / (b * b);
    out.cov(0, 1) = out.cov(1, 0) = m * a / (b * b);
    out.cov(1, 1) = m * m * a / (b * b) + theta.upsilon() * a / b;
    out.rho = m / std::sqrt(m * m + theta.upsilon() * b);
    return out;
}

double shannon_entropy(const BgglParams& theta) {
    theta.validate();
    const double a = theta.alpha;
    return a - 1.5 * std::log(theta.beta) + special::log_gamma(a) + (1.5 - a) * special::digamma(a) +
           0.5 * std::log(2.0 * std::numbers::pi * std::numbers::e * theta.upsilon());
}

FisherMatrix fisher_information(const BgglParams& theta) {
    theta.validate();
    const double a = theta.alpha;
    if (!(a > 1.0)) {
        throw InfiniteInformationError(
            "fisher_information: the delta entry is infinite for alpha <= 1 (E[1/X] = +inf)");
    }
    const double b = theta.beta;
    const double v = theta.upsilon();
    FisherMatrix m = FisherMatrix::Zero();
    m(0, 0) = special::trigamma(a);
    m(0, 1) = m(1, 0) = -1.0 / b;
    m(1, 1) = a / (b * b);
    m(2, 2) = b / ((a - 1.0) * v);
    m(2, 3) = m(3, 2) = 1.0 / v;
    m(3, 3) = a / (b * v);
    m(4, 4) = 0.5 / (v * v);
    return m;
}

FisherMatrix fisher_information_sigma(const BgglParams& theta) {
    FisherMatrix jac = FisherMatrix::Identity();
    jac(4, 4) = 2.0 * theta.sigma;
    return jac.transpose() * fisher_information(theta) * jac;
}

StatVector sufficient_statistics(double x, double y) {
    require_positive_x(x, "sufficient_statistics");
    return {std::log(x), x, y * y / x, y / x, 1.0 / x, y};
}

StatVector natural_parameters(const BgglParams& theta) {
    theta.validate();
    const double v = theta.upsilon();
    return {theta.alpha,
            -theta.beta - theta.mu * theta.mu / (2.0 * v),
            -1.0 / (2.0 * v),
            theta.delta / v,
            -theta.delta * theta.delta / (2.0 * v),
            theta.mu / v};
}

double log_partition(const BgglParams& theta) {
    theta.validate();
    const double v = theta.upsilon();
    return -(theta.alpha * std::log(theta.beta) - special::log_gamma(theta.alpha)) +
           theta.mu * theta.delta / v + 0.5 * std::log(v);
}

double log_base_measure(double x) {
    require_positive_x(x, "log_base_measure");
    return -0.5 * kLogTwoPi - 1.5 * std::log(x);
}

double laplace_transform_inv_x(double alpha, double beta, double t) {
    if (!(alpha > 0.0) || !(beta > 0.0)) {
        throw DomainError("laplace_transform_inv_x: alpha, beta must be > 0");
    }
    if (!(t >= 0.0)) throw DomainError("laplace_transform_inv_x: t must be >= 0");
    if (t == 0.0) return 1.0;
    const double tb = t * beta;
    return std::exp(std::numbers::ln2 + 0.5 * alpha * std::log(tb) - special::log_gamma(alpha) +
                    special::log_bessel_k(alpha, 2.0 * std::sqrt(tb)));
}

}  // namespace bggl
