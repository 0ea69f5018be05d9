#include "bggl/asympt.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "bggl/error.hpp"
#include "bggl/estimate.hpp"
#include "bggl/sample.hpp"
#include "bggl/special.hpp"
#include "parallel.hpp"

namespace bggl {

std::string_view to_string(Regime regime) {
    switch (regime) {
        case Regime::regular: return "regular";
        case Regime::boundary: return "boundary";
        case Regime::heavy: return "heavy";
    }
    return "unknown";
}

Regime classify_regime(double alpha, double boundary_tol) {
    if (!(alpha > 0.0)) throw DomainError("classify_regime: alpha must be > 0");
    if (std::abs(alpha - 1.0) <= boundary_tol) return Regime::boundary;
    return alpha > 1.0 ? Regime::regular : Regime::heavy;
}

Eigen::Matrix2d sigma_alpha_beta(double alpha, double beta) {
    if (!(alpha > 0.0) || !(beta > 0.0)) throw DomainError("sigma_alpha_beta: alpha, beta must be > 0");
    const double tg = special::trigamma(alpha);
    Eigen::Matrix2d m;
    m << alpha, beta, beta, beta * beta * tg;
    return m / (alpha * tg - 1.0);
}

Eigen::Matrix2d sigma_delta_mu(const BgglParams& theta) {
    theta.validate();
    if (!(theta.alpha > 1.0)) throw DomainError("sigma_delta_mu: requires alpha > 1");
    const double a = theta.alpha;
    const double b = theta.beta;
    Eigen::Matrix2d m;
    m << a * (a - 1.0), -b * (a - 1.0), -b * (a - 1.0), b * b;
    return theta.upsilon() / b * m;
}

Vector5 scaling_vector(Regime regime, double alpha, std::size_t n) {
    if (n < 2) throw DomainError("scaling_vector: n must be >= 2");
    const double nd = static_cast<double>(n);
    const double root = std::sqrt(nd);
    Vector5 d{root, root, root, root, root};
    switch (regime) {
        case Regime::regular: break;
        case Regime::boundary: d[2] = std::sqrt(nd * std::log(nd)); break;
        case Regime::heavy:
            if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("scaling_vector: heavy regime requires alpha in (0, 1)");
            d[2] = std::pow(nd, 1.0 / (2.0 * alpha));
            break;
    }
    return d;
}

LimitLawSpec make_limit_law(Regime regime, const BgglParams& theta) {
    theta.validate();
    LimitLawSpec spec;
    spec.regime = regime;
    const double upsilon = theta.upsilon();
    const double beta = theta.beta;
    spec.upsilon_variance = 2.0 * upsilon * upsilon;
    switch (regime) {
        case Regime::regular:
            if (!(theta.alpha > 1.0)) throw DomainError("make_limit_law: regular regime requires alpha > 1");
            spec.alpha = theta.alpha;
            spec.sigma_delta_mu = sigma_delta_mu(theta);
            spec.delta_kind = DeltaLawKind::gaussian;
            break;
        case Regime::boundary:
            spec.alpha = 1.0;
            spec.delta_kind = DeltaLawKind::gaussian;
            spec.sigma_delta_mu << upsilon / beta, 0.0, 0.0, upsilon * beta;
            break;
        case Regime::heavy: {
            const double a = theta.alpha;
            if (!(a > 0.0 && a < 1.0)) throw DomainError("make_limit_law: heavy regime requires alpha in (0, 1)");
            spec.alpha = a;
            spec.delta_kind = DeltaLawKind::stable_mixture;
            spec.delta_scale = theta.sigma / std::sqrt(beta) * std::exp(special::log_gamma(a + 1.0) / (2.0 * a));
            // E[1 / xi] = Gamma(1 + 1/a) / Gamma(1 - a)^{1/a}.
            const double inv_moment =
                std::exp(special::log_gamma(1.0 + 1.0 / a) - special::log_gamma(1.0 - a) / a);
            spec.sigma_delta_mu << spec.delta_scale * spec.delta_scale * inv_moment, 0.0, 0.0, upsilon * beta / a;
            break;
        }
    }
    spec.sigma_alpha_beta = sigma_alpha_beta(spec.alpha, beta);
    spec.mu_variance = spec.sigma_delta_mu(1, 1);
    return spec;
}

namespace {

// Draw from N(0, cov) for a 2x2 positive semidefinite cov.
std::pair<double, double> gaussian_pair(const Eigen::Matrix2d& cov, RngStream& rng) {
    const double z1 = rng.normal();
    const double z2 = rng.normal();
    const double l11 = std::sqrt(std::max(cov(0, 0), 0.0));
    const double l21 = l11 > 0.0 ? cov(1, 0) / l11 : 0.0;
    const double l22 = std::sqrt(std::max(cov(1, 1) - l21 * l21, 0.0));
    return {l11 * z1, l21 * z1 + l22 * z2};
}

}  // namespace

Vector5 sample_limit_vector(const LimitLawSpec& spec, RngStream& rng) {
    Vector5 w{};
    const auto [wa, wb] = gaussian_pair(spec.sigma_alpha_beta, rng);
    w[0] = wa;
    w[1] = wb;
    if (spec.delta_kind == DeltaLawKind::gaussian) {
        const auto [wd, wm] = gaussian_pair(spec.sigma_delta_mu, rng);
        w[2] = wd;
        w[3] = wm;
    } else {
        const double xi = sample_stable_subordinator(spec.alpha, rng);
        w[2] = spec.delta_scale * rng.normal() / std::sqrt(xi);
        w[3] = std::sqrt(spec.mu_variance) * rng.normal();
    }
    w[4] = std::sqrt(spec.upsilon_variance) * rng.normal();
    return w;
}

RateSlopeResult rate_slope(const RateSlopeConfig& config) {
    config.theta.validate();
    const std::set<std::size_t> distinct(config.n_grid.begin(), config.n_grid.end());
    if (distinct.size() < 3) throw DomainError("rate_slope: need at least three distinct sample sizes");
    if (*distinct.begin() < 2) throw DomainError("rate_slope: sample sizes must be >= 2");
    if (config.replications < 2) throw DomainError("rate_slope: need at least two replications");

    RateSlopeResult result;
    result.n = config.n_grid;
    result.rmse.resize(config.n_grid.size());
    const std::size_t reps = config.replications;
    for (std::size_t k = 0; k < config.n_grid.size(); ++k) {
        const std::size_t n = config.n_grid[k];
        std::vector<double> sq(reps);
        detail::parallel_for(reps, config.threads, [&](std::size_t r) {
            RngStream rng(config.seed, k * reps + r);
            const PairedSample s = sample_bggl(config.theta, n, rng);
            const double err = fit_location_scale(s).delta - config.theta.delta;
            sq[r] = err * err;
        });
        double total = 0.0;
        for (double v : sq) total += v;
        result.rmse[k] = std::sqrt(total / static_cast<double>(reps));
    }

    const std::size_t m = config.n_grid.size();
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
        mx += std::log(static_cast<double>(config.n_grid[k]));
        my += std::log(result.rmse[k]);
    }
    mx /= static_cast<double>(m);
    my /= static_cast<double>(m);
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
        const double dx = std::log(static_cast<double>(config.n_grid[k])) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(result.rmse[k]) - my);
    }
    result.slope = sxy / sxx;
    result.intercept = my - result.slope * mx;
    return result;
}

}  // namespace bggl
