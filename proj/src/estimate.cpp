#include "bggl/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bggl/error.hpp"
#include "bggl/special.hpp"

namespace bggl {

namespace {

double mean_of(std::span<const double> v) {
    double s = 0.0;
    for (double e : v) s += e;
    return s / static_cast<double>(v.size());
}

bool all_equal(std::span<const double> v) {
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    return *lo == *hi;
}

}  // namespace

GammaFit fit_gamma(std::span<const double> x) {
    if (x.size() < 2) throw DegenerateSampleError("fit_gamma: need at least two observations");
    if (all_equal(x)) throw DegenerateSampleError("fit_gamma: all x equal, alpha_hat does not exist");
    const double xbar = mean_of(x);
    // ln xbar - mean ln x, computed on x / xbar to keep the terms near zero.
    double mean_log_ratio = 0.0;
    for (double xi : x) mean_log_ratio += std::log(xi / xbar);
    mean_log_ratio /= static_cast<double>(x.size());
    const double rhs = -mean_log_ratio;
    if (!(rhs > 0.0)) throw DegenerateSampleError("fit_gamma: x nearly constant, alpha_hat not resolvable");
    GammaFit fit;
    fit.alpha = special::solve_w_inverse(rhs);
    fit.beta = fit.alpha / xbar;
    return fit;
}

LocationScaleFit fit_location_scale(const PairedSample& sample) {
    const std::size_t n = sample.size();
    if (n < 2) throw DegenerateSampleError("fit_location_scale: n = 1, likelihood is unbounded");
    const auto x = sample.x();
    const auto y = sample.y();
    const double xbar = mean_of(x);
    const double ybar = mean_of(y);
    const double nd = static_cast<double>(n);

    LocationScaleFit fit;
    if (all_equal(x)) {
        fit.delta_estimable = false;
        fit.delta = 0.0;
        fit.mu = ybar / xbar;
        double ss = 0.0;
        for (double yi : y) ss += (yi - ybar) * (yi - ybar);
        fit.upsilon = ss / (nd * xbar);
        return fit;
    }

    // a = mean(1/x) - 1/xbar and b = mean(y/x) - ybar/xbar in centered form.
    double spread = 0.0;
    double cross = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        spread += (xbar - x[i]) / x[i];
        cross += (y[i] - ybar) / x[i];
    }
    spread /= nd;
    cross /= nd;
    fit.mu = -cross / spread;
    fit.delta = ybar - fit.mu * xbar;

    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = y[i] - fit.delta - fit.mu * x[i];
        ss += r * r / x[i];
    }
    fit.upsilon = ss / nd;
    return fit;
}

FitResult fit_bggl(const PairedSample& sample, const FitOptions& options) {
    const std::size_t n = sample.size();
    if (n < 2) throw DegenerateSampleError("fit_bggl: n = 1, likelihood is unbounded");
    if (all_equal(sample.x())) {
        throw DegenerateSampleError("fit_bggl: all x equal, gamma MLE and delta_hat do not exist");
    }
    const GammaFit gamma = fit_gamma(sample.x());
    const LocationScaleFit loc = fit_location_scale(sample);

    FitResult result;
    result.n = n;
    result.theta_hat = {gamma.alpha, gamma.beta, loc.delta, loc.mu, std::sqrt(loc.upsilon)};
    result.upsilon_hat = loc.upsilon;
    result.flags.small_n = n <= 2;
    if (n >= 3) {
        result.s2 = static_cast<double>(n) / static_cast<double>(n - 2) * loc.upsilon;
        double scale = 0.0;
        for (std::size_t i = 0; i < n; ++i) scale += sample.y()[i] * sample.y()[i] / sample.x()[i];
        scale /= static_cast<double>(n);
        result.flags.collinear =
            loc.upsilon <= 1e-13 * (scale + std::numeric_limits<double>::min());
    } else {
        result.s2 = loc.upsilon;
    }
    result.regime = classify_regime(gamma.alpha, options.boundary_tol);
    result.d_n = scaling_vector(result.regime, gamma.alpha, n);
    if (loc.upsilon > 0.0) {
        result.asympt = make_limit_law(result.regime, result.theta_hat);
    } else {
        // sigma_hat = 0: every sigma-dependent entry of the limit law vanishes.
        BgglParams unit = result.theta_hat;
        unit.sigma = 1.0;
        result.asympt = make_limit_law(result.regime, unit);
        result.asympt.sigma_delta_mu.setZero();
        result.asympt.delta_scale = 0.0;
        result.asympt.mu_variance = 0.0;
        result.asympt.upsilon_variance = 0.0;
    }
    return result;
}

double weighted_sse(const PairedSample& sample, double delta, double mu) {
    const auto x = sample.x();
    const auto y = sample.y();
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - delta - mu * x[i];
        s += r * r / x[i];
    }
    return s;
}

double delta_profile(const PairedSample& sample, double delta) {
    if (sample.empty()) throw DomainError("delta_profile: empty sample");
    const auto x = sample.x();
    const auto y = sample.y();
    const double xbar = mean_of(x);
    const double ybar = mean_of(y);
    double m = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) m += (y[i] - delta) * (y[i] - delta) / x[i];
    m /= static_cast<double>(x.size());
    return (ybar - delta) * (ybar - delta) / xbar - m;
}

Eigen::Matrix2d conditional_sampling_law(std::span<const double> x, const BgglParams& theta) {
    theta.validate();
    if (x.size() < 2 || all_equal(x)) {
        throw DegenerateSampleError("conditional_sampling_law: x must contain two distinct values");
    }
    const double nd = static_cast<double>(x.size());
    double sum_x = 0.0;
    double sum_inv = 0.0;
    for (double xi : x) {
        sum_x += xi;
        sum_inv += 1.0 / xi;
    }
    const double xbar = sum_x / nd;
    // det = sum(1/x) sum(x) - n^2 = n^2 mean((xbar - x) / x), free of cancellation.
    double spread = 0.0;
    for (double xi : x) spread += (xbar - xi) / xi;
    const double det = nd * spread;
    Eigen::Matrix2d inv;
    inv << sum_x, -nd, -nd, sum_inv;
    return theta.upsilon() / det * inv;
}

Ar1Fit fit_ar1_log(std::span<const double> v) {
    if (v.size() < 3) throw DegenerateSampleError("fit_ar1_log: need at least three observations");
    std::vector<double> l(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!(v[i] > 0.0) || !std::isfinite(v[i])) throw DomainError("fit_ar1_log: values must be positive");
        l[i] = std::log(v[i]);
    }
    const std::size_t m = l.size() - 1;
    const std::span<const double> lag(l.data(), m);
    const std::span<const double> cur(l.data() + 1, m);
    const double lag_mean = mean_of(lag);
    const double cur_mean = mean_of(cur);
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t t = 0; t < m; ++t) {
        sxx += (lag[t] - lag_mean) * (lag[t] - lag_mean);
        sxy += (lag[t] - lag_mean) * (cur[t] - cur_mean);
    }
    if (!(sxx > 0.0)) throw DegenerateSampleError("fit_ar1_log: lagged series is constant");
    Ar1Fit fit;
    fit.b = sxy / sxx;
    fit.a = cur_mean - fit.b * lag_mean;
    fit.residuals.resize(m);
    for (std::size_t t = 0; t < m; ++t) fit.residuals[t] = (cur[t] - cur_mean) - fit.b * (lag[t] - lag_mean);
    return fit;
}

}  // namespace bggl
