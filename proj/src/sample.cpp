#include "bggl/sample.hpp"

#include <cmath>
#include <numbers>

#include "bggl/error.hpp"
#include "bggl/special.hpp"

namespace bggl {

namespace {

// Standard gamma (rate 1) for shape >= 1, Marsaglia & Tsang (2000).
double standard_gamma_ge1(double alpha, RngStream& rng) {
    const double d = alpha - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double z = 0.0;
        double v = 0.0;
        do {
            z = rng.normal();
            v = 1.0 + c * z;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = rng.uniform();
        const double z2 = z * z;
        if (u < 1.0 - 0.0331 * z2 * z2) return d * v;
        if (std::log(u) < 0.5 * z2 + d * (1.0 - v + std::log(v))) return d * v;
    }
}

}  // namespace

double sample_gamma(double alpha, double beta, RngStream& rng) {
    if (!(alpha > 0.0) || !(beta > 0.0) || !std::isfinite(alpha) || !std::isfinite(beta)) {
        throw DomainError("sample_gamma: alpha and beta must be finite and > 0");
    }
    if (alpha >= 1.0) return standard_gamma_ge1(alpha, rng) / beta;
    const double g = standard_gamma_ge1(alpha + 1.0, rng);
    return std::exp(std::log(g) + std::log(rng.uniform()) / alpha) / beta;
}

void sample_bggl_into(const BgglParams& theta, std::span<double> x, std::span<double> y, RngStream& rng) {
    theta.validate();
    if (x.size() != y.size()) throw DomainError("sample_bggl_into: span sizes differ");
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double xi = sample_gamma(theta.alpha, theta.beta, rng);
        x[i] = xi;
        y[i] = theta.delta + theta.mu * xi + theta.sigma * std::sqrt(xi) * rng.normal();
    }
}

PairedSample sample_bggl(const BgglParams& theta, std::size_t n, RngStream& rng) {
    if (n < 1) throw DomainError("sample_bggl: n must be >= 1");
    std::vector<double> x(n);
    std::vector<double> y(n);
    sample_bggl_into(theta, x, y, rng);
    return PairedSample(std::move(x), std::move(y));
}

double sample_stable_subordinator(double alpha, RngStream& rng) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw DomainError("sample_stable_subordinator: alpha must lie in (0, 1)");
    }
    const double u = std::numbers::pi * rng.uniform();
    const double e = rng.exponential();
    // Zolotarev's function A(u) in log form.
    const double log_a = (alpha * std::log(std::sin(alpha * u)) +
                          (1.0 - alpha) * std::log(std::sin((1.0 - alpha) * u)) - std::log(std::sin(u))) /
                         (1.0 - alpha);
    const double log_standard = (1.0 - alpha) / alpha * (log_a - std::log(e));
    return std::exp(special::log_gamma(1.0 - alpha) / alpha + log_standard);
}

LevyPath sample_levy_path(const BgglParams& theta, std::span<const double> times, RngStream& rng) {
    theta.validate();
    if (times.empty() || times.front() != 0.0) {
        throw DomainError("sample_levy_path: time grid must start at 0");
    }
    LevyPath path;
    path.times.assign(times.begin(), times.end());
    path.g.assign(times.size(), 0.0);
    path.w.assign(times.size(), 0.0);
    for (std::size_t k = 1; k < times.size(); ++k) {
        const double dt = times[k] - times[k - 1];
        if (!(dt >= 0.0) || !std::isfinite(dt)) {
            throw DomainError("sample_levy_path: time grid must be nondecreasing");
        }
        double dg = 0.0;
        double dw = 0.0;
        if (dt > 0.0) {
            dg = sample_gamma(theta.alpha * dt, theta.beta, rng);
            dw = theta.mu * dg + theta.sigma * std::sqrt(dg) * rng.normal();
        }
        path.g[k] = path.g[k - 1] + dg;
        path.w[k] = path.w[k - 1] + dw;
    }
    return path;
}

}  // namespace bggl
