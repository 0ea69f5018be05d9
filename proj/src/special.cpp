#include "bggl/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "bggl/error.hpp"

namespace bggl::special {

namespace {

constexpr double kEps = 1e-16;
constexpr int kMaxBesselIterations = 100000;

void require_positive(double x, const char* who) {
    if (!(x > 0.0) || std::isinf(x)) {
        throw DomainError(std::string(who) + ": argument must be finite and > 0, got " +
                          std::to_string(x));
    }
}

// Taylor coefficients of 1/Gamma(z) = sum_{k>=1} c_k z^k (Abramowitz & Stegun 6.1.34).
constexpr double kRecipGamma[26] = {
    1.0000000000000000,  0.5772156649015329,  -0.6558780715202538, -0.0420026350340952,
    0.1665386113822915,  -0.0421977345555443, -0.0096219715278770, 0.0072189432466630,
    -0.0011651675918591, -0.0002152416741149, 0.0001280502823882,  -0.0000201348547807,
    -0.0000012504934821, 0.0000011330272320,  -0.0000002056338417, 0.0000000061160950,
    0.0000000050020075,  -0.0000000011812746, 0.0000000001043427,  0.0000000000077823,
    -0.0000000000036968, 0.0000000000005100,  -0.0000000000000206, -0.0000000000000054,
    0.0000000000000014,  0.0000000000000001};

// Temme's auxiliary gamma quantities for |mu| <= 1/2:
//   gam1 = (1/Gamma(1-mu) - 1/Gamma(1+mu)) / (2 mu),  gam2 = (1/Gamma(1-mu) + 1/Gamma(1+mu)) / 2
struct TemmeGammas {
    double gam1, gam2, gampl, gammi;
};

TemmeGammas temme_gammas(double mu) {
    double even = 0.0;  // sum over k even of c_k mu^{k-2}
    double odd = 0.0;   // sum over k odd of c_k mu^{k-1}
    for (int k = 26; k >= 1; --k) {
        if (k % 2 == 0) {
            even = even * mu * mu + kRecipGamma[k - 1];
        } else {
            odd = odd * mu * mu + kRecipGamma[k - 1];
        }
    }
    TemmeGammas g{};
    g.gam1 = -even;
    g.gam2 = odd;
    g.gampl = g.gam2 - mu * g.gam1;  // 1/Gamma(1+mu)
    g.gammi = g.gam2 + mu * g.gam1;  // 1/Gamma(1-mu)
    return g;
}

// K_mu(x), K_{mu+1}(x) for |mu| <= 1/2 and 0 < x < 2 via Temme's series.
void temme_series(double mu, double x, double& kmu, double& kmu1) {
    const double x2 = 0.5 * x;
    const double pimu = std::numbers::pi * mu;
    const double fact = std::abs(pimu) < kEps ? 1.0 : pimu / std::sin(pimu);
    double d = -std::log(x2);
    double e = mu * d;
    const double fact2 = std::abs(e) < kEps ? 1.0 : std::sinh(e) / e;
    const TemmeGammas g = temme_gammas(mu);
    double ff = fact * (g.gam1 * std::cosh(e) + g.gam2 * fact2 * d);
    double sum = ff;
    e = std::exp(e);
    double p = 0.5 * e / g.gampl;
    double q = 0.5 / (e * g.gammi);
    double c = 1.0;
    d = x2 * x2;
    double sum1 = p;
    const double mu2 = mu * mu;
    for (int i = 1; i <= kMaxBesselIterations; ++i) {
        ff = (i * ff + p + q) / (i * static_cast<double>(i) - mu2);
        c *= d / i;
        p /= (i - mu);
        q /= (i + mu);
        const double del = c * ff;
        sum += del;
        sum1 += c * (p - i * ff);
        if (std::abs(del) < std::abs(sum) * kEps) {
            kmu = sum;
            kmu1 = sum1 * 2.0 / x;
            return;
        }
    }
    throw ConvergenceError("bessel_k: Temme series did not converge");
}

// e^x K_mu(x), e^x K_{mu+1}(x) for |mu| <= 1/2 and x >= 2 via Steed's
// continued fraction CF2.
void steed_cf2_scaled(double mu, double x, double& kmu, double& kmu1) {
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d;
    double delh = d;
    double q1 = 0.0;
    double q2 = 1.0;
    const double a1 = 0.25 - mu * mu;
    double q = a1;
    double c = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    int i = 2;
    for (; i <= kMaxBesselIterations; ++i) {
        a -= 2.0 * (i - 1);
        c = -a * c / i;
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) < kEps) break;
    }
    if (i > kMaxBesselIterations) throw ConvergenceError("bessel_k: CF2 did not converge");
    h = a1 * h;
    kmu = std::sqrt(std::numbers::pi / (2.0 * x)) / s;
    kmu1 = kmu * (mu + x + 0.5 - h) / x;
}

// ln K_nu(x) for nu >= 0: base pair at |mu| <= 1/2 followed by forward
// recurrence with rescaling.
double log_bessel_k_nonneg(double nu, double x) {
    const int nl = static_cast<int>(nu + 0.5);
    const double mu = nu - nl;
    double kmu = 0.0;
    double kmu1 = 0.0;
    double log_scale = 0.0;
    if (x < 2.0) {
        temme_series(mu, x, kmu, kmu1);
    } else {
        steed_cf2_scaled(mu, x, kmu, kmu1);
        log_scale = -x;
    }
    const double xi2 = 2.0 / x;
    constexpr double kRescale = 1e200;
    for (int i = 1; i <= nl; ++i) {
        const double next = (mu + i) * xi2 * kmu1 + kmu;
        kmu = kmu1;
        kmu1 = next;
        if (kmu1 > kRescale) {
            kmu /= kRescale;
            kmu1 /= kRescale;
            log_scale += std::log(kRescale);
        }
    }
    return std::log(kmu) + log_scale;
}

// Asymptotic tail of w(a) = ln a - psi(a) for a >= 10.
double w_asymptotic(double a) {
    const double r = 1.0 / (a * a);
    const double series =
        r * (1.0 / 12 - r * (1.0 / 120 - r * (1.0 / 252 - r * (1.0 / 240 - r * (1.0 / 132 - r * (691.0 / 32760 - r / 12))))));
    return 0.5 / a + series;
}

// w'(a) = 1/a - psi'(a), without cancellation.
double w_derivative(double a) {
    double shift = 0.0;
    while (a < 10.0) {
        shift += -1.0 / (a * a) + 1.0 / (a * (a + 1.0));
        a += 1.0;
    }
    const double r = 1.0 / (a * a);
    const double tail = r * (0.5 + (1.0 / (6.0 * a)) -
                             r / a * (1.0 / 30 - r * (1.0 / 42 - r * (1.0 / 30 - r * (5.0 / 66)))));
    return shift - tail;
}

}  // namespace

double log_gamma(double x) {
    require_positive(x, "log_gamma");
    int sign = 0;
    return ::lgamma_r(x, &sign);
}

double digamma(double x) {
    require_positive(x, "digamma");
    double result = 0.0;
    while (x < 10.0) {
        result -= 1.0 / x;
        x += 1.0;
    }
    const double r = 1.0 / (x * x);
    const double tail =
        r * (1.0 / 12 - r * (1.0 / 120 - r * (1.0 / 252 - r * (1.0 / 240 - r * (1.0 / 132 - r * (691.0 / 32760 - r / 12))))));
    return result + std::log(x) - 0.5 / x - tail;
}

double trigamma(double x) {
    require_positive(x, "trigamma");
    double result = 0.0;
    while (x < 10.0) {
        result += 1.0 / (x * x);
        x += 1.0;
    }
    const double r = 1.0 / (x * x);
    const double tail =
        1.0 / x + 0.5 * r +
        r / x * (1.0 / 6 - r * (1.0 / 30 - r * (1.0 / 42 - r * (1.0 / 30 - r * (5.0 / 66 - r * (691.0 / 2730 - r * 7.0 / 6))))));
    return result + tail;
}

double log_bessel_k(double nu, double x) {
    require_positive(x, "bessel_k");
    if (!std::isfinite(nu)) throw DomainError("bessel_k: order must be finite");
    return log_bessel_k_nonneg(std::abs(nu), x);
}

double bessel_k(double nu, double x) {
    const double lk = log_bessel_k(nu, x);
    if (lk > std::log(std::numeric_limits<double>::max())) {
        throw std::overflow_error("bessel_k: K_nu(x) overflows double; use log_bessel_k");
    }
    return std::exp(lk);
}

double f_alpha(double alpha, double x) {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("f_alpha: alpha must lie in (0, 1]");
    if (!(x >= 0.0)) throw DomainError("f_alpha: x must be >= 0");
    if (x == 0.0) return std::exp(log_gamma(alpha) + (alpha - 1.0) * std::numbers::ln2);
    return std::exp(alpha * std::log(x) + log_bessel_k(alpha, x));
}

double w_function(double alpha) {
    require_positive(alpha, "w_function");
    double shift = 0.0;
    while (alpha < 10.0) {
        shift += 1.0 / alpha - std::log1p(1.0 / alpha);
        alpha += 1.0;
    }
    return shift + w_asymptotic(alpha);
}

double solve_w_inverse(double rhs, const WInverseOptions& options) {
    if (!(rhs > 0.0) || std::isinf(rhs)) {
        throw DomainError("solve_w_inverse: right-hand side must be finite and > 0");
    }
    double lo = options.lower;
    double hi = options.upper;
    while (w_function(lo) < rhs) {
        lo *= 1e-4;
        if (lo < 1e-300) throw ConvergenceError("solve_w_inverse: rhs too large to bracket");
    }
    while (w_function(hi) > rhs) {
        hi *= 1e4;
        if (hi > 1e300) throw ConvergenceError("solve_w_inverse: rhs too small to bracket");
    }

    // Standard gamma-MLE starting value.
    const double s = rhs;
    double alpha = (3.0 - s + std::sqrt((s - 3.0) * (s - 3.0) + 24.0 * s)) / (12.0 * s);
    if (!(alpha > lo && alpha < hi)) alpha = std::sqrt(lo * hi);

    const double tol = std::max(options.abs_tol, 8.0 * std::numeric_limits<double>::epsilon() * rhs);
    for (int it = 0; it < options.max_iterations; ++it) {
        const double f = w_function(alpha) - rhs;
        if (std::abs(f) <= tol) return alpha;
        if (f > 0.0) {
            lo = alpha;
        } else {
            hi = alpha;
        }
        if (hi / lo - 1.0 < 4.0 * std::numeric_limits<double>::epsilon()) return alpha;
        double next = alpha - f / w_derivative(alpha);
        if (!(next > lo && next < hi)) next = std::sqrt(lo * hi);
        alpha = next;
    }
    throw ConvergenceError("solve_w_inverse: no convergence after max iterations");
}

}  // namespace bggl::special
