#pragma once

// Scalar special functions used by the densities, the gamma MLE and the
// limit-law machinery. All functions are pure and thread-safe.

namespace bggl::special {

/// Tolerances of the w^{-1} solver.
struct WInverseOptions {
    double abs_tol = 1e-12;     ///< target |w(alpha) - rhs|
    int max_iterations = 200;
    double lower = 1e-8;        ///< bisection bracket
    double upper = 1e8;
};

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// Digamma psi(x) = d/dx ln Gamma(x), x > 0.
double digamma(double x);

/// Trigamma psi'(x), x > 0.
double trigamma(double x);

/// Modified Bessel function of the second kind K_nu(x), x > 0.
/// K_nu = K_{-nu}; throws std::overflow_error when the result exceeds the
/// double range (use log_bessel_k there).
double bessel_k(double nu, double x);

/// ln K_nu(x), x > 0. Valid far beyond the range where K_nu itself overflows
/// or underflows.
double log_bessel_k(double nu, double x);

/// F_alpha(x) = x^alpha K_alpha(x) for 0 < alpha <= 1, with the limit
/// Gamma(alpha) 2^{alpha-1} at x = 0.
double f_alpha(double alpha, double x);

/// w(alpha) = ln(alpha) - psi(alpha); positive, continuous and strictly
/// decreasing on (0, inf). Evaluated without cancellation for large alpha.
double w_function(double alpha);

/// Unique alpha > 0 with w(alpha) = rhs (rhs > 0). Bracketed Newton with
/// bisection fallback.
double solve_w_inverse(double rhs, const WInverseOptions& options = {});

}  // namespace bggl::special
