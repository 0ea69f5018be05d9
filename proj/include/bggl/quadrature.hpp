#pragma once

#include <functional>

namespace bggl::quad {

struct Result {
    double value = 0.0;
    double error = 0.0;
};

/// Globally adaptive 15-point Gauss-Kronrod integration over [a, b].
/// Subdivides the interval with the largest error estimate until the total
/// estimate falls below max(abs_tol, rel_tol * |value|) or max_intervals is
/// reached.
Result integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-12, double rel_tol = 1e-12, int max_intervals = 2000);

/// Single 15-point Kronrod rule on [a, b], no adaptation.
double kronrod15(const std::function<double(double)>& f, double a, double b);

}  // namespace bggl::quad
