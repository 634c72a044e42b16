#pragma once

#include <functional>
#include <stdexcept>

namespace uavdd {

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = true;
};

/// Adaptive Gauss-Kronrod integration of f on [a, b].
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol, int max_depth = 15);

/// Bisection root of f on [lo, hi]; requires a sign change.
struct RootResult {
    double x = 0.0;
    double f_at_x = 0.0;
    bool bracketed = true;  // false when f has no sign change on [lo, hi]
};
RootResult bisect(const std::function<double(double)>& f, double lo, double hi, double x_tol,
                  int max_iter = 200);

/// Golden-section minimum of f on [lo, hi] (unimodal assumed).
double golden_minimize(const std::function<double(double)>& f, double lo, double hi, double x_tol);

}  // namespace uavdd
