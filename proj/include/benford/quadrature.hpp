#pragma once

#include <functional>

namespace benford {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

/// Default absolute tolerance for integrals over [1, b).
inline constexpr double kQuadratureTol = 1e-9;

/// Adaptive Gauss-Kronrod (7/15) integral of f over [a, b].
/// Throws QuadratureError if the error estimate stays above abs_tol.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tol = kQuadratureTol);

}  // namespace benford
