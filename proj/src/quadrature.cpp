#include "benford/quadrature.hpp"

#include "benford/error.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <string>

namespace benford {

namespace {
constexpr unsigned kMaxDepth = 24;
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tol) {
    using boost::math::quadrature::gauss_kronrod;
    double error = 0.0;
    double l1 = 0.0;
    // Boost terminates on a relative criterion; asking for abs_tol/10 relative
    // is enough for the O(1) integrands used here, and the absolute check below
    // is what the caller relies on.
    const double value =
        gauss_kronrod<double, 15>::integrate(f, a, b, kMaxDepth, abs_tol / 10.0, &error, &l1);
    if (!std::isfinite(value) || !(error <= abs_tol)) {
        throw QuadratureError("quadrature on [" + std::to_string(a) + ", " + std::to_string(b) +
                              "] did not reach tolerance; error estimate " +
                              std::to_string(error));
    }
    return {value, error};
}

}  // namespace benford
