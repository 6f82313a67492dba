#include "benford/entropy.hpp"

#include "benford/error.hpp"
#include "benford/quadrature.hpp"

#include <cmath>
#include <string>

namespace benford {

namespace {

void require_normalized(const SignificandDensity& pdf, Base base) {
    const auto mass = integrate(pdf, 1.0, base.real());
    if (std::abs(mass.value - 1.0) > kNormalizationTol) {
        throw NotNormalized("density integrates to " + std::to_string(mass.value) +
                            " over [1, b), expected 1");
    }
}

QuadratureResult entropy_integral(const SignificandDensity& pdf, Base base) {
    return integrate(
        [&](double x) {
            const double rho = pdf(x);
            return rho > 0.0 ? -rho * std::log(rho) : 0.0;
        },
        1.0, base.real());
}

QuadratureResult mean_log_integral(const SignificandDensity& pdf, Base base) {
    return integrate([&](double x) { return pdf(x) * std::log(x); }, 1.0, base.real());
}

}  // namespace

double entropy(const SignificandDensity& pdf, Base base) {
    require_normalized(pdf, base);
    return entropy_integral(pdf, base).value;
}

double mean_log(const SignificandDensity& pdf, Base base) {
    require_normalized(pdf, base);
    return mean_log_integral(pdf, base).value;
}

double nb_entropy_closed(Base base) {
    return std::log(base.log()) + 0.5 * base.log();
}

EntropyReport analyze_entropy(const SignificandDensity& pdf, Base base) {
    require_normalized(pdf, base);
    const auto h = entropy_integral(pdf, base);
    const auto ml = mean_log_integral(pdf, base);

    EntropyReport report;
    report.entropy = h.value;
    report.mean_log = ml.value;
    report.gibbs_bound = std::log(base.log()) + ml.value;
    report.constraint_met = ml.value <= 0.5 * base.log() + kMeanLogSlack;
    report.quadrature_error_estimate = h.error_estimate + ml.error_estimate;
    return report;
}

}  // namespace benford
