#pragma once

#include "benford/significand.hpp"

#include <functional>

namespace benford {

using SignificandDensity = std::function<double(double)>;

/// Normalization of a density on [1, b) is checked to this absolute tolerance.
inline constexpr double kNormalizationTol = 1e-6;
/// Slack on the mean-log <= (ln b)/2 test so quadrature noise cannot flip it.
inline constexpr double kMeanLogSlack = 1e-9;

/// Entropy bookkeeping for one density on [1, b), all in nats.
struct EntropyReport {
    double entropy = 0.0;
    double mean_log = 0.0;
    /// ln(ln b) + mean_log: cross-entropy against the NB density.
    double gibbs_bound = 0.0;
    bool constraint_met = false;
    double quadrature_error_estimate = 0.0;
};

/// -integral of rho ln rho over [1, b), with 0 ln 0 = 0. Throws NotNormalized.
double entropy(const SignificandDensity& pdf, Base base);

/// integral of rho(x) ln x over [1, b). Throws NotNormalized.
double mean_log(const SignificandDensity& pdf, Base base);

/// ln(ln b) + (ln b) / 2.
double nb_entropy_closed(Base base);

EntropyReport analyze_entropy(const SignificandDensity& pdf, Base base);

}  // namespace benford
