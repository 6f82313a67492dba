#pragma once

namespace benford {

/// Standard normal density.
double normal_pdf(double z);
/// Standard normal upper tail P(Z > z), accurate in the far tail.
double normal_upper_tail(double z);
/// Standard normal cdf P(Z <= z).
double normal_cdf(double z);

/// Regularized lower incomplete gamma P(a, x) = gamma(a, x) / Gamma(a).
double regularized_gamma_p(double a, double x);
/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x), without cancellation.
double regularized_gamma_q(double a, double x);

/// Upper-tail probability of a chi-square variable with `dof` degrees of freedom.
double chi_square_sf(double statistic, int dof);

}  // namespace benford
