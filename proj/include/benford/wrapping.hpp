#pragma once

#include "benford/significand.hpp"

#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

namespace benford {

/// A probability law on the positive reals that can be wrapped onto [1, b).
/// Implementations must be pure: equal inputs give equal outputs.
class SourceDensity {
public:
    virtual ~SourceDensity() = default;

    virtual double pdf(double y) const = 0;
    virtual double cdf(double y) const = 0;

    /// Probability of [lo, hi]. Override when a cdf difference loses precision.
    virtual double mass(double lo, double hi) const { return cdf(hi) - cdf(lo); }

    /// Certified upper bound on P(Y < b^-K) + P(Y > b^K); nonincreasing in K.
    virtual double tail_mass(int K, Base base) const = 0;
};

/// Location M and scale s of ln Y, both in log units. s must exceed kMinScale.
struct LogNormalParams {
    static constexpr double kMinScale = 1e-6;

    LogNormalParams(double location, double scale);

    double M;
    double s;
};

class LogNormalSource final : public SourceDensity {
public:
    explicit LogNormalSource(LogNormalParams params) : params_(params) {}

    double pdf(double y) const override;
    double cdf(double y) const override;
    double mass(double lo, double hi) const override;
    double tail_mass(int K, Base base) const override;

    const LogNormalParams& params() const noexcept { return params_; }

private:
    LogNormalParams params_;
};

/// Uniform law on [lo, hi] with 0 < lo < hi.
class UniformSource final : public SourceDensity {
public:
    UniformSource(double lo, double hi);

    double pdf(double y) const override;
    double cdf(double y) const override;
    double tail_mass(int K, Base base) const override;

private:
    double lo_;
    double hi_;
};

struct MixtureComponent {
    double weight;
    LogNormalParams params;
};

/// Finite log-normal mixture. Weights are nonnegative and sum to 1 within 1e-12.
class MixtureParams {
public:
    explicit MixtureParams(std::vector<MixtureComponent> components);

    const std::vector<MixtureComponent>& components() const noexcept { return components_; }

private:
    std::vector<MixtureComponent> components_;
};

class LogNormalMixtureSource final : public SourceDensity {
public:
    explicit LogNormalMixtureSource(MixtureParams mixture);

    double pdf(double y) const override;
    double cdf(double y) const override;
    double mass(double lo, double hi) const override;
    double tail_mass(int K, Base base) const override;

private:
    MixtureParams mixture_;
    std::vector<LogNormalSource> parts_;
};

/// Largest truncation the wrapping series may use before giving up.
inline constexpr int kMaxTruncation = 10000;
inline constexpr double kDefaultWrapTol = 1e-9;

/// A source condensed onto [1, b) by summing decade by decade:
///   pdf(x) = sum_k b^k source.pdf(x b^k),  cdf(x) = sum_k (F(x b^k) - F(b^k)),
/// with k running over [-K, K] and K the smallest truncation whose tail mass
/// is below tol / 10.
class WrappedDensity {
public:
    WrappedDensity(std::shared_ptr<const SourceDensity> source, Base base,
                   double tol = kDefaultWrapTol);

    double pdf(double x) const;
    double cdf(double x) const;

    Base base() const noexcept { return base_; }
    int truncation() const noexcept { return truncation_; }
    double tol() const noexcept { return tol_; }
    /// Mass of the decades left out of the sum; bounds the L1 error of pdf on [1, b).
    double truncation_error() const noexcept { return truncation_error_; }
    const SourceDensity& source() const noexcept { return *source_; }

private:
    std::shared_ptr<const SourceDensity> source_;
    Base base_;
    double tol_;
    int truncation_;
    double truncation_error_;
};

/// Closed-form wrapped log-normal value together with its truncation bound.
struct WrappedEvaluation {
    double value;
    double truncation_error;  // pointwise bound on the omitted terms
    int truncation;           // terms j in [-K, K] around the mode decade
};

/// Wrapped log-normal density
///   (1 / (x s sqrt(2 pi))) sum_k exp(-(ln x + k ln b - M)^2 / (2 s^2)).
/// The window of k is centred on the decade holding exp(M), so M and M + ln b
/// give the same terms in the same order.
WrappedEvaluation wrapped_lognormal_eval(double x, const LogNormalParams& p, Base base,
                                         double tol = kDefaultWrapTol);

double wrapped_lognormal_pdf(double x, const LogNormalParams& p, Base base,
                             double tol = kDefaultWrapTol);

/// Leading Euler-Maclaurin term of the wrapped log-normal: the series replaced
/// by an integral over k ln b. Equals 1 / (x ln b) for every (M, s).
double euler_maclaurin_leading(double x, const LogNormalParams& p, Base base);

double wrap_mixture_pdf(double x, const MixtureParams& mix, Base base,
                        double tol = kDefaultWrapTol);

inline constexpr std::size_t kDistanceGridPoints = 2048;

/// Points b^((i + 1/2) / n), i = 0..n-1: midpoints of a uniform grid in log_b x.
std::vector<double> log_spaced_grid(Base base, std::size_t n = kDistanceGridPoints);

struct NBDistance {
    double sup_distance;
    double tv_distance;
};

/// Sup and total-variation distance between pdf and the NB density, both taken
/// on log_spaced_grid(base, n). TV uses the midpoint rule in u = log_b x.
NBDistance distance_to_nb(const std::function<double(double)>& pdf, Base base,
                          std::size_t n = kDistanceGridPoints);

NBDistance distance_to_nb(const LogNormalParams& p, Base base, double tol = kDefaultWrapTol);

}  // namespace benford
