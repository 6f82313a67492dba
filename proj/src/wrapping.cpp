#include "benford/wrapping.hpp"

#include "benford/detail/compensated_sum.hpp"
#include "benford/error.hpp"
#include "benford/nb.hpp"
#include "benford/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace benford {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double standardized_log(double y, const LogNormalParams& p) {
    if (y <= 0.0) return -kInf;
    if (std::isinf(y)) return kInf;
    return (std::log(y) - p.M) / p.s;
}

void check_tol(double tol) {
    if (!(tol > 0.0) || !std::isfinite(tol)) {
        throw DomainError("tolerance must be positive and finite");
    }
}

}  // namespace

LogNormalParams::LogNormalParams(double location, double scale) : M(location), s(scale) {
    if (!std::isfinite(location)) {
        throw DomainError("log-normal location must be finite");
    }
    if (!(scale > kMinScale) || !std::isfinite(scale)) {
        throw DomainError("log-normal scale must be finite and > " + std::to_string(kMinScale));
    }
}

double LogNormalSource::pdf(double y) const {
    if (!(y > 0.0) || std::isinf(y)) return 0.0;
    const double z = (std::log(y) - params_.M) / params_.s;
    return normal_pdf(z) / (params_.s * y);
}

double LogNormalSource::cdf(double y) const {
    return normal_cdf(standardized_log(y, params_));
}

double LogNormalSource::mass(double lo, double hi) const {
    if (!(hi > lo)) return 0.0;
    const double z_lo = standardized_log(lo, params_);
    const double z_hi = standardized_log(hi, params_);
    // Difference of whichever tail is small, to keep relative accuracy.
    if (z_lo > 0.0) {
        return normal_upper_tail(z_lo) - normal_upper_tail(z_hi);
    }
    return normal_cdf(z_hi) - normal_cdf(z_lo);
}

double LogNormalSource::tail_mass(int K, Base base) const {
    const double edge = K * base.log();
    return normal_cdf((-edge - params_.M) / params_.s) +
           normal_upper_tail((edge - params_.M) / params_.s);
}

UniformSource::UniformSource(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!(lo > 0.0) || !(hi > lo) || !std::isfinite(hi)) {
        throw DomainError("uniform source needs 0 < lo < hi < inf");
    }
}

double UniformSource::pdf(double y) const {
    return (y >= lo_ && y <= hi_) ? 1.0 / (hi_ - lo_) : 0.0;
}

double UniformSource::cdf(double y) const {
    if (y <= lo_) return 0.0;
    if (y >= hi_) return 1.0;
    return (y - lo_) / (hi_ - lo_);
}

double UniformSource::tail_mass(int K, Base base) const {
    const double left = std::pow(base.real(), -K);
    const double right = std::pow(base.real(), K);
    const double below = std::max(0.0, std::min(hi_, left) - lo_);
    const double above = std::max(0.0, hi_ - std::max(lo_, right));
    return (below + above) / (hi_ - lo_);
}

MixtureParams::MixtureParams(std::vector<MixtureComponent> components)
    : components_(std::move(components)) {
    if (components_.empty()) {
        throw DomainError("mixture needs at least one component");
    }
    double total = 0.0;
    for (const auto& c : components_) {
        if (!(c.weight >= 0.0)) {
            throw DomainError("mixture weights must be nonnegative");
        }
        total += c.weight;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw DomainError("mixture weights must sum to 1, got " + std::to_string(total));
    }
}

LogNormalMixtureSource::LogNormalMixtureSource(MixtureParams mixture)
    : mixture_(std::move(mixture)) {
    for (const auto& c : mixture_.components()) {
        parts_.emplace_back(c.params);
    }
}

double LogNormalMixtureSource::pdf(double y) const {
    double v = 0.0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        v += mixture_.components()[i].weight * parts_[i].pdf(y);
    }
    return v;
}

double LogNormalMixtureSource::cdf(double y) const {
    double v = 0.0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        v += mixture_.components()[i].weight * parts_[i].cdf(y);
    }
    return v;
}

double LogNormalMixtureSource::mass(double lo, double hi) const {
    double v = 0.0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        v += mixture_.components()[i].weight * parts_[i].mass(lo, hi);
    }
    return v;
}

double LogNormalMixtureSource::tail_mass(int K, Base base) const {
    double v = 0.0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        v += mixture_.components()[i].weight * parts_[i].tail_mass(K, base);
    }
    return v;
}

WrappedDensity::WrappedDensity(std::shared_ptr<const SourceDensity> source, Base base,
                               double tol)
    : source_(std::move(source)), base_(base), tol_(tol), truncation_(-1), truncation_error_(0.0) {
    if (!source_) {
        throw DomainError("wrapped density needs a source");
    }
    check_tol(tol);
    for (int K = 0; K <= kMaxTruncation; ++K) {
        const double tail = source_->tail_mass(K, base_);
        if (tail < tol_ / 10.0) {
            truncation_ = K;
            truncation_error_ = tail;
            return;
        }
    }
    throw TruncationError("no truncation K <= " + std::to_string(kMaxTruncation) +
                          " brings the tail mass below tol/10");
}

double WrappedDensity::pdf(double x) const {
    if (!in_significand_range(x, base_)) {
        throw DomainError("wrapped pdf: x outside [1, b)");
    }
    detail::CompensatedSum sum;
    for (int k = -truncation_; k <= truncation_; ++k) {
        const double scale = std::pow(base_.real(), k);
        const double y = x * scale;
        if (!(y > 0.0) || std::isinf(y)) continue;
        sum.add(scale * source_->pdf(y));
    }
    return sum.value();
}

double WrappedDensity::cdf(double x) const {
    if (!(x >= 1.0) || !(x <= base_.real())) {
        throw DomainError("wrapped cdf: x outside [1, b]");
    }
    detail::CompensatedSum sum;
    for (int k = -truncation_; k <= truncation_; ++k) {
        const double left = std::pow(base_.real(), k);
        sum.add(source_->mass(left, x * left));
    }
    return sum.value();
}

WrappedEvaluation wrapped_lognormal_eval(double x, const LogNormalParams& p, Base base,
                                         double tol) {
    if (!in_significand_range(x, base)) {
        throw DomainError("wrapped log-normal pdf: x outside [1, b)");
    }
    check_tol(tol);
    const double L = base.log();
    // Offset of M inside its decade; the sum is over j = k - floor(M / L).
    double m = p.M - std::floor(p.M / L) * L;
    m = std::clamp(m, 0.0, L);

    // Omitted terms on each side are bounded by the first omitted term plus
    // the integral of the Gaussian beyond it (x >= 1 is used to drop 1/x).
    int K = -1;
    double bound = kInf;
    for (int k = 0; k <= kMaxTruncation; ++k) {
        const double z_up = ((k + 1) * L - m) / p.s;
        const double z_dn = (k * L + m) / p.s;
        if (z_up < 0.0 || z_dn < 0.0) continue;
        const double b = (normal_pdf(z_up) + normal_pdf(z_dn)) / p.s +
                         (normal_upper_tail(z_up) + normal_upper_tail(z_dn)) / L;
        if (b < tol / 10.0) {
            K = k;
            bound = b;
            break;
        }
    }
    if (K < 0) {
        throw TruncationError("wrapped log-normal series needs more than " +
                              std::to_string(kMaxTruncation) + " terms per side");
    }

    const double t = std::log(x);
    const double two_s2 = 2.0 * p.s * p.s;
    detail::CompensatedSum sum;
    for (int j = -K; j <= K; ++j) {
        const double d = t + j * L - m;
        sum.add(std::exp(-d * d / two_s2));
    }
    const double norm = 1.0 / (x * p.s * std::sqrt(2.0 * std::numbers::pi));
    return {norm * sum.value(), bound, K};
}

double wrapped_lognormal_pdf(double x, const LogNormalParams& p, Base base, double tol) {
    return wrapped_lognormal_eval(x, p, base, tol).value;
}

double euler_maclaurin_leading(double x, const LogNormalParams& /*p*/, Base base) {
    if (!in_significand_range(x, base)) {
        throw DomainError("euler_maclaurin_leading: x outside [1, b)");
    }
    // The Gaussian integral over k ln b is exactly s sqrt(2 pi) / ln b, which
    // cancels every trace of (M, s).
    return 1.0 / (x * base.log());
}

double wrap_mixture_pdf(double x, const MixtureParams& mix, Base base, double tol) {
    detail::CompensatedSum sum;
    for (const auto& c : mix.components()) {
        sum.add(c.weight * wrapped_lognormal_pdf(x, c.params, base, tol));
    }
    return sum.value();
}

std::vector<double> log_spaced_grid(Base base, std::size_t n) {
    if (n == 0) {
        throw DomainError("grid needs at least one point");
    }
    std::vector<double> grid(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = (static_cast<double>(i) + 0.5) / static_cast<double>(n);
        grid[i] = std::exp(u * base.log());
    }
    return grid;
}

NBDistance distance_to_nb(const std::function<double(double)>& pdf, Base base, std::size_t n) {
    const NBDistribution nb(base);
    const auto grid = log_spaced_grid(base, n);
    double sup = 0.0;
    detail::CompensatedSum tv;
    for (double x : grid) {
        const double diff = std::abs(pdf(x) - nb.pdf(x));
        sup = std::max(sup, diff);
        // dx = x ln b du
        tv.add(diff * x);
    }
    const double tv_distance = 0.5 * tv.value() * base.log() / static_cast<double>(n);
    return {sup, tv_distance};
}

NBDistance distance_to_nb(const LogNormalParams& p, Base base, double tol) {
    return distance_to_nb([&](double x) { return wrapped_lognormal_pdf(x, p, base, tol); }, base);
}

}  // namespace benford
