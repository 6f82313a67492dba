#include "benford/nb.hpp"

#include "benford/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace benford {

SignificandInterval::SignificandInterval(double lo, double hi, Base base)
    : lo_(lo), hi_(hi), base_(base) {
    if (!(lo >= 1.0) || !(lo <= hi) || !(hi <= base.real())) {
        throw DomainError("significand interval must satisfy 1 <= lo <= hi <= b");
    }
}

IntervalSet::IntervalSet(std::vector<SignificandInterval> intervals, Base base)
    : intervals_(std::move(intervals)), base_(base) {
    if (intervals_.size() > 2) {
        throw DomainError("interval set holds at most two intervals");
    }
    std::sort(intervals_.begin(), intervals_.end(),
              [](const auto& a, const auto& b) { return a.lo() < b.lo(); });
    for (std::size_t i = 0; i < intervals_.size(); ++i) {
        if (!(intervals_[i].base() == base_)) {
            throw DomainError("interval set mixes bases");
        }
        if (i > 0 && intervals_[i].lo() < intervals_[i - 1].hi()) {
            throw DomainError("interval set members overlap");
        }
    }
}

WrapCase wrap_case(double lambda, const SignificandInterval& iv) {
    const Base base = iv.base();
    if (!in_significand_range(lambda, base)) {
        throw DomainError("scale factor must lie in [1, b)");
    }
    const double b = base.real();
    if (lambda * iv.lo() >= b) {
        return WrapCase::FullWrap;
    }
    if (lambda * iv.hi() <= b) {
        return WrapCase::NoWrap;
    }
    return WrapCase::Straddle;
}

IntervalSet scale_interval(double lambda, const SignificandInterval& iv) {
    const Base base = iv.base();
    const double b = base.real();
    const double lo = lambda * iv.lo();
    const double hi = lambda * iv.hi();

    // Rounding can push a product a hair past b; pin to the closed upper edge.
    auto clamp = [b](double v) { return std::clamp(v, 1.0, b); };

    switch (wrap_case(lambda, iv)) {
        case WrapCase::NoWrap:
            return IntervalSet({SignificandInterval(lo, clamp(hi), base)}, base);
        case WrapCase::FullWrap:
            return IntervalSet({SignificandInterval(clamp(lo / b), clamp(hi / b), base)}, base);
        case WrapCase::Straddle:
            break;
    }
    return IntervalSet({SignificandInterval(1.0, clamp(hi / b), base),
                        SignificandInterval(clamp(lo), b, base)},
                       base);
}

double NBDistribution::pdf(double x) const {
    if (!in_significand_range(x, base_)) {
        throw DomainError("nb pdf: x outside [1, b)");
    }
    return 1.0 / (x * base_.log());
}

double NBDistribution::cdf(double x) const {
    if (!(x >= 1.0) || !(x <= base_.real())) {
        throw DomainError("nb cdf: x outside [1, b]");
    }
    if (x == base_.real()) {
        return 1.0;
    }
    return std::log(x) / base_.log();
}

double NBDistribution::quantile(double u) const {
    if (!(u >= 0.0) || !(u <= 1.0)) {
        throw DomainError("nb quantile: u outside [0, 1]");
    }
    if (u == 1.0) {
        return base_.real();
    }
    return std::exp(u * base_.log());
}

double NBDistribution::first_digit_prob(int d) const {
    if (d < 1 || d > base_.value() - 1) {
        throw DomainError("first digit " + std::to_string(d) + " outside [1, b-1]");
    }
    return std::log1p(1.0 / d) / base_.log();
}

double NBDistribution::interval_measure(const SignificandInterval& iv) const {
    if (iv.lo() == iv.hi()) {
        return 0.0;
    }
    return std::log(iv.hi() / iv.lo()) / base_.log();
}

double NBDistribution::measure_of_set(const IntervalSet& set) const {
    double total = 0.0;
    for (const auto& iv : set.intervals()) {
        total += interval_measure(iv);
    }
    return total;
}

}  // namespace benford
