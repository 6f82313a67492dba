#pragma once

#include "benford/significand.hpp"

#include <cstddef>
#include <vector>

namespace benford {

/// Closed interval [lo, hi] of significands. hi == b is allowed and reads as
/// right-open, since b itself is identified with 1. lo == hi has measure zero.
class SignificandInterval {
public:
    SignificandInterval(double lo, double hi, Base base);

    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }
    Base base() const noexcept { return base_; }
    double length() const noexcept { return hi_ - lo_; }

private:
    double lo_;
    double hi_;
    Base base_;
};

/// At most two disjoint significand intervals, sorted by lo.
class IntervalSet {
public:
    explicit IntervalSet(Base base) : base_(base) {}
    IntervalSet(std::vector<SignificandInterval> intervals, Base base);

    const std::vector<SignificandInterval>& intervals() const noexcept { return intervals_; }
    std::size_t size() const noexcept { return intervals_.size(); }
    Base base() const noexcept { return base_; }

private:
    std::vector<SignificandInterval> intervals_;
    Base base_;
};

/// How an interval lands after multiplication by lambda modulo b.
enum class WrapCase {
    NoWrap,    // [l*x1, l*x2]
    Straddle,  // [1, l*x2/b] U [l*x1, b)
    FullWrap,  // [l*x1/b, l*x2/b]
};

WrapCase wrap_case(double lambda, const SignificandInterval& iv);

/// Image of iv under s -> mul_mod_b(lambda, s). Never merges across the seam.
IntervalSet scale_interval(double lambda, const SignificandInterval& iv);

/// Newcomb-Benford law on [1, b): density 1/(x ln b), cdf log_b x.
class NBDistribution {
public:
    explicit NBDistribution(Base base) : base_(base) {}

    Base base() const noexcept { return base_; }

    double pdf(double x) const;
    double cdf(double x) const;
    double quantile(double u) const;

    /// P(first digit = d) = log_b(1 + 1/d).
    double first_digit_prob(int d) const;

    double interval_measure(const SignificandInterval& iv) const;
    double measure_of_set(const IntervalSet& set) const;

private:
    Base base_;
};

}  // namespace benford
