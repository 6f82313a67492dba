#include "benford/conformance.hpp"

#include "benford/error.hpp"
#include "benford/nb.hpp"
#include "benford/special.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace benford {

DigitHistogram::DigitHistogram(Base base)
    : base_(base), counts_(static_cast<std::size_t>(base.value() - 1), 0) {}

DigitHistogram::DigitHistogram(Base base, std::vector<std::uint64_t> counts)
    : base_(base), counts_(std::move(counts)) {
    if (counts_.size() != static_cast<std::size_t>(base.value() - 1)) {
        throw DomainError("histogram needs exactly b-1 counts");
    }
    for (auto c : counts_) total_ += c;
}

void DigitHistogram::add(int digit) {
    if (digit < 1 || digit > base_.value() - 1) {
        throw DomainError("digit " + std::to_string(digit) + " outside [1, b-1]");
    }
    ++counts_[static_cast<std::size_t>(digit - 1)];
    ++total_;
}

std::uint64_t DigitHistogram::count(int digit) const {
    if (digit < 1 || digit > base_.value() - 1) {
        throw DomainError("digit " + std::to_string(digit) + " outside [1, b-1]");
    }
    return counts_[static_cast<std::size_t>(digit - 1)];
}

double DigitHistogram::frequency(int digit) const {
    return total_ == 0 ? 0.0 : static_cast<double>(count(digit)) / static_cast<double>(total_);
}

DigitHistogram& DigitHistogram::operator+=(const DigitHistogram& other) {
    if (!(other.base_ == base_)) {
        throw DomainError("cannot merge histograms of different bases");
    }
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        counts_[i] += other.counts_[i];
    }
    total_ += other.total_;
    return *this;
}

namespace {

int digit_of(const SignificandDecomposition& d) {
    const int digit = static_cast<int>(d.significand);
    return std::clamp(digit, 1, d.base.value() - 1);
}

std::vector<double> usable_log_significands(std::span<const double> data, Base base) {
    std::vector<double> u;
    u.reserve(data.size());
    for (double v : data) {
        if (std::isfinite(v) && v > 0.0) {
            u.push_back(log_map(decompose(v, base).significand, base));
        }
    }
    return u;
}

double ks_sorted(std::vector<double> u) {
    if (u.empty()) {
        throw EmptyData("no positive finite values to test");
    }
    std::sort(u.begin(), u.end());
    const double n = static_cast<double>(u.size());
    double d = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double above = static_cast<double>(i + 1) / n - u[i];
        const double below = u[i] - static_cast<double>(i) / n;
        d = std::max({d, above, below});
    }
    return std::min(d, 1.0);
}

ConformanceReport build_report(DigitHistogram hist, double ks, SkipCounts skipped) {
    const auto chi = chi_square(hist);
    ConformanceReport r{std::move(hist)};
    r.chi_square = chi.statistic;
    r.chi_square_pvalue = chi.pvalue;
    r.chi_square_dof = chi.degrees_of_freedom;
    r.ks_stat = ks;
    r.tv_distance = tv_distance(r.histogram);
    r.n_skipped_nonpositive = skipped.nonpositive;
    r.n_skipped_nonfinite = skipped.nonfinite;
    return r;
}

}  // namespace

HistogramResult digit_histogram(std::span<const double> data, Base base) {
    HistogramResult result{DigitHistogram(base), {}};
    for (double v : data) {
        if (!std::isfinite(v)) {
            ++result.skipped.nonfinite;
        } else if (v <= 0.0) {
            ++result.skipped.nonpositive;
        } else {
            result.histogram.add(digit_of(decompose(v, base)));
        }
    }
    if (result.histogram.total() == 0) {
        throw EmptyData("no positive finite values among " + std::to_string(data.size()) +
                        " entries");
    }
    return result;
}

DigitHistogram digit_histogram(std::span<const SignificandDecomposition> data, Base base) {
    DigitHistogram hist(base);
    for (const auto& d : data) {
        if (!(d.base == base)) {
            throw DomainError("decomposition base does not match histogram base");
        }
        hist.add(digit_of(d));
    }
    if (hist.total() == 0) {
        throw EmptyData("empty sequence");
    }
    return hist;
}

ChiSquareResult chi_square(const DigitHistogram& hist) {
    const Base base = hist.base();
    const auto bins = static_cast<std::uint64_t>(base.value() - 1);
    if (hist.total() < 5 * bins) {
        throw InsufficientData("chi-square needs at least " + std::to_string(5 * bins) +
                               " values, got " + std::to_string(hist.total()));
    }
    const NBDistribution nb(base);
    const double n = static_cast<double>(hist.total());
    double stat = 0.0;
    for (int d = 1; d <= base.value() - 1; ++d) {
        const double expected = n * nb.first_digit_prob(d);
        const double diff = static_cast<double>(hist.count(d)) - expected;
        stat += diff * diff / expected;
    }
    const int dof = base.value() - 2;
    return {stat, chi_square_sf(stat, dof), dof};
}

double tv_distance(const DigitHistogram& hist) {
    if (hist.total() == 0) {
        throw EmptyData("empty histogram");
    }
    const NBDistribution nb(hist.base());
    double sum = 0.0;
    for (int d = 1; d <= hist.base().value() - 1; ++d) {
        sum += std::abs(hist.frequency(d) - nb.first_digit_prob(d));
    }
    return std::min(0.5 * sum, 1.0);
}

double ks_uniform(std::span<const double> data, Base base) {
    return ks_sorted(usable_log_significands(data, base));
}

double ks_uniform(std::span<const SignificandDecomposition> data, Base base) {
    std::vector<double> u;
    u.reserve(data.size());
    for (const auto& d : data) {
        u.push_back(log_map(d.significand, base));
    }
    return ks_sorted(std::move(u));
}

ConformanceReport analyze_conformance(std::span<const double> data, Base base) {
    auto hist = digit_histogram(data, base);
    const double ks = ks_uniform(data, base);
    return build_report(std::move(hist.histogram), ks, hist.skipped);
}

ConformanceReport analyze_conformance(std::span<const SignificandDecomposition> data,
                                      Base base) {
    auto hist = digit_histogram(data, base);
    const double ks = ks_uniform(data, base);
    return build_report(std::move(hist), ks, {});
}

}  // namespace benford
