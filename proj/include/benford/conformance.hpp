#pragma once

#include "benford/significand.hpp"
#include "benford/wrapping.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace benford {

/// First-digit counts; index d-1 holds digit d.
class DigitHistogram {
public:
    explicit DigitHistogram(Base base);
    DigitHistogram(Base base, std::vector<std::uint64_t> counts);

    void add(int digit);

    Base base() const noexcept { return base_; }
    const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }
    std::uint64_t count(int digit) const;
    std::uint64_t total() const noexcept { return total_; }
    double frequency(int digit) const;

    /// Adds another histogram of the same base, e.g. a per-chunk partial.
    DigitHistogram& operator+=(const DigitHistogram& other);

private:
    Base base_;
    std::vector<std::uint64_t> counts_;
    std::uint64_t total_ = 0;
};

struct SkipCounts {
    std::size_t nonpositive = 0;
    std::size_t nonfinite = 0;

    std::size_t total() const noexcept { return nonpositive + nonfinite; }
};

struct HistogramResult {
    DigitHistogram histogram;
    SkipCounts skipped;
};

/// Bins every positive finite entry by first digit. Nonfinite values (NaN,
/// +-inf) and nonpositive values are counted, not binned.
/// Throws EmptyData when nothing usable remains.
HistogramResult digit_histogram(std::span<const double> data, Base base);
DigitHistogram digit_histogram(std::span<const SignificandDecomposition> data, Base base);

struct ChiSquareResult {
    double statistic;
    double pvalue;
    int degrees_of_freedom;
};

/// Pearson chi-square against NB expected counts, b-2 degrees of freedom.
/// Throws InsufficientData when total < 5 (b - 1).
ChiSquareResult chi_square(const DigitHistogram& hist);

/// Half the L1 distance between observed digit frequencies and NB probabilities.
double tv_distance(const DigitHistogram& hist);

/// Kolmogorov-Smirnov distance between the empirical law of log_b(significand)
/// and U[0, 1), by the sorted-sample formula. Unusable entries are ignored.
/// Throws EmptyData when nothing usable remains.
double ks_uniform(std::span<const double> data, Base base);
double ks_uniform(std::span<const SignificandDecomposition> data, Base base);

struct ConformanceReport {
    DigitHistogram histogram;
    double chi_square = 0.0;
    double chi_square_pvalue = 1.0;
    int chi_square_dof = 0;
    double ks_stat = 0.0;
    double tv_distance = 0.0;
    std::size_t n_skipped_nonpositive = 0;
    std::size_t n_skipped_nonfinite = 0;
};

ConformanceReport analyze_conformance(std::span<const double> data, Base base);
ConformanceReport analyze_conformance(std::span<const SignificandDecomposition> data, Base base);

// Samplers. Deterministic per seed: mt19937_64 with explicit 53-bit uniform
// conversion and Box-Muller normals, so output does not depend on the
// standard library's distribution implementations.

/// n draws from the NB law on [1, b) by inverse cdf.
std::vector<double> sample_nb(std::size_t n, Base base, std::uint64_t seed);

/// n draws of exp(M + s Z).
std::vector<double> sample_lognormal(std::size_t n, const LogNormalParams& p, std::uint64_t seed);

/// n draws from a log-normal mixture.
std::vector<double> sample_mixture(std::size_t n, const MixtureParams& mix, std::uint64_t seed);

// Deterministic sequences, carried as (significand, exponent) so terms never
// overflow.

struct SequenceKind {
    enum class Type { Pow2, Factorial, Fibonacci, Geometric };

    Type type = Type::Pow2;
    double ratio = 0.0;  // Geometric only

    static SequenceKind pow2() { return {Type::Pow2, 0.0}; }
    static SequenceKind factorial() { return {Type::Factorial, 0.0}; }
    static SequenceKind fibonacci() { return {Type::Fibonacci, 0.0}; }
    static SequenceKind geometric(double r) { return {Type::Geometric, r}; }
};

inline constexpr std::size_t kMaxFactorialTerms = 10000;

/// Product of two decomposed magnitudes in the same base.
SignificandDecomposition multiply(const SignificandDecomposition& a,
                                  const SignificandDecomposition& b);
/// Sum of two decomposed magnitudes in the same base.
SignificandDecomposition add(const SignificandDecomposition& a, const SignificandDecomposition& b);

/// First n terms: pow2 = 2, 4, 8, ...; factorial = 1!, 2!, ...; fibonacci =
/// 1, 1, 2, 3, ...; geometric(r) = r, r^2, .... Geometric ratios equal to an
/// integer power of b throw UnsupportedRatio.
std::vector<SignificandDecomposition> gen_sequence(const SequenceKind& kind, std::size_t n,
                                                   Base base);

}  // namespace benford
