#pragma once

#include <cmath>
#include <compare>

namespace benford {

/// Integer radix b >= 2. Carries ln(b) so callers never recompute it.
class Base {
public:
    explicit Base(int b);

    int value() const noexcept { return b_; }
    double real() const noexcept { return static_cast<double>(b_); }
    double log() const noexcept { return log_b_; }

    friend bool operator==(const Base& a, const Base& b) noexcept { return a.b_ == b.b_; }

private:
    int b_;
    double log_b_;
};

/// value = significand * base^exponent with 1 <= significand < base.
struct SignificandDecomposition {
    double significand = 1.0;
    long long exponent = 0;
    Base base{10};

    /// Recombines into a double; overflows to inf / underflows to 0 outside range.
    double value() const;
    /// Natural log of the represented magnitude; never overflows.
    double log_magnitude() const;
};

/// Splits a positive finite value into significand and exponent.
/// Exact powers of the base (as the nearest double) give significand 1.0.
/// Throws NonPositiveInput for value <= 0, NaN or infinity.
SignificandDecomposition decompose(double value, Base base);

/// Integer part of the significand, in [1, b-1].
int first_digit(double value, Base base);

/// The isomorphism [1, b) -> [0, 1), s -> ln s / ln b.
double log_map(double s, Base base);

/// Multiplication in the quotient group: s1*s2, divided by b when it reaches b.
double mul_mod_b(double s1, double s2, Base base);

/// True when s lies in [1, b).
inline bool in_significand_range(double s, Base base) noexcept {
    return s >= 1.0 && s < base.real();
}

}  // namespace benford
