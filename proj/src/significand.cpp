#include "benford/significand.hpp"

#include "benford/error.hpp"

#include <cmath>
#include <string>

namespace benford {

namespace {

int checked_base(int b) {
    if (b < 2) {
        throw DomainError("base must be >= 2, got " + std::to_string(b));
    }
    return b;
}

// Nearest double to b^k. Shared with callers that test "is this an exact power".
double power_as_double(int b, long long k) {
    return std::pow(static_cast<double>(b), static_cast<double>(k));
}

}  // namespace

Base::Base(int b) : b_(checked_base(b)), log_b_(std::log(static_cast<double>(b_))) {}

double SignificandDecomposition::value() const {
    const long double p = std::pow(static_cast<long double>(base.value()),
                                   static_cast<long double>(exponent));
    return static_cast<double>(static_cast<long double>(significand) * p);
}

double SignificandDecomposition::log_magnitude() const {
    return std::log(significand) + static_cast<double>(exponent) * base.log();
}

SignificandDecomposition decompose(double value, Base base) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw NonPositiveInput("decompose: value must be positive and finite");
    }
    const int b = base.value();

    if (b == 2) {
        int e = 0;
        const double m = std::frexp(value, &e);
        return {2.0 * m, static_cast<long long>(e) - 1, base};
    }

    long long k = static_cast<long long>(std::floor(std::log(value) / base.log()));
    // The log estimate can be off by one near exact powers; settle it against
    // the powers themselves.
    for (int step = 0; step < 2; ++step) {
        if (value < power_as_double(b, k)) {
            --k;
        } else if (value >= power_as_double(b, k + 1)) {
            ++k;
        } else {
            break;
        }
    }

    const double p = power_as_double(b, k);
    double s = 0.0;
    if (std::isnormal(p)) {
        s = value / p;
    } else {
        // Subnormal inputs or extreme exponents: scale in extended range.
        const long double pl = std::pow(static_cast<long double>(b), static_cast<long double>(k));
        s = static_cast<double>(static_cast<long double>(value) / pl);
    }

    if (s >= base.real()) {
        s = std::nextafter(base.real(), 0.0);
    } else if (s < 1.0) {
        s = 1.0;
    }
    return {s, k, base};
}

int first_digit(double value, Base base) {
    const auto d = decompose(value, base);
    const int digit = static_cast<int>(d.significand);
    return digit < 1 ? 1 : (digit > base.value() - 1 ? base.value() - 1 : digit);
}

double log_map(double s, Base base) {
    if (!in_significand_range(s, base)) {
        throw DomainError("log_map: significand outside [1, b)");
    }
    const double u = std::log(s) / base.log();
    return u < 1.0 ? u : std::nextafter(1.0, 0.0);
}

double mul_mod_b(double s1, double s2, Base base) {
    if (!in_significand_range(s1, base) || !in_significand_range(s2, base)) {
        throw DomainError("mul_mod_b: operands must lie in [1, b)");
    }
    double p = s1 * s2;
    if (p >= base.real()) {
        p /= base.real();
    }
    if (p >= base.real()) {
        p = std::nextafter(base.real(), 0.0);
    }
    return p;
}

}  // namespace benford
