#include "benford/conformance.hpp"
#include "benford/error.hpp"

#include <cmath>
#include <string>

namespace benford {

SignificandDecomposition multiply(const SignificandDecomposition& a,
                                  const SignificandDecomposition& b) {
    if (!(a.base == b.base)) {
        throw DomainError("multiply: mismatched bases");
    }
    const Base base = a.base;
    const bool carry = a.significand * b.significand >= base.real();
    return {mul_mod_b(a.significand, b.significand, base),
            a.exponent + b.exponent + (carry ? 1 : 0), base};
}

SignificandDecomposition add(const SignificandDecomposition& a, const SignificandDecomposition& b) {
    if (!(a.base == b.base)) {
        throw DomainError("add: mismatched bases");
    }
    const Base base = a.base;
    const auto& big = a.exponent >= b.exponent ? a : b;
    const auto& small = a.exponent >= b.exponent ? b : a;
    const long long gap = big.exponent - small.exponent;
    double s = big.significand;
    // Beyond ~1100 decades of base 2 the smaller term is below any double ulp.
    if (gap < 1100) {
        s += small.significand * std::pow(base.real(), static_cast<double>(-gap));
    }
    long long k = big.exponent;
    if (s >= base.real()) {
        s /= base.real();
        ++k;
    }
    if (s >= base.real()) {
        s = std::nextafter(base.real(), 0.0);
    }
    return {s, k, base};
}

std::vector<SignificandDecomposition> gen_sequence(const SequenceKind& kind, std::size_t n,
                                                   Base base) {
    if (n < 1) {
        throw DomainError("sequence length must be >= 1");
    }
    std::vector<SignificandDecomposition> terms;
    terms.reserve(n);

    switch (kind.type) {
        case SequenceKind::Type::Pow2:
        case SequenceKind::Type::Geometric: {
            const double ratio = kind.type == SequenceKind::Type::Pow2 ? 2.0 : kind.ratio;
            if (!(ratio > 0.0) || !std::isfinite(ratio)) {
                throw UnsupportedRatio("geometric ratio must be positive and finite");
            }
            const auto step = decompose(ratio, base);
            if (step.significand == 1.0) {
                throw UnsupportedRatio("ratio " + std::to_string(ratio) +
                                       " is an integer power of the base; every term has the "
                                       "same significand");
            }
            auto term = step;
            terms.push_back(term);
            while (terms.size() < n) {
                term = multiply(term, step);
                terms.push_back(term);
            }
            break;
        }
        case SequenceKind::Type::Factorial: {
            if (n > kMaxFactorialTerms) {
                throw DomainError("factorial sequence is limited to " +
                                  std::to_string(kMaxFactorialTerms) + " terms");
            }
            auto term = decompose(1.0, base);
            for (std::size_t m = 1; m <= n; ++m) {
                term = multiply(term, decompose(static_cast<double>(m), base));
                terms.push_back(term);
            }
            break;
        }
        case SequenceKind::Type::Fibonacci: {
            auto prev = decompose(1.0, base);
            auto curr = prev;
            terms.push_back(prev);
            while (terms.size() < n) {
                terms.push_back(curr);
                auto next = add(prev, curr);
                prev = curr;
                curr = next;
            }
            break;
        }
    }
    return terms;
}

}  // namespace benford
