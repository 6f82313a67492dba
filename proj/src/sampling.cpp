#include "benford/conformance.hpp"
#include "benford/nb.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace benford {

namespace {

// Uniform on [0, 1) from the top 53 bits.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

class NormalStream {
public:
    explicit NormalStream(std::uint64_t seed) : rng_(seed) {}

    double next() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform01(rng_);  // (0, 1]
        const double u2 = uniform01(rng_);
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace

std::vector<double> sample_nb(std::size_t n, Base base, std::uint64_t seed) {
    const NBDistribution nb(base);
    std::mt19937_64 rng(seed);
    std::vector<double> out(n);
    for (auto& v : out) {
        v = nb.quantile(uniform01(rng));
    }
    return out;
}

std::vector<double> sample_lognormal(std::size_t n, const LogNormalParams& p,
                                     std::uint64_t seed) {
    NormalStream normals(seed);
    std::vector<double> out(n);
    for (auto& v : out) {
        v = std::exp(p.M + p.s * normals.next());
    }
    return out;
}

std::vector<double> sample_mixture(std::size_t n, const MixtureParams& mix, std::uint64_t seed) {
    NormalStream normals(seed);
    const auto& parts = mix.components();
    std::vector<double> out(n);
    for (auto& v : out) {
        double pick = uniform01(normals.engine());
        std::size_t i = 0;
        while (i + 1 < parts.size() && pick >= parts[i].weight) {
            pick -= parts[i].weight;
            ++i;
        }
        v = std::exp(parts[i].params.M + parts[i].params.s * normals.next());
    }
    return out;
}

}  // namespace benford
