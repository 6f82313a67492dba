#include "benford/error.hpp"
#include "benford/nb.hpp"
#include "benford/quadrature.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace benford;

namespace {

bool inside(const IntervalSet& set, double y, double slack) {
    return std::any_of(set.intervals().begin(), set.intervals().end(), [&](const auto& iv) {
        return y >= iv.lo() - slack && y <= iv.hi() + slack;
    });
}

// Maps a dense grid of iv through mul_mod_b and checks the claimed image:
// every mapped point lies in the set and every set endpoint is hit by the grid.
void check_against_grid(double lambda, const SignificandInterval& iv, const IntervalSet& image) {
    const Base base = iv.base();
    constexpr int kPoints = 10000;
    std::vector<double> mapped;
    mapped.reserve(kPoints);
    for (int i = 0; i < kPoints; ++i) {
        const double x = iv.lo() + (iv.hi() - iv.lo()) * i / (kPoints - 1);
        const double xx = std::min(x, std::nextafter(base.real(), 0.0));
        mapped.push_back(mul_mod_b(lambda, xx, base));
    }
    for (double y : mapped) {
        REQUIRE(inside(image, y, 1e-12));
    }
    const double spacing = lambda * (iv.hi() - iv.lo()) / (kPoints - 1) + 1e-12;
    for (const auto& piece : image.intervals()) {
        for (double end : {piece.lo(), piece.hi()}) {
            // b and 1 are the same point of the quotient group.
            const double closest = std::transform_reduce(
                mapped.begin(), mapped.end(), std::numeric_limits<double>::infinity(),
                [](double a, double b) { return std::min(a, b); },
                [&](double y) {
                    return std::min({std::abs(y - end), std::abs(y * base.real() - end),
                                     std::abs(y - end * base.real())});
                });
            CHECK(closest <= spacing);
        }
    }
}

}  // namespace

TEST_CASE("nb pdf") {
    CHECK(NBDistribution(Base(10)).pdf(1.0) == doctest::Approx(0.434294481903).epsilon(1e-12));
    CHECK(NBDistribution(Base(2)).pdf(1.0) == doctest::Approx(1.442695040889).epsilon(1e-12));
    const NBDistribution nb(Base(10));
    CHECK(nb.pdf(std::nextafter(10.0, 0.0)) < nb.pdf(1.0));
    CHECK_THROWS_AS(nb.pdf(0.99), DomainError);
    CHECK_THROWS_AS(nb.pdf(10.0), DomainError);
}

TEST_CASE("nb cdf") {
    CHECK(NBDistribution(Base(10)).cdf(2.0) == doctest::Approx(0.301029995664).epsilon(1e-12));
    CHECK(NBDistribution(Base(7)).cdf(1.0) == 0.0);
    CHECK(NBDistribution(Base(2)).cdf(2.0) == 1.0);
    CHECK(NBDistribution(Base(10)).cdf(10.0) == 1.0);
    CHECK_THROWS_AS(NBDistribution(Base(10)).cdf(10.5), DomainError);
    CHECK_THROWS_AS(NBDistribution(Base(10)).cdf(0.5), DomainError);
}

TEST_CASE("nb quantile") {
    const NBDistribution nb(Base(10));
    CHECK(nb.quantile(0.0) == 1.0);
    CHECK(nb.quantile(1.0) == 10.0);
    CHECK(nb.quantile(0.5) == doctest::Approx(3.16227766017).epsilon(1e-12));
    CHECK_THROWS_AS(nb.quantile(-0.1), DomainError);
    CHECK_THROWS_AS(nb.quantile(1.1), DomainError);

    for (int b : {2, 3, 10, 16, 60}) {
        const NBDistribution d{Base(b)};
        double worst = 0.0;
        for (int i = 0; i <= 1000; ++i) {
            const double u = i / 1000.0;
            worst = std::max(worst, std::abs(d.cdf(d.quantile(u)) - u));
        }
        CHECK_MESSAGE(worst <= 1e-12, "base " << b);
    }
}

TEST_CASE("first digit probabilities") {
    const NBDistribution ten(Base(10));
    CHECK(ten.first_digit_prob(1) == doctest::Approx(0.301029995664).epsilon(1e-12));
    CHECK(ten.first_digit_prob(2) == doctest::Approx(0.176091259056).epsilon(1e-12));
    CHECK(NBDistribution(Base(2)).first_digit_prob(1) == 1.0);
    CHECK_THROWS_AS(ten.first_digit_prob(0), DomainError);
    CHECK_THROWS_AS(ten.first_digit_prob(10), DomainError);

    for (int b : {2, 3, 10, 16, 60}) {
        const NBDistribution d{Base(b)};
        double sum = 0.0;
        for (int k = 1; k < b; ++k) {
            sum += d.first_digit_prob(k);
            CHECK(d.first_digit_prob(k) ==
                  doctest::Approx(d.cdf(k + 1.0) - d.cdf(k)).epsilon(1e-13));
        }
        CHECK(std::abs(sum - 1.0) <= 1e-12);
    }
}

TEST_CASE("nb pdf integrates to one") {
    for (int b : {2, 3, 10, 16, 60}) {
        const NBDistribution d{Base(b)};
        const auto f = [&](double x) { return x < b ? d.pdf(x) : 1.0 / (x * std::log(b)); };
        CHECK(std::abs(oracle::simpson(f, 1.0, b, 200000) - 1.0) <= 1e-10);
        CHECK(std::abs(integrate(f, 1.0, b).value - 1.0) <= 1e-10);
    }
}

TEST_CASE("interval measure") {
    const Base ten(10);
    const NBDistribution nb(ten);
    CHECK(nb.interval_measure(SignificandInterval(1.0, 10.0, ten)) == 1.0);
    CHECK(nb.interval_measure(SignificandInterval(2.0, 3.0, ten)) ==
          doctest::Approx(0.176091259056).epsilon(1e-12));
    CHECK(nb.interval_measure(SignificandInterval(4.2, 4.2, ten)) == 0.0);
    CHECK_THROWS_AS(SignificandInterval(3.0, 2.0, ten), DomainError);
    CHECK_THROWS_AS(SignificandInterval(0.5, 2.0, ten), DomainError);
    CHECK_THROWS_AS(SignificandInterval(2.0, 10.5, ten), DomainError);

    // additive over a split
    const double whole = nb.interval_measure(SignificandInterval(1.5, 7.0, ten));
    const double parts = nb.measure_of_set(IntervalSet(
        {SignificandInterval(1.5, 4.0, ten), SignificandInterval(4.0, 7.0, ten)}, ten));
    CHECK(whole == doctest::Approx(parts).epsilon(1e-14));
}

TEST_CASE("interval set validation") {
    const Base ten(10);
    CHECK_THROWS_AS(IntervalSet({SignificandInterval(1.0, 3.0, ten), SignificandInterval(2.0, 4.0, ten)},
                                ten),
                    DomainError);
    const IntervalSet sorted({SignificandInterval(5.0, 6.0, ten), SignificandInterval(1.0, 2.0, ten)},
                             ten);
    CHECK(sorted.intervals()[0].lo() == 1.0);
    CHECK(NBDistribution(ten).measure_of_set(IntervalSet(ten)) == 0.0);
    CHECK(NBDistribution(ten).measure_of_set(
              IntervalSet({SignificandInterval(1.0, 10.0, ten)}, ten)) == 1.0);
}

TEST_CASE("scale_interval: the three cases") {
    const Base ten(10);
    const NBDistribution nb(ten);
    const SignificandInterval iv23(2.0, 3.0, ten);

    SUBCASE("identity") {
        const auto img = scale_interval(1.0, iv23);
        REQUIRE(img.size() == 1);
        CHECK(img.intervals()[0].lo() == 2.0);
        CHECK(img.intervals()[0].hi() == 3.0);
    }
    SUBCASE("no wrap") {
        CHECK(wrap_case(2.0, iv23) == WrapCase::NoWrap);
        const auto img = scale_interval(2.0, iv23);
        REQUIRE(img.size() == 1);
        CHECK(img.intervals()[0].lo() == 4.0);
        CHECK(img.intervals()[0].hi() == 6.0);
        check_against_grid(2.0, iv23, img);
    }
    SUBCASE("straddles b") {
        CHECK(wrap_case(4.0, iv23) == WrapCase::Straddle);
        const auto img = scale_interval(4.0, iv23);
        REQUIRE(img.size() == 2);
        CHECK(img.intervals()[0].lo() == 1.0);
        CHECK(img.intervals()[0].hi() == doctest::Approx(1.2).epsilon(1e-15));
        CHECK(img.intervals()[1].lo() == 8.0);
        CHECK(img.intervals()[1].hi() == 10.0);
        check_against_grid(4.0, iv23, img);
        CHECK(nb.measure_of_set(img) == doctest::Approx(0.176091259056).epsilon(1e-12));
    }
    SUBCASE("fully wrapped") {
        const SignificandInterval iv46(4.0, 6.0, ten);
        CHECK(wrap_case(5.0, iv46) == WrapCase::FullWrap);
        const auto img = scale_interval(5.0, iv46);
        REQUIRE(img.size() == 1);
        CHECK(img.intervals()[0].lo() == doctest::Approx(2.0).epsilon(1e-15));
        CHECK(img.intervals()[0].hi() == doctest::Approx(3.0).epsilon(1e-15));
        check_against_grid(5.0, iv46, img);
    }
    SUBCASE("bad scale factor") {
        CHECK_THROWS_AS(scale_interval(0.5, iv23), DomainError);
        CHECK_THROWS_AS(scale_interval(10.0, iv23), DomainError);
    }
}

TEST_CASE("scale invariance of the NB measure") {
    std::mt19937_64 rng(4242);
    for (int b : {2, 3, 10, 16, 60}) {
        const Base base(b);
        const NBDistribution nb(base);
        std::uniform_real_distribution<double> sig(1.0, base.real());
        int cases[3] = {0, 0, 0};
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            double x1 = sig(rng);
            double x2 = sig(rng);
            if (x1 > x2) std::swap(x1, x2);
            const double lambda = sig(rng);
            const SignificandInterval iv(x1, x2, base);
            ++cases[static_cast<int>(wrap_case(lambda, iv))];
            const auto img = scale_interval(lambda, iv);
            worst = std::max(worst, std::abs(nb.measure_of_set(img) - nb.interval_measure(iv)));
            if (i < 20) check_against_grid(lambda, iv, img);
        }
        CHECK_MESSAGE(worst <= 1e-12, "base " << b);
        CHECK(cases[0] > 0);
        CHECK(cases[1] > 0);
        CHECK(cases[2] > 0);
    }
}
