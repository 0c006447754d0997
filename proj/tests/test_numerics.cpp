#include <doctest.h>

#include <cmath>
#include <vector>

#include "knlq/numerics.hpp"

using namespace knlq;

TEST_CASE("normal_cdf reference values") {
    CHECK(normal_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(normal_cdf(1.0) == doctest::Approx(0.8413447460685429).epsilon(1e-10));
    CHECK(normal_cdf(-1.959963984540054) == doctest::Approx(0.025).epsilon(1e-9));
}

TEST_CASE("inverse_normal_cdf inverts the CDF") {
    for (double p : {0.001, 0.025, 0.25, 0.5, 0.6745, 0.9, 0.999}) {
        const double x = inverse_normal_cdf(p);
        CHECK(normal_cdf(x) == doctest::Approx(p).epsilon(1e-12));
    }
    CHECK(inverse_normal_cdf(0.75) ==
          doctest::Approx(0.6744897501960817).epsilon(1e-10));
    CHECK(inverse_normal_cdf(0.95) ==
          doctest::Approx(1.6448536269514722).epsilon(1e-10));
}

TEST_CASE("adaptive_simpson integrates smooth functions") {
    const double i1 =
        adaptive_simpson([](double x) { return x * x; }, 0.0, 1.0, 1e-12);
    CHECK(i1 == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
    const double i2 =
        adaptive_simpson([](double x) { return std::exp(-x * x); }, 0.0, 5.0,
                         1e-12);
    CHECK(i2 == doctest::Approx(std::sqrt(M_PI) / 2.0).epsilon(1e-9));
}

TEST_CASE("adaptive_simpson reports unattainable tolerance") {
    // A needle the fixed-depth recursion cannot resolve to 1e-14.
    auto needle = [](double x) {
        return 1.0 / (1e-24 + (x - 0.123456789) * (x - 0.123456789));
    };
    CHECK_THROWS_AS(adaptive_simpson(needle, 0.0, 1.0, 1e-14, 8),
                    IntegrationFailure);
}

TEST_CASE("pairwise_sum is exact on integers and order-fixed") {
    std::vector<double> v(1000);
    for (int i = 0; i < 1000; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    CHECK(pairwise_sum(v) == 500500.0);
    CHECK(pairwise_sum(std::vector<double>{}) == 0.0);
    CHECK(pairwise_sum(std::vector<double>{3.5}) == 3.5);
}

TEST_CASE("mean_and_std_error") {
    const std::vector<double> v{1.0, 2.0, 3.0, 4.0};
    const auto r = mean_and_std_error(v);
    CHECK(r.mean == doctest::Approx(2.5).epsilon(1e-14));
    // sample sd = sqrt(5/3), se = sd/2
    CHECK(r.std_error ==
          doctest::Approx(std::sqrt(5.0 / 3.0) / 2.0).epsilon(1e-12));
    const auto single = mean_and_std_error(std::vector<double>{7.0});
    CHECK(single.mean == 7.0);
    CHECK(single.std_error == 0.0);
}

TEST_CASE("quantile_type7 interpolates order statistics") {
    const std::vector<double> v{1.0, 2.0, 3.0, 4.0};
    CHECK(quantile_type7(v, 0.0) == 1.0);
    CHECK(quantile_type7(v, 1.0) == 4.0);
    CHECK(quantile_type7(v, 0.5) == doctest::Approx(2.5).epsilon(1e-14));
    // h = (n-1)p = 0.75 -> between the first two values
    CHECK(quantile_type7(v, 0.25) == doctest::Approx(1.75).epsilon(1e-14));
}

TEST_CASE("ks_two_sample on identical and disjoint samples") {
    std::vector<double> a{1.0, 2.0, 3.0, 4.0, 5.0};
    const auto same = ks_two_sample(a, a);
    CHECK(same.statistic == doctest::Approx(0.0));
    CHECK(same.p_value > 0.99);
    std::vector<double> b{10.0, 11.0, 12.0, 13.0, 14.0};
    const auto diff = ks_two_sample(a, b);
    CHECK(diff.statistic == doctest::Approx(1.0));
    CHECK(diff.p_value < 0.05);
}
