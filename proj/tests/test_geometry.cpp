#include <doctest.h>

#include <cmath>
#include <vector>

#include "knlq/geometry.hpp"
#include "knlq/numerics.hpp"
#include "knlq/samplers.hpp"

using namespace knlq;

namespace {
SampleSet make_set(std::vector<double> data, std::int64_t N, int n) {
    SampleSet s;
    s.data = std::move(data);
    s.N = N;
    s.n = n;
    return s;
}
}  // namespace

TEST_CASE("support_value frozen examples") {
    const SampleSet s = make_set({1.0, 0.0, 0.0, 1.0}, 2, 2);
    const Direction e1 = Direction::from_coords({1.0, 0.0});
    CHECK(support_value(s, e1, 1, 1.0) == doctest::Approx(1.0));
    CHECK(support_value(s, e1, 2, 2.0) ==
          doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("support_value ell=N identity and dimension check") {
    const auto s = sample_set(ModelSpec::gaussian(),
                              validate_params(3, 20, std::int64_t{1}, 1.0), 5, 0);
    RngStream rng(5, 0, 9);
    const Direction theta = sample_unit_direction(3, rng);
    for (double q : {1.0, 2.0, 3.0}) {
        const auto m = marginals(s, theta);
        double acc = 0.0;
        for (double x : m) acc += std::pow(std::abs(x), q);
        const double expected = std::pow(20.0, -1.0 / q) * std::pow(acc, 1.0 / q);
        CHECK(support_value(s, theta, 20, q) ==
              doctest::Approx(expected).epsilon(1e-12));
    }
    const Direction wrong = Direction::from_coords({1.0, 0.0});
    CHECK_THROWS_AS(support_value(s, wrong, 1, 1.0), DimensionMismatch);
}

TEST_CASE("support_value positive homogeneity and subadditivity") {
    const auto base = sample_set(ModelSpec::gaussian(),
                                 validate_params(4, 16, std::int64_t{1}, 1.0), 6, 0);
    RngStream rng(6, 0, 9);
    const Direction t1 = sample_unit_direction(4, rng);
    const Direction t2 = sample_unit_direction(4, rng);
    SampleSet scaled = base;
    for (double& x : scaled.data) x *= 2.5;
    CHECK(support_value(scaled, t1, 4, 2.0) ==
          doctest::Approx(2.5 * support_value(base, t1, 4, 2.0)).epsilon(1e-12));

    // h extended 1-homogeneously: h(t1 + t2) <= h(t1) + h(t2).
    std::vector<double> sum(4);
    double norm = 0.0;
    for (int i = 0; i < 4; ++i) {
        sum[static_cast<std::size_t>(i)] = t1.coords[static_cast<std::size_t>(i)] +
                                           t2.coords[static_cast<std::size_t>(i)];
        norm += sum[static_cast<std::size_t>(i)] * sum[static_cast<std::size_t>(i)];
    }
    norm = std::sqrt(norm);
    for (double& x : sum) x /= norm;
    const Direction mid = Direction::from_coords(sum);
    const double h_sum = norm * support_value(base, mid, 4, 2.0);
    CHECK(h_sum <= support_value(base, t1, 4, 2.0) +
                       support_value(base, t2, 4, 2.0) + 1e-12);
}

TEST_CASE("mean width at ell=N q=2 concentrates at 1 for the Gaussian") {
    const Params params = validate_params(4, 10000, std::int64_t{10000}, 2.0);
    MeanWidthConfig cfg;
    cfg.n_replicates = 40;
    cfg.n_directions = 8;
    const auto est = mean_width_estimate(ModelSpec::gaussian(), params, cfg, 21);
    CHECK(std::abs(est.value - 1.0) <= std::max(3.0 * est.std_error, 1e-3));
}

TEST_CASE("mean width N=1 ell=1 q=1 is E|g| for the Gaussian") {
    const Params params = validate_params(3, 1, std::int64_t{1}, 1.0);
    MeanWidthConfig cfg;
    cfg.n_replicates = 400;
    cfg.n_directions = 16;
    const auto est = mean_width_estimate(ModelSpec::gaussian(), params, cfg, 22);
    CHECK(std::abs(est.value - std::sqrt(2.0 / M_PI)) <= 3.0 * est.std_error);
    CHECK(est.n_replicates == 400);
    CHECK(est.std_error > 0.0);
}

TEST_CASE("support expectation is rotation invariant for the Gaussian") {
    const Params params = validate_params(8, 64, std::int64_t{4}, 2.0);
    RngStream rng(23, 0, 9);
    const Direction t1 = sample_unit_direction(8, rng);
    const Direction t2 = sample_unit_direction(8, rng);
    const auto e1 =
        support_expectation_estimate(ModelSpec::gaussian(), params, t1, 800, 23);
    const auto e2 =
        support_expectation_estimate(ModelSpec::gaussian(), params, t2, 800, 24);
    const double se = std::hypot(e1.std_error, e2.std_error);
    CHECK(std::abs(e1.value - e2.value) <= 3.0 * se);
}

TEST_CASE("1-D cone support is exactly 1") {
    const Params params = validate_params(1, 4, std::int64_t{1}, 1.0);
    const Direction e1 = Direction::from_coords({1.0});
    const auto est = support_expectation_estimate(ModelSpec::cone_lp(3.0), params,
                                                  e1, 50, 31);
    CHECK(est.value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(est.std_error == doctest::Approx(0.0));
}

TEST_CASE("centroid support estimates Gaussian moments") {
    RngStream rng(25, 0, 9);
    const Direction theta = sample_unit_direction(5, rng);
    const auto q2 = centroid_support_estimate(ModelSpec::gaussian(), 5, 2.0,
                                              theta, 200000, 25);
    CHECK(q2.value == doctest::Approx(1.0).epsilon(0.01));
    const auto q1 = centroid_support_estimate(ModelSpec::gaussian(), 5, 1.0,
                                              theta, 200000, 26);
    CHECK(q1.value == doctest::Approx(std::sqrt(2.0 / M_PI)).epsilon(0.01));
    const auto q4 = centroid_support_estimate(ModelSpec::gaussian(), 5, 4.0,
                                              theta, 200000, 27);
    CHECK(q4.value == doctest::Approx(std::pow(3.0, 0.25)).epsilon(0.02));
}

TEST_CASE("floating support estimates Gaussian quantiles") {
    RngStream rng(28, 0, 9);
    const Direction theta = sample_unit_direction(4, rng);
    const auto d1 = floating_support_estimate(ModelSpec::gaussian(), 4, 0.1,
                                              theta, 200000, 28);
    CHECK(d1.value == doctest::Approx(1.6449).epsilon(0.01));
    const double delta2 = std::exp(-2.0);
    const auto d2 = floating_support_estimate(ModelSpec::gaussian(), 4, delta2,
                                              theta, 200000, 29);
    CHECK(d2.value ==
          doctest::Approx(inverse_normal_cdf(1.0 - delta2 / 2.0)).epsilon(0.01));
}

TEST_CASE("floating support input validation") {
    const Direction e1 = Direction::from_coords({1.0});
    CHECK_THROWS_AS(floating_support_estimate(ModelSpec::gaussian(), 1, 0.5, e1,
                                              10000, 1),
                    DeltaOutOfRange);
    CHECK_THROWS_AS(floating_support_estimate(ModelSpec::gaussian(), 1, -0.1, e1,
                                              10000, 1),
                    DeltaOutOfRange);
    CHECK_THROWS_AS(floating_support_estimate(ModelSpec::gaussian(), 1, 0.01, e1,
                                              100, 1),
                    InsufficientSamples);
}

TEST_CASE("comparison_ratio identities and zero handling") {
    const Params params = validate_params(3, 12, std::int64_t{2}, 1.5);
    const auto s = sample_set(ModelSpec::gaussian(), params, 33, 0);
    RngStream rng(33, 0, 9);
    const Direction theta = sample_unit_direction(3, rng);
    CHECK(comparison_ratio(s, s, theta, params, params) ==
          doctest::Approx(1.0).epsilon(1e-12));
    SampleSet zero = s;
    for (double& x : zero.data) x = 0.0;
    CHECK_THROWS_AS(comparison_ratio(s, zero, theta, params, params),
                    DivisionByZero);
}

TEST_CASE("block comparison: E h(N, ell, 1) matches E h(N/ell, 1, 1) up to constants") {
    // Average support ratios over replicates for (N=100, ell=10) vs (N=10, ell=1).
    const Params pa = validate_params(4, 100, std::int64_t{10}, 1.0);
    const Params pb = validate_params(4, 10, std::int64_t{1}, 1.0);
    double sa = 0.0, sb = 0.0;
    RngStream dir_rng(40, 0, 9);
    const Direction theta = sample_unit_direction(4, dir_rng);
    for (std::uint64_t r = 0; r < 400; ++r) {
        const auto a = sample_set(ModelSpec::gaussian(), pa, 41, r);
        const auto b = sample_set(ModelSpec::gaussian(), pb, 42, r);
        sa += support_value(a, theta, 10, 1.0);
        sb += support_value(b, theta, 1, 1.0);
    }
    const double ratio = sa / sb;
    CHECK(ratio >= 1.0 / 8.0);
    CHECK(ratio <= 8.0);
}
