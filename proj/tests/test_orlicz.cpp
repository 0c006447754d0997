#include <doctest.h>

#include <cmath>
#include <memory>
#include <vector>

#include "knlq/numerics.hpp"
#include "knlq/orlicz.hpp"
#include "knlq/rng.hpp"

using namespace knlq;

TEST_CASE("quantile_function on the half-normal and constant laws") {
    HalfNormalDistribution hn;
    // Median of |g| is the 0.75 normal quantile.
    CHECK(quantile_function(hn, 0.5) == doctest::Approx(0.6745).epsilon(1e-3));
    CHECK(quantile_function(hn, 1.0) == doctest::Approx(0.0).epsilon(1e-9));
    ConstantDistribution c(2.5);
    CHECK(quantile_function(c, 0.1) == 2.5);
    CHECK(quantile_function(c, 0.9) == 2.5);
    CHECK_THROWS_AS(quantile_function(hn, -0.1), OutOfRange);
    CHECK_THROWS_AS(quantile_function(hn, 1.1), OutOfRange);
}

TEST_CASE("m_ell basics") {
    HalfNormalDistribution hn;
    CHECK(m_ell_from_distribution(hn, 1, 0.0) == 0.0);
    // For large s, M_1(s) has slope E|g| = sqrt(2/pi).
    const double s = 50.0;
    const double slope = (m_ell_from_distribution(hn, 1, s + 1.0) -
                          m_ell_from_distribution(hn, 1, s));
    CHECK(slope == doctest::Approx(std::sqrt(2.0 / M_PI)).epsilon(1e-3));
}

TEST_CASE("scaling law ell M_ell(s) = M_1(ell s)") {
    HalfNormalDistribution hn;
    for (std::int64_t ell : {2, 5, 16}) {
        for (double s : {0.1, 0.5, 2.0, 10.0}) {
            const double lhs = ell * m_ell_from_distribution(hn, ell, s);
            const double rhs = m_ell_from_distribution(hn, 1, ell * s);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-6));
        }
    }
}

TEST_CASE("empirical m_ell matches quadrature of the truncated moment") {
    RngStream rng(55, 0, 0);
    std::vector<double> samples(400);
    for (double& x : samples) x = std::abs(rng.normal());
    EmpiricalDistribution emp(samples);
    for (double s : {0.05, 0.3, 1.0, 4.0}) {
        const double exact = emp.m_ell(3.0, s);
        // Independent oracle: midpoint Riemann sum over the step integrand.
        const int grid = 400000;
        double quad = 0.0;
        for (int i = 0; i < grid; ++i) {
            const double t = s * (i + 0.5) / grid;
            quad += emp.truncated_mean(1.0 / (3.0 * t));
        }
        quad *= s / grid;
        CHECK(exact == doctest::Approx(quad).epsilon(1e-3));
    }
}

TEST_CASE("constant distribution m_ell in closed form") {
    ConstantDistribution c(2.0);
    // E[|X| 1{|X| >= 1/(t ell)}] = 2 once 1/(t ell) <= 2, i.e. t >= 1/(2 ell).
    CHECK(c.m_ell(4.0, 1.0) == doctest::Approx(2.0 * (1.0 - 1.0 / 8.0)).epsilon(1e-12));
    CHECK(c.m_ell(4.0, 0.05) == doctest::Approx(0.0));
}

TEST_CASE("gaussian_q_orlicz closed form and breakpoint") {
    CHECK(gaussian_q_orlicz(1, 2.0, 0.0) == 0.0);
    // q=2, ell=1: t* = 1 and M(t*) = e^{-2}.
    CHECK(gaussian_q_orlicz_breakpoint(1, 2.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gaussian_q_orlicz(1, 2.0, 1.0) ==
          doctest::Approx(std::exp(-2.0)).epsilon(1e-12));
    for (std::int64_t ell : {1, 4, 64}) {
        for (double q : {1.0, 2.0, 4.0, 8.0}) {
            const double ts = gaussian_q_orlicz_breakpoint(ell, q);
            const double dell = static_cast<double>(ell);
            CHECK(ts == doctest::Approx(std::pow(2.0 * q / (q + 2.0), q / 2.0) /
                                        dell)
                            .epsilon(1e-14));
            // Value at the breakpoint and continuity across it.
            CHECK(gaussian_q_orlicz(ell, q, ts) ==
                  doctest::Approx(std::exp(-(q + 2.0) / 2.0) / dell)
                      .epsilon(1e-12));
            const double below = gaussian_q_orlicz(ell, q, ts * (1.0 - 1e-12));
            const double above = gaussian_q_orlicz(ell, q, ts * (1.0 + 1e-12));
            CHECK(std::abs(above - below) <= 1e-10);
            // Interior branch formula.
            const double t = 0.5 * ts;
            CHECK(gaussian_q_orlicz(ell, q, t) ==
                  doctest::Approx(std::exp(-q * std::pow(dell * t, -2.0 / q)) /
                                  dell)
                      .epsilon(1e-12));
        }
    }
}

TEST_CASE("gaussian_q_orlicz certified monotone convex") {
    for (std::int64_t ell : {1, 8}) {
        for (double q : {1.0, 3.0}) {
            const auto M = OrliczFunction::gaussian_q(ell, q);
            const auto cert = M.certify(5.0 * gaussian_q_orlicz_breakpoint(ell, q));
            CHECK(cert.ok());
        }
    }
}

TEST_CASE("luxemburg norm recovers l_p norms") {
    const auto M2 = OrliczFunction::power(2.0);
    const std::vector<double> x{3.0, 4.0};
    CHECK(luxemburg_norm(M2, x) == doctest::Approx(5.0).epsilon(1e-9));
    const auto M3 = OrliczFunction::power(3.0);
    const std::vector<double> y{1.0, 1.0, 1.0};
    CHECK(luxemburg_norm(M3, y) == doctest::Approx(std::pow(3.0, 1.0 / 3.0)).epsilon(1e-9));
    CHECK(luxemburg_norm(M2, std::vector<double>{0.0, 0.0}) == 0.0);
}

TEST_CASE("luxemburg norm is a norm") {
    const auto M = OrliczFunction::gaussian_q(2, 2.0);
    RngStream rng(77, 0, 0);
    for (int rep = 0; rep < 10; ++rep) {
        std::vector<double> a(16), b(16), sum(16);
        for (int i = 0; i < 16; ++i) {
            a[static_cast<std::size_t>(i)] = rng.normal();
            b[static_cast<std::size_t>(i)] = rng.normal();
            sum[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] +
                                               b[static_cast<std::size_t>(i)];
        }
        const double na = luxemburg_norm(M, a);
        const double nb = luxemburg_norm(M, b);
        const double ns = luxemburg_norm(M, sum);
        CHECK(ns <= na + nb + 1e-9);
        std::vector<double> scaled(16);
        for (int i = 0; i < 16; ++i)
            scaled[static_cast<std::size_t>(i)] = 3.0 * a[static_cast<std::size_t>(i)];
        CHECK(luxemburg_norm(M, scaled) == doctest::Approx(3.0 * na).epsilon(1e-8));
    }
}

TEST_CASE("norm of all-ones equals 1/M^{-1}(1/N)") {
    for (std::int64_t N : {16, 256}) {
        for (double q : {1.0, 2.0}) {
            const auto M = OrliczFunction::gaussian_q(1, q);
            const std::vector<double> ones(static_cast<std::size_t>(N), 1.0);
            const double lhs = luxemburg_norm(M, ones);
            const double rhs = 1.0 / orlicz_inverse(M, 1.0 / static_cast<double>(N));
            CHECK(lhs * (1.0 / rhs) == doctest::Approx(1.0).epsilon(1e-8));
        }
    }
}

TEST_CASE("gaussian M inverse middle-branch formula") {
    // q=1, ell=1, N=e^{10}: M^{-1}(1/N) = q^{q/2} / (ell (log(N/ell))^{q/2}).
    const auto M = OrliczFunction::gaussian_q(1, 1.0);
    const double inv = orlicz_inverse(M, std::exp(-10.0));
    CHECK(inv == doctest::Approx(std::pow(10.0, -0.5)).epsilon(1e-8));
}

TEST_CASE("orlicz_inverse basics") {
    const auto M2 = OrliczFunction::power(2.0);
    CHECK(orlicz_inverse(M2, 4.0) == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(orlicz_inverse(M2, 0.0) == 0.0);
    const auto Mg = OrliczFunction::gaussian_q(1, 1.0);
    CHECK(orlicz_inverse(Mg, std::exp(-1.5)) ==
          doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-8));
}

TEST_CASE("legendre conjugate closed forms") {
    const auto Mh = OrliczFunction::power_over_p(2.0);  // t^2/2, self-conjugate
    CHECK(legendre_conjugate(Mh, 3.0) == doctest::Approx(4.5).epsilon(1e-7));
    CHECK(legendre_conjugate(Mh, 0.0) == doctest::Approx(0.0));
    const auto M3 = OrliczFunction::power_over_p(3.0);  // conjugate x^{3/2}/(3/2)
    CHECK(legendre_conjugate(M3, 1.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-7));
}

TEST_CASE("conjugate duality M** = M") {
    const auto M = OrliczFunction::power_over_p(2.5);
    for (double t : {0.3, 1.0, 2.0}) {
        const OrliczFunction Mstar(
            [&](double x) { return legendre_conjugate(M, x); }, 1e4);
        const double back = legendre_conjugate(Mstar, t);
        CHECK(back == doctest::Approx(M(t)).epsilon(0.01));
    }
}

TEST_CASE("verify_mstar_identity residuals") {
    const std::vector<double> betas{0.05, 0.2, 0.5, 0.9};
    const auto hn = std::make_shared<HalfNormalDistribution>();
    const auto rep_hn = verify_mstar_identity(hn, 1, betas);
    CHECK(rep_hn.max_rel_residual <= 0.02);
    const auto c = std::make_shared<ConstantDistribution>(1.0);
    const auto rep_c = verify_mstar_identity(c, 4, betas);
    CHECK(rep_c.max_rel_residual <= 0.02);
    // Constant |X|=1: the identity pins M*(beta) = beta / ell.
    for (const auto& row : rep_c.rows)
        CHECK(row.rhs == doctest::Approx(row.beta / 4.0).epsilon(1e-12));
}
