#include "knlq/orlicz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "knlq/numerics.hpp"

namespace knlq {

namespace {
constexpr double kQuadTol = 1e-9;
constexpr double kTailMass = 1e-9;
}  // namespace

double Distribution::m_ell(double ell, double s) const {
    if (s < 0.0) throw OutOfRange("m_ell requires s >= 0");
    if (s == 0.0) return 0.0;
    const auto integrand = [this, ell](double t) {
        if (t <= 0.0) return 0.0;
        return truncated_mean(1.0 / (t * ell));
    };
    return adaptive_simpson(integrand, 0.0, s, kQuadTol);
}

EmpiricalDistribution::EmpiricalDistribution(std::vector<double> abs_samples)
    : sorted_(std::move(abs_samples)) {
    if (sorted_.empty()) throw EmptyInput("empirical distribution needs samples");
    for (double x : sorted_)
        if (!(x >= 0.0) || !std::isfinite(x))
            throw OutOfRange("empirical samples must be finite and nonnegative");
    std::sort(sorted_.begin(), sorted_.end());
    suffix_sums_.assign(sorted_.size() + 1, 0.0);
    for (std::size_t i = sorted_.size(); i-- > 0;)
        suffix_sums_[i] = suffix_sums_[i + 1] + sorted_[i];
}

double EmpiricalDistribution::quantile(double u) const {
    return quantile_type7(sorted_, u);
}

double EmpiricalDistribution::truncated_mean(double u) const {
    const auto it = std::lower_bound(sorted_.begin(), sorted_.end(), u);
    const std::size_t i = static_cast<std::size_t>(it - sorted_.begin());
    return suffix_sums_[i] / static_cast<double>(sorted_.size());
}

double EmpiricalDistribution::m_ell(double ell, double s) const {
    if (s < 0.0) throw OutOfRange("m_ell requires s >= 0");
    if (s == 0.0) return 0.0;
    // The integrand t -> truncated_mean(1/(t ell)) is a nondecreasing step
    // function: sample x_j enters the truncated sum once t >= 1/(x_j ell).
    // Walk the breakpoints in ascending t order (descending x) and integrate
    // the steps exactly.
    const std::size_t N = sorted_.size();
    double acc = 0.0;
    double t_prev = 0.0;
    double active_sum = 0.0;  // sum of samples already past their breakpoint
    for (std::size_t j = N; j-- > 0;) {
        const double x = sorted_[j];
        if (x <= 0.0) break;  // zero samples never contribute
        const double t_j = 1.0 / (x * ell);
        if (t_j >= s) break;  // activates beyond the integration range
        acc += (t_j - t_prev) * active_sum;
        active_sum += x;
        t_prev = t_j;
    }
    acc += (s - t_prev) * active_sum;
    return acc / static_cast<double>(N);
}

double HalfNormalDistribution::quantile(double u) const {
    if (!(u >= 0.0 && u <= 1.0)) throw OutOfRange("quantile level in [0,1]");
    if (u == 0.0) return 0.0;
    if (u == 1.0) return std::numeric_limits<double>::infinity();
    return inverse_normal_cdf(0.5 * (1.0 + u));
}

double HalfNormalDistribution::truncated_mean(double u) const {
    if (u < 0.0) u = 0.0;
    return std::sqrt(2.0 / M_PI) * std::exp(-0.5 * u * u);
}

HalfNormalPowerDistribution::HalfNormalPowerDistribution(double q) : q_(q) {
    if (!(q >= 1.0)) throw QBelowOne("power exponent must be >= 1");
    tail_cut_ = inverse_normal_cdf(1.0 - 0.5 * kTailMass);
}

double HalfNormalPowerDistribution::quantile(double u) const {
    if (!(u >= 0.0 && u <= 1.0)) throw OutOfRange("quantile level in [0,1]");
    if (u == 0.0) return 0.0;
    if (u == 1.0) return std::numeric_limits<double>::infinity();
    return std::pow(inverse_normal_cdf(0.5 * (1.0 + u)), q_);
}

double HalfNormalPowerDistribution::truncated_mean(double u) const {
    const double a = (u <= 0.0) ? 0.0 : std::pow(u, 1.0 / q_);
    if (a >= tail_cut_) {
        // Beyond the cut the remaining mass is below the quadrature tolerance.
        return 0.0;
    }
    const double q = q_;
    const auto f = [q](double t) {
        return std::pow(t, q) * std::sqrt(2.0 / M_PI) * std::exp(-0.5 * t * t);
    };
    return adaptive_simpson(f, a, tail_cut_, kQuadTol);
}

ConstantDistribution::ConstantDistribution(double c) : c_(c) {
    if (!(c > 0.0) || !std::isfinite(c))
        throw OutOfRange("constant distribution needs c > 0");
}

double ConstantDistribution::quantile(double u) const {
    if (!(u >= 0.0 && u <= 1.0)) throw OutOfRange("quantile level in [0,1]");
    return c_;
}

double ConstantDistribution::truncated_mean(double u) const {
    return (u <= c_) ? c_ : 0.0;
}

double ConstantDistribution::m_ell(double ell, double s) const {
    if (s < 0.0) throw OutOfRange("m_ell requires s >= 0");
    const double knee = 1.0 / (c_ * ell);
    return c_ * std::max(0.0, s - knee);
}

double quantile_function(const Distribution& dist, double z) {
    if (!(z >= 0.0 && z <= 1.0))
        throw OutOfRange("quantile_function requires z in [0,1]");
    return dist.quantile(1.0 - z);
}

double m_ell_from_distribution(const Distribution& dist, std::int64_t ell,
                               double s) {
    if (ell < 1) throw EllOutOfRange("ell must be >= 1");
    return dist.m_ell(static_cast<double>(ell), s);
}

double gaussian_q_orlicz_breakpoint(std::int64_t ell, double q) {
    return std::pow(2.0 * q / (q + 2.0), 0.5 * q) / static_cast<double>(ell);
}

double gaussian_q_orlicz(std::int64_t ell, double q, double t) {
    if (!(q >= 1.0)) throw QBelowOne("gaussian_q_orlicz requires q >= 1");
    if (t < 0.0) throw OutOfRange("gaussian_q_orlicz requires t >= 0");
    if (t == 0.0) return 0.0;
    const double l = static_cast<double>(ell);
    const double tstar = gaussian_q_orlicz_breakpoint(ell, q);
    if (t < tstar) return std::exp(-q * std::pow(l * t, -2.0 / q)) / l;
    // Tangent affine continuation through (t*, e^{-(q+2)/2}/ell).
    const double slope = std::pow((q + 2.0) / (2.0 * q), 1.0 + 0.5 * q) * 2.0 *
                         std::exp(-0.5 * (q + 2.0));
    const double intercept = -2.0 / (M_E * q * l) * std::exp(-0.5 * q);
    return slope * t + intercept;
}

OrliczFunction::OrliczFunction(std::function<double(double)> eval,
                               double domain_hint)
    : eval_(std::move(eval)), domain_hint_(domain_hint) {}

OrliczFunction OrliczFunction::power(double p) {
    if (!(p >= 1.0)) throw QBelowOne("power exponent must be >= 1");
    return OrliczFunction([p](double t) { return std::pow(t, p); });
}

OrliczFunction OrliczFunction::power_over_p(double p) {
    if (!(p >= 1.0)) throw QBelowOne("power exponent must be >= 1");
    return OrliczFunction([p](double t) { return std::pow(t, p) / p; });
}

OrliczFunction OrliczFunction::gaussian_q(std::int64_t ell, double q) {
    return OrliczFunction(
        [ell, q](double t) { return gaussian_q_orlicz(ell, q, t); });
}

OrliczFunction OrliczFunction::from_distribution(
    std::shared_ptr<const Distribution> d, std::int64_t ell) {
    if (!d) throw EmptyInput("null distribution");
    return OrliczFunction([d, ell](double s) {
        return m_ell_from_distribution(*d, ell, s);
    });
}

OrliczFunction::Certificate OrliczFunction::certify(double s_max,
                                                    int grid_points) const {
    Certificate cert;
    if (grid_points < 3 || !(s_max > 0.0)) return cert;
    std::vector<double> vals(static_cast<std::size_t>(grid_points));
    for (int i = 0; i < grid_points; ++i) {
        const double s = s_max * static_cast<double>(i) /
                         static_cast<double>(grid_points - 1);
        vals[static_cast<std::size_t>(i)] = eval_(s);
    }
    cert.zero_at_zero = std::abs(vals[0]) <= 1e-12;
    cert.positive = true;
    cert.nondecreasing = true;
    cert.convex = true;
    for (std::size_t i = 1; i < vals.size(); ++i) {
        if (!(vals[i] > 0.0)) cert.positive = false;
        if (vals[i] + 1e-12 < vals[i - 1]) cert.nondecreasing = false;
    }
    for (std::size_t i = 1; i + 1 < vals.size(); ++i) {
        if (vals[i + 1] - 2.0 * vals[i] + vals[i - 1] < -1e-9)
            cert.convex = false;
    }
    return cert;
}

double luxemburg_norm(const OrliczFunction& M, std::span<const double> x) {
    double amax = 0.0;
    for (double v : x) amax = std::max(amax, std::abs(v));
    if (amax == 0.0) return 0.0;

    const auto S = [&](double rho) {
        double s = 0.0;
        for (double v : x) s += M(std::abs(v) / rho);
        return s;
    };

    // Find hi with S(hi) <= 1 by doubling from the sup norm.
    double hi = amax;
    int it = 0;
    while (S(hi) > 1.0) {
        hi *= 2.0;
        if (++it > 200) throw NoFiniteBracket("luxemburg_norm: no upper bracket");
    }
    // Find lo with S(lo) > 1 by halving; if none exists the norm is 0+.
    double lo = hi / 2.0;
    it = 0;
    while (S(lo) <= 1.0) {
        hi = lo;
        lo /= 2.0;
        if (++it > 200) return 0.0;
    }
    for (int i = 0; i < 200 && (hi - lo) > 1e-10 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (S(mid) <= 1.0)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

double orlicz_inverse(const OrliczFunction& M, double y) {
    if (y < 0.0) throw OutOfRange("orlicz_inverse requires y >= 0");
    if (y == 0.0) return 0.0;
    double hi = 1.0;
    int it = 0;
    while (M(hi) < y) {
        hi *= 2.0;
        if (++it > 200)
            throw OutOfRange("orlicz_inverse: y outside the range of M");
    }
    double lo = 0.0;
    for (int i = 0; i < 200 && (hi - lo) > 1e-10 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (M(mid) >= y)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

double legendre_conjugate(const OrliczFunction& M, double x) {
    if (x < 0.0) throw OutOfRange("legendre_conjugate requires x >= 0");
    if (x == 0.0) return 0.0;
    const auto f = [&](double t) { return x * t - M(t); };
    double t = 1.0;
    while (f(2.0 * t) > f(t)) {
        t *= 2.0;
        if (t > M.domain_hint())
            throw UnboundedConjugate(
                "legendre_conjugate: objective still increasing at domain hint");
    }
    double lo = 0.0, hi = 2.0 * t;
    // Golden-section search on the concave objective.
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c1 = b - phi * (b - a);
    double c2 = a + phi * (b - a);
    double f1 = f(c1), f2 = f(c2);
    for (int i = 0; i < 200 && (b - a) > 1e-12 * std::max(1.0, b); ++i) {
        if (f1 < f2) {
            a = c1;
            c1 = c2;
            f1 = f2;
            c2 = a + phi * (b - a);
            f2 = f(c2);
        } else {
            b = c2;
            c2 = c1;
            f2 = f1;
            c1 = b - phi * (b - a);
            f1 = f(c1);
        }
    }
    return std::max(0.0, f(0.5 * (a + b)));
}

MStarReport verify_mstar_identity(std::shared_ptr<const Distribution> dist,
                                  std::int64_t ell,
                                  std::span<const double> beta_grid) {
    if (!dist) throw EmptyInput("null distribution");
    MStarReport report;
    const OrliczFunction M = OrliczFunction::from_distribution(dist, ell);
    for (double beta : beta_grid) {
        if (!(beta > 0.0 && beta < 1.0))
            throw OutOfRange("beta grid must lie in (0,1)");
        // int_0^beta X*(z) dz = int_{1-beta}^{1} quantile(u) du; the upper
        // endpoint is clipped where the quantile may diverge.
        const double u_hi = 1.0 - 1e-9;
        const auto qf = [&](double u) { return dist->quantile(std::min(u, u_hi)); };
        const double moment = adaptive_simpson(qf, 1.0 - beta, u_hi, kQuadTol);
        MStarRow row;
        row.beta = beta;
        row.lhs = legendre_conjugate(M, moment);
        row.rhs = beta / static_cast<double>(ell);
        row.rel_residual = std::abs(row.lhs - row.rhs) / row.rhs;
        report.max_rel_residual = std::max(report.max_rel_residual, row.rel_residual);
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace knlq
