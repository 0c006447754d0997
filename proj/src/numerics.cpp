#include "knlq/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace knlq {

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double inverse_normal_cdf(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw OutOfRange("inverse_normal_cdf requires p in (0,1)");

    // Acklam's rational approximation.
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;
    double x;
    if (p < plow) {
        const double u = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * u + c[1]) * u + c[2]) * u + c[3]) * u + c[4]) * u + c[5]) /
            ((((d[0] * u + d[1]) * u + d[2]) * u + d[3]) * u + 1.0);
    } else if (p > 1.0 - plow) {
        const double u = std::sqrt(-2.0 * std::log(1.0 - p));
        x = -(((((c[0] * u + c[1]) * u + c[2]) * u + c[3]) * u + c[4]) * u + c[5]) /
            ((((d[0] * u + d[1]) * u + d[2]) * u + d[3]) * u + 1.0);
    } else {
        const double u = p - 0.5;
        const double t = u * u;
        x = (((((a[0] * t + a[1]) * t + a[2]) * t + a[3]) * t + a[4]) * t + a[5]) * u /
            (((((b[0] * t + b[1]) * t + b[2]) * t + b[3]) * t + b[4]) * t + 1.0);
    }

    // One Halley refinement against erfc.
    const double e = normal_cdf(x) - p;
    const double u = e * std::sqrt(2.0 * M_PI) * std::exp(0.5 * x * x);
    x = x - u / (1.0 + 0.5 * x * u);
    return x;
}

namespace {

double simpson_step(const std::function<double(double)>& f, double a, double b,
                    double fa, double fm, double fb, double whole, double tol,
                    int depth, int max_depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    if (depth >= max_depth)
        throw IntegrationFailure("adaptive Simpson: depth limit reached");
    return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1, max_depth) +
           simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol, int max_depth) {
    if (a == b) return 0.0;
    const double fa = f(a);
    const double fb = f(b);
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_step(f, a, b, fa, fm, fb, whole, tol, 0, max_depth);
}

double pairwise_sum(std::span<const double> v) {
    const std::size_t n = v.size();
    if (n == 0) return 0.0;
    if (n <= 8) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(v.subspan(0, half)) + pairwise_sum(v.subspan(half));
}

MeanAndStdError mean_and_std_error(std::span<const double> v) {
    MeanAndStdError out;
    const std::size_t n = v.size();
    if (n == 0) return out;
    out.mean = pairwise_sum(v) / static_cast<double>(n);
    if (n < 2) return out;
    double ss = 0.0;
    for (double x : v) {
        const double d = x - out.mean;
        ss += d * d;
    }
    const double var = ss / static_cast<double>(n - 1);
    out.std_error = std::sqrt(var / static_cast<double>(n));
    return out;
}

double quantile_type7(std::span<const double> sorted, double level) {
    if (sorted.empty()) throw EmptyInput("quantile of empty sample");
    if (!(level >= 0.0 && level <= 1.0))
        throw OutOfRange("quantile level must be in [0,1]");
    const std::size_t n = sorted.size();
    if (n == 1) return sorted[0];
    const double h = level * static_cast<double>(n - 1);
    const std::size_t lo = static_cast<std::size_t>(std::floor(h));
    if (lo + 1 >= n) return sorted[n - 1];
    const double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

KsResult ks_two_sample(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw EmptyInput("KS test on empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) ++i;
        while (j < b.size() && b[j] <= x) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na -
                                 static_cast<double>(j) / nb));
    }
    KsResult out;
    out.statistic = d;
    const double en = std::sqrt(na * nb / (na + nb));
    const double lambda = (en + 0.12 + 0.11 / en) * d;
    if (lambda < 1e-8) {
        out.p_value = 1.0;
        return out;
    }
    double p = 0.0;
    double sign = 1.0;
    for (int k = 1; k <= 100; ++k) {
        const double term = std::exp(-2.0 * k * k * lambda * lambda);
        p += 2.0 * sign * term;
        sign = -sign;
        if (term < 1e-12) break;
    }
    out.p_value = std::clamp(p, 0.0, 1.0);
    return out;
}

}  // namespace knlq
