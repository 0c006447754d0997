#include "knlq/core.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace knlq {

Params validate_params(std::int64_t n, std::int64_t N, std::int64_t ell, double q) {
    if (n < 1) throw NonPositiveDimension("n must be >= 1, got " + std::to_string(n));
    if (N < 1) throw EllOutOfRange("N must be >= 1, got " + std::to_string(N));
    if (ell < 1 || ell > N)
        throw EllOutOfRange("ell must satisfy 1 <= ell <= N, got ell=" +
                            std::to_string(ell) + ", N=" + std::to_string(N));
    if (!(q >= 1.0) || !std::isfinite(q))
        throw QBelowOne("q must be a finite real >= 1, got " + std::to_string(q));
    Params p;
    p.n = static_cast<int>(n);
    p.N = N;
    p.ell = ell;
    p.q = q;
    p.degenerate = N < n;
    return p;
}

Params validate_params(std::int64_t n, std::int64_t N, double ell, double q) {
    if (!std::isfinite(ell) || ell != std::floor(ell))
        throw NonIntegerEll("ell must be an integer, got " + std::to_string(ell));
    return validate_params(n, N, static_cast<std::int64_t>(ell), q);
}

Direction Direction::from_coords(std::vector<double> coords) {
    double s = 0.0;
    for (double c : coords) s += c * c;
    const double norm = std::sqrt(s);
    if (std::abs(norm - 1.0) > 1e-12)
        throw DimensionMismatch("direction is not a unit vector (||.||_2 = " +
                                std::to_string(norm) + ")");
    return Direction{std::move(coords)};
}

ModelSpec ModelSpec::gaussian() { return {Kind::GaussianStandard, 2.0}; }

namespace {
void check_p(double p) {
    if (!(p >= 1.0) || !std::isfinite(p))
        throw QBelowOne("model parameter p must be a finite real >= 1");
}
}  // namespace

ModelSpec ModelSpec::cone_lp(double p) {
    check_p(p);
    return {Kind::ConeLp, p};
}

ModelSpec ModelSpec::uniform_ball_lp(double p) {
    check_p(p);
    return {Kind::UniformBallLp, p};
}

ModelSpec ModelSpec::isotropic_ball_lp(double p) {
    check_p(p);
    return {Kind::IsotropicUniformBallLp, p};
}

ModelSpec ModelSpec::parse(const std::string& name, double p) {
    if (name == "gaussian") return gaussian();
    if (name == "cone") return cone_lp(p);
    if (name == "ball") return uniform_ball_lp(p);
    if (name == "isoball") return isotropic_ball_lp(p);
    throw ConfigInvalid("unknown model '" + name +
                        "' (expected gaussian|cone|ball|isoball)");
}

std::string ModelSpec::name() const {
    switch (kind) {
        case Kind::GaussianStandard: return "gaussian";
        case Kind::ConeLp: return "cone";
        case Kind::UniformBallLp: return "ball";
        case Kind::IsotropicUniformBallLp: return "isoball";
    }
    return "?";
}

double kth_max(std::span<const double> values, std::int64_t k) {
    const std::int64_t N = static_cast<std::int64_t>(values.size());
    if (N == 0) throw EmptyInput("kth_max on empty input");
    if (k < 1 || k > N)
        throw KOutOfRange("k must satisfy 1 <= k <= N, got k=" + std::to_string(k));
    std::vector<double> v(values.begin(), values.end());
    std::nth_element(v.begin(), v.begin() + (k - 1), v.end(), std::greater<>());
    return v[k - 1];
}

double orderstat_power_mean(std::span<const double> values, std::int64_t ell,
                            double q) {
    const std::int64_t N = static_cast<std::int64_t>(values.size());
    if (N == 0) throw EmptyInput("orderstat_power_mean on empty input");
    if (ell < 1 || ell > N)
        throw EllOutOfRange("ell must satisfy 1 <= ell <= N");
    if (!(q >= 1.0)) throw QBelowOne("q must be >= 1");

    std::vector<double> a(values.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = std::abs(values[i]);

    if (ell * 4 > N) {
        std::sort(a.begin(), a.end(), std::greater<>());
    } else {
        std::nth_element(a.begin(), a.begin() + (ell - 1), a.end(), std::greater<>());
    }

    // Scale by the top element so large q cannot overflow.
    double top = a[0];
    for (std::int64_t i = 1; i < ell; ++i) top = std::max(top, a[i]);
    if (top == 0.0) return 0.0;

    double sum = 0.0;
    for (std::int64_t i = 0; i < ell; ++i) sum += std::pow(a[i] / top, q);
    return top * std::pow(sum / static_cast<double>(ell), 1.0 / q);
}

}  // namespace knlq
