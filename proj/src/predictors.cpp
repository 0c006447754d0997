#include "knlq/predictors.hpp"

#include <cmath>
#include <limits>

namespace knlq {

std::string regime_label(Regime r) {
    switch (r) {
        case Regime::SmallQ: return "small-q";
        case Regime::MidQ: return "mid-q";
        case Regime::LargeQ: return "large-q";
    }
    return "?";
}

PredictorValue predictor_logconcave(int n, std::int64_t N, std::int64_t ell,
                                    double q) {
    (void)n;
    const double a = std::sqrt(q);
    const double b = std::sqrt(std::log(static_cast<double>(N) /
                                        static_cast<double>(ell)));
    const double cap = std::sqrt(std::log(static_cast<double>(N)));
    const double inner = std::max(a, b);
    PredictorValue out;
    if (inner > cap) {
        out.value = cap;
        out.regime = Regime::LargeQ;
    } else {
        out.value = inner;
        out.regime = (a >= b) ? Regime::MidQ : Regime::SmallQ;
    }
    return out;
}

PredictorValue predictor_lp(int n, std::int64_t N, std::int64_t ell, double q,
                            double p) {
    if (!(p >= 1.0) || !std::isfinite(p))
        throw QBelowOne("predictor_lp requires 1 <= p < inf");
    PredictorValue out = predictor_logconcave(n, N, ell, q);
    out.value *= std::pow(static_cast<double>(n), -1.0 / p);
    return out;
}

double predictor_gaussian_orderstats(std::int64_t N, std::int64_t ell, double q) {
    const double logN = std::log(static_cast<double>(N));
    if (q > logN)
        throw QOutOfRegime("predictor_gaussian_orderstats requires q <= log N");
    const double logNl = std::log(static_cast<double>(N) / static_cast<double>(ell));
    return (q <= logNl) ? std::sqrt(logNl) : std::sqrt(q);
}

double c_n_constant(int n) {
    const double dn = static_cast<double>(n);
    return std::exp(std::log(dn) + std::lgamma(1.0 + (dn - 1.0) / 2.0) -
                    0.5 * std::log(2.0) - std::lgamma(1.0 + dn / 2.0));
}

double log_volume_bpn(int n, double p) {
    const double dn = static_cast<double>(n);
    return dn * (std::log(2.0) + std::lgamma(1.0 + 1.0 / p)) -
           std::lgamma(1.0 + dn / p);
}

double volume_bpn(int n, double p) { return std::exp(log_volume_bpn(n, p)); }

double gaussian_pnorm_expectation(int n, double p) {
    const double logn = std::log(static_cast<double>(n));
    if (p <= logn)
        return std::pow(static_cast<double>(n), 1.0 / p) * std::sqrt(p);
    return std::sqrt(logn);
}

double mean_width_bpn(int n, double p) {
    const double logn = std::log(static_cast<double>(n));
    const double dn = static_cast<double>(n);
    // Conjugate exponent; p = 1 gives p* = infinity.
    const double pstar =
        (p > 1.0) ? p / (p - 1.0) : std::numeric_limits<double>::infinity();
    // First branch in the conjugate exponent: w(B_p^n) ~ E||G||_{p*} / sqrt(n),
    // which makes the polar-coordinates identity below exact.
    if (pstar <= logn) return std::pow(dn, 1.0 / pstar - 0.5) * std::sqrt(pstar);
    return std::sqrt(logn / dn);
}

double many_points_upper(int n, std::int64_t N, std::int64_t ell, double q) {
    const double logN = std::log(static_cast<double>(N));
    const double logNl = std::log(static_cast<double>(N) / static_cast<double>(ell));
    const double loglogN = std::log(logN);
    if (q >= logN) return std::sqrt(logN) * loglogN * loglogN;
    const double front = logN / std::sqrt(static_cast<double>(n));
    if (q <= logNl) return front * std::sqrt(logNl);
    return front * std::sqrt(q);
}

double paouris_tail(double t, int n, double c) {
    (void)c;  // reported by callers, never enters the bound
    if (!(t >= 1.0)) throw TBelowOne("paouris_tail requires t >= 1");
    return std::exp(-t * std::sqrt(static_cast<double>(n)));
}

}  // namespace knlq
