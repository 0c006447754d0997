#pragma once

#include <cstdint>
#include <string>

#include "knlq/errors.hpp"

namespace knlq {

// Closed-form asymptotic predictors. Every formula carries an implied
// absolute constant 1; callers compare against data with two-sided ratio
// tests only. All logarithms are natural.

enum class Regime { SmallQ, MidQ, LargeQ };

std::string regime_label(Regime r);

struct PredictorValue {
    double value = 0.0;
    Regime regime = Regime::SmallQ;
};

// min{ max{ sqrt(q), sqrt(log(N/ell)) }, sqrt(log N) } for the isotropic
// log-concave model. Regime: SmallQ when the sqrt(log(N/ell)) branch wins,
// MidQ when sqrt(q) wins, LargeQ when capped at sqrt(log N).
PredictorValue predictor_logconcave(int n, std::int64_t N, std::int64_t ell,
                                    double q);

// n^{-1/p} times the log-concave predictor (cone measure on the l_p sphere).
PredictorValue predictor_lp(int n, std::int64_t N, std::int64_t ell, double q,
                            double p);

// Gaussian order-statistic mean: sqrt(log(N/ell)) for q <= log(N/ell),
// sqrt(q) for log(N/ell) <= q <= log N. Throws QOutOfRegime for q > log N.
double predictor_gaussian_orderstats(std::int64_t N, std::int64_t ell, double q);

// c_n = n Gamma(1+(n-1)/2) / (sqrt(2) Gamma(1+n/2)), evaluated via lgamma.
// Satisfies c_n / sqrt(n) -> 1.
double c_n_constant(int n);

// |B_p^n| = (2 Gamma(1+1/p))^n / Gamma(1+n/p), evaluated via lgamma.
double volume_bpn(int n, double p);
// log |B_p^n|; usable where the volume itself underflows a double.
double log_volume_bpn(int n, double p);

// Asymptotic order of E ||G||_p: n^{1/p} sqrt(p) for p <= log n, else
// sqrt(log n).
double gaussian_pnorm_expectation(int n, double p);

// Asymptotic order of w(B_p^n): n^{1/p*-1/2} sqrt(p*) when the conjugate
// exponent p* <= log n, else n^{-1/2} sqrt(log n). Satisfies
// mean_width_bpn(n, p) * sqrt(n) = gaussian_pnorm_expectation(n, p*) exactly.
double mean_width_bpn(int n, double p);

// Upper bounds for the many-points regime e^{sqrt n} <= N <= e^n. Bound
// only, not an equivalence.
double many_points_upper(int n, std::int64_t N, std::int64_t ell, double q);

// Paouris tail bound e^{-t sqrt(n)} for mu(||x||_2 >= c t sqrt(n)); the
// absolute constant c is caller-supplied and only reported, never used.
double paouris_tail(double t, int n, double c = 1.0);

}  // namespace knlq
