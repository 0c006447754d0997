#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "knlq/errors.hpp"

namespace knlq {

// Distribution handle for a nonnegative random variable |X|, exposing the
// two functionals the Orlicz machinery needs: the quantile function and the
// truncated first moment E[|X| 1{|X| >= u}].
class Distribution {
public:
    virtual ~Distribution() = default;

    // Inverse CDF at level u in [0, 1].
    virtual double quantile(double u) const = 0;

    // E[|X| 1{|X| >= u}] for u >= 0.
    virtual double truncated_mean(double u) const = 0;

    // M_ell(s) = int_0^s E[|X| 1{|X| >= 1/(t ell)}] dt. The default
    // implementation integrates truncated_mean by adaptive Simpson;
    // distributions with piecewise-constant truncated moments override it
    // with exact partial sums.
    virtual double m_ell(double ell, double s) const;

    double mean() const { return truncated_mean(0.0); }
};

// Sorted-sample empirical distribution (exact partial-sum integrals).
class EmpiricalDistribution : public Distribution {
public:
    explicit EmpiricalDistribution(std::vector<double> abs_samples);
    double quantile(double u) const override;
    double truncated_mean(double u) const override;
    double m_ell(double ell, double s) const override;
    const std::vector<double>& sorted_samples() const { return sorted_; }

private:
    std::vector<double> sorted_;        // ascending
    std::vector<double> suffix_sums_;   // suffix_sums_[i] = sum_{j>=i} sorted_[j]
};

// |g| for a standard normal g (closed-form truncated moment).
class HalfNormalDistribution : public Distribution {
public:
    double quantile(double u) const override;
    double truncated_mean(double u) const override;
};

// |g|^q for a standard normal g; truncated moment by quadrature with the
// tail cut at the 1 - 1e-9 quantile.
class HalfNormalPowerDistribution : public Distribution {
public:
    explicit HalfNormalPowerDistribution(double q);
    double quantile(double u) const override;
    double truncated_mean(double u) const override;

private:
    double q_;
    double tail_cut_;  // upper limit for |g| in the quadrature
};

// Point mass at c > 0.
class ConstantDistribution : public Distribution {
public:
    explicit ConstantDistribution(double c);
    double quantile(double u) const override;
    double truncated_mean(double u) const override;
    double m_ell(double ell, double s) const override;

private:
    double c_;
};

// Decreasing rearrangement X*(z): the (1-z)-quantile of |X|.
double quantile_function(const Distribution& dist, double z);

// M_ell(s) via Eq.-style numerical integration of the truncated moment.
double m_ell_from_distribution(const Distribution& dist, std::int64_t ell,
                               double s);

// The closed-form Gaussian Orlicz function for the |g|^q order-statistic
// bound: 0 at t = 0, (1/ell) e^{-q/(ell t)^{2/q}} below the breakpoint
// t* = (1/ell) (2q/(q+2))^{q/2}, and the tangent affine continuation above.
double gaussian_q_orlicz(std::int64_t ell, double q, double t);
double gaussian_q_orlicz_breakpoint(std::int64_t ell, double q);

// An evaluable convex function M with M(0) = 0.
class OrliczFunction {
public:
    OrliczFunction(std::function<double(double)> eval, double domain_hint = 1e8);

    double operator()(double s) const { return eval_(s); }
    double domain_hint() const { return domain_hint_; }

    static OrliczFunction power(double p);          // M(t) = t^p
    static OrliczFunction power_over_p(double p);   // M(t) = t^p / p
    static OrliczFunction gaussian_q(std::int64_t ell, double q);
    static OrliczFunction from_distribution(std::shared_ptr<const Distribution> d,
                                            std::int64_t ell);

    // Discrete monotone-convex certificate on a uniform grid over [0, s_max].
    struct Certificate {
        bool zero_at_zero = false;
        bool positive = false;       // M(s) > 0 for s > 0 on the grid
        bool nondecreasing = false;
        bool convex = false;         // second differences >= -1e-9
        bool ok() const { return zero_at_zero && nondecreasing && convex; }
    };
    Certificate certify(double s_max, int grid_points = 256) const;

private:
    std::function<double(double)> eval_;
    double domain_hint_;
};

// Luxemburg norm inf{rho > 0 : sum M(|x_i|/rho) <= 1}; bracketing plus
// bisection to 1e-10 relative.
double luxemburg_norm(const OrliczFunction& M, std::span<const double> x);

// Smallest s with M(s) >= y.
double orlicz_inverse(const OrliczFunction& M, double y);

// Legendre conjugate M*(x) = sup_{t>=0} [xt - M(t)].
double legendre_conjugate(const OrliczFunction& M, double x);

// For each beta: compare M_ell*(int_0^beta X*(z) dz) against beta/ell, both
// sides computed by independent quadratures.
struct MStarRow {
    double beta = 0.0;
    double lhs = 0.0;  // M_ell*(int_0^beta X*)
    double rhs = 0.0;  // beta / ell
    double rel_residual = 0.0;
};
struct MStarReport {
    std::vector<MStarRow> rows;
    double max_rel_residual = 0.0;
};
MStarReport verify_mstar_identity(std::shared_ptr<const Distribution> dist,
                                  std::int64_t ell,
                                  std::span<const double> beta_grid);

}  // namespace knlq
