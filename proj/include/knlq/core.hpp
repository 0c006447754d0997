#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "knlq/errors.hpp"

namespace knlq {

// The quadruple (n, N, ell, q) defining one random convex set instance.
// All operations on Params assume the invariants 1 <= ell <= N, q >= 1,
// n >= 1, which validate_params enforces. N < n is accepted but flagged as
// degenerate; the mean-width average is always taken over the full sphere.
struct Params {
    int n = 1;
    std::int64_t N = 1;
    std::int64_t ell = 1;
    double q = 1.0;
    bool degenerate = false;  // N < n
};

Params validate_params(std::int64_t n, std::int64_t N, std::int64_t ell, double q);
// Variant taking ell as a real; rejects non-integer values (NonIntegerEll).
Params validate_params(std::int64_t n, std::int64_t N, double ell, double q);

// A unit vector in R^n.
struct Direction {
    std::vector<double> coords;

    // Checks |  ||coords||_2 - 1 | <= 1e-12.
    static Direction from_coords(std::vector<double> coords);
    int dim() const { return static_cast<int>(coords.size()); }
};

// Which random law generates X_1, ..., X_N.
struct ModelSpec {
    enum class Kind {
        GaussianStandard,
        ConeLp,
        UniformBallLp,
        IsotropicUniformBallLp,
    };
    Kind kind = Kind::GaussianStandard;
    double p = 2.0;  // only meaningful for the l_p models

    static ModelSpec gaussian();
    static ModelSpec cone_lp(double p);
    static ModelSpec uniform_ball_lp(double p);
    static ModelSpec isotropic_ball_lp(double p);
    static ModelSpec parse(const std::string& name, double p);

    std::string name() const;
    bool has_p() const { return kind != Kind::GaussianStandard; }
};

// One realization: N vectors in R^n stored row-major, plus provenance.
struct SampleSet {
    std::vector<double> data;  // N * n entries, row i = X_i
    std::int64_t N = 0;
    int n = 0;
    ModelSpec model;
    std::uint64_t master_seed = 0;
    std::uint64_t replicate_index = 0;

    std::span<const double> row(std::int64_t i) const {
        return {data.data() + i * n, static_cast<std::size_t>(n)};
    }
};

// A Monte Carlo estimate with its provenance.
struct EstimateReport {
    double value = 0.0;
    double std_error = 0.0;
    std::int64_t n_replicates = 1;
    std::int64_t n_directions = 0;  // 0 for fixed-direction estimates
    Params params;
    ModelSpec model;
    std::uint64_t seed = 0;
};

// k-th largest element of `values`, counting multiplicity (1 <= k <= N).
double kth_max(std::span<const double> values, std::int64_t k);

// ((1/ell) sum_{k<=ell} kmax |v_i|^q)^{1/q}: the ell-deep q-power mean of the
// largest absolute values. Equals max|v_i| for ell = 1 and N^{-1/q} ||v||_q
// for ell = N. Uses partial selection for ell <= N/4, full sort otherwise.
double orderstat_power_mean(std::span<const double> values, std::int64_t ell,
                            double q);

}  // namespace knlq
