#pragma once

#include <cstdint>

#include "knlq/core.hpp"

namespace knlq {

struct MeanWidthConfig {
    std::int64_t n_directions = 64;
    std::int64_t n_replicates = 200;
    bool antithetic = false;
};

// Marginals <X_i, theta> of a sample set.
std::vector<double> marginals(const SampleSet& samples, const Direction& theta);

// ((1/ell) sum_{k<=ell} kmax |<X_i,theta>|^q)^{1/q} for one realization.
double support_value(const SampleSet& samples, const Direction& theta,
                     std::int64_t ell, double q);

// Monte Carlo estimate of E w(K_{N,ell,q}): n_replicates independent sample
// sets, each averaged over n_directions fresh uniform directions. Standard
// error comes from the replicate-level variance. Directions for replicate r
// come from stream (seed, r, role 1); samples from (seed, r, role 0).
EstimateReport mean_width_estimate(const ModelSpec& model, const Params& params,
                                   const MeanWidthConfig& cfg,
                                   std::uint64_t seed);

// Same, but at one fixed direction.
EstimateReport support_expectation_estimate(const ModelSpec& model,
                                            const Params& params,
                                            const Direction& theta,
                                            std::int64_t n_replicates,
                                            std::uint64_t seed);

// (E |<X, theta>|^q)^{1/q}: support of the L_q-centroid body, estimated from
// n_samples draws (delta-method standard error).
EstimateReport centroid_support_estimate(const ModelSpec& model, int n,
                                         double q, const Direction& theta,
                                         std::int64_t n_samples,
                                         std::uint64_t seed);

// Empirical (1-delta)-quantile of |<X, theta>| (type-7 interpolation):
// the floating-body slab width in direction theta. Requires
// 0 < delta < 1/e and n_samples * delta >= 50.
EstimateReport floating_support_estimate(const ModelSpec& model, int n,
                                         double delta, const Direction& theta,
                                         std::int64_t n_samples,
                                         std::uint64_t seed);

// support_value(A) / support_value(B) on one pair of realizations.
double comparison_ratio(const SampleSet& samplesA, const SampleSet& samplesB,
                        const Direction& theta, const Params& paramsA,
                        const Params& paramsB);

}  // namespace knlq
