#pragma once

#include <vector>

#include "knlq/core.hpp"
#include "knlq/rng.hpp"

namespace knlq {

// Exact samplers for every random model, deterministic given the stream.

// n i.i.d. standard normal coordinates.
std::vector<double> sample_gaussian_vector(int n, RngStream& rng);

// One draw from the p-generalized normal density
// f(t) = e^{-|t|^p} / (2 Gamma(1+1/p)), via sign * W^{1/p} with
// W ~ Gamma(1/p, 1).
double sample_p_generalized_scalar(double p, RngStream& rng);

// Cone-measure draw on the l_p sphere: Y = G/||G||_p with p-generalized G.
// The pre-normalization norm is kept for independence testing.
struct ConeDraw {
    std::vector<double> y;   // ||y||_p = 1
    double pnorm = 0.0;      // ||G||_p before normalization
};
ConeDraw sample_cone_lp(int n, double p, RngStream& rng);

// Uniform on B_p^n: cone-measure draw scaled by U^{1/n}.
std::vector<double> sample_uniform_ball_lp(int n, double p, RngStream& rng);

// Uniform on B_p^n / |B_p^n|^{1/n} (the volume-one normalization).
std::vector<double> sample_isotropic_ball_lp(int n, double p, RngStream& rng);

// Uniform direction on S^{n-1} (normalized Gaussian).
Direction sample_unit_direction(int n, RngStream& rng);

// One vector from the model.
std::vector<double> sample_model_vector(const ModelSpec& model, int n,
                                        RngStream& rng);

// N independent draws; deterministic given (master_seed, replicate_index).
// The sampling stream is (master_seed, replicate_index, role 0).
SampleSet sample_set(const ModelSpec& model, const Params& params,
                     std::uint64_t master_seed, std::uint64_t replicate_index);

}  // namespace knlq
