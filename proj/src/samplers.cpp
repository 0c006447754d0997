#include "knlq/samplers.hpp"

#include <cmath>

#include "knlq/predictors.hpp"

namespace knlq {

std::vector<double> sample_gaussian_vector(int n, RngStream& rng) {
    std::vector<double> v(static_cast<std::size_t>(n));
    for (auto& x : v) x = rng.normal();
    return v;
}

double sample_p_generalized_scalar(double p, RngStream& rng) {
    const double w = rng.gamma(1.0 / p);
    const double mag = std::pow(w, 1.0 / p);
    return (rng.next_u64() & 1u) ? mag : -mag;
}

ConeDraw sample_cone_lp(int n, double p, RngStream& rng) {
    ConeDraw out;
    out.y.resize(static_cast<std::size_t>(n));
    double s = 0.0;
    for (auto& x : out.y) {
        x = sample_p_generalized_scalar(p, rng);
        s += std::pow(std::abs(x), p);
    }
    out.pnorm = std::pow(s, 1.0 / p);
    for (auto& x : out.y) x /= out.pnorm;
    return out;
}

std::vector<double> sample_uniform_ball_lp(int n, double p, RngStream& rng) {
    ConeDraw cone = sample_cone_lp(n, p, rng);
    const double r = std::pow(rng.uniform_open(), 1.0 / static_cast<double>(n));
    for (auto& x : cone.y) x *= r;
    return std::move(cone.y);
}

std::vector<double> sample_isotropic_ball_lp(int n, double p, RngStream& rng) {
    std::vector<double> v = sample_uniform_ball_lp(n, p, rng);
    const double scale = std::exp(-log_volume_bpn(n, p) / static_cast<double>(n));
    for (auto& x : v) x *= scale;
    return v;
}

Direction sample_unit_direction(int n, RngStream& rng) {
    std::vector<double> v(static_cast<std::size_t>(n));
    double s;
    do {
        s = 0.0;
        for (auto& x : v) {
            x = rng.normal();
            s += x * x;
        }
    } while (s == 0.0);
    const double inv = 1.0 / std::sqrt(s);
    for (auto& x : v) x *= inv;
    return Direction{std::move(v)};
}

std::vector<double> sample_model_vector(const ModelSpec& model, int n,
                                        RngStream& rng) {
    switch (model.kind) {
        case ModelSpec::Kind::GaussianStandard:
            return sample_gaussian_vector(n, rng);
        case ModelSpec::Kind::ConeLp:
            return std::move(sample_cone_lp(n, model.p, rng).y);
        case ModelSpec::Kind::UniformBallLp:
            return sample_uniform_ball_lp(n, model.p, rng);
        case ModelSpec::Kind::IsotropicUniformBallLp:
            return sample_isotropic_ball_lp(n, model.p, rng);
    }
    throw ConfigInvalid("unknown model kind");
}

SampleSet sample_set(const ModelSpec& model, const Params& params,
                     std::uint64_t master_seed, std::uint64_t replicate_index) {
    SampleSet out;
    out.N = params.N;
    out.n = params.n;
    out.model = model;
    out.master_seed = master_seed;
    out.replicate_index = replicate_index;
    out.data.reserve(static_cast<std::size_t>(params.N) * params.n);
    RngStream rng(master_seed, replicate_index, /*role=*/0);
    for (std::int64_t i = 0; i < params.N; ++i) {
        std::vector<double> v = sample_model_vector(model, params.n, rng);
        out.data.insert(out.data.end(), v.begin(), v.end());
    }
    return out;
}

}  // namespace knlq
