#include "knlq/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "knlq/numerics.hpp"
#include "knlq/rng.hpp"
#include "knlq/samplers.hpp"

namespace knlq {

namespace {
// Role tags for stream derivation.
constexpr std::uint64_t kRoleDirections = 1;
constexpr std::uint64_t kRoleMarginalDraws = 2;
}  // namespace

std::vector<double> marginals(const SampleSet& samples, const Direction& theta) {
    if (theta.dim() != samples.n)
        throw DimensionMismatch("direction dimension " +
                                std::to_string(theta.dim()) +
                                " != sample dimension " + std::to_string(samples.n));
    std::vector<double> out(static_cast<std::size_t>(samples.N));
    const int n = samples.n;
    const double* base = samples.data.data();
    const double* th = theta.coords.data();
    for (std::int64_t i = 0; i < samples.N; ++i) {
        const double* row = base + i * n;
        double dot = 0.0;
        for (int j = 0; j < n; ++j) dot += row[j] * th[j];
        out[static_cast<std::size_t>(i)] = dot;
    }
    return out;
}

double support_value(const SampleSet& samples, const Direction& theta,
                     std::int64_t ell, double q) {
    const std::vector<double> m = marginals(samples, theta);
    return orderstat_power_mean(m, ell, q);
}

namespace {

// One uniform direction; in antithetic mode odd indices reuse the previous
// generating Gaussian with flipped sign.
class DirectionSource {
public:
    DirectionSource(int n, RngStream& rng, bool antithetic)
        : n_(n), rng_(rng), antithetic_(antithetic) {}

    Direction next() {
        if (antithetic_ && have_prev_) {
            have_prev_ = false;
            for (auto& c : prev_.coords) c = -c;
            return prev_;
        }
        Direction d = sample_unit_direction(n_, rng_);
        if (antithetic_) {
            prev_ = d;
            have_prev_ = true;
        }
        return d;
    }

private:
    int n_;
    RngStream& rng_;
    bool antithetic_;
    bool have_prev_ = false;
    Direction prev_;
};

}  // namespace

EstimateReport mean_width_estimate(const ModelSpec& model, const Params& params,
                                   const MeanWidthConfig& cfg,
                                   std::uint64_t seed) {
    if (cfg.n_replicates < 1 || cfg.n_directions < 1)
        throw ConfigInvalid("mean_width_estimate needs positive MC counts");
    std::vector<double> rep_values(static_cast<std::size_t>(cfg.n_replicates));
    for (std::int64_t r = 0; r < cfg.n_replicates; ++r) {
        const SampleSet samples = sample_set(model, params, seed, r);
        RngStream dir_rng(seed, r, kRoleDirections);
        DirectionSource dirs(params.n, dir_rng, cfg.antithetic);
        std::vector<double> vals(static_cast<std::size_t>(cfg.n_directions));
        for (std::int64_t d = 0; d < cfg.n_directions; ++d)
            vals[static_cast<std::size_t>(d)] =
                support_value(samples, dirs.next(), params.ell, params.q);
        rep_values[static_cast<std::size_t>(r)] =
            pairwise_sum(vals) / static_cast<double>(cfg.n_directions);
    }
    const auto stats = mean_and_std_error(rep_values);
    EstimateReport rep;
    rep.value = stats.mean;
    rep.std_error = stats.std_error;
    rep.n_replicates = cfg.n_replicates;
    rep.n_directions = cfg.n_directions;
    rep.params = params;
    rep.model = model;
    rep.seed = seed;
    return rep;
}

EstimateReport support_expectation_estimate(const ModelSpec& model,
                                            const Params& params,
                                            const Direction& theta,
                                            std::int64_t n_replicates,
                                            std::uint64_t seed) {
    if (n_replicates < 1)
        throw ConfigInvalid("support_expectation_estimate needs replicates >= 1");
    std::vector<double> vals(static_cast<std::size_t>(n_replicates));
    for (std::int64_t r = 0; r < n_replicates; ++r) {
        const SampleSet samples = sample_set(model, params, seed, r);
        vals[static_cast<std::size_t>(r)] =
            support_value(samples, theta, params.ell, params.q);
    }
    const auto stats = mean_and_std_error(vals);
    EstimateReport rep;
    rep.value = stats.mean;
    rep.std_error = stats.std_error;
    rep.n_replicates = n_replicates;
    rep.n_directions = 0;
    rep.params = params;
    rep.model = model;
    rep.seed = seed;
    return rep;
}

EstimateReport centroid_support_estimate(const ModelSpec& model, int n,
                                         double q, const Direction& theta,
                                         std::int64_t n_samples,
                                         std::uint64_t seed) {
    if (!(q >= 1.0)) throw QBelowOne("centroid_support_estimate requires q >= 1");
    if (theta.dim() != n) throw DimensionMismatch("direction dimension mismatch");
    if (n_samples < 2) throw InsufficientSamples("need at least 2 draws");
    RngStream rng(seed, 0, kRoleMarginalDraws);
    std::vector<double> powers(static_cast<std::size_t>(n_samples));
    for (std::int64_t i = 0; i < n_samples; ++i) {
        const std::vector<double> x = sample_model_vector(model, n, rng);
        double dot = 0.0;
        for (int j = 0; j < n; ++j) dot += x[static_cast<std::size_t>(j)] * theta.coords[static_cast<std::size_t>(j)];
        powers[static_cast<std::size_t>(i)] = std::pow(std::abs(dot), q);
    }
    const auto stats = mean_and_std_error(powers);
    EstimateReport rep;
    rep.value = std::pow(stats.mean, 1.0 / q);
    // Delta method: d/dm m^{1/q} = (1/q) m^{1/q - 1}.
    rep.std_error = (stats.mean > 0.0)
                        ? stats.std_error / q * std::pow(stats.mean, 1.0 / q - 1.0)
                        : 0.0;
    rep.n_replicates = n_samples;
    rep.n_directions = 0;
    rep.params = validate_params(n, n_samples, std::int64_t{1}, q);
    rep.model = model;
    rep.seed = seed;
    return rep;
}

EstimateReport floating_support_estimate(const ModelSpec& model, int n,
                                         double delta, const Direction& theta,
                                         std::int64_t n_samples,
                                         std::uint64_t seed) {
    if (!(delta > 0.0 && delta < 1.0 / M_E))
        throw DeltaOutOfRange("delta must lie in (0, 1/e)");
    if (static_cast<double>(n_samples) * delta < 50.0)
        throw InsufficientSamples("need n_samples * delta >= 50");
    if (theta.dim() != n) throw DimensionMismatch("direction dimension mismatch");
    RngStream rng(seed, 0, kRoleMarginalDraws);
    std::vector<double> abs_marg(static_cast<std::size_t>(n_samples));
    for (std::int64_t i = 0; i < n_samples; ++i) {
        const std::vector<double> x = sample_model_vector(model, n, rng);
        double dot = 0.0;
        for (int j = 0; j < n; ++j) dot += x[static_cast<std::size_t>(j)] * theta.coords[static_cast<std::size_t>(j)];
        abs_marg[static_cast<std::size_t>(i)] = std::abs(dot);
    }
    std::sort(abs_marg.begin(), abs_marg.end());
    const double level = 1.0 - delta;
    EstimateReport rep;
    rep.value = quantile_type7(abs_marg, level);
    // Order-statistic bracket: half-width of the +-sqrt(N delta (1-delta))
    // order-statistic window around the quantile.
    const double d = std::sqrt(static_cast<double>(n_samples) * delta * (1.0 - delta));
    const double lo_level =
        std::max(0.0, level - d / static_cast<double>(n_samples));
    const double hi_level =
        std::min(1.0, level + d / static_cast<double>(n_samples));
    rep.std_error = 0.5 * (quantile_type7(abs_marg, hi_level) -
                           quantile_type7(abs_marg, lo_level));
    rep.n_replicates = n_samples;
    rep.n_directions = 0;
    rep.params = validate_params(n, n_samples, std::int64_t{1}, 1.0);
    rep.model = model;
    rep.seed = seed;
    return rep;
}

double comparison_ratio(const SampleSet& samplesA, const SampleSet& samplesB,
                        const Direction& theta, const Params& paramsA,
                        const Params& paramsB) {
    if (samplesA.n != samplesB.n)
        throw DimensionMismatch("sample sets have different dimensions");
    const double num = support_value(samplesA, theta, paramsA.ell, paramsA.q);
    const double den = support_value(samplesB, theta, paramsB.ell, paramsB.q);
    if (den == 0.0) throw DivisionByZero("zero denominator support value");
    return num / den;
}

}  // namespace knlq
