#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "knlq/core.hpp"
#include "knlq/geometry.hpp"
#include "knlq/predictors.hpp"

namespace knlq {

// Deterministic seed derivation for sub-computations (grid points, suites).
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index);

// Default worker count: KNLQ_THREADS env var, else hardware concurrency.
int default_thread_count();

struct SweepConfig {
    ModelSpec model;
    std::vector<int> n_grid;
    std::vector<std::int64_t> N_grid;
    std::vector<std::int64_t> ell_grid;
    std::vector<double> q_grid;
    MeanWidthConfig mc;
    std::uint64_t master_seed = 0;
    std::string output_path;  // empty writes to stdout
    enum class Format { Csv, Json } format = Format::Csv;
    bool bit_exact = true;
    int threads = 0;  // 0 = default_thread_count()

    void validate() const;  // throws ConfigInvalid
    static SweepConfig from_json_text(const std::string& text);
    static SweepConfig from_json_file(const std::string& path);
    std::string to_json_text() const;
};

struct RatioRow {
    Params params;
    ModelSpec model;
    double estimate = 0.0;
    double std_error = 0.0;
    double predictor = 0.0;
    double ratio = 0.0;
    Regime regime = Regime::SmallQ;
    std::int64_t n_replicates = 0;
    std::int64_t n_directions = 0;
    std::uint64_t seed = 0;
};

// Closed-form reference value for one grid point: the log-concave predictor
// for the Gaussian and isotropic-ball models, the n^{-1/p}-scaled variant for
// the cone and uniform-ball models.
PredictorValue predictor_for(const ModelSpec& model, const Params& params);

// One RatioRow per grid point of the cross product, emitted in grid order
// (n, N, ell, q innermost). Deterministic given master_seed regardless of
// thread count.
std::vector<RatioRow> run_sweep(const SweepConfig& cfg);

std::string rows_to_csv(const std::vector<RatioRow>& rows);
std::string rows_to_json(const SweepConfig& cfg, const std::vector<RatioRow>& rows);

// Writes rows per cfg.format to cfg.output_path (stdout when empty).
void write_sweep_output(const SweepConfig& cfg, const std::vector<RatioRow>& rows);

struct RatioSummary {
    double min_ratio = 0.0;
    double max_ratio = 0.0;
    double spread = 0.0;  // max / min
    std::map<std::string, std::pair<double, double>> per_regime;  // min, max
};
RatioSummary summarize_ratios(const std::vector<RatioRow>& rows);

struct VerificationCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};
struct VerificationReport {
    std::string suite;
    std::vector<VerificationCheck> checks;
    bool all_pass() const;
};

// suite in {pathwise, samplers, orlicz, ratios, formulas}.
VerificationReport run_verification(const std::string& suite,
                                    std::uint64_t seed = 20240801);

std::string report_to_json(const VerificationReport& report);

}  // namespace knlq
