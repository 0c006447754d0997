// knlq command-line driver: sampling, support/mean-width estimates, Orlicz
// evaluation, parameter sweeps and verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 config error, 3 I/O error.

#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "knlq/experiments.hpp"
#include "knlq/orlicz.hpp"
#include "knlq/rng.hpp"
#include "knlq/samplers.hpp"

namespace {

using namespace knlq;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

Direction parse_theta(const std::string& text, int n, std::uint64_t seed) {
    if (text.empty() || text == "random") {
        RngStream rng(seed, 0, 11);
        return sample_unit_direction(n, rng);
    }
    std::vector<double> coords;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) coords.push_back(std::stod(tok));
    if (static_cast<int>(coords.size()) != n)
        throw ConfigInvalid("theta has " + std::to_string(coords.size()) +
                            " coordinates, expected " + std::to_string(n));
    return Direction::from_coords(std::move(coords));
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + path);
    out << text;
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"random convex sets from order statistics of marginals"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    int threads = 0;
    bool bit_exact = true;
    app.add_option("--seed", seed, "master seed")->capture_default_str();
    app.add_option("--threads", threads,
                   "worker threads (0 = KNLQ_THREADS env or hardware)");
    app.add_flag("--bit-exact,!--no-bit-exact", bit_exact,
                 "deterministic fixed-order reduction");

    std::string model_name = "gaussian";
    double model_p = 2.0;
    std::int64_t n = 2, N = 16, ell = 1;
    double q = 1.0;
    std::string theta_text = "random";
    std::string output;

    auto add_model_opts = [&](CLI::App* cmd) {
        cmd->add_option("--model", model_name, "gaussian|cone|ball|isoball")
            ->capture_default_str();
        cmd->add_option("--p", model_p, "l_p exponent for the l_p models")
            ->capture_default_str();
        cmd->add_option("--n", n, "dimension")->capture_default_str();
    };

    // sample: dump one SampleSet as CSV.
    auto* sample_cmd = app.add_subcommand("sample", "dump a sample set");
    add_model_opts(sample_cmd);
    sample_cmd->add_option("--N", N, "number of vectors")->capture_default_str();
    sample_cmd->add_option("-o,--output", output, "output path (default stdout)");

    // support: one support value on one realization.
    auto* support_cmd = app.add_subcommand("support", "one support value");
    add_model_opts(support_cmd);
    support_cmd->add_option("--N", N);
    support_cmd->add_option("--ell", ell)->capture_default_str();
    support_cmd->add_option("--q", q)->capture_default_str();
    support_cmd->add_option("--theta", theta_text,
                            "comma-separated unit vector or 'random'");

    // meanwidth: Monte Carlo estimate plus predictor ratio.
    std::int64_t replicates = 200, directions = 64;
    auto* mw_cmd = app.add_subcommand("meanwidth", "mean width estimate");
    add_model_opts(mw_cmd);
    mw_cmd->add_option("--N", N);
    mw_cmd->add_option("--ell", ell)->capture_default_str();
    mw_cmd->add_option("--q", q)->capture_default_str();
    mw_cmd->add_option("--replicates", replicates)->capture_default_str();
    mw_cmd->add_option("--directions", directions)->capture_default_str();

    // orlicz: evaluate M_ell or verify the conjugate identity.
    std::string dist_name = "halfnormal";
    double dist_c = 1.0, s_value = 1.0;
    bool do_verify = false;
    auto* orlicz_cmd = app.add_subcommand("orlicz", "evaluate/verify M_ell");
    orlicz_cmd->add_option("--dist", dist_name, "halfnormal|constant")
        ->capture_default_str();
    orlicz_cmd->add_option("--c", dist_c, "constant-distribution value")
        ->capture_default_str();
    orlicz_cmd->add_option("--ell", ell)->capture_default_str();
    orlicz_cmd->add_option("--s", s_value, "evaluation point")
        ->capture_default_str();
    orlicz_cmd->add_flag("--verify", do_verify,
                         "run the conjugate-identity check");

    // sweep: run a SweepConfig from a JSON file.
    std::string config_path;
    auto* sweep_cmd = app.add_subcommand("sweep", "run a parameter sweep");
    sweep_cmd->add_option("config", config_path, "JSON config file")->required();
    sweep_cmd->add_option("-o,--output", output, "override config output path");

    // verify: run a verification suite.
    std::string suite;
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd
        ->add_option("suite", suite, "pathwise|samplers|orlicz|ratios|formulas")
        ->required();

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sample_cmd->parsed()) {
            const ModelSpec model = ModelSpec::parse(model_name, model_p);
            const Params params =
                validate_params(n, N, std::int64_t{1}, 1.0);
            const SampleSet s = sample_set(model, params, seed, 0);
            std::ostringstream out;
            for (std::int64_t i = 0; i < s.N; ++i) {
                const auto row = s.row(i);
                for (int j = 0; j < s.n; ++j)
                    out << (j ? "," : "") << fmt(row[static_cast<std::size_t>(j)]);
                out << '\n';
            }
            write_text(output, out.str());
        } else if (support_cmd->parsed()) {
            const ModelSpec model = ModelSpec::parse(model_name, model_p);
            const Params params = validate_params(n, N, ell, q);
            const SampleSet s = sample_set(model, params, seed, 0);
            const Direction theta =
                parse_theta(theta_text, params.n, derive_seed(seed, 1));
            std::cout << fmt(support_value(s, theta, params.ell, params.q))
                      << '\n';
        } else if (mw_cmd->parsed()) {
            const ModelSpec model = ModelSpec::parse(model_name, model_p);
            const Params params = validate_params(n, N, ell, q);
            MeanWidthConfig mc;
            mc.n_replicates = replicates;
            mc.n_directions = directions;
            const EstimateReport est = mean_width_estimate(model, params, mc, seed);
            const PredictorValue pred = predictor_for(model, params);
            std::cout << "estimate " << fmt(est.value) << "\nstd_error "
                      << fmt(est.std_error) << "\npredictor " << fmt(pred.value)
                      << "\nratio " << fmt(est.value / pred.value) << "\nregime "
                      << regime_label(pred.regime) << '\n';
        } else if (orlicz_cmd->parsed()) {
            std::shared_ptr<const Distribution> dist;
            if (dist_name == "halfnormal")
                dist = std::make_shared<HalfNormalDistribution>();
            else if (dist_name == "constant")
                dist = std::make_shared<ConstantDistribution>(dist_c);
            else
                throw ConfigInvalid("unknown distribution: " + dist_name);
            if (do_verify) {
                const std::vector<double> betas = {0.05, 0.1, 0.2, 0.4, 0.6, 0.9};
                const MStarReport rep = verify_mstar_identity(dist, ell, betas);
                for (const MStarRow& r : rep.rows)
                    std::cout << "beta " << fmt(r.beta) << " lhs " << fmt(r.lhs)
                              << " rhs " << fmt(r.rhs) << " rel_residual "
                              << fmt(r.rel_residual) << '\n';
                std::cout << "max_rel_residual " << fmt(rep.max_rel_residual)
                          << '\n';
                if (rep.max_rel_residual > 0.02) return 1;
            } else {
                std::cout << fmt(m_ell_from_distribution(*dist, ell, s_value))
                          << '\n';
            }
        } else if (sweep_cmd->parsed()) {
            SweepConfig cfg = SweepConfig::from_json_file(config_path);
            if (app.count("--seed")) cfg.master_seed = seed;
            if (threads > 0) cfg.threads = threads;
            if (app.count("--bit-exact") || app.count("--no-bit-exact"))
                cfg.bit_exact = bit_exact;
            if (!output.empty()) cfg.output_path = output;
            const std::vector<RatioRow> rows = run_sweep(cfg);
            write_sweep_output(cfg, rows);
        } else if (verify_cmd->parsed()) {
            const VerificationReport rep = run_verification(suite, seed);
            std::cout << report_to_json(rep);
            if (!rep.all_pass()) return 1;
        }
    } catch (const ConfigInvalid& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const UnknownSuite& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const IoError& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
