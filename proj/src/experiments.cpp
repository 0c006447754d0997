#include "knlq/experiments.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "knlq/numerics.hpp"
#include "knlq/orlicz.hpp"
#include "knlq/rng.hpp"
#include "knlq/samplers.hpp"

namespace knlq {

using nlohmann::json;

namespace {
constexpr const char* kVersion = "knlq 0.1.0";
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index) {
    return mix64(mix64(master_seed) + index);
}

int default_thread_count() {
    if (const char* env = std::getenv("KNLQ_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

void SweepConfig::validate() const {
    if (n_grid.empty() || N_grid.empty() || ell_grid.empty() || q_grid.empty())
        throw ConfigInvalid("sweep grids must be non-empty");
    for (int n : n_grid)
        if (n < 1) throw ConfigInvalid("n grid entries must be >= 1");
    for (std::int64_t N : N_grid)
        for (std::int64_t ell : ell_grid)
            if (ell < 1 || ell > N)
                throw ConfigInvalid("every (N, ell) pair must satisfy 1 <= ell <= N");
    for (double q : q_grid)
        if (!(q >= 1.0) || !std::isfinite(q))
            throw ConfigInvalid("q grid entries must be finite reals >= 1");
    if (mc.n_replicates < 1 || mc.n_directions < 1)
        throw ConfigInvalid("MC budget must be positive");
    if (format != Format::Csv && format != Format::Json)
        throw ConfigInvalid("unknown output format");
}

namespace {

std::vector<double> parse_grid(const json& j, const char* name) {
    std::vector<double> out;
    if (j.is_array()) {
        for (const auto& v : j) out.push_back(v.get<double>());
    } else if (j.is_object() && j.contains("logspace")) {
        const auto& ls = j["logspace"];
        if (!ls.is_array() || ls.size() != 3)
            throw ConfigInvalid(std::string(name) +
                                ": logspace wants [lo, hi, count]");
        const double lo = ls[0].get<double>();
        const double hi = ls[1].get<double>();
        const int count = ls[2].get<int>();
        if (!(lo > 0.0) || !(hi >= lo) || count < 1)
            throw ConfigInvalid(std::string(name) + ": bad logspace range");
        for (int i = 0; i < count; ++i) {
            const double f = (count == 1) ? 0.0
                                          : static_cast<double>(i) /
                                                static_cast<double>(count - 1);
            out.push_back(std::exp(std::log(lo) + f * (std::log(hi) - std::log(lo))));
        }
    } else {
        throw ConfigInvalid(std::string(name) +
                            ": expected an array or a logspace object");
    }
    return out;
}

}  // namespace

SweepConfig SweepConfig::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigInvalid(std::string("config is not valid JSON: ") + e.what());
    }
    SweepConfig cfg;
    try {
        const json& jm = j.at("model");
        if (jm.is_string()) {
            cfg.model = ModelSpec::parse(jm.get<std::string>(), 2.0);
        } else {
            cfg.model = ModelSpec::parse(jm.at("name").get<std::string>(),
                                         jm.value("p", 2.0));
        }
        for (double v : parse_grid(j.at("n"), "n"))
            cfg.n_grid.push_back(static_cast<int>(std::llround(v)));
        for (double v : parse_grid(j.at("N"), "N"))
            cfg.N_grid.push_back(std::llround(v));
        for (double v : parse_grid(j.at("ell"), "ell"))
            cfg.ell_grid.push_back(std::llround(v));
        cfg.q_grid = parse_grid(j.at("q"), "q");
        if (j.contains("mc")) {
            cfg.mc.n_replicates = j["mc"].value("replicates", std::int64_t{200});
            cfg.mc.n_directions = j["mc"].value("directions", std::int64_t{64});
            cfg.mc.antithetic = j["mc"].value("antithetic", false);
        }
        cfg.master_seed = j.value("seed", std::uint64_t{0});
        cfg.output_path = j.value("output", std::string{});
        const std::string fmt = j.value("format", std::string{"csv"});
        if (fmt == "csv")
            cfg.format = Format::Csv;
        else if (fmt == "json")
            cfg.format = Format::Json;
        else
            throw ConfigInvalid("format must be 'csv' or 'json'");
        cfg.bit_exact = j.value("bit_exact", true);
        cfg.threads = j.value("threads", 0);
    } catch (const json::exception& e) {
        throw ConfigInvalid(std::string("bad sweep config: ") + e.what());
    }
    cfg.validate();
    return cfg;
}

SweepConfig SweepConfig::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

std::string SweepConfig::to_json_text() const {
    json j;
    j["model"] = {{"name", model.name()}};
    if (model.has_p()) j["model"]["p"] = model.p;
    j["n"] = n_grid;
    j["N"] = N_grid;
    j["ell"] = ell_grid;
    j["q"] = q_grid;
    j["mc"] = {{"replicates", mc.n_replicates},
               {"directions", mc.n_directions},
               {"antithetic", mc.antithetic}};
    j["seed"] = master_seed;
    j["output"] = output_path;
    j["format"] = format == Format::Csv ? "csv" : "json";
    j["bit_exact"] = bit_exact;
    j["threads"] = threads;
    return j.dump(2);
}

PredictorValue predictor_for(const ModelSpec& model, const Params& params) {
    switch (model.kind) {
        case ModelSpec::Kind::GaussianStandard:
        case ModelSpec::Kind::IsotropicUniformBallLp:
            return predictor_logconcave(params.n, params.N, params.ell, params.q);
        case ModelSpec::Kind::ConeLp:
        case ModelSpec::Kind::UniformBallLp:
            return predictor_lp(params.n, params.N, params.ell, params.q, model.p);
    }
    throw ConfigInvalid("unknown model kind");
}

std::vector<RatioRow> run_sweep(const SweepConfig& cfg) {
    cfg.validate();
    struct Point {
        Params params;
        std::uint64_t grid_index;
    };
    std::vector<Point> points;
    std::uint64_t gi = 0;
    for (int n : cfg.n_grid)
        for (std::int64_t N : cfg.N_grid)
            for (std::int64_t ell : cfg.ell_grid)
                for (double q : cfg.q_grid)
                    points.push_back({validate_params(n, N, ell, q), gi++});

    std::vector<RatioRow> rows(points.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= points.size()) return;
            const Point& pt = points[i];
            const std::uint64_t point_seed = derive_seed(cfg.master_seed, pt.grid_index);
            const EstimateReport est =
                mean_width_estimate(cfg.model, pt.params, cfg.mc, point_seed);
            const PredictorValue pred = predictor_for(cfg.model, pt.params);
            RatioRow row;
            row.params = pt.params;
            row.model = cfg.model;
            row.estimate = est.value;
            row.std_error = est.std_error;
            row.predictor = pred.value;
            row.ratio = pred.value > 0.0 ? est.value / pred.value : 0.0;
            row.regime = pred.regime;
            row.n_replicates = cfg.mc.n_replicates;
            row.n_directions = cfg.mc.n_directions;
            row.seed = point_seed;
            rows[i] = row;
        }
    };

    int threads = cfg.threads > 0 ? cfg.threads : default_thread_count();
    threads = std::min<int>(threads, static_cast<int>(points.size()));
    if (threads <= 1) {
        worker();
    } else {
        // Each grid point is an independent task; rows land at fixed indices
        // and every point's reduction is fixed-order pairwise summation, so
        // the output does not depend on thread count.
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return rows;
}

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string rows_to_csv(const std::vector<RatioRow>& rows) {
    std::ostringstream out;
    out << "model,p,n,N,ell,q,replicates,directions,estimate,std_error,"
           "predictor,ratio,regime,seed\n";
    for (const RatioRow& r : rows) {
        out << r.model.name() << ',';
        if (r.model.has_p()) out << fmt_double(r.model.p);
        out << ',' << r.params.n << ',' << r.params.N << ',' << r.params.ell
            << ',' << fmt_double(r.params.q) << ',' << r.n_replicates << ','
            << r.n_directions << ',' << fmt_double(r.estimate) << ','
            << fmt_double(r.std_error) << ',' << fmt_double(r.predictor) << ','
            << fmt_double(r.ratio) << ',' << regime_label(r.regime) << ','
            << r.seed << '\n';
    }
    return out.str();
}

std::string rows_to_json(const SweepConfig& cfg, const std::vector<RatioRow>& rows) {
    json j;
    j["version"] = kVersion;
    j["config"] = json::parse(cfg.to_json_text());
    json arr = json::array();
    for (const RatioRow& r : rows) {
        json o;
        o["model"] = r.model.name();
        if (r.model.has_p()) o["p"] = r.model.p;
        o["n"] = r.params.n;
        o["N"] = r.params.N;
        o["ell"] = r.params.ell;
        o["q"] = r.params.q;
        o["replicates"] = r.n_replicates;
        o["directions"] = r.n_directions;
        o["estimate"] = r.estimate;
        o["std_error"] = r.std_error;
        o["predictor"] = r.predictor;
        o["ratio"] = r.ratio;
        o["regime"] = regime_label(r.regime);
        o["seed"] = r.seed;
        arr.push_back(o);
    }
    j["rows"] = arr;
    return j.dump(2) + "\n";
}

void write_sweep_output(const SweepConfig& cfg, const std::vector<RatioRow>& rows) {
    const std::string text = cfg.format == SweepConfig::Format::Csv
                                 ? rows_to_csv(rows)
                                 : rows_to_json(cfg, rows);
    if (cfg.output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + cfg.output_path);
    out << text;
    if (!out) throw IoError("write failed: " + cfg.output_path);
}

RatioSummary summarize_ratios(const std::vector<RatioRow>& rows) {
    if (rows.empty()) throw EmptyInput("summarize_ratios on empty rows");
    RatioSummary s;
    bool first = true;
    for (const RatioRow& r : rows) {
        if (!(r.predictor > 0.0))
            throw DivisionByZero("summarize_ratios requires positive predictors");
        if (first) {
            s.min_ratio = s.max_ratio = r.ratio;
            first = false;
        } else {
            s.min_ratio = std::min(s.min_ratio, r.ratio);
            s.max_ratio = std::max(s.max_ratio, r.ratio);
        }
        const std::string label = regime_label(r.regime);
        auto it = s.per_regime.find(label);
        if (it == s.per_regime.end()) {
            s.per_regime.emplace(label, std::make_pair(r.ratio, r.ratio));
        } else {
            it->second.first = std::min(it->second.first, r.ratio);
            it->second.second = std::max(it->second.second, r.ratio);
        }
    }
    s.spread = s.max_ratio / s.min_ratio;
    return s;
}

bool VerificationReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string report_to_json(const VerificationReport& report) {
    json j;
    j["suite"] = report.suite;
    j["all_pass"] = report.all_pass();
    json arr = json::array();
    for (const auto& c : report.checks)
        arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["checks"] = arr;
    return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Verification suites (desk-scale versions of the acceptance checks).

namespace {

void add_check(VerificationReport& rep, const std::string& name, bool pass,
               const std::string& detail) {
    rep.checks.push_back({name, pass, detail});
}

VerificationReport verify_pathwise(std::uint64_t seed) {
    VerificationReport rep{"pathwise", {}};
    RngStream pick(seed, 0, 99);
    const std::vector<ModelSpec> models = {
        ModelSpec::gaussian(), ModelSpec::cone_lp(1.5),
        ModelSpec::uniform_ball_lp(2.0), ModelSpec::isotropic_ball_lp(1.0)};
    int mono_q_fail = 0, mono_ell_fail = 0, sandwich_fail = 0, identity_fail = 0;
    const int instances = 200;
    for (int inst = 0; inst < instances; ++inst) {
        const int n = 1 + static_cast<int>(pick.next_u64() % 32);
        const std::int64_t N = 1 + static_cast<std::int64_t>(pick.next_u64() % 512);
        const ModelSpec model = models[pick.next_u64() % models.size()];
        const Params base = validate_params(n, N, std::int64_t{1}, 1.0);
        const SampleSet samples =
            sample_set(model, base, derive_seed(seed, 1000 + inst), 0);
        RngStream dir_rng(seed, inst, 3);
        const Direction theta = sample_unit_direction(n, dir_rng);

        // Monotone in q for several ell.
        for (std::int64_t ell : {std::int64_t{1}, std::int64_t{2}, N}) {
            if (ell > N) continue;
            double prev = -1.0;
            for (double q : {1.0, 2.0, 4.0, 8.0}) {
                const double h = support_value(samples, theta, ell, q);
                if (h + 1e-12 < prev) ++mono_q_fail;
                prev = h;
            }
        }
        // Monotone in ell.
        for (double q : {1.0, 2.0}) {
            double prev = std::numeric_limits<double>::infinity();
            for (std::int64_t ell = 1; ell <= N; ell *= 2) {
                const double h = support_value(samples, theta, ell, q);
                if (h > prev + 1e-12) ++mono_ell_fail;
                prev = h;
            }
        }
        // Sandwich for q >= log(ell).
        const double h11 = support_value(samples, theta, 1, 1.0);
        for (std::int64_t ell = 1; ell <= N; ell *= 4) {
            const double q = std::max(1.0, std::log(static_cast<double>(ell)));
            const double h = support_value(samples, theta, ell, q);
            if (h > h11 * (1.0 + 1e-12) || h < h11 / M_E * (1.0 - 1e-12))
                ++sandwich_fail;
        }
        // ell = N identity.
        const double q = 1.0 + static_cast<double>(pick.next_u64() % 8);
        const double h = support_value(samples, theta, N, q);
        const std::vector<double> m = marginals(samples, theta);
        double norm = 0.0;
        double top = 0.0;
        for (double v : m) top = std::max(top, std::abs(v));
        if (top > 0.0) {
            for (double v : m) norm += std::pow(std::abs(v) / top, q);
            norm = top * std::pow(norm, 1.0 / q);
        }
        const double ref = std::pow(static_cast<double>(N), -1.0 / q) * norm;
        if (std::abs(h - ref) > 1e-12 * std::max(1.0, std::abs(ref)))
            ++identity_fail;
    }
    add_check(rep, "monotone_in_q", mono_q_fail == 0,
              std::to_string(mono_q_fail) + " violations");
    add_check(rep, "monotone_in_ell", mono_ell_fail == 0,
              std::to_string(mono_ell_fail) + " violations");
    add_check(rep, "sandwich", sandwich_fail == 0,
              std::to_string(sandwich_fail) + " violations");
    add_check(rep, "ell_eq_N_identity", identity_fail == 0,
              std::to_string(identity_fail) + " violations");
    return rep;
}

VerificationReport verify_samplers(std::uint64_t seed) {
    VerificationReport rep{"samplers", {}};
    const std::int64_t draws = 200000;

    // Moment identity E|t|^k = Gamma((k+1)/p) / Gamma(1/p) for the
    // p-generalized density.
    bool moments_ok = true;
    std::string detail;
    for (double p : {1.0, 1.5, 2.0, 4.0}) {
        for (int k : {1, 2, 4}) {
            RngStream rng(seed, static_cast<std::uint64_t>(p * 10), 5);
            std::vector<double> v(static_cast<std::size_t>(draws));
            for (auto& x : v)
                x = std::pow(std::abs(sample_p_generalized_scalar(p, rng)),
                             static_cast<double>(k));
            const auto stats = mean_and_std_error(v);
            const double expect =
                std::exp(std::lgamma((k + 1.0) / p) - std::lgamma(1.0 / p));
            if (std::abs(stats.mean - expect) > 4.0 * stats.std_error) {
                moments_ok = false;
                detail += "p=" + std::to_string(p) + " k=" + std::to_string(k) + " ";
            }
        }
    }
    add_check(rep, "p_generalized_moments", moments_ok,
              moments_ok ? "within 4 SE" : detail);

    // Cone draws have exact unit p-norm and Y_1 independent of ||G||_p.
    {
        const double p = 1.5;
        const int n = 8;
        RngStream rng(seed, 1, 6);
        double max_norm_err = 0.0;
        double sum_y = 0.0, sum_g = 0.0, sum_yg = 0.0, sum_y2 = 0.0, sum_g2 = 0.0;
        const std::int64_t m = 50000;
        for (std::int64_t i = 0; i < m; ++i) {
            const ConeDraw d = sample_cone_lp(n, p, rng);
            double s = 0.0;
            for (double y : d.y) s += std::pow(std::abs(y), p);
            max_norm_err = std::max(max_norm_err,
                                    std::abs(std::pow(s, 1.0 / p) - 1.0));
            sum_y += d.y[0];
            sum_g += d.pnorm;
            sum_yg += d.y[0] * d.pnorm;
            sum_y2 += d.y[0] * d.y[0];
            sum_g2 += d.pnorm * d.pnorm;
        }
        const double md = static_cast<double>(m);
        const double cov = sum_yg / md - (sum_y / md) * (sum_g / md);
        const double vy = sum_y2 / md - (sum_y / md) * (sum_y / md);
        const double vg = sum_g2 / md - (sum_g / md) * (sum_g / md);
        const double corr = cov / std::sqrt(vy * vg);
        add_check(rep, "cone_unit_pnorm", max_norm_err <= 1e-12,
                  "max |  ||Y||_p - 1 | = " + fmt_double(max_norm_err));
        add_check(rep, "cone_norm_independence", std::abs(corr) < 0.02,
                  "corr(Y_1, ||G||_p) = " + fmt_double(corr));
    }

    // p = 2 cone measure equals the normalized Gaussian direction law.
    {
        const int n = 3;
        RngStream rng_a(seed, 2, 6);
        RngStream rng_b(seed, 3, 6);
        const std::int64_t m = 20000;
        std::vector<double> a(static_cast<std::size_t>(m)), b(a.size());
        for (std::int64_t i = 0; i < m; ++i) {
            a[static_cast<std::size_t>(i)] = sample_cone_lp(n, 2.0, rng_a).y[0];
            b[static_cast<std::size_t>(i)] =
                sample_unit_direction(n, rng_b).coords[0];
        }
        const KsResult ks = ks_two_sample(a, b);
        add_check(rep, "cone_p2_vs_sphere_ks", ks.p_value > 0.01,
                  "KS p-value = " + fmt_double(ks.p_value));
    }

    // Uniform ball: E ||X||_p = n/(n+1).
    {
        const int n = 5;
        const double p = 1.5;
        RngStream rng(seed, 4, 6);
        const std::int64_t m = 50000;
        std::vector<double> norms(static_cast<std::size_t>(m));
        for (auto& v : norms) {
            const auto x = sample_uniform_ball_lp(n, p, rng);
            double s = 0.0;
            for (double c : x) s += std::pow(std::abs(c), p);
            v = std::pow(s, 1.0 / p);
        }
        const auto stats = mean_and_std_error(norms);
        const double expect = static_cast<double>(n) / (n + 1.0);
        const bool ok = std::abs(stats.mean - expect) < 4.0 * stats.std_error;
        add_check(rep, "ball_radial_mean", ok,
                  "E||X||_p = " + fmt_double(stats.mean) + " vs " +
                      fmt_double(expect));
    }

    // Determinism and stream separation.
    {
        const Params params = validate_params(3, 4, std::int64_t{1}, 1.0);
        const SampleSet s1 = sample_set(ModelSpec::gaussian(), params, seed, 0);
        const SampleSet s2 = sample_set(ModelSpec::gaussian(), params, seed, 0);
        const SampleSet s3 = sample_set(ModelSpec::gaussian(), params, seed, 1);
        add_check(rep, "determinism", s1.data == s2.data, "bitwise repeat");
        add_check(rep, "stream_separation", s1.data != s3.data,
                  "replicate 0 vs 1 differ");
    }
    return rep;
}

VerificationReport verify_orlicz(std::uint64_t seed) {
    (void)seed;
    VerificationReport rep{"orlicz", {}};
    const std::vector<double> betas = {0.05, 0.1, 0.2, 0.4, 0.6, 0.9};

    for (std::int64_t ell : {std::int64_t{1}, std::int64_t{4}, std::int64_t{16}}) {
        const auto gauss = std::make_shared<HalfNormalDistribution>();
        const MStarReport g = verify_mstar_identity(gauss, ell, betas);
        add_check(rep, "mstar_halfnormal_ell" + std::to_string(ell),
                  g.max_rel_residual <= 0.02,
                  "max rel residual = " + fmt_double(g.max_rel_residual));
        const auto cons = std::make_shared<ConstantDistribution>(1.0);
        const MStarReport c = verify_mstar_identity(cons, ell, betas);
        add_check(rep, "mstar_constant_ell" + std::to_string(ell),
                  c.max_rel_residual <= 0.02,
                  "max rel residual = " + fmt_double(c.max_rel_residual));
    }

    // Scaling law ell * M_ell(s) = M_1(ell s).
    {
        const HalfNormalDistribution gauss;
        double worst = 0.0;
        for (std::int64_t ell : {std::int64_t{4}, std::int64_t{16}, std::int64_t{64}})
            for (double s : {0.01, 0.1, 0.5, 1.0, 3.0}) {
                const double lhs = static_cast<double>(ell) *
                                   m_ell_from_distribution(gauss, ell, s);
                const double rhs = m_ell_from_distribution(
                    gauss, 1, static_cast<double>(ell) * s);
                worst = std::max(worst, std::abs(lhs - rhs));
            }
        add_check(rep, "scaling_law", worst <= 1e-6,
                  "max |ell M_ell(s) - M_1(ell s)| = " + fmt_double(worst));
    }

    // Luxemburg norm of M(t) = t^p is the l_p norm.
    {
        const OrliczFunction M = OrliczFunction::power(2.0);
        const std::vector<double> x = {3.0, 4.0};
        const double norm = luxemburg_norm(M, x);
        add_check(rep, "luxemburg_p2", std::abs(norm - 5.0) <= 1e-8,
                  "||(3,4)||_M = " + fmt_double(norm));
    }

    // Norm-of-ones identity against the closed-form Gaussian M_ell.
    {
        const std::int64_t N = 1024;
        const OrliczFunction M = OrliczFunction::gaussian_q(4, 2.0);
        const std::vector<double> ones(static_cast<std::size_t>(N), 1.0);
        const double norm = luxemburg_norm(M, ones);
        const double inv = orlicz_inverse(M, 1.0 / static_cast<double>(N));
        add_check(rep, "norm_of_ones", std::abs(norm * inv - 1.0) <= 1e-8,
                  "norm * M^{-1}(1/N) = " + fmt_double(norm * inv));
    }

    // Breakpoint of the closed-form Gaussian Orlicz function.
    {
        double worst = 0.0;
        for (double q : {1.0, 2.0, 4.0, 8.0})
            for (std::int64_t ell : {std::int64_t{1}, std::int64_t{4}, std::int64_t{64}}) {
                const double t = gaussian_q_orlicz_breakpoint(ell, q);
                const double v = gaussian_q_orlicz(ell, q, t);
                const double expect =
                    std::exp(-0.5 * (q + 2.0)) / static_cast<double>(ell);
                worst = std::max(worst, std::abs(v - expect));
            }
        add_check(rep, "gaussian_breakpoint", worst <= 1e-12,
                  "max abs deviation = " + fmt_double(worst));
    }
    return rep;
}

VerificationReport verify_ratios(std::uint64_t seed) {
    VerificationReport rep{"ratios", {}};
    SweepConfig cfg;
    cfg.model = ModelSpec::gaussian();
    cfg.n_grid = {16};
    cfg.N_grid = {64, 256};
    cfg.ell_grid = {1, 16, 64};
    cfg.q_grid = {1.0, 2.0, 4.0};
    cfg.mc.n_replicates = 40;
    cfg.mc.n_directions = 16;
    cfg.master_seed = seed;
    const std::vector<RatioRow> rows = run_sweep(cfg);
    const RatioSummary s = summarize_ratios(rows);
    add_check(rep, "gaussian_ratio_band",
              s.min_ratio >= 1.0 / 8.0 && s.max_ratio <= 8.0,
              "ratios in [" + fmt_double(s.min_ratio) + ", " +
                  fmt_double(s.max_ratio) + "]");
    add_check(rep, "gaussian_ratio_spread", s.spread <= 4.0,
              "spread = " + fmt_double(s.spread));
    return rep;
}

VerificationReport verify_formulas(std::uint64_t seed) {
    VerificationReport rep{"formulas", {}};

    // |B_p^n| against cube hit-rate MC.
    bool vol_ok = true;
    std::string detail;
    for (int n : {2, 4}) {
        for (double p : {1.0, 2.0, 3.0}) {
            RngStream rng(seed, static_cast<std::uint64_t>(n * 10 + p), 7);
            const std::int64_t m = 200000;
            std::int64_t hits = 0;
            for (std::int64_t i = 0; i < m; ++i) {
                double s = 0.0;
                for (int j = 0; j < n; ++j) {
                    const double x = 2.0 * rng.uniform() - 1.0;
                    s += std::pow(std::abs(x), p);
                }
                if (s <= 1.0) ++hits;
            }
            const double rate = static_cast<double>(hits) / static_cast<double>(m);
            const double cube = std::pow(2.0, n);
            const double est = rate * cube;
            const double se =
                cube * std::sqrt(rate * (1.0 - rate) / static_cast<double>(m));
            const double exact = volume_bpn(n, p);
            if (std::abs(est - exact) > 3.0 * se) {
                vol_ok = false;
                detail += "(n=" + std::to_string(n) + ",p=" + fmt_double(p) + ") ";
            }
        }
    }
    add_check(rep, "volume_bpn_mc", vol_ok, vol_ok ? "within 3 SE" : detail);

    // c_n / sqrt(n) -> 1.
    {
        const double r = c_n_constant(10000) / std::sqrt(10000.0);
        add_check(rep, "c_n_asymptotics", std::abs(r - 1.0) <= 0.01,
                  "c_n/sqrt(n) = " + fmt_double(r));
    }

    // Formula-level consistency: w(B_p^n) * sqrt(n) equals E||G||_{p*}.
    {
        bool ok = true;
        for (int n : {64, 1024}) {
            for (double p : {1.5, 2.0, 4.0}) {
                const double pstar = p / (p - 1.0);
                const double lhs = mean_width_bpn(n, p) * std::sqrt(n);
                const double rhs = gaussian_pnorm_expectation(n, pstar);
                if (std::abs(lhs - rhs) > 1e-9 * std::max(1.0, rhs)) ok = false;
            }
        }
        add_check(rep, "width_pnorm_consistency", ok, "exact formula identity");
    }
    return rep;
}

}  // namespace

VerificationReport run_verification(const std::string& suite, std::uint64_t seed) {
    if (suite == "pathwise") return verify_pathwise(seed);
    if (suite == "samplers") return verify_samplers(seed);
    if (suite == "orlicz") return verify_orlicz(seed);
    if (suite == "ratios") return verify_ratios(seed);
    if (suite == "formulas") return verify_formulas(seed);
    throw UnknownSuite("unknown verification suite: " + suite);
}

}  // namespace knlq
