#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "knlq/experiments.hpp"
#include "knlq/geometry.hpp"
#include "knlq/orlicz.hpp"
#include "knlq/predictors.hpp"
#include "knlq/samplers.hpp"

namespace py = pybind11;
using namespace knlq;

namespace {

ModelSpec model_from(const std::string& name, double p) {
    return ModelSpec::parse(name, p);
}

py::array_t<double> sample_array(const std::string& model_name, double p, int n,
                                 std::int64_t N, std::uint64_t seed,
                                 std::uint64_t replicate) {
    const ModelSpec model = model_from(model_name, p);
    const Params params = validate_params(static_cast<std::int64_t>(n), N,
                                          std::int64_t{1}, 1.0);
    const SampleSet s = sample_set(model, params, seed, replicate);
    py::array_t<double> out({static_cast<py::ssize_t>(N),
                             static_cast<py::ssize_t>(n)});
    std::copy(s.data.begin(), s.data.end(), out.mutable_data());
    return out;
}

double support_from_array(py::array_t<double, py::array::c_style |
                                                  py::array::forcecast> points,
                          std::vector<double> theta, std::int64_t ell,
                          double q) {
    if (points.ndim() != 2) throw DimensionMismatch("points must be 2-d");
    const auto N = static_cast<std::int64_t>(points.shape(0));
    const auto n = static_cast<int>(points.shape(1));
    SampleSet s;
    s.N = N;
    s.n = n;
    s.data.assign(points.data(), points.data() + N * n);
    validate_params(static_cast<std::int64_t>(n), N, ell, q);
    return support_value(s, Direction::from_coords(std::move(theta)), ell, q);
}

py::dict report_dict(const EstimateReport& r) {
    py::dict d;
    d["value"] = r.value;
    d["std_error"] = r.std_error;
    d["n_replicates"] = r.n_replicates;
    return d;
}

py::dict mean_width(const std::string& model_name, double p, int n,
                    std::int64_t N, std::int64_t ell, double q,
                    std::int64_t replicates, std::int64_t directions,
                    std::uint64_t seed) {
    const ModelSpec model = model_from(model_name, p);
    const Params params =
        validate_params(static_cast<std::int64_t>(n), N, ell, q);
    MeanWidthConfig mc;
    mc.n_replicates = replicates;
    mc.n_directions = directions;
    const EstimateReport est = mean_width_estimate(model, params, mc, seed);
    const PredictorValue pred = predictor_for(model, params);
    py::dict d = report_dict(est);
    d["predictor"] = pred.value;
    d["ratio"] = est.value / pred.value;
    d["regime"] = regime_label(pred.regime);
    return d;
}

}  // namespace

PYBIND11_MODULE(_knlq, m) {
    m.doc() = "random convex sets between polytopes and zonotopes";

    // Translators run newest-first; register the broad base before the
    // specific subclass so config errors surface as ValueError.
    py::register_exception<Error>(m, "KnlqError", PyExc_RuntimeError);
    py::register_exception<ConfigInvalid>(m, "ConfigError", PyExc_ValueError);

    m.def("sample", &sample_array, py::arg("model"), py::arg("p"), py::arg("n"),
          py::arg("N"), py::arg("seed") = 0, py::arg("replicate") = 0,
          "Draw N model vectors in dimension n as an (N, n) array.");

    m.def("support_value", &support_from_array, py::arg("points"),
          py::arg("theta"), py::arg("ell"), py::arg("q"),
          "Support value of the body built from the given points.");

    m.def(
        "orderstat_power_mean",
        [](std::vector<double> values, std::int64_t ell, double q) {
            return orderstat_power_mean(values, ell, q);
        },
        py::arg("values"), py::arg("ell"), py::arg("q"),
          "q-power mean of the ell largest absolute values.");

    m.def("mean_width", &mean_width, py::arg("model"), py::arg("p"),
          py::arg("n"), py::arg("N"), py::arg("ell"), py::arg("q"),
          py::arg("replicates") = 200, py::arg("directions") = 64,
          py::arg("seed") = 0,
          "Monte Carlo mean-width estimate with predictor and ratio.");

    m.def(
        "predictor",
        [](const std::string& model_name, double p, int n, std::int64_t N,
           std::int64_t ell, double q) {
            const ModelSpec model = model_from(model_name, p);
            const Params params =
                validate_params(static_cast<std::int64_t>(n), N, ell, q);
            const PredictorValue v = predictor_for(model, params);
            return py::make_tuple(v.value, regime_label(v.regime));
        },
        py::arg("model"), py::arg("p"), py::arg("n"), py::arg("N"),
        py::arg("ell"), py::arg("q"),
        "Closed-form mean-width predictor and regime label.");

    m.def(
        "gaussian_orlicz",
        [](double q, std::int64_t ell, double t) {
            return gaussian_q_orlicz(ell, q, t);
        },
        py::arg("q"), py::arg("ell"), py::arg("t"),
        "Closed-form Orlicz function of the Gaussian model at t.");

    m.def(
        "luxemburg_norm",
        [](std::vector<double> coeffs, double q, std::int64_t ell) {
            return luxemburg_norm(OrliczFunction::gaussian_q(ell, q), coeffs);
        },
        py::arg("coeffs"), py::arg("q"), py::arg("ell"),
        "Luxemburg norm of a coefficient vector in the Gaussian Orlicz space.");

    m.def(
        "run_sweep_json",
        [](const std::string& config_text) {
            SweepConfig cfg = SweepConfig::from_json_text(config_text);
            cfg.output_path.clear();
            const auto rows = run_sweep(cfg);
            return rows_to_json(cfg, rows);
        },
        py::arg("config_text"),
        "Run a sweep from JSON config text; returns the JSON report.");

    m.def(
        "verify",
        [](const std::string& suite, std::uint64_t seed) {
            return report_to_json(run_verification(suite, seed));
        },
        py::arg("suite"), py::arg("seed") = 20240801,
        "Run a verification suite; returns the JSON report.");
}
