#include "radial_yamabe/census.hpp"
#include "radial_yamabe/linear_modes.hpp"
#include "radial_yamabe/report.hpp"
#include "radial_yamabe/shooting.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <numbers>

namespace py = pybind11;
namespace ry = radial_yamabe;

namespace {

// nlohmann -> Python objects through the json module keeps the schema identical to the CLI.
py::object to_py(const ry::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

template <class F>
auto without_gil(F&& f) {
    py::gil_scoped_release release;
    return f();
}

ry::CensusOptions census_options(double tol, double scan_tol) {
    ry::CensusOptions co;
    co.shooting.refine_integrator.tol = tol;
    co.shooting.scan_integrator.tol = scan_tol;
    return co;
}

ry::json geometry_json(const ry::GeometryConfig& cfg) {
    ry::json j{{"m", cfg.m()},         {"k", cfg.k()},       {"N", cfg.N()},
               {"p", cfg.p()},         {"a", cfg.a()},       {"p_exact", ry::to_string(cfg.constants().p)},
               {"a_exact", ry::to_string(cfg.constants().a)}, {"s_M", cfg.s_M()},
               {"vol_M", cfg.vol_M()}, {"s_total", cfg.s_total()},
               {"volume", cfg.product_volume()}};
    if (cfg.has_positive_lambda()) {
        j["lambda"] = cfg.lambda();
        j["A"] = cfg.A();
        j["second_variation_coefficient"] = ry::second_variation_coefficient(cfg);
        j["yamabe_constant_profile"] = ry::yamabe_constant_profile(cfg);
    }
    return j;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Radial Yamabe solver core";

    py::register_exception<ry::NumericalFailure>(m, "NumericalFailure", PyExc_RuntimeError);
    py::register_exception<ry::NoConvergence>(m, "NoConvergence", PyExc_RuntimeError);

    m.def("derive_constants", [](int mm, int k) {
        const auto c = ry::derive_constants(mm, k);
        return py::dict(py::arg("N") = c.N, py::arg("p") = ry::to_string(c.p),
                        py::arg("a") = ry::to_string(c.a), py::arg("p_value") = c.p_value(),
                        py::arg("a_value") = c.a_value());
    }, py::arg("m"), py::arg("k"));

    m.def("product_config", [](int mm, int k, double delta) {
        return to_py(geometry_json(ry::product_config(mm, k, delta)));
    }, py::arg("m"), py::arg("k"), py::arg("delta"));

    m.def("geometry", [](int mm, int k, double s_M, double vol_M) {
        return to_py(geometry_json(ry::GeometryConfig(mm, k, s_M, vol_M)));
    }, py::arg("m"), py::arg("k"), py::arg("s_M"), py::arg("vol_M"));

    m.def("band_index", &ry::band_index, py::arg("A"), py::arg("m"));
    m.def("predicted_minimum", &ry::predicted_minimum, py::arg("A"), py::arg("m"));
    m.def("s2xs2_threshold", &ry::s2xs2_threshold, py::arg("j"));
    m.def("unit_sphere_volume", &ry::unit_sphere_volume, py::arg("n"));

    m.def("polynomial_mode", [](int n, int mm, int samples) {
        const auto mode = ry::polynomial_mode(n, mm);
        auto j = ry::mode_to_json(mode, samples, 0.0, std::numbers::pi);
        j["zero_count"] = ry::count_zeros(mode, 0.0, std::numbers::pi).count;
        return to_py(j);
    }, py::arg("n"), py::arg("m"), py::arg("samples") = 101);

    m.def("numerical_mode", [](double A, int mm, int samples, bool two_sided) {
        ry::LinearModeOptions lo;
        lo.route = two_sided ? ry::LinearRoute::two_sided : ry::LinearRoute::forward;
        const auto mode = ry::numerical_mode(A, mm, lo);
        auto j = ry::mode_to_json(mode, samples, mode.profile->lo(), mode.profile->hi());
        j["zero_count"] = ry::count_zeros(mode, mode.profile->lo(), mode.profile->hi()).count;
        return to_py(j);
    }, py::arg("A"), py::arg("m"), py::arg("samples") = 101, py::arg("two_sided") = false);

    m.def("count_extrema_linear", [](double A, int mm) {
        const auto ec = ry::count_extrema_linear(A, mm);
        return py::dict(py::arg("count") = ec.count, py::arg("near_boundary") = ec.near_boundary,
                        py::arg("derivative_at_half") = ec.derivative_at_half,
                        py::arg("locations") = ec.locations);
    }, py::arg("A"), py::arg("m"));

    m.def("sturm_certify", [](double A, double B, int mm) {
        const auto c = ry::sturm_certify(A, B, mm);
        return py::dict(py::arg("passed") = c.passed, py::arg("interlacing") = c.interlacing,
                        py::arg("degenerate") = c.degenerate,
                        py::arg("worst_violation") = c.worst_violation,
                        py::arg("message") = c.message, py::arg("zeros_A") = c.zeros_A,
                        py::arg("zeros_B") = c.zeros_B);
    }, py::arg("A"), py::arg("B"), py::arg("m"));

    m.def("miss", [](double alpha, double lambda, double p, int mm, double tol) {
        const auto r = ry::miss(alpha, ry::ShootingProblem{mm, lambda, p}, ry::IntegratorOptions::with_tol(tol));
        py::dict d(py::arg("numeric") = r.numeric, py::arg("exit") = ry::to_string(r.exit),
                   py::arg("t_event") = r.t_event);
        if (r.numeric) {
            d["value"] = r.value;
            d["u_half"] = r.u_half;
        }
        return d;
    }, py::arg("alpha"), py::arg("lambda_"), py::arg("p"), py::arg("m"), py::arg("tol") = 1e-10);

    m.def("find_monotone", [](double lambda, double p, int mm, bool profile) {
        const auto r = ry::find_monotone(ry::ShootingProblem{mm, lambda, p});
        auto j = ry::record_to_json(r.decreasing, profile);
        j["matching_residual"] = r.matching_residual;
        j["newton_iterations"] = r.newton_iterations;
        return to_py(j);
    }, py::arg("lambda_"), py::arg("p"), py::arg("m"), py::arg("profile") = false);

    m.def("run_census", [](int mm, int k, double delta, bool profiles, double tol, double scan_tol) {
        const auto c = without_gil([&] {
            return ry::run_census(ry::product_config(mm, k, delta), census_options(tol, scan_tol));
        });
        return to_py(ry::census_to_json(c, profiles));
    }, py::arg("m"), py::arg("k"), py::arg("delta"), py::arg("profiles") = false,
       py::arg("tol") = 1e-11, py::arg("scan_tol") = 1e-10);

    m.def("run_census_problem", [](int mm, double lambda, double p, bool profiles) {
        const ry::ShootingProblem P{mm, lambda, p};
        const auto c = without_gil(
            [&] { return ry::run_census(P, ry::FunctionalWeights::from_problem(mm, p, lambda)); });
        return to_py(ry::census_to_json(c, profiles));
    }, py::arg("m"), py::arg("lambda_"), py::arg("p"), py::arg("profiles") = false);

    m.def("s2xs2_table", [](const std::vector<double>& deltas) {
        const auto rows = without_gil([&] { return ry::s2xs2_table(deltas); });
        return to_py(ry::s2xs2_to_json(rows));
    }, py::arg("deltas"));

    m.def("sweep_lambda", [](int mm, double p, double lo, double hi, int n) {
        const auto rep = without_gil([&] { return ry::sweep_lambda(mm, p, lo, hi, n); });
        return to_py(ry::sweep_to_json(rep));
    }, py::arg("m"), py::arg("p"), py::arg("lambda_lo"), py::arg("lambda_hi"), py::arg("n_points"));
}
