#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wavefunc/errors.hpp"
#include "wavefunc/fit.hpp"
#include "wavefunc/hermite.hpp"
#include "wavefunc/model.hpp"
#include "wavefunc/quadrature.hpp"
#include "wavefunc/reference.hpp"
#include "wavefunc/sampler.hpp"
#include "wavefunc/sphere.hpp"

namespace py = pybind11;
using namespace wavefunc;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Wave-function density estimation: Hermite expansion of the square-root density";

    py::register_exception<DataError>(m, "DataError", PyExc_ValueError);
    py::register_exception<QuadratureError>(m, "QuadratureError", PyExc_RuntimeError);

    m.def(
        "eval_basis",
        [](double x, int degree) { return eval_basis(x, degree).values; },
        py::arg("x"), py::arg("degree"),
        "Orthonormal Hermite functions h_0(x)..h_K(x)");
    m.def(
        "eval_basis_deriv",
        [](double x, int degree) {
            BasisValues bv = eval_basis_deriv(x, degree);
            return std::make_pair(bv.values, *bv.derivs);
        },
        py::arg("x"), py::arg("degree"),
        "Pair (values, derivatives) of h_0..h_K at x");

    m.def("project", &project, py::arg("w"),
          "Stereographic projection of a unit-norm coefficient vector");
    m.def("unproject", &unproject, py::arg("gamma"),
          "Inverse stereographic projection; result is unit-norm");

    py::class_<WaveModel>(m, "WaveModel")
        .def(py::init<std::vector<double>, double, double>(), py::arg("coefficients"),
             py::arg("location"), py::arg("scale"))
        .def_property_readonly("degree", &WaveModel::degree)
        .def_property_readonly("coefficients", &WaveModel::coefficients)
        .def_property_readonly("location", &WaveModel::location)
        .def_property_readonly("scale", &WaveModel::scale)
        .def("amplitude", &WaveModel::amplitude, py::arg("z"))
        .def("density", &WaveModel::density, py::arg("x"))
        .def("log_density", &WaveModel::log_density, py::arg("x"))
        .def("__repr__", [](const WaveModel& w) {
            return "<WaveModel degree=" + std::to_string(w.degree()) + ">";
        });

    m.def("serialize", &serialize, py::arg("model"), "Model document (JSON text)");
    m.def("deserialize", &deserialize, py::arg("document"), "Parse a model document");

    py::class_<FitReport>(m, "FitReport")
        .def_readonly("converged", &FitReport::converged)
        .def_readonly("iterations", &FitReport::iterations)
        .def_readonly("final_log_likelihood", &FitReport::final_log_likelihood)
        .def_readonly("gradient_norm", &FitReport::gradient_norm)
        .def("__repr__", [](const FitReport& r) {
            return "<FitReport converged=" + std::string(r.converged ? "True" : "False") +
                   " iterations=" + std::to_string(r.iterations) + ">";
        });

    m.def(
        "fit_mle",
        [](const std::vector<double>& data, int degree, int max_iterations,
           double gradient_tolerance, const std::vector<double>& initial_gamma) {
            FitOptions opts;
            opts.degree = degree;
            opts.max_iterations = max_iterations;
            opts.gradient_tolerance = gradient_tolerance;
            opts.initial_gamma = initial_gamma;
            return fit_mle(data, opts);
        },
        py::arg("data"), py::arg("degree") = 10, py::arg("max_iterations") = 500,
        py::arg("gradient_tolerance") = 1e-8,
        py::arg("initial_gamma") = std::vector<double>{},
        "Maximum-likelihood fit; returns (WaveModel, FitReport)");
    m.def(
        "standardize",
        [](const std::vector<double>& data) {
            Standardization s = standardize(data);
            return std::make_tuple(s.location, s.scale, s.z);
        },
        py::arg("data"), "Returns (location, scale, z) with z of mean 0, variance 1/2");
    m.def("log_likelihood", &log_likelihood, py::arg("gamma"), py::arg("z"));
    m.def("grad_log_likelihood", &grad_log_likelihood, py::arg("gamma"), py::arg("z"));

    py::class_<QuadratureRule>(m, "QuadratureRule")
        .def_readonly("order", &QuadratureRule::order)
        .def_readonly("nodes", &QuadratureRule::nodes)
        .def_readonly("weights", &QuadratureRule::weights);
    m.def("gauss_hermite", &gauss_hermite, py::arg("order"),
          "Gauss-Hermite rule for the weight exp(-x^2)");

    m.def(
        "moment",
        [](const WaveModel& model, int p, bool standardized) {
            return moment(model, p,
                          standardized ? MomentScale::standardized : MomentScale::original);
        },
        py::arg("model"), py::arg("p"), py::arg("standardized") = false,
        "Raw moment E[X^p], exact up to roundoff");
    m.def(
        "entropy",
        [](const WaveModel& model, bool standardized) {
            return entropy(model,
                           standardized ? MomentScale::standardized : MomentScale::original);
        },
        py::arg("model"), py::arg("standardized") = false,
        "Differential entropy (quadrature estimate)");

    m.def(
        "project_density",
        [](const std::function<double(double)>& sqrt_f, int degree, double tol) {
            ProjectionResult r = project_density(sqrt_f, degree, tol);
            return std::make_pair(r.coefficients, r.partial_mass);
        },
        py::arg("sqrt_f"), py::arg("degree"), py::arg("tol") = 1e-10,
        "Basis coefficients of a standardized sqrt-density; returns (w, partial_mass)");

    m.def("sample_n", &sample_n, py::arg("model"), py::arg("n"), py::arg("seed"),
          py::arg("burn_in") = 100, py::arg("thinning") = 1,
          "Slice-sampler draws on the original scale");

    py::class_<ReferenceDensity>(m, "ReferenceDensity")
        .def_readonly("name", &ReferenceDensity::name)
        .def_readonly("mean", &ReferenceDensity::mean)
        .def_readonly("variance", &ReferenceDensity::variance)
        .def("density", [](const ReferenceDensity& r, double x) { return r.density(x); },
             py::arg("x"))
        .def("cdf", [](const ReferenceDensity& r, double x) { return r.cdf(x); }, py::arg("x"))
        .def("sample", &ReferenceDensity::sample, py::arg("n"), py::arg("seed"))
        .def("standardized_sqrt_density", &ReferenceDensity::standardized_sqrt_density,
             py::arg("z"));
    m.def("make_reference", &make_reference, py::arg("name"));
    m.def("reference_names", []() { return reference_names(); });
}
