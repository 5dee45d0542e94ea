#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "theta_asym/asymptotics.hpp"
#include "theta_asym/crank.hpp"
#include "theta_asym/experiment.hpp"
#include "theta_asym/modular.hpp"
#include "theta_asym/properties.hpp"
#include "theta_asym/pv.hpp"

namespace py = pybind11;
using namespace theta_asym;

PYBIND11_MODULE(_theta_asym, mod) {
    mod.doc() = "eta-theta quotient Fourier coefficients: exact extraction and asymptotics";

    py::class_<EtaFactor>(mod, "EtaFactor")
        .def(py::init<long, long>(), py::arg("a"), py::arg("alpha"))
        .def_readwrite("a", &EtaFactor::a)
        .def_readwrite("alpha", &EtaFactor::alpha);

    py::class_<QuotientSpec>(mod, "QuotientSpec")
        .def(py::init<>())
        .def_readwrite("eta_factors", &QuotientSpec::eta_factors)
        .def_readwrite("b", &QuotientSpec::b)
        .def_readwrite("c", &QuotientSpec::c)
        .def_readwrite("id", &QuotientSpec::id)
        .def("validate", &QuotientSpec::validate)
        .def("growth_base", &QuotientSpec::growth_base)
        .def("sum_alpha", &QuotientSpec::sum_alpha);

    py::class_<LogComplex>(mod, "LogComplex")
        .def_readonly("log_mag", &LogComplex::log_mag)
        .def_readonly("phase", &LogComplex::phase)
        .def("value", &LogComplex::value)
        .def("__repr__", [](const LogComplex& v) {
            return "LogComplex(log_mag=" + std::to_string(v.log_mag) +
                   ", phase=" + std::to_string(v.phase) + ")";
        });

    py::class_<CoefficientRecord>(mod, "CoefficientRecord")
        .def_readonly("m", &CoefficientRecord::m)
        .def_readonly("nu", &CoefficientRecord::nu)
        .def_readonly("beta", &CoefficientRecord::beta)
        .def_readonly("value", &CoefficientRecord::value)
        .def_readonly("err_estimate", &CoefficientRecord::err_estimate)
        .def_readonly("off_lattice", &CoefficientRecord::off_lattice);

    py::class_<AsymptoticConstants>(mod, "AsymptoticConstants")
        .def_property_readonly("lambda1",
                               [](const AsymptoticConstants& c) { return c.lambda1.value(); })
        .def_property_readonly("lambda2",
                               [](const AsymptoticConstants& c) { return c.lambda2.value(); })
        .def_readonly("window_ok", &AsymptoticConstants::window_ok);

    mod.def("make_E1", &make_E1);
    mod.def("make_E2", &make_E2);
    mod.def("make_E3", &make_E3);

    mod.def(
        "eval_eta", [](std::complex<double> tau) { return eval_eta(tau); }, py::arg("tau"));
    mod.def(
        "eval_theta",
        [](std::complex<double> z, std::complex<double> tau) { return eval_theta(z, tau); },
        py::arg("z"), py::arg("tau"));
    mod.def(
        "eval_quotient",
        [](const QuotientSpec& spec, std::complex<double> z, std::complex<double> tau) {
            return eval_quotient(spec, z, tau);
        },
        py::arg("spec"), py::arg("z"), py::arg("tau"));
    mod.def(
        "leading_factor",
        [](const QuotientSpec& spec, double z, double eps) {
            return leading_factor(spec, z, eps).value();
        },
        py::arg("spec"), py::arg("z"), py::arg("eps"));

    mod.def(
        "locate_poles",
        [](const QuotientSpec& spec) {
            std::vector<double> out;
            for (const auto& p : locate_poles(spec)) out.push_back(p.h);
            return out;
        },
        py::arg("spec"));
    mod.def(
        "fm_pv",
        [](const QuotientSpec& spec, double m, std::complex<double> tau) {
            return fm_pv(spec, m, tau);
        },
        py::arg("spec"), py::arg("m"), py::arg("tau"));
    mod.def(
        "cauchy_extract",
        [](const QuotientSpec& spec, double m, double nu, double beta, const std::string& kernel) {
            return cauchy_extract(spec, m, nu, beta,
                                  kernel == "exp" ? Kernel::exp_fourier : Kernel::sin_pv);
        },
        py::arg("spec"), py::arg("m"), py::arg("nu"), py::arg("beta"), py::arg("kernel") = "sin");
    mod.def(
        "crank_extract", [](double m, int n) { return crank_extract(m, n); }, py::arg("m"),
        py::arg("n"));
    mod.def("crank_oracle", &crank_oracle, py::arg("n"));
    mod.def("crank_counts", &crank_counts_gf, py::arg("n"));
    mod.def("partition_count", &partition_count, py::arg("n"));
    mod.def("m_schedule", &m_schedule, py::arg("n"), py::arg("delta"));

    mod.def(
        "constants",
        [](const QuotientSpec& spec) { return constants(spec, false); }, py::arg("spec"));
    mod.def(
        "main_term",
        [](const QuotientSpec& spec, double m, double n) { return main_term(spec, m, n); },
        py::arg("spec"), py::arg("m"), py::arg("n"));
    mod.def(
        "bessel_I",
        [](double order, double x) { return bessel_I(order, x, BesselMode::series).value(); },
        py::arg("order"), py::arg("x"));
    mod.def("gauss_sine_integral",
            [](std::complex<double> H1, std::complex<double> H2, double m, double t, double u) {
                return gauss_sine_integral(H1, H2, m, t, u);
            });

    mod.def("run_experiment", [](const std::string& config_json) {
        auto config = parse_config(config_json);
        auto result = run_ratio_experiment(config);
        py::list rows;
        for (const auto& row : result.rows) {
            py::dict d;
            d["spec_id"] = row.spec_id;
            d["m"] = row.m;
            d["nu"] = row.nu;
            d["beta"] = row.beta;
            d["log_abs_exact"] = row.log_abs_exact;
            d["phase_exact"] = row.phase_exact;
            d["log_abs_main"] = row.log_abs_main;
            d["phase_main"] = row.phase_main;
            d["abs_ratio"] = row.abs_ratio;
            d["err_estimate"] = row.err_estimate;
            d["failed"] = row.failed;
            rows.append(d);
        }
        return rows;
    });

    mod.def("run_properties", [](const std::string& config_json) {
        auto report = run_property_suite(parse_config(config_json));
        return std::make_pair(report.all_pass(), report.text());
    });
}
