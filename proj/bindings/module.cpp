// python bindings for the main operations of each module
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zml/exact.hpp"
#include "zml/euler.hpp"
#include "zml/hybrid.hpp"
#include "zml/io.hpp"
#include "zml/rmt.hpp"
#include "zml/special.hpp"
#include "zml/zeta.hpp"

namespace py = pybind11;
using namespace zml;

namespace {

RngSeed make_seed(std::uint64_t master, std::uint64_t stream) {
    return RngSeed{master, stream};
}

exact::ShiftVector make_shifts(const std::vector<cplx>& a) {
    return exact::ShiftVector{a};
}

}  // namespace

PYBIND11_MODULE(_zml, m) {
    m.doc() = "moments of derivatives of characteristic polynomials and of "
              "the Riemann zeta function at its zeros";
    m.attr("ARTIFACT_VERSION") = io::ARTIFACT_VERSION;

    // ---- rmt ----
    py::class_<rmt::CueSample>(m, "CueSample")
        .def_readonly("dimension", &rmt::CueSample::dimension)
        .def_readonly("eigenangles", &rmt::CueSample::eigenangles);

    py::class_<rmt::McEstimate>(m, "McEstimate")
        .def_readonly("mean", &rmt::McEstimate::mean)
        .def_readonly("standard_error", &rmt::McEstimate::standard_error)
        .def_readonly("samples", &rmt::McEstimate::samples);

    m.def(
        "sample_cue",
        [](int N, std::uint64_t master, std::uint64_t stream, std::uint64_t index) {
            return rmt::sample_cue(N, make_seed(master, stream), index);
        },
        py::arg("N"), py::arg("master"), py::arg("stream") = 0, py::arg("index") = 0);

    m.def("char_poly_product", &rmt::char_poly_product);
    m.def(
        "char_poly_derivative",
        [](const rmt::CueSample& s, double theta, int n) {
            return rmt::char_poly_derivative(rmt::char_poly_coefficients(s), theta, n);
        },
        py::arg("sample"), py::arg("theta"), py::arg("n"));

    m.def(
        "mixed_moment_mc",
        [](int N, const std::vector<int>& orders, std::uint64_t samples,
           std::uint64_t master, std::uint64_t stream) {
            return rmt::mixed_moment_mc({N, orders}, samples, make_seed(master, stream));
        },
        py::arg("N"), py::arg("orders"), py::arg("samples"), py::arg("master"),
        py::arg("stream") = 0);

    // ---- exact ----
    m.def(
        "shifted_expectation",
        [](int N, const std::vector<cplx>& shifts) {
            return exact::shifted_expectation_sum(N, make_shifts(shifts));
        },
        py::arg("N"), py::arg("shifts"));
    m.def(
        "toeplitz_expectation",
        [](int N, const std::vector<cplx>& shifts) {
            return exact::toeplitz_expectation(N, make_shifts(shifts));
        },
        py::arg("N"), py::arg("shifts"));
    m.def(
        "basor_forrester_expectation",
        [](int N, const std::vector<cplx>& shifts) {
            return exact::basor_forrester_expectation(N, make_shifts(shifts));
        },
        py::arg("N"), py::arg("shifts"));
    m.def(
        "derivative_moment",
        [](int N, const std::vector<int>& orders) {
            auto r = exact::derivative_moment({N, orders});
            return py::make_tuple(r.value, r.residual);
        },
        py::arg("N"), py::arg("orders"), "returns (value, extraction residual)");
    m.def(
        "simplex_integral",
        [](const std::vector<int>& orders) {
            auto q = exact::simplex_integral(orders);
            return py::make_tuple(q.convert_to<double>(),
                                  boost::multiprecision::numerator(q).str(),
                                  boost::multiprecision::denominator(q).str());
        },
        py::arg("orders"), "returns (float value, numerator, denominator)");
    m.def(
        "theorem3_prediction",
        [](const std::vector<int>& orders, int N) {
            return exact::theorem3_prediction({N, orders});
        },
        py::arg("orders"), py::arg("N"));

    // ---- special ----
    m.def("exp_integral_e1", &special::exp_integral_e1);
    m.def("log_gamma", &special::log_gamma);
    m.def("barnes_g", &special::barnes_g);

    // ---- hybrid ----
    py::class_<hybrid::SmoothingKernel>(m, "SmoothingKernel")
        .def(py::init<double>(), py::arg("Y"))
        .def("u_eval", &hybrid::SmoothingKernel::u_eval)
        .def("u_mass", &hybrid::SmoothingKernel::u_mass)
        .def("support_lo", &hybrid::SmoothingKernel::support_lo)
        .def("support_hi", &hybrid::SmoothingKernel::support_hi);

    m.def(
        "f_x_eval",
        [](double X, double Y, double theta) {
            return hybrid::f_x_eval({X, 1, hybrid::SmoothingKernel(Y)}, theta);
        },
        py::arg("X"), py::arg("Y"), py::arg("theta"));
    m.def(
        "s_m_closed_form",
        [](double X, double Y, cplx k, int mm) {
            return hybrid::s_m_closed_form({X, 1, hybrid::SmoothingKernel(Y)}, k, mm);
        },
        py::arg("X"), py::arg("Y"), py::arg("k"), py::arg("m"));
    m.def(
        "s_m_numeric",
        [](double X, double Y, cplx k, int mm) {
            return hybrid::s_m_numeric({X, 1, hybrid::SmoothingKernel(Y)}, k, mm);
        },
        py::arg("X"), py::arg("Y"), py::arg("k"), py::arg("m"));
    m.def("theorem13_prediction", &hybrid::theorem13_prediction, py::arg("k"),
          py::arg("N"));
    m.def(
        "theorem13_assembled",
        [](double X, double Y, int N, cplx k) {
            return hybrid::theorem13_assembled({X, N, hybrid::SmoothingKernel(Y)}, k);
        },
        py::arg("X"), py::arg("Y"), py::arg("N"), py::arg("k"));
    m.def(
        "hybrid_moment_mc",
        [](double X, double Y, int N, cplx k, std::uint64_t samples,
           std::uint64_t master, std::uint64_t stream) {
            return hybrid::hybrid_moment_mc({X, N, hybrid::SmoothingKernel(Y)}, k,
                                            samples, make_seed(master, stream));
        },
        py::arg("X"), py::arg("Y"), py::arg("N"), py::arg("k"), py::arg("samples"),
        py::arg("master"), py::arg("stream") = 0);

    // ---- euler ----
    m.def("von_mangoldt", &euler::von_mangoldt);
    m.def("primes_upto", &euler::primes_upto);
    m.def("d_k", [](std::uint64_t mm, int k) { return euler::d_k(mm, k).str(); });
    m.def(
        "a_k_coefficients",
        [](double X, cplx k, std::uint64_t cutoff) {
            return euler::dirichlet_exp(euler::log_p_x_series(X), k, cutoff)
                .coefficients;
        },
        py::arg("X"), py::arg("k"), py::arg("cutoff"));
    m.def("p_x_eval", &euler::p_x_eval, py::arg("X"), py::arg("s"));
    m.def("arithmetic_factor_a", &euler::arithmetic_factor_a, py::arg("k"),
          py::arg("target") = 1e-10);

    // ---- zeta ----
    py::class_<zeta::ZeroDataset>(m, "ZeroDataset")
        .def_readonly("ordinates", &zeta::ZeroDataset::ordinates)
        .def_readonly("source", &zeta::ZeroDataset::source)
        .def("count", &zeta::ZeroDataset::count)
        .def("content_hash", &zeta::ZeroDataset::content_hash);

    py::class_<zeta::DiscreteMomentReport>(m, "DiscreteMomentReport")
        .def_readonly("T", &zeta::DiscreteMomentReport::T)
        .def_readonly("count", &zeta::DiscreteMomentReport::count)
        .def_readonly("sum", &zeta::DiscreteMomentReport::sum)
        .def_readonly("normalized", &zeta::DiscreteMomentReport::normalized)
        .def_readonly("prediction", &zeta::DiscreteMomentReport::prediction)
        .def_readonly("prediction_logt", &zeta::DiscreteMomentReport::prediction_logt)
        .def_readonly("ratio", &zeta::DiscreteMomentReport::ratio);

    m.def("load_zeros", &zeta::load_zeros, py::arg("path"), py::arg("limit") = 0);
    m.def("zeta_eval", [](cplx s) { return zeta::zeta_eval(s); }, py::arg("s"));
    m.def(
        "zeta_derivative", [](cplx s, int n) { return zeta::zeta_derivative(s, n); },
        py::arg("s"), py::arg("n"));
    m.def(
        "discrete_moment",
        [](const zeta::ZeroDataset& ds, const std::vector<int>& orders, double T) {
            return zeta::discrete_moment(ds, orders, T);
        },
        py::arg("dataset"), py::arg("orders"), py::arg("T"));
    m.def("conjecture_prediction", &zeta::conjecture_prediction, py::arg("orders"),
          py::arg("T"));
    m.def("conjecture6_prediction", &zeta::conjecture6_prediction, py::arg("k"),
          py::arg("T"));
    m.def(
        "p_x_sum_over_zeros",
        [](const zeta::ZeroDataset& ds, double X, const std::vector<int>& orders,
           double T, double k) {
            return zeta::p_x_sum_over_zeros(ds, X, orders, T, k);
        },
        py::arg("dataset"), py::arg("X"), py::arg("orders"), py::arg("T"),
        py::arg("k") = 1.0);
    m.def(
        "landau_empirical",
        [](const zeta::ZeroDataset& ds, std::uint64_t mm, double T) {
            auto r = zeta::landau_empirical(ds, mm, T);
            return py::make_tuple(r.empirical, r.predicted);
        },
        py::arg("dataset"), py::arg("m"), py::arg("T"));
    m.def("generate_zeros", &zeta::generate_zeros, py::arg("count"));
    m.def("n_of_t_formula", &zeta::n_of_t_formula, py::arg("T"));
}
