#include "zml/rmt.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace zml::rmt {

namespace {

double reduce_angle(double t) {
    double a = std::fmod(t, 2 * PI);
    if (a < 0) a += 2 * PI;
    if (a >= 2 * PI) a = 0.0;  // ties at 2pi map to 0
    return a;
}

}  // namespace

CueSample sample_cue(int N, const RngSeed& seed, std::uint64_t sample_index) {
    if (N < 1) throw std::invalid_argument("sample_cue: N must be >= 1");
    auto eng = engine_for(seed, sample_index);
    std::normal_distribution<double> gauss(0.0, 1.0);

    if (N == 1) {
        // Haar on U(1) is a uniform angle; the Ginibre/QR path also produces
        // it but a direct draw is cheaper for the N=1 hot case.
        std::uniform_real_distribution<double> unif(0.0, 2 * PI);
        return {1, {reduce_angle(unif(eng))}};
    }

    Eigen::MatrixXcd G(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) G(i, j) = cplx(gauss(eng), gauss(eng));

    // QR with the diagonal phase correction Q <- Q diag(r_jj/|r_jj|); without
    // it the QR factor is not Haar distributed.
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(G);
    Eigen::MatrixXcd Q = qr.householderQ();
    Eigen::MatrixXcd R = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < N; ++j) {
        cplx r = R(j, j);
        double m = std::abs(r);
        Q.col(j) *= (m > 0 ? r / m : cplx(1.0));
    }

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(Q, /*computeEigenvectors=*/false);
    CueSample out;
    out.dimension = N;
    out.eigenangles.reserve(N);
    for (int i = 0; i < N; ++i)
        out.eigenangles.push_back(reduce_angle(std::arg(es.eigenvalues()[i])));
    return out;
}

CharPolyCoefficients char_poly_coefficients(const CueSample& sample) {
    // sequential multiplication of the factors (1 - e^{i theta_m} w),
    // w = e^{-i theta}; c_j = (-1)^j e_j of the eigenvalues
    std::vector<cplx> c{1.0};
    c.reserve(sample.dimension + 1);
    for (double th : sample.eigenangles) {
        cplx lam = std::polar(1.0, th);
        c.push_back(0.0);
        for (std::size_t j = c.size() - 1; j >= 1; --j) c[j] -= lam * c[j - 1];
    }
    return {std::move(c)};
}

cplx char_poly_derivative(const CharPolyCoefficients& coeffs, double theta, int n) {
    if (n < 0) throw std::invalid_argument("char_poly_derivative: n must be >= 0");
    cplx acc = 0.0;
    const auto& c = coeffs.coefficients;
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (n > 0 && j == 0) continue;  // (-i*0)^n kills the constant term
        cplx term = c[j] * std::polar(1.0, -theta * double(j));
        if (n > 0) {
            cplx f(0.0, -double(j));
            cplx p = 1.0;
            for (int q = 0; q < n; ++q) p *= f;
            term *= p;
        }
        acc += term;
    }
    return acc;
}

cplx char_poly_product(const CueSample& sample, double theta) {
    cplx prod = 1.0;
    for (double th : sample.eigenangles)
        prod *= 1.0 - std::polar(1.0, th - theta);
    return prod;
}

McEstimate mixed_moment_mc(const MixedMomentSpec& spec, std::uint64_t samples,
                           const RngSeed& seed) {
    if (samples < 1) throw std::invalid_argument("mixed_moment_mc: samples >= 1");
    for (int n : spec.orders)
        if (n < 1) throw std::invalid_argument("mixed_moment_mc: orders must be >= 1");

    const int N = spec.N;
    const bool log_form = N > 256;  // overflow guard for large N products

    CompensatedSum sum_re, sum_im, sq_re, sq_im;
    for (std::uint64_t idx = 0; idx < samples; ++idx) {
        CueSample s = sample_cue(N, seed, idx);
        CharPolyCoefficients c = char_poly_coefficients(s);
        CompensatedCplxSum per_sample;
        for (double th : s.eigenangles) {
            if (!log_form) {
                cplx prod = 1.0;
                for (int n : spec.orders) prod *= char_poly_derivative(c, th, n);
                per_sample.add(prod);
            } else {
                double logmag = 0.0, phase = 0.0;
                for (int n : spec.orders) {
                    cplx d = char_poly_derivative(c, th, n);
                    logmag += std::log(std::abs(d));
                    phase += std::arg(d);
                }
                per_sample.add(std::exp(logmag) * std::polar(1.0, phase));
            }
        }
        cplx v = per_sample.value() / double(N);
        sum_re.add(v.real());
        sum_im.add(v.imag());
        sq_re.add(v.real() * v.real());
        sq_im.add(v.imag() * v.imag());
    }

    double n = double(samples);
    cplx mean(sum_re.value() / n, sum_im.value() / n);
    double var_re = std::max(0.0, sq_re.value() / n - mean.real() * mean.real());
    double var_im = std::max(0.0, sq_im.value() / n - mean.imag() * mean.imag());
    double se = std::sqrt((var_re + var_im) / n);
    return {mean, se, samples};
}

}  // namespace zml::rmt
