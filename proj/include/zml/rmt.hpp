#pragma once
// CUE sampling and the characteristic polynomial Z(theta) = prod_m (1 - e^{i(theta_m - theta)}).

#include <vector>

#include "zml/common.hpp"
#include "zml/rng.hpp"

namespace zml::rmt {

struct CueSample {
    int dimension = 0;
    std::vector<double> eigenangles;  // N angles in [0, 2pi)
};

// coefficients c_j with Z(theta) = sum_j c_j e^{-ij theta}; c_0 = 1, |c_N| = 1.
struct CharPolyCoefficients {
    std::vector<cplx> coefficients;
};

struct McEstimate {
    cplx mean;
    double standard_error = 0.0;  // quadrature combination of re/im part SEs
    std::uint64_t samples = 0;
};

// Haar sample: complex Ginibre -> QR -> diagonal phase correction -> eigenangles.
CueSample sample_cue(int N, const RngSeed& seed, std::uint64_t sample_index = 0);

CharPolyCoefficients char_poly_coefficients(const CueSample& sample);

// Z^{(n)}(theta) = sum_j c_j (-ij)^n e^{-ij theta}
cplx char_poly_derivative(const CharPolyCoefficients& coeffs, double theta, int n);

// Direct product form, the oracle for the coefficient route.
cplx char_poly_product(const CueSample& sample, double theta);

struct MixedMomentSpec {
    int N = 0;
    std::vector<int> orders;  // n_1..n_k, each >= 1
};

// E_N[(1/N) sum_m Z^{(n_1)}(theta_m) ... Z^{(n_k)}(theta_m)] by Monte Carlo.
// For N > 256 per-eigenvalue products accumulate in log-magnitude/phase form.
McEstimate mixed_moment_mc(const MixedMomentSpec& spec, std::uint64_t samples,
                           const RngSeed& seed);

}  // namespace zml::rmt
