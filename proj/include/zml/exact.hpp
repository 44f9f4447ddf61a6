#pragma once
// Exact finite-N shifted expectations E_N[(1/N) sum_m prod_r Z(theta_m + alpha_r)]
// by three independent routes, mixed Taylor coefficient extraction in the
// shifts, and the closed-form leading-order prediction.

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "zml/common.hpp"
#include "zml/rmt.hpp"

namespace zml::exact {

using rmt::MixedMomentSpec;

struct ShiftVector {
    std::vector<cplx> shifts;  // alpha_r; nodes A_r = e^{i alpha_r}
};

// Laurent coefficients of f(z) = z^{-1} (z-1)^2 prod_r (z - A_r),
// exponents -1 .. k+1.
struct LaurentSymbol {
    std::map<int, cplx> coefficients;
};

struct NodeCollisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Nested-sum route (the re-indexed k-deep sum with memoized geometric tails);
// entire in the shifts, O(k N^2).
cplx shifted_expectation_sum(int N, const ShiftVector& shifts);

LaurentSymbol symbol_coefficients(const ShiftVector& shifts);

// Heine/Toeplitz route: prefactor times det of the (N-1)x(N-1) Toeplitz matrix
// of symbol coefficients, pivoted LU.  N=1 gives the empty determinant (1).
cplx toeplitz_expectation(int N, const ShiftVector& shifts);

// Raw Toeplitz determinant D_{N-1}[f] for an arbitrary Laurent symbol; exposed
// so the Basor-Forrester (k+2)-node determinant can be cross-checked directly.
cplx toeplitz_determinant(int N, const LaurentSymbol& symbol);

// Basor-Forrester closed form for D_{N-1}[z^{-1} prod_{r=1}^{K}(z - A_r)]:
// Vandermonde-with-tail rows (A_r^{N-1}, ..., A_r^{N-1+K-2}, (-A_r)^{-1}).
// Throws NodeCollisionError when min pairwise |A_j - A_l| < 1e-6.
cplx basor_forrester_determinant(int N, const std::vector<cplx>& nodes);

// Full expectation via Basor-Forrester with the two extra nodes driven to 1 by
// offsets {1e-2, 1e-3} and Richardson extrapolation in epsilon^2.
cplx basor_forrester_expectation(int N, const ShiftVector& shifts);

using ShiftedEvaluator = std::function<cplx(const ShiftVector&)>;

struct ExtractResult {
    cplx value;          // moment including the (1/N) spectral average
    double residual;     // max inverse-DFT tail coefficient, accuracy gate 1e-8
};

// Mixed Taylor coefficient [alpha_1^{n_1} ... alpha_k^{n_k}] times prod n_r!,
// by tensor-product evaluation on roots-of-unity circles (the evaluator is
// entire in the shifts, so the DFT recovers coefficients exactly).
ExtractResult coefficient_extract(const ShiftedEvaluator& eval,
                                  const std::vector<int>& orders, int N);

// convenience: extraction applied to shifted_expectation_sum at spec.N
ExtractResult derivative_moment(const MixedMomentSpec& spec);

// (n_1-1)! ... (n_k-1)! / (n_1+...+n_k+1)! as an exact rational.
boost::multiprecision::cpp_rational simplex_integral(const std::vector<int>& orders);

// Theorem-3 leading order: (-1)^{Sum n + k} i^{Sum n} prod n_r!/(Sum n + 1)! N^{Sum n}.
cplx theorem3_prediction(const MixedMomentSpec& spec);

}  // namespace zml::exact
