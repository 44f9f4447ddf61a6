#pragma once
// Zero-product side of the hybrid formula: smoothing kernel u, U(z), the
// regularized phase F_X, Lemma-14 Fourier coefficients s_m, Z'_{N,X} at an
// eigenvalue, Ehrhardt-Silbermann constants and the Theorem-13 prediction.

#include <stdexcept>
#include <vector>

#include "zml/common.hpp"
#include "zml/rmt.hpp"

namespace zml::hybrid {

// u(x) = Y f(Y log(x/e) + 1)/x with f(t) = c exp(-1/(t(1-t))) normalized to
// mass 1 on (0,1).  All integrals against u are done in the t-coordinate with
// a fixed Gauss-Legendre rule (f is flat at both endpoints).
class SmoothingKernel {
public:
    explicit SmoothingKernel(double Y);

    double scale() const { return Y_; }
    double support_lo() const;  // e^{1-1/Y}
    double support_hi() const;  // e

    double u_eval(double x) const;
    double u_mass(double a, double b) const;            // integral of u on [a,b]
    double int_u_loglog() const { return int_loglog_; }  // \int u(y) log log y dy
    double log_moment(int m) const;                      // \int u(y) (log y)^m dy

    // \int u(y) g(log y) dy for arbitrary g, on the precomputed rule
    template <class G>
    cplx integrate_logy(G&& g) const {
        cplx acc = 0;
        for (std::size_t i = 0; i < tw_.size(); ++i) acc += tw_[i] * g(logy_[i]);
        return acc;
    }

private:
    double bump(double t) const;
    double Y_;
    double norm_c_;
    double int_loglog_;
    std::vector<double> tnodes_, tw_;  // GL nodes/weights on [0,1], tw_ = w * f(t)
    std::vector<double> logy_;         // log y(t) = (t-1)/Y + 1
    mutable std::vector<double> log_moments_;
};

struct HybridParams {
    double X = 0.0;  // prime/zero split point, X >= 2
    int N = 0;
    SmoothingKernel kernel;
};

// U(z) = \int u(y) E_1(z log y) dy.  Near z = 0 the log is split off
// analytically: U(z) = -log z - gamma - \int u loglog + entire remainder.
cplx big_u_eval(const SmoothingKernel& kernel, cplx z);

// F_X(theta) = -log(1 - e^{-i theta}) - sum_j U(i(theta + 2 pi j) log X);
// the two log singularities at theta = 0 are merged before evaluation.
cplx f_x_eval(const HybridParams& params, double theta);
cplx f_x_derivative(const HybridParams& params, double theta);
cplx f_x_at_zero(const HybridParams& params);

// Lemma 14: s_m = k/m (1 - \int_1^{exp(m/log X)} u) for 1 <= m < log X, else 0.
cplx s_m_closed_form(const HybridParams& params, cplx k, int m);

// quadrature of (1/2pi) \int k F_X(-theta) e^{-im theta} dtheta on a 2^12-node
// offset trapezoid grid (offset keeps the integrable log singularity off the
// nodes; the integrand is otherwise smooth and periodic).
cplx s_m_numeric(const HybridParams& params, cplx k, int m);

// F_X as its finite Fourier polynomial sum_{1<=m<log X} sigma_m e^{-im theta},
// coefficients from s_m_numeric at k=1.  O(log X) per evaluation; used by the
// Monte Carlo loop.
class FxFourier {
public:
    explicit FxFourier(const HybridParams& params);
    cplx eval(double theta) const;
    cplx at_zero() const;

private:
    std::vector<cplx> sigma_;  // sigma_1 .. sigma_M
};

struct EigenangleCollisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Z'_{N,X}(theta_N) = i e^{F_X(0)} prod_{m<N} (1 - e^{-i(theta_N - theta_m)})
//                       e^{F_X(theta_N - theta_m)}, accumulated in log space.
cplx z_nx_prime_at_eigenvalue(const rmt::CueSample& sample, const HybridParams& params);

// log of the same (principal per-factor logs summed); the continuous-variation
// branch for complex powers k is exp(k * this).  ref_index selects which
// eigenangle plays theta_N (default: the last); the Monte Carlo loop draws it
// uniformly so the reference eigenvalue is exchangeable.
cplx log_z_nx_prime(const rmt::CueSample& sample, const FxFourier& fx,
                    int ref_index = -1);

// e^{ik pi/2} N^k / Gamma(k+2); rejects k in {-3, -4, ...}.
cplx theorem13_prediction(cplx k, int N);

struct FisherHartwigExponents {
    cplx gamma_exp;
    cplx delta_exp;
    std::vector<cplx> s_pos;  // s_1, s_2, ... (log-Fourier coeffs of smooth part)
    std::vector<cplx> s_neg;  // s_{-1}, s_{-2}, ... (all 0 for Lemma-14 symbols)
    cplx s0 = 0.0;
};

struct EsAsymptotic {
    cplx c1, c2;
    cplx value;  // C_1 N^{gamma delta} C_2^{N-1}
};

EsAsymptotic ehrhardt_silbermann_asymptotic(const FisherHartwigExponents& e, int N);

// Theorem 13 assembled from the Ehrhardt-Silbermann formula with
// gamma = k+1, delta = 1 and the Lemma-14 coefficients; algebraically
// X-independent and equal to theorem13_prediction.
cplx theorem13_assembled(const HybridParams& params, cplx k);

rmt::McEstimate hybrid_moment_mc(const HybridParams& params, cplx k,
                                 std::uint64_t samples, const RngSeed& seed);

// diagnostic only: the constant C with exp(-U(z)) ~ C z as z -> 0
double small_z_constant(const SmoothingKernel& kernel);

}  // namespace zml::hybrid
