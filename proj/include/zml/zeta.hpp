#pragma once
// Number-theory verifier: zero-ordinate datasets, zeta on the critical line,
// discrete sums over zeros, conjecture predictions.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zml/common.hpp"
#include "zml/euler.hpp"

namespace zml::zeta {

struct ZeroDataset {
    std::vector<double> ordinates;  // strictly ascending, positive
    std::string source;
    std::size_t count() const { return ordinates.size(); }
    std::uint64_t content_hash() const;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// one decimal ordinate per line, ascending; blank lines ignored; parse errors
// name the offending line.
ZeroDataset load_zeros(const std::string& path, std::size_t limit = 0);

std::size_t n_of_t(const ZeroDataset& dataset, double T);
double n_of_t_formula(double T);  // (T/2pi) log(T/2pi e)

struct ZetaEvalConfig {
    int em_floor = 50;            // N0 = max(em_floor, 2|Im s|)
    int bernoulli_terms = 12;
    double contour_radius = 0.25;
    int precision_digits = 15;
};

// Euler-Maclaurin zeta; rejects s = 1.
cplx zeta_eval(cplx s, const ZetaEvalConfig& config = {});

// n-th derivative by the Cauchy integral on a circle, 2^8-node trapezoid.
// Rejects n > 8 at default precision.
cplx zeta_derivative(cplx s, int n, const ZetaEvalConfig& config = {});

// zeta, zeta', zeta'' in one Euler-Maclaurin pass (term-wise analytic
// differentiation); the bulk-scan workhorse, cross-checked against the
// contour route in tests.
std::array<cplx, 3> zeta_jet012(cplx s, const ZetaEvalConfig& config = {});

struct DiscreteMomentReport {
    double T = 0.0;
    std::size_t count = 0;             // empirical N(T)
    cplx sum;
    cplx normalized;                   // sum / count
    cplx prediction;                   // conjecture_prediction at T
    cplx prediction_logt;              // same with log T in place of log(T/2pi)
    cplx ratio;                        // normalized / prediction
};

// sum over gamma <= T of prod_r zeta^{(n_r)}(1/2 + i gamma), compensated
// summation, jet evaluator for n <= 2 (contour beyond).
DiscreteMomentReport discrete_moment(const ZeroDataset& dataset,
                                     const std::vector<int>& orders, double T,
                                     const ZetaEvalConfig& config = {},
                                     const std::string& cache_path = "");

// Conjecture 4 leading order at height T (log(T/2pi) normalization).
cplx conjecture_prediction(const std::vector<int>& orders, double T);
// Conjecture 6: (log T/2pi)^k / Gamma(k+2); rejects Re k <= -3.
cplx conjecture6_prediction(cplx k, double T);

// Theorem 8/9 empirical side: sum over zeros of prod_r P_X^{(n_r)}(rho),
// or of P_X(rho)^k for real k when orders is empty.
cplx p_x_sum_over_zeros(const ZeroDataset& dataset, double X,
                        const std::vector<int>& orders, double T,
                        double k = 1.0);

struct LandauReport {
    cplx empirical;
    double predicted;
};
LandauReport landau_empirical(const ZeroDataset& dataset, std::uint64_t m, double T);

// Riemann-Siegel based generator for the zeros tool (gen-zeros subcommand);
// returns the first `count` ordinates, Euler-Maclaurin refined for t <= 2000,
// count-checked against the argument-principle formula.
std::vector<double> generate_zeros(std::size_t count);

}  // namespace zml::zeta
