#pragma once
// Prime side: P_X as a finite-cutoff Dirichlet series, the coefficient
// families a_k(m) / b(m), the Landau main term, Theorem 8/9 predictions and
// the arithmetic factor a(k).

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "zml/common.hpp"

namespace zml::euler {

using boost::multiprecision::cpp_rational;

struct DirichletPolynomial {
    std::uint64_t cutoff = 0;          // M
    std::vector<cplx> coefficients;    // index m in [1, M] at coefficients[m-1]

    cplx coeff(std::uint64_t m) const {
        return (m >= 1 && m <= cutoff) ? coefficients[m - 1] : cplx(0.0);
    }
    cplx eval(cplx s) const;  // sum_m c(m) m^{-s}
};

double von_mangoldt(std::uint64_t m);

// primes up to bound, segmented sieve
std::vector<std::uint64_t> primes_upto(std::uint64_t bound);

// number-of-divisors generalization d_k(m), exact integers
boost::multiprecision::cpp_int d_k(std::uint64_t m, int k);

// coefficients Lambda(n)/log n for n <= X (1/j at n = p^j)
DirichletPolynomial log_p_x_series(double X);

// P_X(s)^k = sum a_k(m) m^{-s}: formal exp of k * series under Dirichlet
// convolution via the a(m) log m = sum_{d|m, d>1} k c(d) log d a(m/d) recursion.
// Rejects cutoff < X.
DirichletPolynomial dirichlet_exp(const DirichletPolynomial& series, cplx k,
                                  std::uint64_t cutoff);

// exact-rational a_k(m) for integer k, m <= cutoff (multiplicative local
// factors per prime power), used by the exact-equality tests.
std::vector<cpp_rational> dirichlet_exp_exact(double X, long k, std::uint64_t cutoff);

cplx p_x_eval(double X, cplx s);
cplx p_x_power_eval(double X, cplx k, cplx s);

// coefficients of P_X^{(j)}(s) = sum a_1(m) (-log m)^j m^{-s}
DirichletPolynomial derivative_series(double X, int j, std::uint64_t cutoff);

// k-fold Dirichlet convolution of derivative_series(n_1) ... derivative_series(n_k)
DirichletPolynomial b_coefficients(double X, const std::vector<int>& orders,
                                   std::uint64_t cutoff);

// Lemma 12 main term -(T/2pi) Lambda(m)/m; rejects m = 1.
double landau_main_term(std::uint64_t m, double T);

enum class Theorem8Class { ALL_ZERO, ONE_NONZERO, MANY_NONZERO };

struct Theorem8Prediction {
    double main;             // N(T) main term in the all-zero case, else 0
    Theorem8Class cls;
    int loglog_exponent;     // 1 + n_1 in the one-nonzero case, else 0
};

Theorem8Prediction theorem8_prediction(double X, const std::vector<int>& orders,
                                       double T);

// a(k) Euler product over primes, truncated so the log-tail is below `target`.
double arithmetic_factor_a(double k, double target = 1e-10);

}  // namespace zml::euler
