#include "zml/exact.hpp"

#include <cmath>
#include <iostream>

#include <Eigen/Dense>

namespace zml::exact {

namespace {

// S = sum over j_1..j_k >= 0, j_1+...+j_k <= N-1 of prod A_r^{-j_r} (N - sum j).
// Split into N*T - W with
//   T_d(B) = sum_{j=0}^{B} A_d^{-j} T_{d+1}(B-j)      (T_{k+1} = 1)
//   W_d(B) = sum_{j=0}^{B} A_d^{-j} (j T_{d+1}(B-j) + W_{d+1}(B-j))
// memoized over (d, B): O(k N^2).
struct NestedSum {
    const std::vector<cplx>& Ainv;  // A_r^{-1}
    int k, B;
    std::vector<std::vector<cplx>> Tmemo, Wmemo;
    std::vector<std::vector<bool>> have;

    NestedSum(const std::vector<cplx>& ainv, int budget)
        : Ainv(ainv), k(int(ainv.size())), B(budget),
          Tmemo(k, std::vector<cplx>(budget + 1)),
          Wmemo(k, std::vector<cplx>(budget + 1)),
          have(k, std::vector<bool>(budget + 1, false)) {}

    void fill(int d, int budget) {
        if (have[d][budget]) return;
        cplx t = 0.0, w = 0.0, p = 1.0;  // p = A_d^{-j}
        for (int j = 0; j <= budget; ++j) {
            cplx tn = 1.0, wn = 0.0;
            if (d + 1 < k) {
                fill(d + 1, budget - j);
                tn = Tmemo[d + 1][budget - j];
                wn = Wmemo[d + 1][budget - j];
            }
            t += p * tn;
            w += p * (double(j) * tn + wn);
            p *= Ainv[d];
        }
        Tmemo[d][budget] = t;
        Wmemo[d][budget] = w;
        have[d][budget] = true;
    }
};

cplx pow_int(cplx z, long n) {
    if (n < 0) return 1.0 / pow_int(z, -n);
    cplx r = 1.0;
    while (n) {
        if (n & 1) r *= z;
        z *= z;
        n >>= 1;
    }
    return r;
}

double sign_pm(long e) { return (e % 2 == 0) ? 1.0 : -1.0; }

}  // namespace

cplx shifted_expectation_sum(int N, const ShiftVector& shifts) {
    if (N < 1) throw std::invalid_argument("shifted_expectation_sum: N >= 1");
    const int k = int(shifts.shifts.size());
    if (k < 1) throw std::invalid_argument("shifted_expectation_sum: k >= 1");

    std::vector<cplx> Ainv(k);
    cplx pref = 1.0 / double(N);
    for (int r = 0; r < k; ++r) {
        cplx A = std::exp(cplx(0.0, 1.0) * shifts.shifts[r]);
        Ainv[r] = 1.0 / A;
        pref *= Ainv[r] * (A - 1.0);
    }

    NestedSum ns(Ainv, N - 1);
    ns.fill(0, N - 1);
    return pref * (double(N) * ns.Tmemo[0][N - 1] - ns.Wmemo[0][N - 1]);
}

LaurentSymbol symbol_coefficients(const ShiftVector& shifts) {
    // expand (z-1)^2 prod_r (z - A_r), then shift all exponents down by 1
    std::vector<cplx> poly{1.0, -2.0, 1.0};  // z^2 - 2z + 1, descending by index
    for (const cplx& alpha : shifts.shifts) {
        cplx A = std::exp(cplx(0.0, 1.0) * alpha);
        poly.push_back(0.0);
        for (std::size_t j = poly.size() - 1; j >= 1; --j)
            poly[j] = poly[j] * 1.0 - A * poly[j - 1];  // multiply by (z - A)
        // note: poly[j] already holds the old value; the line above uses the
        // convolution with (1, -A) in descending-exponent storage
    }
    // poly[i] is the coefficient of z^{deg - i}, deg = k + 2
    LaurentSymbol sym;
    int deg = int(poly.size()) - 1;
    for (int i = 0; i <= deg; ++i) sym.coefficients[deg - i - 1] = poly[i];
    return sym;
}

cplx toeplitz_determinant(int N, const LaurentSymbol& symbol) {
    if (N < 1) throw std::invalid_argument("toeplitz_determinant: N >= 1");
    const int n = N - 1;
    if (n == 0) return 1.0;  // empty determinant
    Eigen::MatrixXcd T(n, n);
    auto fhat = [&](int e) {
        auto it = symbol.coefficients.find(e);
        return it == symbol.coefficients.end() ? cplx(0.0) : it->second;
    };
    for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) T(j, l) = fhat(j - l);
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(T);
    // pivot-ratio condition warning
    Eigen::VectorXd diag = lu.matrixLU().diagonal().cwiseAbs();
    double mx = diag.maxCoeff(), mn = diag.minCoeff();
    if (mn > 0 && mx / mn > 1e12)
        std::cerr << "[zml] toeplitz_determinant: pivot ratio " << mx / mn
                  << " exceeds 1e12, result may lose accuracy\n";
    return lu.determinant();
}

cplx toeplitz_expectation(int N, const ShiftVector& shifts) {
    const int k = int(shifts.shifts.size());
    cplx pref = sign_pm(long(k + 1) * (N - 1)) / double(N);
    for (const cplx& alpha : shifts.shifts) {
        cplx A = std::exp(cplx(0.0, 1.0) * alpha);
        pref *= pow_int(A, -N) * (A - 1.0);
    }
    return pref * toeplitz_determinant(N, symbol_coefficients(shifts));
}

cplx basor_forrester_determinant(int N, const std::vector<cplx>& nodes) {
    const int K = int(nodes.size());
    if (K < 1) throw std::invalid_argument("basor_forrester: need >= 1 node");
    for (int i = 0; i < K; ++i)
        for (int j = i + 1; j < K; ++j)
            if (std::abs(nodes[i] - nodes[j]) < 1e-6)
                throw NodeCollisionError(
                    "basor_forrester: node collision, use the confluent route");

    Eigen::MatrixXcd M(K, K);
    for (int r = 0; r < K; ++r) {
        cplx p = pow_int(nodes[r], N - 1);
        for (int c = 0; c < K - 1; ++c) {
            M(r, c) = p;
            p *= nodes[r];
        }
        M(r, K - 1) = -1.0 / nodes[r];  // (-A_r)^{-1}
    }

    cplx pref = sign_pm(long(K - 1) * (N - 1));
    for (const cplx& A : nodes) pref *= -A;
    cplx vand = 1.0;
    for (int i = 0; i < K; ++i)
        for (int j = i + 1; j < K; ++j) vand *= nodes[j] - nodes[i];
    return pref / vand * Eigen::PartialPivLU<Eigen::MatrixXcd>(M).determinant();
}

cplx basor_forrester_expectation(int N, const ShiftVector& shifts) {
    const int k = int(shifts.shifts.size());
    cplx pref = sign_pm(long(k + 1) * (N - 1)) / double(N);
    std::vector<cplx> base_nodes;
    for (const cplx& alpha : shifts.shifts) {
        cplx A = std::exp(cplx(0.0, 1.0) * alpha);
        pref *= pow_int(A, -N) * (A - 1.0);
        base_nodes.push_back(A);
    }
    // drive the double node at 1 in via e^{+-i eps}; the symbol error is
    // O(eps^2) so two offsets and one Richardson step reach ~1e-10
    auto eval = [&](double eps) {
        std::vector<cplx> nodes = base_nodes;
        nodes.push_back(std::polar(1.0, eps));
        nodes.push_back(std::polar(1.0, -eps));
        return pref * basor_forrester_determinant(N, nodes);
    };
    cplx d2 = eval(1e-2), d3 = eval(1e-3);
    return (100.0 * d3 - d2) / 99.0;
}

ExtractResult coefficient_extract(const ShiftedEvaluator& eval,
                                  const std::vector<int>& orders, int N) {
    const int k = int(orders.size());
    for (int n : orders)
        if (n < 1) throw std::invalid_argument("coefficient_extract: orders >= 1");

    // Roots-of-unity tensor grid.  The evaluator is entire in the shifts, so
    // the inverse DFT recovers Taylor coefficients up to aliasing of order
    // r^M.  Radius shrinks with N because the coefficients grow like N^j/j!.
    const int M = (k == 1) ? 24 : 12;
    const double r = std::min(0.1, 1.0 / double(std::max(1, N)));

    std::vector<std::size_t> stride(k, 1);
    std::size_t total = 1;
    for (int d = k - 1; d >= 0; --d) {
        stride[d] = total;
        total *= M;
    }

    std::vector<cplx> vals(total);
    std::vector<cplx> node(M);
    for (int t = 0; t < M; ++t) node[t] = std::polar(r, 2 * PI * t / M);
    for (std::size_t idx = 0; idx < total; ++idx) {
        ShiftVector sv;
        sv.shifts.resize(k);
        std::size_t rem = idx;
        for (int d = 0; d < k; ++d) {
            sv.shifts[d] = node[(rem / stride[d]) % M];
        }
        vals[idx] = eval(sv);
    }

    auto dft_coeff = [&](const std::vector<int>& freq) {
        cplx acc = 0.0;
        for (std::size_t idx = 0; idx < total; ++idx) {
            double phase = 0.0;
            std::size_t rem = idx;
            for (int d = 0; d < k; ++d)
                phase -= 2 * PI * freq[d] * double((rem / stride[d]) % M) / M;
            acc += vals[idx] * std::polar(1.0, phase);
        }
        return acc / double(total);
    };

    int total_order = 0;
    for (int n : orders) total_order += n;

    cplx c = dft_coeff(orders) / std::pow(r, double(total_order));

    // accuracy proxy: the top-frequency coefficient along each axis measures
    // the neglected Taylor tail at this radius
    double residual = 0.0;
    for (int d = 0; d < k; ++d) {
        std::vector<int> f = orders;
        f[d] = M - 1;
        residual = std::max(residual,
                            std::abs(dft_coeff(f)) / std::pow(r, double(total_order)));
    }

    double factbang = 1.0;
    for (int n : orders)
        for (int j = 2; j <= n; ++j) factbang *= j;
    return {c * factbang, residual};
}

ExtractResult derivative_moment(const MixedMomentSpec& spec) {
    return coefficient_extract(
        [&](const ShiftVector& sv) { return shifted_expectation_sum(spec.N, sv); },
        spec.orders, spec.N);
}

boost::multiprecision::cpp_rational simplex_integral(const std::vector<int>& orders) {
    using boost::multiprecision::cpp_int;
    cpp_int num = 1;
    int total = 0;
    for (int n : orders) {
        if (n < 1) throw std::invalid_argument("simplex_integral: orders >= 1");
        for (int j = 2; j <= n - 1; ++j) num *= j;
        total += n;
    }
    cpp_int den = 1;
    for (int j = 2; j <= total + 1; ++j) den *= j;
    return boost::multiprecision::cpp_rational(num, den);
}

cplx theorem3_prediction(const MixedMomentSpec& spec) {
    int total = 0;
    double fact_prod = 1.0;
    for (int n : spec.orders) {
        total += n;
        for (int j = 2; j <= n; ++j) fact_prod *= j;
    }
    double denom = 1.0;
    for (int j = 2; j <= total + 1; ++j) denom *= j;
    cplx val = sign_pm(total + int(spec.orders.size())) *
               pow_int(cplx(0.0, 1.0), total) * fact_prod / denom;
    return val * std::pow(double(spec.N), double(total));
}

}  // namespace zml::exact
