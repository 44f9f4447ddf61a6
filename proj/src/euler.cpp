#include "zml/euler.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace zml::euler {

cplx DirichletPolynomial::eval(cplx s) const {
    CompensatedCplxSum acc;
    for (std::uint64_t m = 1; m <= cutoff; ++m) {
        cplx c = coefficients[m - 1];
        if (c == cplx(0.0)) continue;
        acc.add(c * std::exp(-s * std::log(double(m))));
    }
    return acc.value();
}

double von_mangoldt(std::uint64_t m) {
    if (m < 2) return 0.0;
    // smallest prime factor by trial division, then check pure power
    std::uint64_t p = 0;
    std::uint64_t n = m;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            p = d;
            break;
        }
    if (p == 0) return std::log(double(m));  // m prime
    while (n % p == 0) n /= p;
    return n == 1 ? std::log(double(p)) : 0.0;
}

std::vector<std::uint64_t> primes_upto(std::uint64_t bound) {
    std::vector<std::uint64_t> primes;
    if (bound < 2) return primes;
    // base sieve to sqrt, then segments
    std::uint64_t root = std::uint64_t(std::sqrt(double(bound))) + 1;
    std::vector<bool> base(root + 1, true);
    std::vector<std::uint64_t> base_primes;
    for (std::uint64_t i = 2; i <= root; ++i)
        if (base[i]) {
            base_primes.push_back(i);
            for (std::uint64_t j = i * i; j <= root; j += i) base[j] = false;
        }
    const std::uint64_t SEG = 1 << 20;
    std::vector<bool> seg;
    for (std::uint64_t lo = 2; lo <= bound; lo += SEG) {
        std::uint64_t hi = std::min(bound, lo + SEG - 1);
        seg.assign(hi - lo + 1, true);
        for (std::uint64_t p : base_primes) {
            if (p * p > hi) break;
            std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
            for (std::uint64_t j = start; j <= hi; j += p) seg[j - lo] = false;
        }
        for (std::uint64_t i = lo; i <= hi; ++i)
            if (seg[i - lo] && i >= 2) primes.push_back(i);
    }
    return primes;
}

boost::multiprecision::cpp_int d_k(std::uint64_t m, int k) {
    using boost::multiprecision::cpp_int;
    if (m == 0 || k < 1) throw std::invalid_argument("d_k: m >= 1, k >= 1");
    cpp_int out = 1;
    std::uint64_t n = m;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        // C(e + k - 1, k - 1)
        cpp_int b = 1;
        for (int i = 1; i <= e; ++i) b = b * (k - 1 + i) / i;
        out *= b;
    }
    if (n > 1) out *= k;  // leftover prime, exponent 1
    return out;
}

DirichletPolynomial log_p_x_series(double X) {
    if (X < 2) throw std::invalid_argument("log_p_x_series: X >= 2");
    std::uint64_t M = std::uint64_t(X);
    DirichletPolynomial out;
    out.cutoff = M;
    out.coefficients.assign(M, 0.0);
    for (std::uint64_t p : primes_upto(M)) {
        std::uint64_t q = p;
        int j = 1;
        while (q <= M) {
            out.coefficients[q - 1] = 1.0 / j;  // Lambda(p^j)/log(p^j)
            ++j;
            if (q > M / p) break;
            q *= p;
        }
    }
    return out;
}

DirichletPolynomial dirichlet_exp(const DirichletPolynomial& series, cplx k,
                                  std::uint64_t cutoff) {
    if (series.coeff(1) != cplx(0.0))
        throw std::invalid_argument("dirichlet_exp: series must vanish at m=1");
    if (cutoff < series.cutoff)
        throw std::invalid_argument("dirichlet_exp: cutoff < X drops terms");

    // a(m) log m = sum_{d|m, d>1} k c(d) log d a(m/d)
    std::vector<std::pair<std::uint64_t, cplx>> support;  // (d, k c(d) log d)
    for (std::uint64_t d = 2; d <= series.cutoff; ++d) {
        cplx c = series.coeff(d);
        if (c != cplx(0.0)) support.push_back({d, k * c * std::log(double(d))});
    }

    DirichletPolynomial out;
    out.cutoff = cutoff;
    out.coefficients.assign(cutoff, 0.0);
    out.coefficients[0] = 1.0;  // a(1) = 1
    for (std::uint64_t m = 2; m <= cutoff; ++m) {
        cplx acc = 0.0;
        for (const auto& [d, w] : support) {
            if (d > m) break;
            if (m % d == 0) acc += w * out.coefficients[m / d - 1];
        }
        out.coefficients[m - 1] = acc / std::log(double(m));
    }
    return out;
}

std::vector<cpp_rational> dirichlet_exp_exact(double X, long k, std::uint64_t cutoff) {
    // multiplicative: a(p^e) from exp(k * sum_{j: p^j <= X} t^j / j) truncated
    std::map<std::uint64_t, std::vector<cpp_rational>> local;  // p -> a(p^e)
    auto local_factors = [&](std::uint64_t p, int emax) -> const std::vector<cpp_rational>& {
        auto it = local.find(p);
        if (it != local.end() && int(it->second.size()) > emax) return it->second;
        std::vector<cpp_rational> c(emax + 1, 0);  // k * L_p coefficients
        std::uint64_t q = p;
        int j = 1;
        while (q <= std::uint64_t(X) && j <= emax) {
            c[j] = cpp_rational(k, j);
            ++j;
            if (q > std::uint64_t(X) / p) break;
            q *= p;
        }
        std::vector<cpp_rational> E(emax + 1, 0);
        E[0] = 1;
        for (int n = 1; n <= emax; ++n) {
            cpp_rational acc = 0;
            for (int i = 1; i <= n; ++i) acc += cpp_rational(i) * c[i] * E[n - i];
            E[n] = acc / n;
        }
        return local[p] = std::move(E);
    };

    // smallest-prime-factor sieve for factorization
    std::vector<std::uint32_t> spf(cutoff + 1, 0);
    for (std::uint64_t i = 2; i <= cutoff; ++i)
        if (!spf[i])
            for (std::uint64_t j = i; j <= cutoff; j += i)
                if (!spf[j]) spf[j] = std::uint32_t(i);

    std::vector<cpp_rational> out(cutoff + 1, 0);
    out[1] = 1;
    int emax_global = 1;
    while ((1ULL << (emax_global + 1)) <= cutoff) ++emax_global;
    for (std::uint64_t m = 2; m <= cutoff; ++m) {
        cpp_rational v = 1;
        std::uint64_t n = m;
        while (n > 1) {
            std::uint64_t p = spf[n];
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            v *= local_factors(p, emax_global)[e];
            if (v == 0) break;
        }
        out[m] = v;
    }
    return out;
}

cplx p_x_eval(double X, cplx s) {
    CompensatedCplxSum acc;
    DirichletPolynomial lp = log_p_x_series(X);
    for (std::uint64_t m = 2; m <= lp.cutoff; ++m) {
        cplx c = lp.coeff(m);
        if (c == cplx(0.0)) continue;
        acc.add(c * std::exp(-s * std::log(double(m))));
    }
    return std::exp(acc.value());
}

cplx p_x_power_eval(double X, cplx k, cplx s) {
    CompensatedCplxSum acc;
    DirichletPolynomial lp = log_p_x_series(X);
    for (std::uint64_t m = 2; m <= lp.cutoff; ++m) {
        cplx c = lp.coeff(m);
        if (c == cplx(0.0)) continue;
        acc.add(c * std::exp(-s * std::log(double(m))));
    }
    return std::exp(k * acc.value());
}

DirichletPolynomial derivative_series(double X, int j, std::uint64_t cutoff) {
    if (j < 0) throw std::invalid_argument("derivative_series: j >= 0");
    // coefficients are local in m, so a small requested cutoff is fine here:
    // run the exponential at >= X and truncate afterwards
    std::uint64_t work = std::max<std::uint64_t>(cutoff, std::uint64_t(X) + 1);
    DirichletPolynomial a1 = dirichlet_exp(log_p_x_series(X), 1.0, work);
    a1.cutoff = cutoff;
    a1.coefficients.resize(cutoff);
    if (j == 0) return a1;
    for (std::uint64_t m = 1; m <= cutoff; ++m)
        a1.coefficients[m - 1] *= std::pow(-std::log(double(m)), j);
    return a1;
}

DirichletPolynomial b_coefficients(double X, const std::vector<int>& orders,
                                   std::uint64_t cutoff) {
    if (orders.empty()) throw std::invalid_argument("b_coefficients: k >= 1");
    DirichletPolynomial out = derivative_series(X, orders[0], cutoff);
    for (std::size_t r = 1; r < orders.size(); ++r) {
        DirichletPolynomial next = derivative_series(X, orders[r], cutoff);
        DirichletPolynomial conv;
        conv.cutoff = cutoff;
        conv.coefficients.assign(cutoff, 0.0);
        for (std::uint64_t i = 1; i <= cutoff; ++i) {
            cplx a = out.coefficients[i - 1];
            if (a == cplx(0.0)) continue;
            for (std::uint64_t j = 1; i * j <= cutoff; ++j) {
                cplx b = next.coefficients[j - 1];
                if (b != cplx(0.0)) conv.coefficients[i * j - 1] += a * b;
            }
        }
        out = std::move(conv);
    }
    return out;
}

double landau_main_term(std::uint64_t m, double T) {
    if (m < 2)
        throw std::invalid_argument("landau_main_term: m = 1 excluded");
    return -(T / (2 * PI)) * von_mangoldt(m) / double(m);
}

Theorem8Prediction theorem8_prediction(double X, const std::vector<int>& orders,
                                       double T) {
    if (X > 10.0 * std::log(T))
        std::fprintf(stderr, "[zml] theorem8_prediction: X far outside the X = O(log T) regime\n");
    int nonzero = 0, first_nonzero = 0;
    for (int n : orders)
        if (n > 0) {
            if (nonzero == 0) first_nonzero = n;
            ++nonzero;
        }
    if (nonzero == 0) {
        double main = T / (2 * PI) * std::log(T / (2 * PI * std::exp(1.0)));
        return {main, Theorem8Class::ALL_ZERO, 0};
    }
    if (nonzero == 1) return {0.0, Theorem8Class::ONE_NONZERO, 1 + first_nonzero};
    return {0.0, Theorem8Class::MANY_NONZERO, 0};
}

double arithmetic_factor_a(double k, double target) {
    if (k <= -0.5)
        throw std::invalid_argument("arithmetic_factor_a: k > -1/2 required");
    if (k == 0.0) return 1.0;
    // per prime: (1-x)^{k^2} sum_m c_m^2 x^m with c_m = c_{m-1}(k+m-1)/m;
    // the log of the factor is B x^2 + O(x^3), so the prime tail beyond P
    // contributes ~ B / (P log P)
    const double B = k * k * (k + 1) * (k + 1) / 4.0 - std::pow(k, 4) / 2.0 - k * k / 2.0;
    CompensatedSum log_a;
    std::uint64_t P = 10000000;
    auto primes = primes_upto(P);
    for (std::uint64_t p : primes) {
        double x = 1.0 / double(p);
        double c = 1.0, sum = 1.0, xm = 1.0;
        for (int m = 1; m < 400; ++m) {
            c *= (k + m - 1) / m;
            xm *= x;
            double term = c * c * xm;
            sum += term;
            if (std::abs(term) < 1e-17 * sum) break;
        }
        log_a.add(k * k * std::log1p(-x) + std::log(sum));
    }
    double tail = B / (double(P) * std::log(double(P)));
    if (std::abs(tail) > target)
        std::fprintf(stderr, "[zml] arithmetic_factor_a: tail estimate %.3e above target\n", tail);
    return std::exp(log_a.value() + tail);
}

}  // namespace zml::euler
