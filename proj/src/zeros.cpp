// Riemann-Siegel scan producing the zero-ordinate file consumed by the lab.
// Z(t) = 2 sum_{n<=K} cos(theta(t) - t log n)/sqrt(n) + (-1)^{K+1} tau^{-1/2}
//        (C0 + C1/tau),  tau = sqrt(t/2pi), K = floor(tau), p = tau - K.
// Low ordinates (t <= 2000, where the 2-term remainder is weakest) are
// re-refined against the Euler-Maclaurin evaluator.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "zml/common.hpp"
#include "zml/zeta.hpp"

namespace zml::zeta {

namespace {

double theta_rs(double t) {
    return t / 2 * std::log(t / (2 * PI)) - t / 2 - PI / 8 + 1.0 / (48 * t) +
           7.0 / (5760 * t * t * t) + 31.0 / (80640 * std::pow(t, 5));
}

double psi_rs(double p) {
    return std::cos(2 * PI * (p * p - p - 1.0 / 16)) / std::cos(2 * PI * p);
}

// psi''' by a 7-point central stencil; psi is analytic so h = 1e-3 is safe
double psi3_rs(double p) {
    const double h = 1e-3;
    double v[7];
    for (int i = 0; i < 7; ++i) v[i] = psi_rs(p + (i - 3) * h);
    return (v[0] - 8 * v[1] + 13 * v[2] - 13 * v[4] + 8 * v[5] - v[6]) /
           (-8 * h * h * h);
}

struct RsEval {
    std::vector<double> logn{0.0, 0.0};  // logn[n], n >= 1

    double Z(double t) {
        double tau = std::sqrt(t / (2 * PI));
        long K = long(tau);
        while (long(logn.size()) <= K) logn.push_back(std::log(double(logn.size())));
        double th = theta_rs(t);
        double s = 0.0;
        for (long n = 1; n <= K; ++n)
            s += std::cos(th - t * logn[n]) / std::sqrt(double(n));
        s *= 2.0;
        double p = tau - double(K);
        double c0 = psi_rs(p);
        double c1 = psi3_rs(p) / (96 * PI * PI);
        double rem = ((K % 2 == 0) ? -1.0 : 1.0) / std::sqrt(tau) * (c0 + c1 / tau);
        return s + rem;
    }
};

// hardy Z via Euler-Maclaurin, for low-t refinement
double z_em(double t, const ZetaEvalConfig& cfg) {
    cplx z = zeta_eval(cplx(0.5, t), cfg);
    return (std::exp(cplx(0.0, theta_rs(t))) * z).real();
}

template <class F>
double bisect(F&& f, double a, double b, double fa, double fb) {
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    for (int it = 0; it < 60 && b - a > 1e-13; ++it) {
        double m = 0.5 * (a + b), fm = f(m);
        if (fm == 0.0) return m;
        if ((fa < 0) != (fm < 0)) {
            b = m;
            fb = fm;
        } else {
            a = m;
            fa = fm;
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

std::vector<double> generate_zeros(std::size_t count) {
    if (count == 0) return {};
    RsEval rs;
    std::vector<double> zeros;
    zeros.reserve(count);

    const double STEP = 0.01;
    double t = 10.0;
    double ft = rs.Z(t);
    while (zeros.size() < count) {
        double t2 = t + STEP;
        double ft2 = rs.Z(t2);
        if ((ft < 0) != (ft2 < 0))
            zeros.push_back(bisect([&](double x) { return rs.Z(x); }, t, t2, ft, ft2));
        t = t2;
        ft = ft2;
    }

    // Euler-Maclaurin refinement where the RS remainder is weakest
    ZetaEvalConfig cfg;
    for (double& g : zeros) {
        if (g > 2000.0) break;
        double a = g - 0.02, b = g + 0.02;
        double fa = z_em(a, cfg), fb = z_em(b, cfg);
        int widen = 0;
        while ((fa < 0) == (fb < 0) && widen++ < 4) {
            a -= 0.02;
            b += 0.02;
            fa = z_em(a, cfg);
            fb = z_em(b, cfg);
        }
        if ((fa < 0) != (fb < 0))
            g = bisect([&](double x) { return z_em(x, cfg); }, a, b, fa, fb);
    }

    // sanity gates: first ordinate, strict order, count vs the zero-counting
    // main term (theta/pi + 1, |S(T)| excursions stay tiny at these heights)
    if (std::abs(zeros.front() - 14.134725) > 1e-3)
        throw std::runtime_error("generate_zeros: first ordinate off 14.134725");
    for (std::size_t i = 1; i < zeros.size(); ++i)
        if (zeros[i] <= zeros[i - 1])
            throw std::runtime_error("generate_zeros: ordinates not ascending");
    double Tend = zeros.back() + 1e-6;
    double formula = theta_rs(Tend) / PI + 1.0;
    if (std::abs(formula - double(zeros.size())) > 3.0)
        throw std::runtime_error("generate_zeros: count disagrees with N(T) formula");
    return zeros;
}

}  // namespace zml::zeta
