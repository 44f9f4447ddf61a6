#include "zml/special.hpp"

#include <cmath>
#include <stdexcept>

namespace zml::special {

namespace {

// Lanczos, g = 7, 9 terms
const double LANCZOS[9] = {
    0.99999999999980993,  676.5203681218851,    -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,  12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double LOG_A = 0.24875447703378426;  // log of the Glaisher constant

// Bernoulli numbers B_2, B_4, ..., B_16
const double BERN[8] = {1.0 / 6,  -1.0 / 30, 1.0 / 42,  -1.0 / 30,
                        5.0 / 66, -691.0 / 2730, 7.0 / 6, -3617.0 / 510};

}  // namespace

cplx e1_entire_part(cplx z) {
    // sum_{m>=1} -(-z)^m/(m! m), entire; used directly for |z| <= 4
    cplx term = 1.0, acc = 0.0;
    for (int m = 1; m <= 64; ++m) {
        term *= -z / double(m);
        cplx add = -term / double(m);
        acc += add;
        if (std::abs(add) < 1e-18 * (1.0 + std::abs(acc))) break;
    }
    return acc;
}

cplx exp_integral_e1(cplx z) {
    if (z == cplx(0.0)) throw std::domain_error("exp_integral_e1: z = 0");
    if (z.real() < 0 && z.imag() == 0)
        throw std::domain_error("exp_integral_e1: arg z = +-pi");

    if (std::abs(z) <= 4.0)
        return -std::log(z) - EULER_GAMMA + e1_entire_part(z);

    // modified Lentz on E_1(z) = e^{-z} / (z + 1 - 1/(z + 3 - 4/(z + 5 - ...)))
    // (continued fraction with partial numerators -m^2, denominators z + 2m + 1)
    const double tiny = 1e-30;
    cplx f = z + 1.0, C = f, D = 0.0;
    for (int m = 1; m <= 200; ++m) {
        cplx a = -double(m) * double(m);
        cplx b = z + double(2 * m + 1);
        D = b + a * D;
        if (std::abs(D) < tiny) D = tiny;
        C = b + a / C;
        if (std::abs(C) < tiny) C = tiny;
        D = 1.0 / D;
        cplx delta = C * D;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return std::exp(-z) / f;
}

cplx log_gamma(cplx z) {
    if (z.real() < 0.5) {
        // reflection
        return std::log(PI / std::sin(PI * z)) - log_gamma(1.0 - z);
    }
    z -= 1.0;
    cplx x = LANCZOS[0];
    for (int i = 1; i < 9; ++i) x += LANCZOS[i] / (z + double(i));
    cplx t = z + 7.5;
    return 0.5 * std::log(2 * PI) + (z + 0.5) * std::log(t) - t + std::log(x);
}

cplx gamma(cplx z) { return std::exp(log_gamma(z)); }

namespace {

// log G(z+1) for |z| >= 20, principal branch
cplx log_barnes_g1p_asym(cplx z) {
    cplx lz = std::log(z);
    cplx acc = z * z * (lz / 2.0 - 0.75) + z / 2.0 * std::log(2 * PI) +
               1.0 / 12.0 - LOG_A - lz / 12.0;
    cplx z2 = z * z, p = z2;
    for (int k = 1; k <= 6; ++k) {
        // B_{2k+2} / (2k (2k+2) z^{2k})
        acc += BERN[k] / (double(2 * k) * double(2 * k + 2) * p);
        p *= z2;
    }
    return acc;
}

}  // namespace

cplx barnes_g(cplx z) {
    // exact zeros and small-integer values
    if (z.imag() == 0.0 && z.real() == std::floor(z.real())) {
        double n = z.real();
        if (n <= 0.0) return 0.0;
        if (n <= 20.0) {
            double g = 1.0, f = 1.0;
            for (int j = 1; j <= int(n) - 2; ++j) {
                f *= j;
                g *= f;
            }
            return g;  // G(n) = prod_{j=1}^{n-2} j!
        }
    }
    // shift up until |z| large enough for the asymptotic series, using
    // G(z+1) = Gamma(z) G(z)  =>  log G(z) = log G(z+m) - sum log Gamma(z+j)
    cplx w = z - 1.0;  // work with log G(1 + w)
    cplx corr = 0.0;
    int guard = 0;
    while (std::abs(w) < 20.0 && guard++ < 64) {
        corr -= log_gamma(w + 1.0);  // G(1+w) = G(2+w)/Gamma(1+w)
        w += 1.0;
    }
    return std::exp(log_barnes_g1p_asym(w) + corr);
}

}  // namespace zml::special
