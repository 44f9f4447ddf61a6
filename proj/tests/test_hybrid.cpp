#include <cmath>

#include <doctest.h>

#include "zml/hybrid.hpp"
#include "zml/special.hpp"

using namespace zml;
using namespace zml::hybrid;

// reference values computed with mpmath at 30 digits
TEST_CASE("exponential integral E1") {
    CHECK(std::abs(special::exp_integral_e1(cplx(1.0)) -
                   cplx(0.21938393439552027)) < 1e-15);
    CHECK(std::abs(special::exp_integral_e1(cplx(2.0, 3.0)) -
                   cplx(-0.024826207944199363, 0.020316674911044623)) < 1e-14);
    CHECK(std::abs(special::exp_integral_e1(cplx(0.3, -0.2)) -
                   cplx(0.73000921617311625, 0.41556984070966733)) < 1e-14);
    CHECK_THROWS(special::exp_integral_e1(cplx(0.0)));
    CHECK_THROWS(special::exp_integral_e1(cplx(-1.0, 0.0)));
}

TEST_CASE("log-gamma and Barnes G") {
    CHECK(std::abs(special::gamma(cplx(5.0)) - cplx(24.0)) < 1e-12);
    CHECK(std::abs(special::log_gamma(cplx(0.5)) - cplx(std::log(std::sqrt(PI)))) <
          1e-14);
    CHECK(std::abs(special::log_gamma(cplx(3.5, 2.5)) -
                   cplx(0.26074613321963192, 2.9967340228295380)) < 1e-12);

    // G(n) = prod_{j<n-1} j!
    CHECK(std::abs(special::barnes_g(cplx(5.0)) - cplx(12.0)) < 1e-12);
    CHECK(std::abs(special::barnes_g(cplx(1.0)) - cplx(1.0)) < 1e-14);
    CHECK(special::barnes_g(cplx(0.0)) == cplx(0.0));
    CHECK(special::barnes_g(cplx(-3.0)) == cplx(0.0));
    CHECK(std::abs(special::barnes_g(cplx(0.5)) - cplx(0.60324428120944621)) < 1e-12);
    CHECK(std::abs(special::barnes_g(cplx(3.7, 2.1)) -
                   cplx(0.039780078361728660, 0.14048739251228164)) < 1e-11);
}

TEST_CASE("smoothing kernel normalization and support") {
    SmoothingKernel K(10.0);
    CHECK(K.support_hi() == doctest::Approx(std::exp(1.0)));
    CHECK(K.support_lo() == doctest::Approx(std::exp(0.9)));
    CHECK(K.u_mass(K.support_lo(), K.support_hi()) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(K.u_eval(1.0) == 0.0);                      // below support
    CHECK(K.u_eval(std::exp(0.95)) > 0.0);            // inside
    // first log-moment: \int u (log y) dy must sit inside [1 - 1/Y, 1]
    double m1 = K.log_moment(1);
    CHECK(m1 > 0.9);
    CHECK(m1 < 1.0);
}

TEST_CASE("U(z) split form matches direct quadrature of E1") {
    SmoothingKernel K(10.0);
    // inside the split radius the log singularity is separated analytically;
    // at these moduli the direct E1 quadrature is also accurate, so the two
    // must agree at the same point
    for (double arg : {0.3, 1.2, -0.8}) {
        for (double mod : {0.7, 3.9}) {
            cplx z = std::polar(mod, arg);
            cplx split = big_u_eval(K, z);
            cplx direct = K.integrate_logy(
                [&](double ly) { return special::exp_integral_e1(z * ly); });
            CHECK(std::abs(split - direct) < 1e-12);
        }
    }
    // decay: U(z) ~ small for large z
    CHECK(std::abs(big_u_eval(K, cplx(0.0, 50.0))) < 0.05);
}

static HybridParams params(double logX, double Y, int N) {
    return HybridParams{std::exp(logX), N, SmoothingKernel(Y)};
}

TEST_CASE("F_X branches agree across the merge radius") {
    // the merged small-angle form takes over below |theta| = 1e-3; check the
    // two branches against each other through the trapezoid identity
    // F(b) - F(a) = (b - a)(F'(a) + F'(b))/2 + O((b-a)^3)
    auto p = params(5.0, 10.0, 50);
    double a = 0.999e-3, b = 1.001e-3;
    cplx lhs = f_x_eval(p, b) - f_x_eval(p, a);
    cplx rhs = (b - a) * 0.5 * (f_x_derivative(p, a) + f_x_derivative(p, b));
    CHECK(std::abs(lhs - rhs) < 1e-12);
    // central difference vs analytic derivative away from 0
    double h = 1e-6;
    cplx fd = (f_x_eval(p, 1.0 + h) - f_x_eval(p, 1.0 - h)) / (2 * h);
    CHECK(std::abs(fd - f_x_derivative(p, 1.0)) < 1e-7);
    // and inside the merged region
    cplx fd0 = (f_x_eval(p, 5e-4 + 1e-7) - f_x_eval(p, 5e-4 - 1e-7)) / 2e-7;
    CHECK(std::abs(fd0 - f_x_derivative(p, 5e-4)) < 1e-5);
}

TEST_CASE("s_m closed form vs quadrature") {
    auto p = params(4.0, 8.0, 50);
    for (cplx k : {cplx(1.0), cplx(2.5), cplx(0.5, 0.5)}) {
        for (int m = 1; m <= 6; ++m) {
            cplx c = s_m_closed_form(p, k, m);
            cplx n = s_m_numeric(p, k, m);
            CHECK(std::abs(c - n) < 1e-9);
        }
    }
    // m >= log X vanishes
    CHECK(s_m_closed_form(p, 1.0, 5) == cplx(0.0));
    CHECK(std::abs(s_m_numeric(p, 1.0, 5)) < 1e-9);
}

TEST_CASE("FxFourier reproduces F_X pointwise") {
    auto p = params(5.0, 10.0, 50);
    FxFourier fx(p);
    for (double th : {0.3, 1.7, 2.9, -1.1}) {
        CHECK(std::abs(fx.eval(th) - f_x_eval(p, th)) < 1e-9);
    }
    CHECK(std::abs(fx.at_zero() - f_x_at_zero(p)) < 1e-9);
}

TEST_CASE("Z'_{N,X} log form is consistent with the direct product") {
    auto p = params(5.0, 10.0, 20);
    FxFourier fx(p);
    auto s = rmt::sample_cue(20, {20260826ULL, 5ULL}, 2);
    cplx direct = z_nx_prime_at_eigenvalue(s, p);
    cplx via_log = std::exp(log_z_nx_prime(s, fx));
    CHECK(std::abs(direct - via_log) / std::abs(direct) < 1e-8);
}

TEST_CASE("prediction closed form and its exclusions") {
    CHECK(std::abs(theorem13_prediction(1.0, 100) - cplx(0.0, 50.0)) < 1e-10);
    CHECK(std::abs(theorem13_prediction(2.0, 10) - cplx(-100.0 / 6.0, 0.0)) < 1e-10);
    CHECK(theorem13_prediction(-2.0, 50) == cplx(0.0));  // 1/Gamma(0)
    CHECK_THROWS(theorem13_prediction(-3.0, 50));
}

TEST_CASE("assembled asymptotic equals the closed form and is X-independent") {
    for (cplx k : {cplx(1.0), cplx(-1.0), cplx(0.5)}) {
        cplx ref = theorem13_prediction(k, 80);
        for (double lx : {3.0, 6.0}) {
            auto p = params(lx, 10.0, 80);
            cplx asm_v = theorem13_assembled(p, k);
            CHECK(std::abs(asm_v / ref - 1.0) < 1e-9);
        }
    }
}

TEST_CASE("hybrid MC: k=0 is exact, k=1 approaches the prediction") {
    auto p = params(3.0, 10.0, 30);
    auto zero = hybrid_moment_mc(p, 0.0, 10, {1ULL, 2ULL});
    CHECK(zero.mean == cplx(1.0));

    auto mc = hybrid_moment_mc(p, 1.0, 3000, {20260826ULL, 3ULL});
    cplx pred = theorem13_prediction(1.0, 30);
    CHECK(std::abs(mc.mean - pred) < 5 * mc.standard_error);
}
