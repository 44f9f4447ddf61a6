#include <cmath>

#include <doctest.h>

#include "zml/euler.hpp"

using namespace zml;
using namespace zml::euler;

TEST_CASE("von Mangoldt") {
    CHECK(von_mangoldt(1) == 0.0);
    CHECK(von_mangoldt(7) == doctest::Approx(std::log(7.0)));
    CHECK(von_mangoldt(8) == doctest::Approx(std::log(2.0)));
    CHECK(von_mangoldt(12) == 0.0);
    CHECK(von_mangoldt(121) == doctest::Approx(std::log(11.0)));
}

TEST_CASE("segmented sieve") {
    auto p = primes_upto(100);
    CHECK(p.size() == 25);
    CHECK(p.front() == 2);
    CHECK(p.back() == 97);
    CHECK(primes_upto(1).empty());
}

TEST_CASE("divisor function d_k") {
    using boost::multiprecision::cpp_int;
    CHECK(d_k(1, 3) == 1);
    CHECK(d_k(12, 2) == 6);   // divisors of 12
    CHECK(d_k(4, 3) == 6);    // C(2+2, 2)
    CHECK(d_k(30, 3) == 27);  // 3^3 for three distinct primes
}

TEST_CASE("formal exp recursion against exact rational local factors") {
    double X = 50.0;
    for (long k : {1L, 2L, 3L}) {
        auto fl = dirichlet_exp(log_p_x_series(X), cplx(double(k)), 50);
        auto ex = dirichlet_exp_exact(X, k, 50);
        for (std::uint64_t m = 1; m <= 50; ++m) {
            double exact = double(ex[m].convert_to<double>());
            CHECK(std::abs(fl.coeff(m).real() - exact) < 1e-12);
            CHECK(std::abs(fl.coeff(m).imag()) < 1e-12);
        }
    }
}

TEST_CASE("a_k(m) equals d_k(m) when every prime power fits under X") {
    double X = 60.0;
    auto a2 = dirichlet_exp(log_p_x_series(X), cplx(2.0), 60);
    auto a3 = dirichlet_exp(log_p_x_series(X), cplx(3.0), 60);
    // a small cutoff would silently drop terms and is rejected
    CHECK_THROWS(dirichlet_exp(log_p_x_series(X), cplx(2.0), 40));
    for (std::uint64_t m : {1ULL, 6ULL, 12ULL, 30ULL, 36ULL}) {
        CHECK(a2.coeff(m).real() ==
              doctest::Approx(double(d_k(m, 2).convert_to<double>())).epsilon(1e-12));
        CHECK(a3.coeff(m).real() ==
              doctest::Approx(double(d_k(m, 3).convert_to<double>())).epsilon(1e-12));
    }
    // at a prime, a_k(p) = k
    CHECK(a2.coeff(7).real() == doctest::Approx(2.0));
    CHECK(a3.coeff(7).real() == doctest::Approx(3.0));
}

TEST_CASE("P_X powers multiply") {
    double X = 40.0;
    cplx s(1.3, 0.7);
    cplx p1 = p_x_eval(X, s);
    cplx p2 = p_x_power_eval(X, 2.0, s);
    CHECK(std::abs(std::exp(2.0 * std::log(p1)) - p2) < 1e-12 * std::abs(p2));
}

TEST_CASE("derivative series and b-coefficients") {
    double X = 30.0;
    auto d0 = derivative_series(X, 0, 30);
    auto d1 = derivative_series(X, 1, 30);
    for (std::uint64_t m = 2; m <= 30; ++m) {
        CHECK(std::abs(d1.coeff(m) - d0.coeff(m) * (-std::log(double(m)))) < 1e-14);
    }
    // single-order b reduces to the derivative series
    auto b = b_coefficients(X, {1}, 30);
    for (std::uint64_t m = 1; m <= 30; ++m)
        CHECK(std::abs(b.coeff(m) - d1.coeff(m)) < 1e-14);
    // (1,1) is the Dirichlet square
    auto b11 = b_coefficients(X, {1, 1}, 20);
    cplx direct = 0.0;
    for (std::uint64_t d = 1; d <= 12; ++d)
        direct += d1.coeff(d) * d1.coeff(12 / d) * double(12 % d == 0);
    CHECK(std::abs(b11.coeff(12) - direct) < 1e-12);
}

TEST_CASE("Landau main term") {
    double T = 1000.0;
    CHECK(landau_main_term(4, T) ==
          doctest::Approx(-(T / (2 * PI)) * std::log(2.0) / 4.0));
    CHECK(landau_main_term(6, T) == 0.0);
    CHECK_THROWS(landau_main_term(1, T));
}

TEST_CASE("main-term classification") {
    double T = 1e4, X = std::log(T);
    auto all0 = theorem8_prediction(X, {0, 0}, T);
    CHECK(all0.cls == Theorem8Class::ALL_ZERO);
    CHECK(all0.main > 0.0);

    auto one = theorem8_prediction(X, {0, 2, 0}, T);
    CHECK(one.cls == Theorem8Class::ONE_NONZERO);
    CHECK(one.loglog_exponent == 3);
    CHECK(one.main == 0.0);

    auto many = theorem8_prediction(X, {1, 1}, T);
    CHECK(many.cls == Theorem8Class::MANY_NONZERO);
}

TEST_CASE("arithmetic factor a(k)") {
    CHECK(arithmetic_factor_a(1.0, 1e-8) == doctest::Approx(1.0).epsilon(1e-8));
    // a(2) = 6/pi^2 (telescoping local factors)
    CHECK(arithmetic_factor_a(2.0, 1e-8) ==
          doctest::Approx(6.0 / (PI * PI)).epsilon(1e-7));
}
