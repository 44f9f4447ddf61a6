#include <cmath>

#include <doctest.h>

#include "zml/exact.hpp"

using namespace zml;
using namespace zml::exact;
using boost::multiprecision::cpp_rational;

static ShiftVector sv(std::initializer_list<cplx> a) { return ShiftVector{a}; }

TEST_CASE("trivial shifted expectations") {
    // k = 0 is outside the contract
    CHECK_THROWS(shifted_expectation_sum(5, sv({})));
    // N = 1, one factor at shift 0: E[(1/1) Z(theta_1)] with Z(theta_1) = 0
    CHECK(std::abs(shifted_expectation_sum(1, sv({0.0}))) < 1e-14);
    // the alpha -> 0 limit vanishes through the (A - 1) prefactor
    CHECK(std::abs(shifted_expectation_sum(7, sv({0.0}))) < 1e-14);
}

TEST_CASE("nested sum vs Toeplitz determinant route") {
    std::vector<ShiftVector> cases = {
        sv({0.1}),
        sv({0.1, -0.07}),
        sv({{0.05, 0.02}, -0.11, 0.23}),
        sv({0.02, 0.06, -0.04, {0.0, 0.08}}),
    };
    for (int N : {2, 5, 11, 20}) {
        for (const auto& s : cases) {
            cplx a = shifted_expectation_sum(N, s);
            cplx b = toeplitz_expectation(N, s);
            double scale = std::max(1.0, std::abs(a));
            CHECK(std::abs(a - b) / scale < 1e-10);
        }
    }
}

TEST_CASE("Basor-Forrester closed form vs raw Toeplitz determinant") {
    // D_{N-1}[z^{-1} prod (z - A_r)] with distinct nodes off the unit circle
    std::vector<cplx> nodes = {std::polar(1.0, 0.4), std::polar(1.0, -0.2),
                               std::polar(1.0, 1.1)};
    LaurentSymbol sym;
    // build the Laurent coefficients of z^{-1} prod (z - A_r) directly
    std::vector<cplx> poly = {1.0};
    for (cplx a : nodes) {
        std::vector<cplx> next(poly.size() + 1, 0.0);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i] += poly[i];
            next[i + 1] -= a * poly[i];
        }
        poly = next;
    }
    for (std::size_t i = 0; i < poly.size(); ++i)
        sym.coefficients[int(poly.size()) - 1 - int(i) - 1] = poly[i];

    for (int N : {3, 6, 12}) {
        cplx lu = toeplitz_determinant(N, sym);
        cplx bf = basor_forrester_determinant(N, nodes);
        CHECK(std::abs(lu - bf) / std::max(1.0, std::abs(lu)) < 1e-10);
    }
}

TEST_CASE("Basor-Forrester rejects node collisions") {
    std::vector<cplx> nodes = {std::polar(1.0, 0.5), std::polar(1.0, 0.5 + 1e-9)};
    CHECK_THROWS_AS(basor_forrester_determinant(5, nodes), NodeCollisionError);
}

TEST_CASE("Basor-Forrester expectation matches the nested sum") {
    for (int N : {4, 9}) {
        auto s = sv({0.13, -0.21, 0.05});
        cplx a = shifted_expectation_sum(N, s);
        cplx b = basor_forrester_expectation(N, s);
        CHECK(std::abs(a - b) / std::max(1.0, std::abs(a)) < 1e-5);
    }
}

TEST_CASE("derivative moments: exact small-N values") {
    // frozen from the nested-sum + extraction pipeline and verified against
    // Monte Carlo in test_rmt.cpp
    auto m11 = derivative_moment({4, {1, 1}});
    CHECK(m11.residual < 1e-8);
    CHECK(std::abs(m11.value - cplx(-5.0, 0.0)) < 1e-9);

    auto m1 = derivative_moment({5, {1}});
    CHECK(std::abs(m1.value - cplx(0.0, 3.0)) < 1e-10);

    auto m2 = derivative_moment({5, {2}});
    CHECK(std::abs(m2.value - cplx(11.0, 0.0)) < 1e-9);

    auto m66 = derivative_moment({6, {1, 1}});
    CHECK(std::abs(m66.value - cplx(-28.0 / 3.0, 0.0)) < 1e-8);
}

TEST_CASE("simplex integral exact rationals") {
    CHECK(simplex_integral({1}) == cpp_rational(1, 2));
    CHECK(simplex_integral({1, 1}) == cpp_rational(1, 6));
    CHECK(simplex_integral({2, 1}) == cpp_rational(1, 24));
    CHECK(simplex_integral({3, 2, 2}) == cpp_rational(2 * 1 * 1, 40320));
}

TEST_CASE("leading-order prediction closed form") {
    // orders (1): (-1)^{1+1} i * 1!/2! * N = iN/2
    cplx p1 = theorem3_prediction({100, {1}});
    CHECK(std::abs(p1 - cplx(0.0, 50.0)) < 1e-12);

    // orders (1,1): (-1)^{2+2} i^2 * 1/3! * N^2 = -N^2/6
    cplx p11 = theorem3_prediction({10, {1, 1}});
    CHECK(std::abs(p11 - cplx(-100.0 / 6.0, 0.0)) < 1e-12);

    // orders (2,1): (-1)^{3+2} i^3 * 2/4! * N^3 = i N^3 / 12
    cplx p21 = theorem3_prediction({10, {2, 1}});
    CHECK(std::abs(p21 - cplx(0.0, 1000.0 / 12.0)) < 1e-10);
}

TEST_CASE("extraction converges to the prediction") {
    auto r = derivative_moment({50, {2, 1}});
    cplx pred = theorem3_prediction({50, {2, 1}});
    CHECK(std::abs(r.value / pred - 1.0) < 5.0 / 50.0);
}
