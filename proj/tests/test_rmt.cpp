#include <cmath>

#include <doctest.h>

#include "zml/rmt.hpp"

using namespace zml;
using namespace zml::rmt;

static const RngSeed SEED{20260826ULL, 99ULL};

TEST_CASE("sample_cue determinism and range") {
    auto a = sample_cue(12, SEED, 7);
    auto b = sample_cue(12, SEED, 7);
    CHECK(a.eigenangles == b.eigenangles);

    auto c = sample_cue(12, SEED, 8);
    CHECK(a.eigenangles != c.eigenangles);

    for (double th : a.eigenangles) {
        CHECK(th >= 0.0);
        CHECK(th < 2 * PI);
    }
    CHECK(a.dimension == 12);
    CHECK(a.eigenangles.size() == 12);

    auto one = sample_cue(1, SEED, 0);
    CHECK(one.eigenangles.size() == 1);
}

TEST_CASE("coefficient form matches the eigenvalue product") {
    auto s = sample_cue(9, SEED, 3);
    auto c = char_poly_coefficients(s);
    REQUIRE(c.coefficients.size() == 10);
    CHECK(c.coefficients[0] == cplx(1.0));
    CHECK(std::abs(c.coefficients[9]) == doctest::Approx(1.0).epsilon(1e-12));

    for (double th : {0.0, 0.71, 3.2, 5.9}) {
        cplx via_coeffs = char_poly_derivative(c, th, 0);
        cplx via_product = char_poly_product(s, th);
        CHECK(std::abs(via_coeffs - via_product) < 1e-12);
    }
}

TEST_CASE("derivatives against central differences of the product") {
    auto s = sample_cue(7, SEED, 11);
    auto c = char_poly_coefficients(s);
    double th = 1.3, h = 1e-5;

    cplx d1 = char_poly_derivative(c, th, 1);
    cplx fd1 = (char_poly_product(s, th + h) - char_poly_product(s, th - h)) / (2 * h);
    CHECK(std::abs(d1 - fd1) < 1e-6);

    cplx d2 = char_poly_derivative(c, th, 2);
    cplx fd2 = (char_poly_product(s, th + h) - 2.0 * char_poly_product(s, th) +
                char_poly_product(s, th - h)) /
               (h * h);
    CHECK(std::abs(d2 - fd2) < 1e-4);
}

TEST_CASE("MC first-derivative moment against the exact route, N=5") {
    // exact value from the nested-sum route, cross-checked in test_exact.cpp
    MixedMomentSpec spec{5, {1}};
    auto mc = mixed_moment_mc(spec, 4000, SEED);
    CHECK(mc.samples == 4000);
    CHECK(mc.standard_error > 0.0);
    CHECK(std::abs(mc.mean - cplx(0.0, 3.0)) < 4 * mc.standard_error);
}

TEST_CASE("mixed moment MC is scheduling-independent in the sample index") {
    MixedMomentSpec spec{4, {1, 1}};
    auto a = mixed_moment_mc(spec, 3000, SEED);
    auto b = mixed_moment_mc(spec, 3000, SEED);
    CHECK(a.mean == b.mean);
    CHECK(a.standard_error == b.standard_error);

    // exact (1,1) moment at N=4 is -5; 4 standard errors
    CHECK(std::abs(a.mean - cplx(-5.0, 0.0)) < 4 * a.standard_error);
}
