#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>

#include <doctest.h>

#include "zml/zeta.hpp"

using namespace zml;
using namespace zml::zeta;

// reference values computed with mpmath at 30 digits
TEST_CASE("zeta on and off the critical line") {
    CHECK(std::abs(zeta_eval(cplx(2.0)) - cplx(PI * PI / 6.0)) < 1e-14);
    CHECK(std::abs(zeta_eval(cplx(0.5, 30.0)) -
                   cplx(-0.12064228759004370, -0.58369121476370629)) < 1e-13);
    CHECK(std::abs(zeta_eval(cplx(0.5, 1000.5)) -
                   cplx(2.5443755672349228, -0.15775078482202696)) < 1e-10);
    CHECK_THROWS(zeta_eval(cplx(1.0)));
}

TEST_CASE("jet derivatives vs reference and vs the contour route") {
    auto [z, zp, zpp] = zeta_jet012(cplx(0.5, 30.0));
    CHECK(std::abs(z - zeta_eval(cplx(0.5, 30.0))) < 1e-14);
    CHECK(std::abs(zp - cplx(1.5377408181024704, 0.15789165631692498)) < 1e-12);
    CHECK(std::abs(zpp - cplx(-2.2795782654351408, 0.30563265840551958)) < 1e-11);

    CHECK(std::abs(zeta_derivative(cplx(0.5, 30.0), 1, {}) - zp) < 1e-10);
    CHECK(std::abs(zeta_derivative(cplx(0.5, 30.0), 2, {}) - zpp) < 1e-9);
    CHECK(std::abs(zeta_derivative(cplx(0.5, 30.0), 3, {}) -
                   cplx(3.5262550023605765, -0.84637730897592831)) < 1e-8);
    CHECK(std::abs(zeta_derivative(cplx(2.0), 1, {}) -
                   cplx(-0.93754825431584375)) < 1e-12);
    CHECK_THROWS(zeta_derivative(cplx(0.5, 30.0), 9, {}));
    // contour must not enclose the pole
    CHECK_THROWS(zeta_derivative(cplx(1.1), 1, {}));
}

TEST_CASE("zeros file parsing") {
    const char* path = "zeros_parse_tmp.txt";
    {
        std::ofstream f(path);
        f << "14.134725141734694\n\n21.022039638771555\n25.010857580145688\n";
    }
    auto ds = load_zeros(path);
    CHECK(ds.count() == 3);
    CHECK(ds.ordinates[1] == doctest::Approx(21.022039638771555));
    CHECK(ds.content_hash() == load_zeros(path).content_hash());
    auto limited = load_zeros(path, 2);
    CHECK(limited.count() == 2);
    CHECK(limited.content_hash() != ds.content_hash());

    {
        std::ofstream f(path);
        f << "14.1\n13.9\n";  // descending
    }
    CHECK_THROWS_AS(load_zeros(path), ParseError);
    {
        std::ofstream f(path);
        f << "14.1\nbogus\n";
    }
    CHECK_THROWS_AS(load_zeros(path), ParseError);
    std::remove(path);
}

TEST_CASE("counting function") {
    ZeroDataset ds;
    ds.ordinates = {14.1, 21.0, 25.0, 30.4};
    CHECK(n_of_t(ds, 13.0) == 0);
    CHECK(n_of_t(ds, 21.0) == 2);
    CHECK(n_of_t(ds, 100.0) == 4);
    // formula: N(100) is about 29
    CHECK(std::abs(n_of_t_formula(100.0) - 28.13) < 1.0);
}

TEST_CASE("generated zeros match published low ordinates") {
    auto zs = generate_zeros(10);
    REQUIRE(zs.size() == 10);
    // first three ordinates to 1e-9 (Euler-Maclaurin refined)
    CHECK(std::abs(zs[0] - 14.134725141734694) < 1e-9);
    CHECK(std::abs(zs[1] - 21.022039638771555) < 1e-9);
    CHECK(std::abs(zs[2] - 25.010857580145688) < 1e-9);
    CHECK(std::abs(zs[9] - 49.773832477672302) < 1e-9);
    for (std::size_t i = 1; i < zs.size(); ++i) CHECK(zs[i] > zs[i - 1]);
}

TEST_CASE("predictions") {
    double T = 1e4;
    double L = std::log(T / (2 * PI));
    // orders (1): leading term L/2
    CHECK(std::abs(conjecture_prediction({1}, T) - cplx(L / 2.0)) < 1e-12);
    CHECK(std::abs(conjecture6_prediction(1.0, T) - cplx(L / 2.0)) < 1e-12);
    CHECK(std::abs(conjecture6_prediction(2.0, T) - cplx(L * L / 6.0)) < 1e-12);
    CHECK(conjecture6_prediction(-2.0, T) == cplx(0.0));
    CHECK_THROWS(conjecture6_prediction(cplx(-3.0), T));
}

static const char* zeros_env() { return std::getenv("ZML_ZEROS"); }

TEST_CASE("discrete moments over the generated dataset" *
          doctest::skip(zeros_env() == nullptr)) {
    auto ds = load_zeros(zeros_env(), 1000);
    REQUIRE(ds.count() == 1000);

    auto rep = discrete_moment(ds, {1}, ds.ordinates.back() + 1e-9);
    CHECK(rep.count == 1000);
    // first moment of zeta' is within 30% of the leading order at this height
    CHECK(std::abs(rep.ratio - 1.0) < 0.3);
    CHECK(std::abs(rep.normalized - rep.sum / double(rep.count)) < 1e-12);

    // cache round trip: identical report, no recomputation drift
    const char* cpath = "zeros_cache_tmp.jsonl";
    std::remove(cpath);
    auto r1 = discrete_moment(ds, {2}, 500.0, {}, cpath);
    auto r2 = discrete_moment(ds, {2}, 500.0, {}, cpath);
    CHECK(r1.sum == r2.sum);
    CHECK(r1.count == r2.count);
    std::remove(cpath);
}

TEST_CASE("Landau sums pick out prime powers" *
          doctest::skip(zeros_env() == nullptr)) {
    auto ds = load_zeros(zeros_env(), 2000);
    double T = ds.ordinates.back();
    auto at4 = landau_empirical(ds, 4, T);
    CHECK(at4.predicted == doctest::Approx(euler::landau_main_term(4, T)));
    CHECK(std::abs(at4.empirical - at4.predicted) / std::abs(at4.predicted) < 0.25);
    // non-prime-power m: no main term, small empirical sum
    auto at6 = landau_empirical(ds, 6, T);
    CHECK(at6.predicted == 0.0);
    CHECK(std::abs(at6.empirical) < std::abs(at4.predicted));
}
