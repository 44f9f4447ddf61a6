import cmath
import math

import pytest

import zml


def test_version():
    assert zml.ARTIFACT_VERSION.startswith("zml ")


def test_cue_sampling_is_deterministic():
    a = zml.sample_cue(8, master=1, stream=2, index=3)
    b = zml.sample_cue(8, master=1, stream=2, index=3)
    assert a.eigenangles == b.eigenangles
    assert a.dimension == 8
    assert all(0.0 <= t < 2 * math.pi for t in a.eigenangles)


def test_char_poly_consistency():
    s = zml.sample_cue(6, master=5, stream=0)
    z = zml.char_poly_product(s, 1.2)
    z0 = zml.char_poly_derivative(s, 1.2, 0)
    assert abs(z - z0) < 1e-12


def test_exact_routes_agree():
    shifts = [0.1, -0.05 + 0.02j]
    a = zml.shifted_expectation(10, shifts)
    b = zml.toeplitz_expectation(10, shifts)
    assert abs(a - b) < 1e-10 * max(1.0, abs(a))


def test_derivative_moment_and_prediction():
    value, residual = zml.derivative_moment(5, [1])
    assert residual < 1e-8
    assert abs(value - 3j) < 1e-9  # i(N+1)/2 at N=5
    pred = zml.theorem3_prediction([1], 100)
    assert abs(pred - 50j) < 1e-10


def test_simplex_integral():
    val, num, den = zml.simplex_integral([1, 1])
    assert (num, den) == ("1", "6")
    assert val == pytest.approx(1 / 6)


def test_special_functions():
    assert zml.exp_integral_e1(1.0 + 0j) == pytest.approx(0.21938393439552027)
    assert zml.barnes_g(5.0 + 0j) == pytest.approx(12.0)
    assert cmath.isclose(
        zml.log_gamma(0.5 + 0j), math.log(math.sqrt(math.pi)), rel_tol=1e-14
    )


def test_hybrid_fourier_coefficients():
    X, Y = math.exp(4.0), 10.0
    for m in (1, 2, 3):
        closed = zml.s_m_closed_form(X, Y, 1.0 + 0j, m)
        numeric = zml.s_m_numeric(X, Y, 1.0 + 0j, m)
        assert abs(closed - numeric) < 1e-9


def test_hybrid_prediction():
    assert abs(zml.theorem13_prediction(1.0 + 0j, 100) - 50j) < 1e-10
    asm = zml.theorem13_assembled(math.exp(4.0), 10.0, 80, 1.0 + 0j)
    assert abs(asm / zml.theorem13_prediction(1.0 + 0j, 80) - 1) < 1e-9


def test_euler_side():
    assert zml.von_mangoldt(8) == pytest.approx(math.log(2.0))
    assert zml.primes_upto(10) == [2, 3, 5, 7]
    assert zml.d_k(12, 2) == "6"
    a2 = zml.a_k_coefficients(50.0, 2.0 + 0j, 50)
    assert a2[11].real == pytest.approx(6.0)  # a_2(12) = d_2(12)
    assert zml.arithmetic_factor_a(2.0, 1e-8) == pytest.approx(
        6.0 / math.pi**2, abs=1e-7
    )


def test_zeta_eval():
    assert abs(zml.zeta_eval(2.0 + 0j) - math.pi**2 / 6) < 1e-13
    rho1 = 14.134725141734694
    assert abs(zml.zeta_eval(0.5 + 1j * rho1)) < 1e-10
    zp = zml.zeta_derivative(2.0 + 0j, 1)
    assert zp.real == pytest.approx(-0.93754825431584375)


def test_zero_generation_and_moments():
    zs = zml.generate_zeros(30)
    assert len(zs) == 30
    assert abs(zs[0] - 14.134725141734694) < 1e-9
    assert zs == sorted(zs)
    assert zml.n_of_t_formula(zs[-1]) == pytest.approx(30, abs=3)
