"""Special functions against independent oracles (mpmath, sympy) and their
transformation laws."""

import cmath
import math
import random

import mpmath as mp
import pytest
import sympy

from rankasym import specfun as sf
from rankasym.errors import DomainError, SingularArgumentError
from rankasym.quadrature import QuadratureConfig

TAUS = [complex(0.13, 0.77), complex(-0.31, 0.42), complex(0.05, 1.3)]
ZS = [complex(0.21, 0.11), complex(-0.37, 0.04), complex(0.42, -0.08)]


def _mpc(x):
    return mp.mpc(x.real, x.imag)


@pytest.mark.parametrize("tau", TAUS)
def test_euler_product_against_mpmath_qp(tau):
    q = cmath.exp(2j * math.pi * tau)
    ref = complex(mp.qp(_mpc(q)))
    assert abs(sf.euler_product_value(q) - ref) < 1e-13 * abs(ref)


@pytest.mark.parametrize("tau", TAUS)
def test_dedekind_eta_against_mpmath(tau):
    q = cmath.exp(2j * math.pi * tau)
    ref = cmath.exp(2j * math.pi * tau / 24.0) * complex(mp.qp(_mpc(q)))
    assert abs(sf.dedekind_eta(tau) - ref) < 1e-13 * abs(ref)


@pytest.mark.parametrize("tau", TAUS)
@pytest.mark.parametrize("z", ZS)
def test_jacobi_theta_against_mpmath_jtheta(z, tau):
    # our triple product equals -theta_1(pi z | nome e^{i pi tau})
    nome = cmath.exp(1j * math.pi * tau)
    ref = -complex(mp.jtheta(1, _mpc(math.pi * z), _mpc(nome)))
    val = sf.jacobi_theta(z, tau)
    assert abs(val - ref) < 1e-12 * max(abs(ref), 1.0)


def test_theta_vanishes_at_origin():
    for tau in TAUS:
        assert abs(sf.jacobi_theta(0.0, tau)) < 1e-14


def test_theta_requires_upper_half_plane():
    with pytest.raises(DomainError):
        sf.jacobi_theta(0.1, complex(0.3, -0.5))


@pytest.mark.parametrize("tau", TAUS[:2])
def test_mordell_h_against_mpmath_quad(tau):
    z = complex(0.21, 0.11)

    def integrand(w):
        return (mp.e ** (1j * mp.pi * _mpc(tau) * w * w - 2 * mp.pi * _mpc(z) * w)
                / mp.cosh(mp.pi * w))

    ref = complex(mp.quad(integrand, [-8, 0, 8]))
    val, err = sf.mordell_h(z, tau)
    assert abs(val - ref) < 1e-11 * max(abs(ref), 1.0)
    assert abs(val - ref) < 10 * max(err, 1e-13)


def test_appell_A1_against_naive_sum():
    tau = complex(0.11, 0.9)
    u = complex(0.23, 0.17)
    v = complex(-0.31, 0.12)
    q = cmath.exp(2j * math.pi * tau)
    naive = sum(
        (-1) ** n * q ** (n * (n + 1) / 2) * cmath.exp(2j * math.pi * n * v)
        / (1.0 - cmath.exp(2j * math.pi * u) * q ** n)
        for n in range(-40, 41)) * cmath.exp(1j * math.pi * u)
    val = sf.appell_A1(u, v, tau)
    assert abs(val - naive) < 1e-12 * max(abs(naive), 1.0)


def test_appell_A1_rejects_lattice_points():
    tau = complex(0.1, 0.8)
    with pytest.raises(SingularArgumentError) as info:
        sf.appell_A1(1.0 + 1e-9, 0.3j, tau)
    assert info.value.offending_index == 0
    with pytest.raises(SingularArgumentError) as info:
        sf.appell_A1(2 * tau + 1e-9, 0.3j, tau)
    assert info.value.offending_index == -2


def test_appell_mu_rejects_singular_v():
    tau = complex(0.1, 0.8)
    with pytest.raises(SingularArgumentError):
        sf.appell_mu(0.3j, tau + 1e-9, tau)


def test_lattice_distance():
    tau = complex(0.25, 1.0)
    d, nb = sf.lattice_distance(2.0 + 3.0 * tau + 0.001, tau)
    assert nb == 3
    assert abs(d - 0.001) < 1e-12


def test_euler_numbers_against_sympy():
    for k in range(24):
        ours = sf.euler_number_at_zero(k)
        ref = sympy.nsimplify(sympy.euler(k, 0))
        assert sympy.Rational(ours.numerator, ours.denominator) == ref


def test_euler_odd_values():
    from fractions import Fraction
    assert sf.euler_odd_at_zero(0) == Fraction(-1, 2)
    assert sf.euler_odd_at_zero(1) == Fraction(1, 4)
    assert sf.euler_odd_at_zero(2) == Fraction(-1, 2)


def test_euler_integral_small_cases():
    v0, c0 = sf.euler_integral(0)
    assert abs(c0 - 0.25) < 1e-15
    assert abs(v0 - 0.25) < 1e-11
    v1, c1 = sf.euler_integral(1)
    assert abs(c1 - 0.125) < 1e-15
    assert abs(v1 - 0.125) < 1e-11


def test_sech_expansion_residual_behavior():
    assert sf.sech_expansion_residual(0.0, 1) == 0.0
    assert (sf.sech_expansion_residual(2.0, 20)
            < sf.sech_expansion_residual(2.0, 10))


def test_transformation_residuals_are_roundoff():
    rng = random.Random(7)
    cfg = QuadratureConfig(abs_tol=1e-12, rel_tol=1e-12)
    for _ in range(3):
        tau = complex(rng.uniform(-0.4, 0.4), rng.uniform(0.3, 1.2))
        z = complex(rng.uniform(-0.4, 0.4), rng.uniform(0.02, 0.2))
        u = complex(rng.uniform(0.1, 0.4), rng.uniform(0.05, 0.3))
        v = complex(rng.uniform(-0.4, -0.1), rng.uniform(0.05, 0.3))
        assert sf.eta_inversion_residual(tau) < 1e-12
        assert sf.theta_inversion_residual(z, tau) < 1e-12
        assert sf.theta_quasiperiod_residual(z, tau) < 1e-12
        assert sf.appell_quasiperiod_residual(z, tau, 1) < 1e-12
        assert sf.appell_quasiperiod_residual(z, tau, -1) < 1e-12
        assert sf.theta_eta_special_value_residual(tau) < 1e-12
        assert sf.mordell_evenness_residual(z, tau, cfg) < 1e-12
        assert sf.mordell_shift_residual(z, tau, cfg) < 1e-11
        assert sf.mordell_inversion_residual(z, tau, cfg) < 1e-11
        assert sf.mu_symmetry_residual(u, v, tau) < 1e-12
        assert sf.mu_inversion_residual(u, v, tau, cfg) < 1e-11


def test_quadrature_self_consistency():
    # halving tolerances moves the value by less than the error estimate
    tau = complex(0.17, 0.6)
    z = complex(0.12, 0.05)
    loose = QuadratureConfig(abs_tol=1e-9, rel_tol=1e-9)
    v1, e1 = sf.mordell_h(z, tau, loose)
    v2, _ = sf.mordell_h(z, tau, loose.tightened())
    assert abs(v1 - v2) <= max(e1, 1e-14)
