"""Asymptotic machinery for the rank generating function: the Jacobi-form
decomposition of R(z;tau), the folded integrand g_m, the main-term /
remainder split G_1 + G_2, and the near- and far-pole evaluations of

    R_m(tau) = int_{-1/2}^{1/2} R(z;tau) e^{-2 pi i m z} dz.

The contour parametrization is s = beta (1 + i x mhat^{-1/3}) with
beta = pi / sqrt(6 n) and tau = i s / (2 pi).  The m^{-1/3} scaling of the
contour degenerates at m = 0, so mhat = max(m, 1) throughout (Wright's
classical contour is recovered for m = 0).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import cached_property
from math import factorial

import numpy as np

from .errors import DomainError
from .quadrature import (DEFAULT_CONFIG, QuadratureConfig, adaptive_gl,
                         pv_adaptive_gl)
from .specfun import (PRODUCT_TOL, appell_A1, dedekind_eta,
                      euler_odd_at_zero, euler_product_value, jacobi_theta)

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class SParam:
    """Point on Wright's contour: n, m >= 0 and the angular coordinate x."""

    n: int
    m: int
    x: float

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.m < 0:
            raise ValueError("m must be >= 0 (use N(m,n) = N(-m,n))")
        if abs(self.x) > math.pi * self.mhat ** (1.0 / 3.0) / self.beta + 1e-12:
            raise ValueError(
                f"|x|={abs(self.x)} outside the contour range for (m={self.m}, n={self.n})")

    @property
    def beta(self) -> float:
        return math.pi / math.sqrt(6.0 * self.n)

    @property
    def mhat(self) -> int:
        return max(self.m, 1)

    @cached_property
    def s(self) -> complex:
        return self.beta * (1.0 + 1j * self.x * self.mhat ** (-1.0 / 3.0))

    @cached_property
    def tau(self) -> complex:
        return 1j * self.s / TWO_PI

    @property
    def x_max(self) -> float:
        return math.pi * self.mhat ** (1.0 / 3.0) / self.beta


@dataclass(frozen=True)
class RmEstimate:
    value: complex
    method: str
    error_estimate: float


def rank_R_direct(z, tau, tol=PRODUCT_TOL):
    """R(z;tau) summed directly from its defining series.

    The bilateral sum over k is folded into 1 + (k>0 half) + (k<0 half), so
    the k = 0 term cancels the (1 - zeta) prefactor exactly and all
    denominators stay bounded away from zero for real z.  Broadcasts over z.
    """
    tau = complex(tau)
    if tau.imag <= 0:
        raise DomainError("Im(tau) must be > 0")
    z_arr = np.atleast_1d(np.asarray(z, dtype=complex))
    q = cmath.exp(2j * math.pi * tau)
    zeta = np.exp(2j * math.pi * z_arr)
    absq = abs(q)
    f = np.ones_like(zeta)
    k = 1
    while True:
        g = k * (3 * k + 1) // 2
        if absq ** g < tol * (1.0 - absq):
            break
        c = (-1 if k % 2 else 1) * q ** g
        qk = q ** k
        f = f + c * ((1.0 - zeta) / (1.0 - zeta * qk)
                     + (1.0 - 1.0 / zeta) / (1.0 - qk / zeta))
        k += 1
    out = f / euler_product_value(q, tol)
    return out if np.ndim(z) else complex(out[0])


def rank_decomposition_rhs(z, tau, tol=PRODUCT_TOL, first_term_sign=1):
    """The three-term Jacobi decomposition of R(z;tau):

    (q^{1/24}/eta) [ i (zeta^{1/2}-zeta^{-1/2}) eta^3(3tau)/theta(3z;3tau)
                     - zeta^{-1} (zeta^{1/2}-zeta^{-1/2}) A_1(3z,-tau;3tau)
                     - zeta (zeta^{1/2}-zeta^{-1/2}) A_1(3z,tau;3tau) ].

    first_term_sign=-1 flips the sign of the theta-quotient summand; this is
    only useful as a control experiment (the historical typo in the identity).
    """
    tau = complex(tau)
    z_arr = np.atleast_1d(np.asarray(z, dtype=complex))
    q = cmath.exp(2j * math.pi * tau)
    zeta = np.exp(2j * math.pi * z_arr)
    half_diff = np.exp(1j * math.pi * z_arr) - np.exp(-1j * math.pi * z_arr)
    eta3 = dedekind_eta(3 * tau, tol) ** 3
    theta3 = jacobi_theta(3 * z_arr, 3 * tau, tol)
    t1 = first_term_sign * 1j * half_diff * eta3 / theta3
    t2 = half_diff / zeta * appell_A1(3 * z_arr, -tau, 3 * tau, tol)
    t3 = half_diff * zeta * appell_A1(3 * z_arr, tau, 3 * tau, tol)
    out = (t1 - t2 - t3) / euler_product_value(q, tol)
    return out if np.ndim(z) else complex(out[0])


def rank_decomposition_residual(z, tau, tol=PRODUCT_TOL, first_term_sign=1):
    """|R(z;tau) - three-term decomposition| at a single point."""
    lhs = rank_R_direct(z, tau, tol)
    rhs = rank_decomposition_rhs(z, tau, tol, first_term_sign)
    return abs(lhs - rhs)


def g_m_eval(z, m, tau, tol=PRODUCT_TOL):
    """Folded integrand g_m(z;tau) of the reduction of R_m to [-1/6, 1/6].

    The branch depends only on m mod 3:
      m = 0 (3):  -A_1(3z, tau;3tau) e^{3 pi i z} + A_1(3z,-tau;3tau) e^{-3 pi i z}
      m = 1 (3): [-A_1(3z,-tau;3tau) - i eta^3(3tau)/theta(3z;3tau)] e^{-pi i z}
      m = 2 (3): [ A_1(3z, tau;3tau) + i eta^3(3tau)/theta(3z;3tau)] e^{ pi i z}
    Broadcasts over z.
    """
    tau = complex(tau)
    z_arr = np.atleast_1d(np.asarray(z, dtype=complex))
    case = m % 3
    if case == 0:
        out = (-appell_A1(3 * z_arr, tau, 3 * tau, tol)
               * np.exp(3j * math.pi * z_arr)
               + appell_A1(3 * z_arr, -tau, 3 * tau, tol)
               * np.exp(-3j * math.pi * z_arr))
    else:
        quot = dedekind_eta(3 * tau, tol) ** 3 / jacobi_theta(3 * z_arr, 3 * tau, tol)
        if case == 1:
            out = (-appell_A1(3 * z_arr, -tau, 3 * tau, tol) - 1j * quot) \
                * np.exp(-1j * math.pi * z_arr)
        else:
            out = (appell_A1(3 * z_arr, tau, 3 * tau, tol) + 1j * quot) \
                * np.exp(1j * math.pi * z_arr)
    return out if np.ndim(z) else complex(out[0])


def _sin_over_sinh(z_arr, s):
    """sin(pi z) / sinh(2 pi^2 z / s), with the z = 0 limit s/(2 pi)."""
    w = 2.0 * math.pi ** 2 * z_arr / s
    small = np.abs(w) < 1e-12
    ratio = np.where(small, s / TWO_PI,
                     np.sin(math.pi * z_arr) / np.sinh(np.where(small, 1.0, w)))
    return ratio


def g_m_main_term(z, s):
    """Leading behavior of g_m near the dominant pole:
    2 pi sin(pi z) e^{6 pi^2 z^2 / s} / (3 s sinh(2 pi^2 z / s)).
    The z -> 0 limit is 1/3.  Broadcasts over z."""
    s = complex(s)
    z_arr = np.atleast_1d(np.asarray(z, dtype=complex))
    out = (TWO_PI / (3.0 * s) * _sin_over_sinh(z_arr, s)
           * np.exp(6.0 * math.pi ** 2 * z_arr ** 2 / s))
    return out if np.ndim(z) else complex(out[0])


def I_split(m, tau, cfg: QuadratureConfig = DEFAULT_CONFIG, tol=PRODUCT_TOL):
    """The three pieces I_1, I_2, I_3 of the decomposition integrated over
    the full period [-1/2, 1/2].

    Each piece separately has simple poles at z = +-1/3 (they cancel in the
    sum), so the integrals are Cauchy principal values; the symmetric-pairing
    quadrature handles that.  The case table mod 3 predicts exactly one of
    the three to vanish: I_1 for m = 0 (3), I_3 for m = 1 (3), I_2 for m = 2 (3).
    """
    tau = complex(tau)
    eta3 = dedekind_eta(3 * tau, tol) ** 3

    def f1(z):
        return (-2.0 * np.sin(math.pi * z) * eta3
                / jacobi_theta(3 * z, 3 * tau, tol)
                * np.exp(-2j * math.pi * m * z))

    def f2(z):
        return (2j * np.sin(math.pi * z) * np.exp(-2j * math.pi * z)
                * appell_A1(3 * z, -tau, 3 * tau, tol)
                * np.exp(-2j * math.pi * m * z))

    def f3(z):
        return (2j * np.sin(math.pi * z) * np.exp(2j * math.pi * z)
                * appell_A1(3 * z, tau, 3 * tau, tol)
                * np.exp(-2j * math.pi * m * z))

    poles = [-1.0 / 3.0, 1.0 / 3.0]
    values = []
    for f in (f1, f2, f3):
        v, _e = pv_adaptive_gl(f, -0.5, 0.5, poles, cfg, window=1.0 / 12.0,
                               initial_panels=8, what=f"I piece (m={m})")
        values.append(v)
    return tuple(values)


def G_split(sp: SParam, cfg: QuadratureConfig = DEFAULT_CONFIG, tol=PRODUCT_TOL):
    """(G_1, G_2) with
    G_1 = (4 pi / s) int_0^{1/6} sin(pi z) e^{6 pi^2 z^2/s}
          / sinh(2 pi^2 z/s) cos(2 pi m z) dz   (even-integrand cosine form)
    G_2 = 3 int_{-1/6}^{1/6} (g_m - main term) e^{-2 pi i m z} dz,
    so that (q^{1/24}/eta) (G_1 + G_2) = R_m."""
    s = sp.s
    m = sp.m

    def f1(z):
        return (_sin_over_sinh(z.astype(complex), s)
                * np.exp(6.0 * math.pi ** 2 * z ** 2 / s)
                * np.cos(TWO_PI * m * z))

    v1, _ = adaptive_gl(f1, 0.0, 1.0 / 6.0, cfg, initial_panels=8,
                        what=f"G1(m={m}, n={sp.n})")
    g1 = 4.0 * math.pi / s * v1

    def f2(z):
        return ((g_m_eval(z, m, sp.tau, tol) - g_m_main_term(z, s))
                * np.exp(-2j * math.pi * m * z))

    v2, _ = adaptive_gl(f2, -1.0 / 6.0, 1.0 / 6.0, cfg, initial_panels=8,
                        what=f"G2(m={m}, n={sp.n})")
    return g1, 3.0 * v2


def G1_euler_series(s, m, max_index=60, tol=1e-12):
    """G_1 evaluated through the Euler-number expansion: the Taylor expansion
    of sin(pi z) e^{6 pi^2 z^2/s} cos(2 pi m z) integrated term by term
    against 1/sinh(2 pi^2 z/s), each moment replaced by its closed form
    (s/2pi)^{2l+2} (-1)^{l+1} E_{2l+1}(0)/2.

    Swapping the Taylor sum with the integral over (0, infinity) makes this
    an asymptotic series in s (the Euler values grow factorially), so it is
    summed to its smallest term: accumulate contributions by total degree l
    and stop once they start growing again.  Accurate to ~|smallest term|
    for small |s| and moderate m; an independent cross-check of the
    quadrature route."""
    s = complex(s)
    total = 0.0 + 0.0j
    best_term = math.inf
    for ell in range(max_index + 1):
        e_val = float(euler_odd_at_zero(ell))
        moment = (s / TWO_PI) ** (2 * ell + 2) * (-1) ** (ell + 1) * e_val / 2.0
        coeff = 0.0 + 0.0j
        for j in range(ell + 1):
            for nu in range(ell + 1 - j):
                r = ell - j - nu
                coeff += ((-1) ** (j + nu)
                          / (factorial(2 * j + 1) * factorial(2 * nu) * factorial(r))
                          * math.pi ** (2 * j + 1)
                          * (TWO_PI * m) ** (2 * nu)
                          * (6.0 * math.pi ** 2 / s) ** r)
        term = coeff * moment
        if abs(term) > best_term and ell > 1:
            break
        total += term
        best_term = min(best_term, abs(term))
        if abs(term) < tol * abs(total):
            break
    return 4.0 * math.pi / s * total


def partition_gen_prefactor(tau, tol=PRODUCT_TOL):
    """q^{1/24} / eta(tau) = 1 / (q)_infty, the partition generating function P(q)."""
    tau = complex(tau)
    q = cmath.exp(2j * math.pi * tau)
    return 1.0 / euler_product_value(q, tol)


def R_m_eval(sp: SParam, method: str = "direct",
             cfg: QuadratureConfig = DEFAULT_CONFIG, tol=PRODUCT_TOL) -> RmEstimate:
    """R_m(tau) on the contour point sp, by one of three routes.

    direct            quadrature of R(z;tau) e^{-2 pi i m z} over [-1/2, 1/2],
                      panel width keyed to the oscillation scale 1/(8 mhat)
    folded           3 (q^{1/24}/eta) int_{-1/6}^{1/6} g_m e^{-2 pi i m z} dz
    near_pole_formula s^{3/2}/(4 sqrt(2 pi)) sech^2(beta m / 2) e^{pi^2/(6s)},
                      requires |x| <= 1; error estimate follows the shape
                      beta^{5/2} m^{2/3} sech^2(beta m/2) e^{pi sqrt(n/6)}
    """
    tau = sp.tau
    m = sp.m
    if method == "direct":
        def f(z):
            return rank_R_direct(z, tau, tol) * np.exp(-2j * math.pi * m * z)
        panels = max(16, 8 * sp.mhat)
        value, err = adaptive_gl(f, -0.5, 0.5, cfg, initial_panels=panels,
                                 what=f"R_m direct (m={m}, n={sp.n})")
        return RmEstimate(value, "direct", err)
    if method == "folded":
        def f(z):
            return g_m_eval(z, m, tau, tol) * np.exp(-2j * math.pi * m * z)
        value, err = adaptive_gl(f, -1.0 / 6.0, 1.0 / 6.0, cfg, initial_panels=8,
                                 what=f"R_m folded (m={m}, n={sp.n})")
        pref = 3.0 * partition_gen_prefactor(tau, tol)
        return RmEstimate(pref * value, "folded", abs(pref) * err)
    if method == "near_pole_formula":
        if abs(sp.x) > 1.0:
            raise ValueError("near_pole_formula requires |x| <= 1")
        log_value = R_m_log_near_pole(sp)
        if log_value.real > 700.0:
            raise DomainError(
                "near-pole value exceeds binary64 range; use R_m_log_near_pole")
        value = cmath.exp(log_value)
        err = (sp.beta ** 2.5 * sp.mhat ** (2.0 / 3.0)
               / math.cosh(sp.beta * m / 2.0) ** 2
               * math.exp(math.pi * math.sqrt(sp.n / 6.0)))
        return RmEstimate(value, "near_pole_formula", err)
    raise ValueError(f"unknown R_m method: {method!r}")


def R_m_log_near_pole(sp: SParam) -> complex:
    """Complex logarithm of the near-pole formula
    s^{3/2}/(4 sqrt(2 pi)) sech^2(beta m / 2) e^{pi^2/(6 s)}, assembled in
    log-space so it stays finite when pi^2/(6 beta) overflows exp()."""
    s = sp.s
    return (1.5 * cmath.log(s) - math.log(4.0 * math.sqrt(TWO_PI))
            + 2.0 * math.log(1.0 / math.cosh(sp.beta * sp.m / 2.0))
            + math.pi ** 2 / (6.0 * s))


def far_field_bound(sp: SParam) -> float:
    """Shape of the far-from-the-pole bound on |R_m|:
    sqrt(n) exp(pi sqrt(n/6) - sqrt(6n)/(8 pi) mhat^{-2/3})."""
    n = sp.n
    return math.sqrt(n) * math.exp(
        math.pi * math.sqrt(n / 6.0)
        - math.sqrt(6.0 * n) / (8.0 * math.pi) * sp.mhat ** (-2.0 / 3.0))


def far_field_bound_check(sp: SParam, cfg: QuadratureConfig = DEFAULT_CONFIG):
    """(|R_m| by direct quadrature, far bound, their ratio); requires |x| >= 1."""
    if abs(sp.x) < 1.0:
        raise ValueError("far-field check requires 1 <= |x|")
    est = R_m_eval(sp, "direct", cfg)
    bound = far_field_bound(sp)
    return abs(est.value), bound, abs(est.value) / bound


def partition_P_bound_check(u: float, v: float, big_m: float, tol=PRODUCT_TOL):
    """Bound on |P(q)| away from q = 1: at tau = u + i v with
    big_m * v <= |u| <= 1/2, returns (|P(q)|, sqrt(v) exp((1/v)(pi/12
    - (1/(2 pi))(1 - 1/sqrt(1+M^2)))), ratio)."""
    if not (big_m * v <= abs(u) <= 0.5):
        raise ValueError("requires M*v <= |u| <= 1/2")
    tau = complex(u, v)
    p_val = abs(partition_gen_prefactor(tau, tol))
    bound = math.sqrt(v) * math.exp(
        (math.pi / 12.0 - (1.0 - 1.0 / math.sqrt(1.0 + big_m ** 2)) / TWO_PI) / v)
    return p_val, bound, p_val / bound
