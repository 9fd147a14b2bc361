"""Complex special functions: Dedekind eta, Jacobi theta, Appell-Lerch sums,
the Mordell integral, and Euler polynomial machinery.

Branch conventions: sqrt is everywhere the principal branch, and fractional
powers of q are defined through the exponential, q^a := exp(2*pi*i*tau*a),
never as a root of q, which removes branch ambiguity.  All functions accept
numpy arrays for the elliptic argument and broadcast over it.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

import numpy as np

from .errors import DomainError, SingularArgumentError
from .quadrature import (DEFAULT_CONFIG, QuadratureConfig, adaptive_gl,
                         gaussian_tail_halfwidth)

TWO_PI = 2.0 * math.pi
PRODUCT_TOL = 1e-16

# Appell-Lerch / theta arguments closer than this to the period lattice are
# rejected: denominators blow up and residuals become meaningless.
LATTICE_MARGIN = 1e-6


def _require_upper_half_plane(tau):
    if tau.imag <= 0:
        raise DomainError(f"tau={tau} must satisfy Im(tau) > 0")


def q_from_tau(tau):
    _require_upper_half_plane(tau)
    return cmath.exp(2j * math.pi * tau)


def _product_length(abs_q, tol, extra_modulus=1.0):
    """Smallest N with extra_modulus * |q|^N below tol * (1 - |q|)."""
    target = tol * (1.0 - abs_q) / max(extra_modulus, 1.0)
    n = int(math.ceil(math.log(target) / math.log(abs_q))) + 1
    return max(n, 4)


def euler_product_value(q, tol=PRODUCT_TOL):
    """(q)_infty = prod_{n>=1} (1 - q^n), truncated once |q|^n < tol*(1-|q|)."""
    absq = abs(q)
    if absq >= 1:
        raise DomainError("euler product requires |q| < 1")
    n = np.arange(1, _product_length(absq, tol) + 1)
    return complex(np.prod(1.0 - q ** n))


def dedekind_eta(tau, tol=PRODUCT_TOL):
    """eta(tau) = q^{1/24} (q)_infty with q^{1/24} = exp(2*pi*i*tau/24)."""
    tau = complex(tau)
    _require_upper_half_plane(tau)
    q = cmath.exp(2j * math.pi * tau)
    return cmath.exp(2j * math.pi * tau / 24.0) * euler_product_value(q, tol)


def jacobi_theta(z, tau, tol=PRODUCT_TOL):
    """Jacobi theta via the triple product
    i q^{1/8} zeta^{1/2} prod (1-q^n)(1-zeta q^n)(1-zeta^{-1} q^{n-1}),
    with zeta^{1/2} := exp(pi*i*z).  Broadcasts over z."""
    tau = complex(tau)
    _require_upper_half_plane(tau)
    z_arr = np.atleast_1d(np.asarray(z, dtype=complex))
    q = cmath.exp(2j * math.pi * tau)
    zeta = np.exp(2j * math.pi * z_arr)
    mods = np.abs(zeta)
    extra = float(np.max(np.maximum(mods, 1.0 / mods)))
    nmax = _product_length(abs(q), tol, extra_modulus=extra)
    n = np.arange(1, nmax + 1)
    qn = q ** n
    factors = ((1.0 - qn)[None, :]
               * (1.0 - zeta[:, None] * qn[None, :])
               * (1.0 - qn[None, :] / (q * zeta[:, None])))
    prefactor = 1j * cmath.exp(1j * math.pi * tau / 4.0) * np.exp(1j * math.pi * z_arr)
    out = prefactor * np.prod(factors, axis=1)
    return out if np.ndim(z) else complex(out[0])


def lattice_distance(u, tau):
    """Distance from u to the nearest point of Z + Z*tau, together with the
    (integer) tau-coordinate of that nearest point."""
    tau = complex(tau)
    _require_upper_half_plane(tau)
    u = complex(u)
    b = u.imag / tau.imag
    nb = round(b)
    residue = u - nb * tau
    na = round(residue.real)
    return abs(residue - na), nb


def appell_A1(u, v, tau, tol=PRODUCT_TOL, margin=LATTICE_MARGIN):
    """Level-1 Appell-Lerch sum
    A_1(u,v;tau) = e^{pi i u} sum_n (-1)^n q^{n(n+1)/2} e^{2 pi i n v}
                   / (1 - e^{2 pi i u} q^n),
    summed symmetrically over n = -K..K with K chosen so |q|^{K(K+1)/2} < tol
    (the series has Gaussian decay in both directions).  Broadcasts over u.

    Terms whose denominator exponent has positive real part are rewritten as
    -e^{a-b} / (1 - e^{-b}) so nothing large is ever exponentiated.
    """
    tau = complex(tau)
    _require_upper_half_plane(tau)
    v = complex(v)
    u_arr = np.atleast_1d(np.asarray(u, dtype=complex))
    for uu in u_arr.ravel():
        dist, nb = lattice_distance(uu, tau)
        if dist < margin:
            raise SingularArgumentError(
                f"singular argument: u={uu} within {dist:.2e} of the lattice "
                f"(offending denominator index n={-nb})", offending_index=-nb)
    absq = math.exp(-TWO_PI * tau.imag)
    k = 1
    while absq ** (k * (k + 1) / 2.0) >= tol:
        k += 1
    n = np.arange(-k, k + 1)
    # numerator exponent: (-1)^n q^{n(n+1)/2} e^{2 pi i n v}
    a = (1j * math.pi * tau * (n * n + n) + 2j * math.pi * n * v
         + 1j * math.pi * n)
    b = 2j * math.pi * (u_arr[..., None] + n * tau)
    flip = b.real > 0
    eb = np.exp(np.where(flip, -b, b))
    numer = np.exp(a + np.where(flip, -b, 0.0))
    frac = np.where(flip, -1.0, 1.0) / (1.0 - eb)
    out = np.exp(1j * math.pi * u_arr) * np.sum(numer * frac, axis=-1)
    return out if np.ndim(u) else complex(out[()] if out.shape == () else out[0])


def appell_mu(u, v, tau, tol=PRODUCT_TOL, margin=LATTICE_MARGIN):
    """Normalized Appell-Lerch sum mu(u,v;tau) = A_1(u,v;tau) / theta(v;tau)."""
    dist, nb = lattice_distance(v, tau)
    if dist < margin:
        raise SingularArgumentError(
            f"singular argument: v={v} within {dist:.2e} of the lattice",
            offending_index=-nb)
    return appell_A1(u, v, tau, tol, margin) / jacobi_theta(v, tau, tol)


def mordell_h(z, tau, cfg: QuadratureConfig = DEFAULT_CONFIG):
    """Mordell integral h(z;tau) = int_R e^{pi i tau w^2 - 2 pi z w} / cosh(pi w) dw.

    The integrand is smooth on the real line (the poles of 1/cosh lie off
    axis) and decays like a Gaussian since Im(tau) > 0; it is truncated at
    |w| <= W with W from the tail_cutoff formula, then integrated adaptively.
    Returns (value, error_estimate).
    """
    tau = complex(tau)
    _require_upper_half_plane(tau)
    z = complex(z)
    w_max = gaussian_tail_halfwidth(tau.imag, z.real, cfg.tail_cutoff)

    def integrand(w):
        return np.exp(1j * math.pi * tau * w * w - TWO_PI * z * w) / np.cosh(math.pi * w)

    return adaptive_gl(integrand, -w_max, w_max, cfg, initial_panels=8,
                       what=f"mordell_h(z={z}, tau={tau})")


@lru_cache(maxsize=None)
def euler_number_at_zero(k: int) -> Fraction:
    """E_k(0), from the generating function 2 e^{xz} / (e^z + 1):
    E_0(0) = 1 and E_k(0) = -(1/2) sum_{j<k} C(k,j) E_j(0)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return Fraction(1)
    return Fraction(-1, 2) * sum(
        comb(k, j) * euler_number_at_zero(j) for j in range(k))


def euler_odd_at_zero(j: int) -> Fraction:
    """E_{2j+1}(0)."""
    if j < 0:
        raise ValueError("j must be >= 0")
    return euler_number_at_zero(2 * j + 1)


def euler_integral(j: int, cfg: QuadratureConfig = DEFAULT_CONFIG):
    """int_0^infty z^{2j+1} / sinh(pi z) dz, by quadrature.

    Returns (quadrature value, closed form (-1)^{j+1} E_{2j+1}(0) / 2).
    The integrand extends continuously to 0 (limit 1/pi for j = 0, else 0).
    """
    if j < 0:
        raise ValueError("j must be >= 0")
    power = 2 * j + 1
    # truncation point: z^power e^{-pi z} < tail_cutoff
    z_max = 10.0
    for _ in range(64):
        z_max = (math.log(1.0 / cfg.tail_cutoff) + power * math.log(z_max)) / math.pi
    value, _err = adaptive_gl(
        lambda t: t ** power / np.sinh(math.pi * t), 0.0, z_max, cfg,
        initial_panels=8, what=f"euler_integral(j={j})")
    closed = float((-1) ** (j + 1) * euler_odd_at_zero(j)) / 2.0
    return value.real, closed


def sech_expansion_residual(t: float, terms: int) -> float:
    """|-(1/2) sech^2(t/2) - sum_{r<terms} E_{2r+1}(0) t^{2r} / (2r)!|.

    Valid for |t| < pi (radius of convergence of the expansion).
    """
    partial = sum(
        float(euler_odd_at_zero(r)) * t ** (2 * r) / factorial(2 * r)
        for r in range(terms))
    return abs(-0.5 / math.cosh(t / 2.0) ** 2 - partial)


# ---------------------------------------------------------------------------
# Transformation-law residuals.  Each function evaluates both sides of one
# identity independently and returns |LHS - RHS|, so a correct implementation
# drives every residual to roundoff level and any sign or branch mistake
# shows up as an O(1) residual.
# ---------------------------------------------------------------------------

def _sqrt_minus_i_tau(tau):
    """Principal-branch sqrt(-i tau); real and positive for tau = it, t > 0."""
    return cmath.sqrt(-1j * complex(tau))


def eta_inversion_residual(tau, tol=PRODUCT_TOL):
    """|eta(-1/tau) - sqrt(-i tau) eta(tau)|."""
    tau = complex(tau)
    return abs(dedekind_eta(-1.0 / tau, tol)
               - _sqrt_minus_i_tau(tau) * dedekind_eta(tau, tol))


def theta_inversion_residual(z, tau, tol=PRODUCT_TOL):
    """|theta(z/tau; -1/tau) + i sqrt(-i tau) e^{pi i z^2 / tau} theta(z; tau)|."""
    tau = complex(tau)
    z = complex(z)
    lhs = jacobi_theta(z / tau, -1.0 / tau, tol)
    rhs = -1j * _sqrt_minus_i_tau(tau) * cmath.exp(
        1j * math.pi * z * z / tau) * jacobi_theta(z, tau, tol)
    return abs(lhs - rhs)


def theta_quasiperiod_residual(z, tau, tol=PRODUCT_TOL):
    """|theta(3z + 1; 3 tau) + theta(3z; 3 tau)|."""
    tau = complex(tau)
    z = complex(z)
    return abs(jacobi_theta(3.0 * z + 1.0, 3.0 * tau, tol)
               + jacobi_theta(3.0 * z, 3.0 * tau, tol))


def appell_quasiperiod_residual(z, tau, sign=1, tol=PRODUCT_TOL,
                                margin=LATTICE_MARGIN):
    """|A_1(3z + 1, sign*tau; 3 tau) + A_1(3z, sign*tau; 3 tau)|."""
    tau = complex(tau)
    z = complex(z)
    v = sign * tau
    return abs(appell_A1(3.0 * z + 1.0, v, 3.0 * tau, tol, margin)
               + appell_A1(3.0 * z, v, 3.0 * tau, tol, margin))


def theta_eta_special_value_residual(tau, tol=PRODUCT_TOL):
    """max over both signs of |theta(-+tau; 3 tau) - +-i q^{-1/6} eta(tau)|."""
    tau = complex(tau)
    ref = 1j * cmath.exp(-2j * math.pi * tau / 6.0) * dedekind_eta(tau, tol)
    return max(abs(jacobi_theta(-tau, 3.0 * tau, tol) - ref),
               abs(jacobi_theta(tau, 3.0 * tau, tol) + ref))


def mordell_evenness_residual(z, tau, cfg: QuadratureConfig = DEFAULT_CONFIG):
    """|h(-z; tau) - h(z; tau)|."""
    lhs, _ = mordell_h(-complex(z), tau, cfg)
    rhs, _ = mordell_h(complex(z), tau, cfg)
    return abs(lhs - rhs)


def mordell_shift_residual(z, tau, cfg: QuadratureConfig = DEFAULT_CONFIG):
    """|h(z) + e^{-2 pi i z - pi i tau} h(z + tau) - 2 e^{-pi i z - pi i tau / 4}|.

    The constant is 2 zeta^{-1/2} q^{-1/8} with zeta^{1/2} = e^{pi i z} and
    q^{1/8} = e^{pi i tau / 4}.
    """
    tau = complex(tau)
    z = complex(z)
    h0, _ = mordell_h(z, tau, cfg)
    h1, _ = mordell_h(z + tau, tau, cfg)
    return abs(h0 + cmath.exp(-2j * math.pi * z - 1j * math.pi * tau) * h1
               - 2.0 * cmath.exp(-1j * math.pi * z - 1j * math.pi * tau / 4.0))


def mordell_inversion_residual(z, tau, cfg: QuadratureConfig = DEFAULT_CONFIG):
    """|h(z/tau; -1/tau) - sqrt(-i tau) e^{-pi i z^2 / tau} h(z; tau)|."""
    tau = complex(tau)
    z = complex(z)
    lhs, _ = mordell_h(z / tau, -1.0 / tau, cfg)
    h, _ = mordell_h(z, tau, cfg)
    rhs = _sqrt_minus_i_tau(tau) * cmath.exp(-1j * math.pi * z * z / tau) * h
    return abs(lhs - rhs)


def mu_symmetry_residual(u, v, tau, tol=PRODUCT_TOL, margin=LATTICE_MARGIN):
    """|mu(-u, -v; tau) - mu(u, v; tau)|."""
    return abs(appell_mu(-complex(u), -complex(v), tau, tol, margin)
               - appell_mu(u, v, tau, tol, margin))


def mu_inversion_residual(u, v, tau, cfg: QuadratureConfig = DEFAULT_CONFIG,
                          tol=PRODUCT_TOL, margin=LATTICE_MARGIN):
    """Modular inversion of the Appell-Lerch sum, with the Mordell integral as
    the correction term:

    |-(1/tau) e^{pi i (u^2 - 2 u v)/tau} A_1(u/tau, v/tau; -1/tau)
      + A_1(u, v; tau) - (1/(2i)) h(u - v; tau) theta(v; tau)|,

    all three terms evaluated independently.
    """
    tau = complex(tau)
    u = complex(u)
    v = complex(v)
    transformed = (-(1.0 / tau) * cmath.exp(1j * math.pi * (u * u - 2.0 * u * v) / tau)
                   * appell_A1(u / tau, v / tau, -1.0 / tau, tol, margin))
    direct = appell_A1(u, v, tau, tol, margin)
    h, _ = mordell_h(u - v, tau, cfg)
    correction = h * jacobi_theta(v, tau, tol) / 2j
    return abs(transformed + direct - correction)
