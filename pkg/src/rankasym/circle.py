"""Wright's circle method for partition ranks: reconstruct N(m,n) as a
contour integral of R_m, split into a major arc (|x| <= 1, carrying the
main term) and a minor arc (1 <= |x| <= pi mhat^{1/3}/beta, exponentially
smaller), and run the convergence study behind the sech^2 main-term formula

    N(m,n) ~ (beta/4) sech^2(beta m / 2) p(n),   beta = pi / sqrt(6n).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from . import exact
from .asym import R_m_eval, SParam
from .errors import PrecisionError
from .quadrature import DEFAULT_CONFIG, QuadratureConfig, adaptive_gl

# largest exponent appearing in R_m(tau) e^{n s} on the contour is about
# 2 pi sqrt(n/6); keep it comfortably inside exp()'s binary64 range
MAX_CONTOUR_EXPONENT = 600.0

# rounding closer than this to a half-integer is flagged, not failed
HALF_INTEGER_GUARD = 0.05


@dataclass
class ContourResult:
    m: int
    n: int
    major: complex
    minor: complex
    total: float
    rounded: int
    exact: int | None
    rel_err: float | None
    flags: list[str] = field(default_factory=list)


@dataclass(frozen=True)
class ConvergenceRow:
    m: int
    n: int
    exact: int
    main_term: float
    ratio: float
    error_scale: float


def main_term(m: int, n: int) -> float:
    """(beta/4) sech^2(beta m / 2) p(n), with p(n) exact.

    Warns (does not refuse) when |m| is outside the theorem's range
    |m| <= sqrt(n) log(n) / (pi sqrt(6)).
    """
    if n < 1:
        raise ValueError("main_term requires n >= 1")
    beta = math.pi / math.sqrt(6.0 * n)
    if abs(m) > math.sqrt(n) * math.log(n) / (math.pi * math.sqrt(6.0)):
        warnings.warn(
            f"m={m} outside the asymptotic range for n={n}; "
            "the main term is not expected to be accurate", stacklevel=2)
    return beta / 4.0 / math.cosh(beta * m / 2.0) ** 2 * exact.partition_count(n)


def contour_exponent(n: int) -> float:
    """Peak log-magnitude of R_m(tau) e^{ns} on the contour, ~2 pi sqrt(n/6)."""
    beta = math.pi / math.sqrt(6.0 * n)
    return n * beta + math.pi ** 2 / (6.0 * beta)


def check_feasible(n: int) -> None:
    if contour_exponent(n) > MAX_CONTOUR_EXPONENT:
        raise PrecisionError(
            f"contour for n={n} needs exp({contour_exponent(n):.0f}) which exceeds "
            f"the binary64 budget exp({MAX_CONTOUR_EXPONENT:.0f}); "
            "a higher-precision backend would be required")


def _arc_integral(m, n, x_lo, x_hi, method, cfg, symmetric=True):
    """(beta / (2 pi mhat^{1/3})) int over the arc of R_m(is/2pi) e^{ns} dx.

    With symmetric=True only x >= 0 is evaluated and the conjugate half is
    folded in (the integrand at -x is the conjugate of the one at x), which
    makes the result exactly real.
    """
    beta = math.pi / math.sqrt(6.0 * n)
    mhat = max(m, 1)

    def integrand(xs):
        out = np.empty(len(xs), dtype=complex)
        for i, x in enumerate(xs):
            sp = SParam(n, m, float(x))
            est = R_m_eval(sp, method, cfg)
            out[i] = est.value * np.exp(n * sp.s)
        return out

    prefactor = beta / (2.0 * math.pi * mhat ** (1.0 / 3.0))
    if symmetric:
        value, err = adaptive_gl(integrand, x_lo, x_hi, cfg, initial_panels=4,
                                 what=f"arc [{x_lo},{x_hi}] (m={m}, n={n})")
        return prefactor * (value + value.conjugate()), 2.0 * prefactor * err
    value_pos, err_p = adaptive_gl(integrand, x_lo, x_hi, cfg, initial_panels=4,
                                   what=f"arc [{x_lo},{x_hi}] (m={m}, n={n})")
    value_neg, err_n = adaptive_gl(integrand, -x_hi, -x_lo, cfg, initial_panels=4,
                                   what=f"arc [-{x_hi},-{x_lo}] (m={m}, n={n})")
    return prefactor * (value_pos + value_neg), prefactor * (err_p + err_n)


def contour_rank_count(m: int, n: int, cfg: QuadratureConfig | None = None,
                       exact_value: int | None = None, boundary: float = 1.0,
                       symmetric: bool = True,
                       major_method: str = "folded",
                       minor_method: str = "direct") -> ContourResult:
    """N(m,n) via Wright's contour.

    The major arc |x| <= boundary uses the folded representation of R_m
    (the integrand is concentrated there and |z| <= 1/6 keeps it stable);
    the minor arc boundary <= |x| <= pi mhat^{1/3}/beta uses direct
    quadrature.
    """
    m = abs(m)
    if n < 1:
        raise ValueError("n must be >= 1")
    check_feasible(n)
    if cfg is None:
        # scale-aware default: the answer is an integer of size ~ main term
        # (the probe is only a scale estimate, so the range warning is muted)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            scale = max(main_term(m, n), 1.0)
        cfg = QuadratureConfig(abs_tol=max(1e-9, 1e-8 * scale), rel_tol=1e-9,
                               max_refinements=12)
    sp0 = SParam(n, m, 0.0)
    x_max = sp0.x_max
    major, major_err = _arc_integral(m, n, 0.0, boundary, major_method, cfg,
                                     symmetric)
    minor_cfg = QuadratureConfig(
        abs_tol=max(cfg.abs_tol, 1e-6 * abs(major)), rel_tol=1e-7,
        max_refinements=cfg.max_refinements, tail_cutoff=cfg.tail_cutoff,
        nodes=cfg.nodes)
    minor, minor_err = _arc_integral(m, n, boundary, x_max, minor_method,
                                     minor_cfg, symmetric)
    combined = major + minor
    total = combined.real
    rounded = round(total)
    flags = []
    if abs(total - rounded) > 0.5 - HALF_INTEGER_GUARD:
        flags.append("low_confidence_rounding")
    if abs(combined.imag) > max(major_err + minor_err, 1e-6 * abs(total)):
        flags.append("imaginary_part_large")
    if exact_value is None and n <= exact.SERIES_CAP:
        exact_value = exact.rank_counts_series(m, n)[n]
    rel_err = None
    if exact_value:
        rel_err = abs(total - exact_value) / exact_value
    return ContourResult(m, n, major, minor, total, rounded, exact_value,
                         rel_err, flags)


def convergence_study(ms, ns, cap: int = exact.SERIES_CAP) -> list[ConvergenceRow]:
    """Exact-vs-main-term rows for every (m, n) pair, sorted by (m, n).

    ratio = N(m,n) / main_term(m,n); error_scale = beta^{1/2} mhat^{1/3} is
    the theorem's error shape the deviation |ratio - 1| is measured against.
    """
    rows = []
    n_top = max(ns)
    if n_top > cap:
        raise exact.CapExceededError(
            f"convergence study needs exact N(m,n) up to n={n_top} > cap {cap}")
    for m in sorted(set(abs(m) for m in ms)):
        col = exact.rank_counts_series(m, n_top)
        for n in sorted(ns):
            beta = math.pi / math.sqrt(6.0 * n)
            mt = main_term(m, n)
            rows.append(ConvergenceRow(
                m=m, n=n, exact=col[n], main_term=mt, ratio=col[n] / mt,
                error_scale=math.sqrt(beta) * max(m, 1) ** (1.0 / 3.0)))
    rows.sort(key=lambda r: (r.m, r.n))
    return rows
