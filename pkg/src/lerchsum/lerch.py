"""Evaluation of the Lerch transcendent Phi(z, s, v).

Two routes: the defining power series sum_j (v+j)**(-s) z**j for |z| < 1,
and the analytically continued integral

    Phi(z, s, v) = (1/Gamma(s)) int_0^inf t**(s-1) e^{-(v-1)t} / (e**t - z) dt

valid for Re(v) > 0 with |z| <= 1, z != 1, Re(s) > 0, or z = 1, Re(s) > 1.
``lerch_phi`` dispatches between them, shifting v upward via the exact
recurrence Phi(z,s,v) = z**m Phi(z,s,v+m) + sum_{j<m} (v+j)**(-s) z**j
whenever the integral route needs Re(v) >= 1.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from . import backend
from .complexcore import complex_pow, log_gamma
from .errors import ConvergenceError, DomainError, PoleError

SERIES_CAP = 10**6
NODE_CAP = 2 * 10**5
POLE_TOL = 1e-12
Z_ONE_TOL = 1e-12

# dispatcher thresholds
SERIES_RADIUS = 0.75
DISPATCH_SERIES_CAP = 10**5

_MIN_LEVEL = 4
_MAX_LEVEL = 10

METHOD_SERIES = "series"
METHOD_INTEGRAL = "integral"
METHOD_SHIFTED_INTEGRAL = "shifted_integral"


@dataclass(frozen=True)
class LerchParams:
    z: complex
    s: complex
    v: complex

    def __post_init__(self):
        object.__setattr__(self, "z", complex(self.z))
        object.__setattr__(self, "s", complex(self.s))
        object.__setattr__(self, "v", complex(self.v))
        for name in ("z", "s", "v"):
            c = getattr(self, name)
            if not (math.isfinite(c.real) and math.isfinite(c.imag)):
                raise DomainError(f"LerchParams.{name} is not finite")


@dataclass(frozen=True)
class EvalResult:
    value: complex
    abs_error_estimate: float
    work: int
    method: str


def near_nonpositive_integer(v: complex, tol: float = POLE_TOL) -> bool:
    """True when v is within tol of 0, -1, -2, ..."""
    v = complex(v)
    n = round(v.real)
    return n <= 0 and abs(v - n) <= tol


def _check_pole(v: complex) -> None:
    if near_nonpositive_integer(v):
        raise PoleError(f"v = {v} is within {POLE_TOL} of a non-positive integer")


def _floor_estimate(est: float, value: complex) -> float:
    # never claim better than a few ulps of the result
    return max(float(est), 4e-16 * abs(value))


def lerch_phi_series(p: LerchParams, tol: float, nmax: int = SERIES_CAP) -> EvalResult:
    """Direct summation of the defining series; requires |z| strictly < 1."""
    if abs(p.z) >= 1.0 - 1e-12:
        raise DomainError(f"series route needs |z| < 1 - 1e-12, got |z| = {abs(p.z)}")
    _check_pole(p.v)
    value, bound, nterms, status = backend.series_sum(p.z, p.s, p.v, float(tol), nmax)
    if status != 0:
        raise ConvergenceError(
            f"series did not meet tol={tol} within {nmax} terms "
            f"(tail bound {bound:.3e})",
            work=nterms,
        )
    return EvalResult(value, _floor_estimate(bound, value), nterms, METHOD_SERIES)


def shift_v(p: LerchParams, steps: int):
    """Exact upward shift of v.

    Returns (shifted_params, multiplier, correction) with
    Phi(p) = multiplier * Phi(shifted) + correction at the level of the
    defining series.
    """
    if steps < 0:
        raise DomainError("shift_v: steps must be >= 0")
    correction = 0.0 + 0.0j
    zp = 1.0 + 0.0j
    for j in range(steps):
        vj = p.v + j
        _check_pole(vj)
        correction += complex_pow(vj, -p.s) * zp
        zp *= p.z
    shifted = LerchParams(p.z, p.s, p.v + steps)
    return shifted, zp, correction


def _integral_domain_check(p: LerchParams) -> bool:
    """Validates the integral-representation domain; returns the z=1 flag."""
    if p.v.real <= 0.0:
        raise DomainError(f"integral route needs Re(v) > 0, got {p.v.real}")
    _check_pole(p.v)
    z_is_one = abs(p.z - 1.0) <= Z_ONE_TOL
    if z_is_one:
        if p.s.real <= 1.0:
            raise DomainError("integral route at z = 1 needs Re(s) > 1")
    else:
        if abs(p.z) > 1.0 + 1e-12:
            raise DomainError(f"integral route needs |z| <= 1, got |z| = {abs(p.z)}")
        if p.s.real <= 0.0:
            raise DomainError(f"integral route needs Re(s) > 0, got {p.s.real}")
    return z_is_one


def lerch_phi_integral(p: LerchParams, tol: float) -> EvalResult:
    """Double-exponential quadrature of the integral representation."""
    z_is_one = _integral_domain_check(p)
    z = 1.0 + 0.0j if z_is_one else p.z
    gamma_s = cmath.exp(log_gamma(p.s))

    work = 0
    prev = None
    value = 0.0 + 0.0j
    est = math.inf
    for level in range(_MIN_LEVEL - 1, _MAX_LEVEL + 1):
        raw, nodes = backend.quad_level(z, p.s, p.v, level)
        work += nodes
        value = raw / gamma_s
        if prev is not None:
            est = abs(value - prev)
            if level >= _MIN_LEVEL and est < tol:
                return EvalResult(value, _floor_estimate(est, value), work, METHOD_INTEGRAL)
        prev = value
        if work > NODE_CAP:
            break
    raise ConvergenceError(
        f"quadrature did not meet tol={tol} within {work} nodes (estimate {est:.3e})",
        work=work,
    )


def _shift_steps(v: complex) -> int:
    return max(0, math.ceil(1.0 - v.real))


def _shifted_integral(p: LerchParams, tol: float, method: str) -> EvalResult:
    steps = _shift_steps(p.v)
    shifted, mult, corr = shift_v(p, steps)
    scale = max(abs(mult), 1e-30)
    inner = lerch_phi_integral(shifted, tol / (2.0 * scale))
    value = mult * inner.value + corr
    est = abs(mult) * inner.abs_error_estimate
    return EvalResult(value, _floor_estimate(est, value), inner.work, method)


def lerch_phi(p: LerchParams, tol: float = 1e-10) -> EvalResult:
    """Evaluate Phi(z, s, v) with automatic strategy dispatch.

    |z| <= 0.75: series.  0.75 < |z| < 1: series when its tail bound is
    reachable within 1e5 terms, else v-shifted integral.  |z| = 1, z != 1,
    Re(s) > 0: v-shifted integral.  z = 1, Re(s) > 1: integral.
    """
    _check_pole(p.v)
    az = abs(p.z)
    if abs(p.z - 1.0) <= Z_ONE_TOL:
        steps = _shift_steps(p.v)
        if steps == 0:
            return lerch_phi_integral(p, tol)
        return _shifted_integral(p, tol, METHOD_SHIFTED_INTEGRAL)
    if az <= SERIES_RADIUS:
        return lerch_phi_series(p, tol)
    if az < 1.0 - 1e-12:
        try:
            return lerch_phi_series(p, tol, nmax=DISPATCH_SERIES_CAP)
        except ConvergenceError:
            return _shifted_integral(p, tol, METHOD_SHIFTED_INTEGRAL)
    if az <= 1.0 + 1e-12:
        return _shifted_integral(p, tol, METHOD_SHIFTED_INTEGRAL)
    raise DomainError(f"|z| = {az} is outside the |z| <= 1 evaluation domain")


def hurwitz_zeta(s: complex, v: complex, tol: float = 1e-10) -> EvalResult:
    """zeta(s, v) = Phi(1, s, v); requires Re(s) > 1."""
    s = complex(s)
    if s.real <= 1.0:
        raise DomainError(f"hurwitz_zeta needs Re(s) > 1, got {s.real}")
    return lerch_phi(LerchParams(1.0, s, v), tol)


def polylog(s: complex, z: complex, tol: float = 1e-10) -> EvalResult:
    """Li_s(z) = z * Phi(z, s, 1)."""
    z = complex(z)
    s = complex(s)
    if z == 0:
        return EvalResult(0.0 + 0.0j, 0.0, 0, METHOD_SERIES)
    az = abs(z)
    if az >= 1.0 - 1e-12:
        if az > 1.0 + 1e-12 or abs(z - 1.0) <= Z_ONE_TOL or s.real <= 1.0:
            raise DomainError(
                "polylog needs |z| < 1, or |z| = 1 with z != 1 and Re(s) > 1"
            )
    inner = lerch_phi(LerchParams(z, s, 1.0), tol / max(az, 1e-30))
    value = z * inner.value
    return EvalResult(
        value,
        _floor_estimate(az * inner.abs_error_estimate, value),
        inner.work,
        inner.method,
    )
