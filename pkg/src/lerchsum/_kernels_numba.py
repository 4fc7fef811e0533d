"""Numba @njit twins of the kernels in ``_kernels_numpy``.

Same signatures and numeric contracts; scalar loops instead of vectorized
chunks, which lets the series stop on the exact term where the tail bound
is met.
"""

from __future__ import annotations

import cmath
import math

import numba

_UA = 6.0
_UB = 4.0


@numba.njit(cache=True)
def series_sum(z: complex, s: complex, v: complex, tol: float, nmax: int):
    az = abs(z)
    geo = az / (1.0 - az) if az < 1.0 else math.inf
    s_abs = abs(s)

    total = 0.0 + 0.0j
    zp = 1.0 + 0.0j
    bound = math.inf
    j = 0
    while j < nmax:
        term = (v + j) ** (-s) * zp
        total += term
        zp *= z
        j += 1
        bound = abs(term) * geo * (1.0 + s_abs / j)
        if j >= 10 and bound < tol:
            return total, bound, j, 0
    return total, bound, j, 1


@numba.njit(cache=True)
def _integrand(t: float, z: complex, s: complex, v: complex) -> complex:
    num = cmath.exp((s - 1.0) * math.log(t) - v * t)
    denom = (1.0 - z) + z * (-math.expm1(-t))
    f = num / denom
    if math.isfinite(f.real) and math.isfinite(f.imag):
        return f
    return 0.0 + 0.0j


@numba.njit(cache=True)
def quad_level(z: complex, s: complex, v: complex, level: int):
    total = 0.0 + 0.0j
    half = 2**level

    # segment A: t = sigmoid(pi sinh u) in (0, 1)
    hA = _UA / 2.0**level
    for i in range(-half, half + 1):
        u = i * hA
        g = math.pi * math.sinh(u)
        if g >= 0.0:
            e = math.exp(-g)
            t = 1.0 / (1.0 + e)
            one_m_t = e / (1.0 + e)
        else:
            e = math.exp(g)
            t = e / (1.0 + e)
            one_m_t = 1.0 / (1.0 + e)
        if t <= 0.0 or one_m_t <= 0.0:
            continue
        w = math.pi * math.cosh(u) * t * one_m_t * hA
        total += _integrand(t, z, s, v) * w

    # segment B: t = 1 + exp(pi/2 sinh u) in (1, inf)
    hB = _UB / 2.0**level
    for i in range(-half, half + 1):
        u = i * hB
        x = math.exp(0.5 * math.pi * math.sinh(u))
        if x <= 0.0:
            continue
        w = 0.5 * math.pi * math.cosh(u) * x * hB
        total += _integrand(1.0 + x, z, s, v) * w

    return total, 2 * (2 * half + 1)
