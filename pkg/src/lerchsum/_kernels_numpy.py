"""Pure-numpy implementations of the hot numeric kernels.

Two kernels dominate runtime: the defining power series of the transcendent
and the double-exponential quadrature of its integral representation.  The
numba twins in ``_kernels_numba`` share these exact signatures and contracts;
``backend`` picks one pair at import time.

Contracts:

``series_sum(z, s, v, tol, nmax) -> (value, tail_bound, nterms, status)``
    Partial sum of sum_j (v+j)**(-s) * z**j, stopping once the geometric
    tail bound |term| * |z|/(1-|z|) * (1 + |s|/N) drops below ``tol``.
    status 0 = converged, 1 = hit ``nmax``.

``quad_level(z, s, v, level) -> (raw_integral, nodes)``
    Trapezoidal tanh-sinh / exp-sinh evaluation of
    int_0^inf t**(s-1) exp(-v t) / (1 - z exp(-t)) dt at refinement
    ``level`` (node spacing halves per level).  Unnormalized: the caller
    divides by Gamma(s).
"""

from __future__ import annotations

import numpy as np

_CHUNK = 128

# u-ranges of the two quadrature segments.  Segment A maps u to
# t = sigmoid(pi sinh u) on (0, 1): +-6 pushes nodes to within ~1e-275 of
# the endpoints, deep enough for t**(s-1) singularities with small Re(s).
# Segment B maps u to t = 1 + exp(pi/2 sinh u) on (1, inf).
_UA = 6.0
_UB = 4.0


def series_sum(z: complex, s: complex, v: complex, tol: float, nmax: int):
    z = complex(z)
    s = complex(s)
    v = complex(v)
    az = abs(z)
    geo = az / (1.0 - az) if az < 1.0 else np.inf
    s_abs = abs(s)

    total = 0.0 + 0.0j
    zp = 1.0 + 0.0j  # z**j0 at the head of the current chunk
    j0 = 0
    bound = np.inf
    while j0 < nmax:
        m = min(_CHUNK, nmax - j0)
        j = np.arange(m)
        with np.errstate(under="ignore"):
            terms = (v + (j0 + j)) ** (-s) * (zp * z**j)
        total += terms.sum()
        zp *= z**m
        j0 += m
        bound = abs(terms[-1]) * geo * (1.0 + s_abs / j0)
        if j0 >= 10 and bound < tol:
            return complex(total), float(bound), j0, 0
    return complex(total), float(bound), j0, 1


def _integrand(t: np.ndarray, z: complex, s: complex, v: complex) -> np.ndarray:
    # t**(s-1) e^{-vt} / (e^t - z), written as exp((s-1) log t - v t) over
    # (1-z) + z(1-e^{-t}) so neither factor overflows for large t or z -> 1
    with np.errstate(over="ignore", under="ignore", invalid="ignore"):
        num = np.exp((s - 1.0) * np.log(t) - v * t)
        denom = (1.0 - z) + z * (-np.expm1(-t))
        f = num / denom
    return np.where(np.isfinite(f), f, 0.0)


def quad_level(z: complex, s: complex, v: complex, level: int):
    z = complex(z)
    s = complex(s)
    v = complex(v)

    # segment A: t in (0, 1)
    hA = _UA / 2.0**level
    u = np.arange(-(2**level), 2**level + 1) * hA
    g = np.pi * np.sinh(u)
    with np.errstate(over="ignore", under="ignore"):
        t = 1.0 / (1.0 + np.exp(-g))
        one_m_t = 1.0 / (1.0 + np.exp(g))
        w = np.pi * np.cosh(u) * t * one_m_t * hA
    mask = (t > 0.0) & (one_m_t > 0.0)
    total = np.sum(_integrand(t[mask], z, s, v) * w[mask])
    nodes = len(u)

    # segment B: t in (1, inf)
    hB = _UB / 2.0**level
    u = np.arange(-(2**level), 2**level + 1) * hB
    with np.errstate(over="ignore", under="ignore"):
        x = np.exp(0.5 * np.pi * np.sinh(u))
        w = 0.5 * np.pi * np.cosh(u) * x * hB
    mask = x > 0.0
    total += np.sum(_integrand(1.0 + x[mask], z, s, v) * w[mask])
    nodes += len(u)

    return complex(total), nodes
