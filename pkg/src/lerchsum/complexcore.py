"""Principal-branch complex elementary functions and the complex log-gamma.

Every function here works on plain Python ``complex`` scalars and keeps the
principal branch convention: Im(Log z) in (-pi, pi].  All downstream branch
decisions in the identity checks inherit this single convention.
"""

from __future__ import annotations

import cmath
import math

from .errors import DomainError, PoleError

# Integer-exponent fast path: |w - round(w)| below this and |round(w)| <= 64
# goes through repeated multiplication, which keeps phases exact on the cut.
_INT_EXP_TOL = 1e-12
_INT_EXP_MAX = 64

_LOG_SQRT_2PI = 0.9189385332046727  # log(sqrt(2*pi))

# Lanczos g = 607/128, 15 terms (Godfrey's coefficient set); relative error
# of exp(log_gamma) stays below ~1e-14 on the right half plane.
_LANCZOS_G = 607.0 / 128.0
_LANCZOS_COEFFS = (
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    3.3994649984811888699e-5,
    4.6523628927048575665e-5,
    -9.8374475304879564677e-5,
    1.5808870322491248884e-4,
    -2.1026444172410488319e-4,
    2.1743961811521264320e-4,
    -1.6431810653676389022e-4,
    8.4418223983852743293e-5,
    -2.6190838401581408670e-5,
    3.6899182659531622704e-6,
)


def _ensure_finite(z: complex, where: str) -> complex:
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"{where}: non-finite result for the given arguments")
    return z


def principal_log(z: complex) -> complex:
    """Log z on the principal branch, Im in (-pi, pi]."""
    z = complex(z)
    if z == 0:
        raise DomainError("principal_log: argument is zero")
    return _ensure_finite(cmath.log(z), "principal_log")


def _int_pow(z: complex, n: int) -> complex:
    """z**n by binary powering; exact phase behaviour for integer n."""
    if n < 0:
        return 1.0 / _int_pow(z, -n)
    result = complex(1.0)
    base = z
    while n:
        if n & 1:
            result *= base
        base *= base
        n >>= 1
    return result


def complex_pow(z: complex, w: complex) -> complex:
    """z**w as exp(w * Log z) on the principal branch.

    Exact integer exponents with |w| <= 64 take a repeated-multiplication
    path so that e.g. (-1)**2 carries no spurious phase from the cut.
    """
    z = complex(z)
    w = complex(w)
    if z == 0:
        if w.real > 0:
            return complex(0.0)
        raise DomainError("complex_pow: 0 raised to exponent with Re <= 0")
    if abs(w.imag) < _INT_EXP_TOL:
        n = round(w.real)
        if abs(w.real - n) < _INT_EXP_TOL and abs(n) <= _INT_EXP_MAX:
            return _ensure_finite(_int_pow(z, int(n)), "complex_pow")
    return _ensure_finite(cmath.exp(w * cmath.log(z)), "complex_pow")


def _lanczos_log_gamma_right(s: complex) -> complex:
    # valid for Re(s) >= 0.5
    acc = _LANCZOS_COEFFS[0]
    for k in range(1, len(_LANCZOS_COEFFS)):
        acc += _LANCZOS_COEFFS[k] / (s - 1.0 + k)
    base = s + _LANCZOS_G - 0.5
    return _LOG_SQRT_2PI + cmath.log(acc) + (s - 0.5) * cmath.log(base) - base


def log_gamma(s: complex) -> complex:
    """log Gamma(s), Lanczos approximation with reflection for Re(s) < 0.5.

    The result may differ from the analytically continued log-gamma by a
    multiple of 2*pi*i; exp(log_gamma(s)) is Gamma(s) to ~1e-13 relative.
    """
    s = complex(s)
    if abs(s.imag) < 1e-12:
        n = round(s.real)
        if n <= 0 and abs(s.real - n) < 1e-12:
            raise PoleError(f"log_gamma: pole at non-positive integer {n}")
    if s.real >= 0.5:
        return _ensure_finite(_lanczos_log_gamma_right(s), "log_gamma")
    # reflection: Gamma(s) Gamma(1-s) = pi / sin(pi s)
    val = (
        math.log(math.pi)
        - cmath.log(cmath.sin(math.pi * s))
        - _lanczos_log_gamma_right(1.0 - s)
    )
    return _ensure_finite(val, "log_gamma")


def gamma(s: complex) -> complex:
    """Gamma(s) = exp(log_gamma(s))."""
    return cmath.exp(log_gamma(s))
