"""Arithmetic side conditions for the finite-sum identity over primes.

The main sum runs over p = 0..n-1 with n prime and a twist exponent q; the
roots-of-unity mechanism degenerates whenever q is divisible by n, so the
strict validator enforces q mod n != 0 (stronger than plain n != q).  n = 2
is prime but the tangent-sum corollary demonstrably fails there; strict mode
restricts to odd primes and marks n = 2 as known-suspect.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .lerch import near_nonpositive_integer

STRICT = "strict"
PERMISSIVE = "permissive"

# witnesses making Miller-Rabin deterministic for all n < 3.3e24 (> 2**63)
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for 64-bit inputs."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class TheoremParams:
    k: complex
    a: complex
    m: complex
    n: int
    q: int

    def __post_init__(self):
        object.__setattr__(self, "k", complex(self.k))
        object.__setattr__(self, "a", complex(self.a))
        object.__setattr__(self, "m", complex(self.m))


@dataclass
class ValidationReport:
    valid: bool
    violations: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)
    suspect: bool = False


def _log_power_singular(k: complex, log_a: complex) -> bool:
    # log(a)**k needs a nonzero base unless k is a nonnegative integer
    if abs(log_a) > 1e-14:
        return False
    kr = round(k.real)
    is_int = abs(k.imag) < 1e-12 and abs(k.real - kr) < 1e-12
    return not (is_int and kr >= 0)


def validate_theorem_params(p: TheoremParams, mode: str = STRICT) -> ValidationReport:
    """Check every side condition; returns a report instead of raising.

    Permissive mode downgrades the Im(m) > 0 convergence condition and the
    q mod n condition to warnings, for exploratory region mapping.
    """
    if mode not in (STRICT, PERMISSIVE):
        raise ValueError(f"unknown validation mode {mode!r}")
    rep = ValidationReport(valid=True)
    strict = mode == STRICT

    def violation(msg):
        rep.violations.append(msg)
        rep.valid = False

    def soften(msg):
        if strict:
            violation(msg)
        else:
            rep.warnings.append(msg)

    if p.n < 1:
        violation(f"n = {p.n} is not a positive integer")
    elif not is_prime(p.n):
        violation(f"n = {p.n} is not prime")
    elif p.n == 2:
        rep.suspect = True
        soften("n = 2 is a known-suspect case (tangent-sum corollary fails); odd primes only")

    if p.q < 1:
        violation(f"q = {p.q} is not a positive integer")
    elif p.n >= 1 and p.q % p.n == 0:
        soften(f"q = {p.q} is divisible by n = {p.n}; the roots-of-unity sum degenerates")

    if p.m.imag <= 0.0:
        soften(f"Im(m) = {p.m.imag} is not > 0; the defining sums need Im(m) > 0")

    if p.a == 0:
        violation("a = 0: log(a) undefined")
    else:
        log_a = cmath.log(p.a)
        if _log_power_singular(p.k, log_a):
            violation("log(a) = 0 with non-integer or negative k: log(a)**k singular")
        for label, v in (
            ("1 - (i/2) log(a)", 1.0 - 0.5j * log_a),
            ("1 - i log(a)/(2n)", 1.0 - 1j * log_a / (2.0 * max(p.n, 1))),
        ):
            if near_nonpositive_integer(v):
                violation(f"{label} = {v} lies on the pole set of the transcendent")

    if not all(
        math.isfinite(x)
        for x in (p.k.real, p.k.imag, p.a.real, p.a.imag, p.m.real, p.m.imag)
    ):
        violation("k, a, m must all be finite")

    return rep
