import cmath
import math

import numpy as np
import pytest

from lerchsum.complexcore import complex_pow, gamma, log_gamma, principal_log
from lerchsum.errors import DomainError, PoleError


def test_principal_log_unity():
    assert principal_log(1.0) == 0.0


def test_principal_log_branch_cut_convention():
    val = principal_log(-1.0)
    assert val == pytest.approx(1j * math.pi)
    assert val.imag > 0


def test_principal_log_roundtrip_example():
    z = cmath.exp(1 + 0.5j)
    assert principal_log(z) == pytest.approx(1 + 0.5j, rel=1e-14)


def test_principal_log_zero_rejected():
    with pytest.raises(DomainError):
        principal_log(0.0)


def test_exp_log_roundtrip_bulk():
    rng = np.random.default_rng(7)
    count = 0
    while count < 10**4:
        mag = 10.0 ** rng.uniform(-6, 6)
        phase = rng.uniform(-math.pi, math.pi)
        if abs(abs(phase) - math.pi) < 1e-9:  # wedge around the cut
            continue
        z = mag * cmath.exp(1j * phase)
        back = cmath.exp(principal_log(z))
        assert abs(back - z) <= 1e-14 * abs(z)
        count += 1


def test_complex_pow_examples():
    assert complex_pow(4.0, 0.5) == pytest.approx(2.0)
    assert complex_pow(-1.0, 0.5) == pytest.approx(1j)
    assert complex_pow(1j, 1j) == pytest.approx(0.2078795763507619, rel=1e-13)


def test_complex_pow_integer_fast_path_is_exact_on_cut():
    assert complex_pow(-1.0, 2.0) == 1.0
    assert complex_pow(-2.0, 3.0) == -8.0
    assert complex_pow(-1.5, -2.0) == pytest.approx((-1.5) ** -2, rel=1e-15)


def test_complex_pow_zero_base():
    assert complex_pow(0.0, 2.5) == 0.0
    with pytest.raises(DomainError):
        complex_pow(0.0, 0.0)
    with pytest.raises(DomainError):
        complex_pow(0.0, -1.0 + 1j)


def test_complex_pow_square_matches_multiplication():
    rng = np.random.default_rng(11)
    for _ in range(2000):
        z = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
        if z == 0 or (z.real < 0 and abs(z.imag) < 1e-6):
            continue
        assert abs(complex_pow(z, 2.0) - z * z) <= 1e-13 * abs(z * z)


def test_log_gamma_known_values():
    assert log_gamma(1.0) == pytest.approx(0.0, abs=1e-14)
    assert log_gamma(0.5) == pytest.approx(0.5723649429247001, rel=1e-13)
    assert gamma(5.0) == pytest.approx(24.0, rel=1e-13)


def test_log_gamma_functional_equation_mod_2pi():
    s = 3.5 + 2j
    delta = log_gamma(s + 1) - log_gamma(s) - cmath.log(s)
    # equality mod 2*pi*i
    assert abs(delta.real) < 1e-12
    assert abs(delta.imag - 2 * math.pi * round(delta.imag / (2 * math.pi))) < 1e-12


def test_log_gamma_pole_rejection():
    for s in (0.0, -1.0, -7.0):
        with pytest.raises(PoleError):
            log_gamma(s)


def test_gamma_recurrence_bulk():
    rng = np.random.default_rng(13)
    count = 0
    while count < 10**3:
        s = complex(rng.uniform(-10, 10), rng.uniform(-5, 5))
        if abs(s.imag) < 0.05 and (round(s.real) <= 1 and abs(s.real - round(s.real)) < 0.05):
            continue
        g1 = gamma(s + 1)
        assert abs(g1 - s * gamma(s)) <= 1e-12 * abs(g1)
        count += 1


def test_gamma_reflection_bulk():
    rng = np.random.default_rng(17)
    count = 0
    while count < 500:
        s = complex(rng.uniform(-4, 5), rng.uniform(-20, 20))
        if abs(s.real - round(s.real)) < 0.05 and abs(s.imag) < 0.05:
            continue
        lhs = gamma(s) * gamma(1 - s)
        rhs = math.pi / cmath.sin(math.pi * s)
        assert abs(lhs - rhs) <= 1e-11 * abs(rhs)
        count += 1
