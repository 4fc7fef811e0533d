import cmath

import pytest

from lerchsum.numtheory import (
    PERMISSIVE,
    STRICT,
    TheoremParams,
    is_prime,
    validate_theorem_params,
)


def _sieve(limit):
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, int(limit**0.5) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
    return flags


def test_is_prime_small_examples():
    assert is_prime(7)
    assert not is_prime(1)
    assert not is_prime(0)
    assert is_prime(2)


def test_is_prime_mersenne_31():
    assert is_prime(2147483647)
    assert not is_prime(2147483647 * 3)


def test_is_prime_matches_trial_division():
    flags = _sieve(10**5)
    for n in range(10**5 + 1):
        assert is_prime(n) == bool(flags[n]), n


def _params(**kw):
    base = dict(k=1.0, a=2.0, m=0.3 + 0.5j, n=5, q=2)
    base.update(kw)
    return TheoremParams(**base)


def test_valid_point():
    rep = validate_theorem_params(_params(), STRICT)
    assert rep.valid
    assert not rep.violations


def test_composite_n_rejected():
    rep = validate_theorem_params(_params(n=6, q=1), STRICT)
    assert not rep.valid
    assert any("not prime" in v for v in rep.violations)


def test_q_divisible_by_n_rejected_strict_only():
    rep = validate_theorem_params(_params(n=3, q=3), STRICT)
    assert not rep.valid
    rep = validate_theorem_params(_params(n=3, q=3), PERMISSIVE)
    assert rep.valid
    assert rep.warnings


def test_n_equals_two_is_suspect():
    rep = validate_theorem_params(_params(n=2, q=1), STRICT)
    assert not rep.valid
    assert rep.suspect
    rep = validate_theorem_params(_params(n=2, q=1), PERMISSIVE)
    assert rep.valid
    assert rep.suspect


def test_nonpositive_imaginary_m_downgraded_in_permissive():
    rep = validate_theorem_params(_params(m=0.4), STRICT)
    assert not rep.valid
    rep = validate_theorem_params(_params(m=0.4), PERMISSIVE)
    assert rep.valid
    assert rep.warnings


def test_singular_log_power():
    # log(1) = 0 with negative k makes log(a)**k singular
    rep = validate_theorem_params(_params(a=1.0, k=-1.0), STRICT)
    assert not rep.valid
    # nonnegative integer k is fine
    rep = validate_theorem_params(_params(a=1.0, k=2.0), STRICT)
    assert rep.valid


def test_shift_pole_detection():
    # pick a so that 1 - (i/2) log(a) = 0: log(a) = -2i, a = e^{-2i};
    # Im(log a) = -2 within the principal strip
    a = cmath.exp(-2j)
    rep = validate_theorem_params(_params(a=a), STRICT)
    assert not rep.valid
    assert any("pole" in v for v in rep.violations)


def test_reports_are_pure():
    p = _params(n=6, q=3, m=0.1)
    r1 = validate_theorem_params(p, STRICT)
    r2 = validate_theorem_params(p, STRICT)
    assert r1 == r2


def test_unknown_mode_rejected():
    with pytest.raises(ValueError):
        validate_theorem_params(_params(), "sloppy")
