"""Backend equivalence: the numba kernels must agree with the numpy twins."""

import cmath

import pytest

from lerchsum import _kernels_numpy as knp

knb = pytest.importorskip("lerchsum._kernels_numba")

SERIES_CASES = [
    (0.5 + 0.0j, 1.0 + 0.0j, 1.0 + 0.0j),
    (0.3 + 0.2j, -1.5 + 0.0j, 0.7 - 0.4j),
    (0.9 * cmath.exp(0.3j), 1.2 - 0.3j, 2.0 + 1.0j),
    (-0.7 + 0.0j, 0.5 + 0.5j, 0.3 + 0.1j),
    (0.0 + 0.0j, 2.5 + 1.0j, 3.0 + 0.0j),
]

QUAD_CASES = [
    (1.0 + 0.0j, 2.0 + 0.0j, 1.0 + 0.0j),
    (0.5 + 0.0j, 1.0 + 0.0j, 1.0 + 0.0j),
    (-1.0 + 0.0j, 0.3 + 0.7j, 1.2 - 0.5j),
    (0.5 - 0.8660254037844386j, 2.0 + 0.0j, 1.5 + 0.0j),
]


@pytest.mark.parametrize("z,s,v", SERIES_CASES)
def test_series_backends_agree(z, s, v):
    tol = 1e-12
    val_np, bound_np, _, status_np = knp.series_sum(z, s, v, tol, 10**6)
    val_nb, bound_nb, _, status_nb = knb.series_sum(z, s, v, tol, 10**6)
    assert status_np == status_nb == 0
    # term counts differ (chunked vs per-term stopping); values agree within
    # the claimed tail bounds
    assert abs(val_np - val_nb) <= max(1e-13 * max(abs(val_np), 1.0), bound_np + bound_nb)


@pytest.mark.parametrize("z,s,v", QUAD_CASES)
@pytest.mark.parametrize("level", [4, 6, 8])
def test_quad_backends_agree(z, s, v, level):
    raw_np, nodes_np = knp.quad_level(z, s, v, level)
    raw_nb, nodes_nb = knb.quad_level(z, s, v, level)
    assert nodes_np == nodes_nb
    assert abs(raw_np - raw_nb) <= 1e-12 * max(abs(raw_np), 1.0)


def test_series_cap_status():
    val, bound, nterms, status = knb.series_sum(0.99999 + 0.0j, 2.0 + 0.0j, 1.0 + 0.0j, 1e-14, 10**5)
    assert status == 1
    assert nterms == 10**5
