"""The two kernels must be interchangeable down to the bit level."""

from itertools import combinations

import pytest

from maxsub import _pykernel
from maxsub._backend import backend_name, get_kernel
from maxsub.exact import cyclotomic_polynomial


def _compiled_or_skip():
    try:
        return get_kernel("compiled")
    except ImportError:
        pytest.skip("compiled kernel not built")


def _grid():
    for r, k, gm1, t in [
        (4, 2, 1, 1),
        (6, 2, 1, -1),
        (6, 3, 2, 2),
        (7, 3, 1, -3),
        (8, 4, 2, 0),
        (5, 1, 1, 2),
        (2, 1, 1, 0),
    ]:
        phi = list(cyclotomic_polynomial(r).coefficients)
        subsets = list(combinations(range(r), k))
        yield r, k, gm1, t, phi, subsets


def test_direct_sums_match():
    cy = _compiled_or_skip()
    for r, k, gm1, t, phi, subsets in _grid():
        assert cy.vi_direct_sum(r, phi, k, gm1, t, subsets) == _pykernel.vi_direct_sum(
            r, phi, k, gm1, t, subsets
        )


def test_poly_sums_match():
    cy = _compiled_or_skip()
    for r, k, gm1, t, phi, subsets in _grid():
        terms = [(3, 2, tuple(1 if j == 0 else 0 for j in range(k))), (1, 1, (0,) * k)]
        assert cy.vi_poly_sum(r, phi, k, gm1, terms, subsets) == _pykernel.vi_poly_sum(
            r, phi, k, gm1, terms, subsets
        )


def test_negative_genus_exponent_paths_match():
    cy = _compiled_or_skip()
    phi = list(cyclotomic_polynomial(5).coefficients)
    subsets = list(combinations(range(5), 2))
    for gm1 in (-2, -1, 0, 1, 3):
        a = cy.vi_direct_sum(5, phi, 2, gm1, 1, subsets)
        b = _pykernel.vi_direct_sum(5, phi, 2, gm1, 1, subsets)
        assert a == b


def test_backend_name_is_valid():
    assert backend_name() in {"pure", "compiled"}


def test_forcing_unknown_backend_rejected():
    with pytest.raises(ValueError):
        get_kernel("vectorized")
