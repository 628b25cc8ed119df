import random

import pytest

from coderco import _kernels_py

from conftest import _kernels_c

pytestmark = pytest.mark.skipif(_kernels_c is None, reason="compiled kernels not built")


def _random_rows(rng, nrows, ncols, density=0.4):
    rows = []
    for _ in range(nrows):
        cols = [c for c in range(ncols) if rng.random() < density]
        vals = [rng.choice([-3, -2, -1, 1, 2, 3, 10**20 + 1]) for _ in cols]
        if cols:
            rows.append((cols, vals))
    return rows


@pytest.mark.parametrize("seed", range(20))
def test_rref_backends_agree(seed):
    rng = random.Random(seed)
    rows = _random_rows(rng, rng.randint(1, 12), rng.randint(1, 12))
    limit = rng.randint(1, 12)
    assert _kernels_py.rref(list(rows), limit) == _kernels_c.rref(list(rows), limit)


@pytest.mark.parametrize("seed", range(10))
def test_matmul_backends_agree(seed):
    rng = random.Random(seed)
    a = {j: {i: rng.randint(-2, 2) or 1 for i in range(6) if rng.random() < 0.5} for j in range(5)}
    b = {j: {i: rng.randint(-2, 2) or 1 for i in range(5) if rng.random() < 0.5} for j in range(4)}
    assert _kernels_py.matmul_cols(a, b) == _kernels_c.matmul_cols(a, b)


def test_primitive_and_combine_agree():
    row = ([0, 3, 5], [-4, 8, 12])
    assert _kernels_py.primitive(*row) == _kernels_c.primitive(*row) == ([0, 3, 5], [1, -2, -3])
    args = (2, [0, 1], [1, 1], 1, [0, 2], [2, 5])
    assert _kernels_py.combine(*args) == _kernels_c.combine(*args) == ([1, 2], [2, -5])


def test_backend_names():
    assert _kernels_py.BACKEND == "python"
    assert _kernels_c.BACKEND == "cython"
