import pytest

from coderco import _kernels_py, exactlin

try:
    from coderco import _kernels as _kernels_c
except ImportError:  # extension not built
    _kernels_c = None

BACKENDS = [_kernels_py] + ([_kernels_c] if _kernels_c is not None else [])


@pytest.fixture(params=BACKENDS, ids=lambda k: k.BACKEND)
def backend(request, monkeypatch):
    """Run a test once per available elimination backend."""
    monkeypatch.setattr(exactlin, "kernels", request.param)
    return request.param
