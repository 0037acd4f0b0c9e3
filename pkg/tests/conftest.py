import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from fermitangle import _jacobi_py, hermitian

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

KERNELS = [pytest.param(_jacobi_py, id="python")]
try:
    from fermitangle import _jacobi
except ImportError:
    pass
else:
    KERNELS.append(pytest.param(_jacobi, id="cython"))


@pytest.fixture(params=KERNELS)
def kernel(request):
    return request.param


@st.composite
def hermitian_matrices(draw, min_dim=1, max_dim=8, complex_entries=True):
    n = draw(st.integers(min_dim, max_dim))
    elems = st.floats(-10, 10, allow_nan=False, allow_infinity=False)
    re = draw(arrays(np.float64, (n, n), elements=elems))
    m = re + re.T
    if complex_entries:
        im = draw(arrays(np.float64, (n, n), elements=elems))
        m = m + 1j * (im - im.T)
    return m


def random_hermitian(rng, n, scale=1.0):
    x = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return scale * (x + x.conj().T) / 2
