import pytest

from app.config import settings
from app.rings import handles as H
from app.theorems import Scope


@pytest.fixture(autouse=True)
def restore_threads():
    """The CLI writes --threads into the shared settings object."""
    threads = settings.THREADS
    yield
    settings.THREADS = threads


@pytest.fixture
def z():
    return H.integers()


@pytest.fixture
def z12():
    # Z/12 has zero divisors and two maximal ideals
    return H.zmod(12)


@pytest.fixture
def kxy():
    return H.mon_loc()


@pytest.fixture
def small_scope():
    return Scope(
        zmod_max=24,
        prod_max=4,
        int_max=40,
        local_exponent_max=3,
        monloc_degree=3,
    )
