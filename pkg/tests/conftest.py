import pytest

from recprs import _kernel
from recprs.prs import compute_recursive_prs, monic_rule, sturm_rule
from recprs.recsubres import clear_caches

from worked_example import EX1_P


@pytest.fixture
def ex1():
    return compute_recursive_prs(EX1_P, EX1_P.derivative(), sturm_rule())


@pytest.fixture(params=["sturm", "monic"])
def rule(request):
    return {"sturm": sturm_rule, "monic": monic_rule}[request.param]()


@pytest.fixture(params=sorted(_kernel.KERNELS))
def kernel(request):
    return request.param


@pytest.fixture(autouse=True)
def _fresh_caches():
    yield
    clear_caches()
