import numpy as np
import pytest

from grasslie.groups import standard_specs

FIELDS = ("R", "C", "H")


@pytest.fixture(params=standard_specs(), ids=lambda s: s.code())
def spec(request):
    """One representative noncompact group per family."""
    return request.param


@pytest.fixture(params=[s for s in standard_specs() if s.has_form],
                ids=lambda s: s.code())
def form_spec(request):
    """The seven families carrying a form."""
    return request.param


@pytest.fixture
def rng():
    return np.random.default_rng(20260825)
