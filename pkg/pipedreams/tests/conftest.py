import django
import pytest

from .. import conf, fixtures
from ..permutation import Permutation


def pytest_configure(config):
    conf.configure(debug=True)
    django.setup()


@pytest.fixture
def pi():
    return fixtures.PI


@pytest.fixture
def example_bpd():
    return fixtures.bpd()


@pytest.fixture(params=[2, 3])
def small_perms(request):
    return Permutation.all_of_size(request.param)
