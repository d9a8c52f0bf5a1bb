import pytest

from superchar.lattice import Family, SupergroupKind


def odd(m, n):
    return SupergroupKind(Family.OSP_ODD, m, n)


def even(m, n):
    return SupergroupKind(Family.OSP_EVEN, m, n)


def gl(m, n):
    return SupergroupKind(Family.GL, m, n)


@pytest.fixture
def kinds():
    return {"odd": odd, "even": even, "gl": gl}
