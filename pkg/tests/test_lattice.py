import itertools

import pytest

from superchar.errors import ParityError, SupercharError
from superchar.lattice import (
    Family,
    SupergroupKind,
    Weight,
    in_lambda_plus,
    normalize_euler,
    parse_half,
    positive_roots,
    rho,
    true_rho,
    weyl_elements,
    weyl_order,
)

from conftest import even, gl, odd


def test_parse_half():
    assert parse_half("3/2") == 3
    assert parse_half("-1/2") == -1
    assert parse_half("2") == 4
    with pytest.raises(ParityError):
        parse_half("1/3")


def test_kind_validation():
    with pytest.raises(SupercharError):
        SupergroupKind(Family.GL, 1, 2)
    assert SupergroupKind(Family.GL, 1, 2, allow_m_lt_n=True).n == 2
    with pytest.raises(SupercharError):
        odd(0, 1)


def test_parity():
    with pytest.raises(ParityError):
        Weight(odd(1, 1), (2,), (1,))
    with pytest.raises(ParityError):
        Weight(even(1, 1), (1,), (2,))


@pytest.mark.parametrize(
    "kind, a, b",
    [(gl(1, 1), (-2,), (2,)), (even(2, 2), (0, 0), (0, 0)), (odd(1, 1), (-1,), (1,))],
)
def test_rho_values(kind, a, b):
    r = rho(kind)
    assert (r.a, r.b) == (a, b)


@pytest.mark.parametrize("kind", [odd(1, 1), odd(2, 2), odd(3, 2), even(2, 1), even(2, 2), even(3, 3)])
def test_rho_matches_half_sum_of_roots(kind):
    assert true_rho(kind) == rho(kind).vector


def test_positive_root_counts():
    even_roots, odd_roots = positive_roots(odd(1, 1))
    assert len(even_roots) == 2 and len(odd_roots) == 3
    even_roots, odd_roots = positive_roots(gl(2, 2))
    assert len(even_roots) == 2 and len(odd_roots) == 4


def test_dominance():
    assert in_lambda_plus(Weight(odd(2, 2), (3, 1), (3, 1)))
    assert in_lambda_plus(Weight(even(2, 1), (4, -2), (2,)))
    assert not in_lambda_plus(Weight(odd(2, 2), (1, 1), (3, 1)))


@pytest.mark.parametrize("kind, count", [(gl(2, 1), 2), (odd(2, 1), 16), (even(2, 1), 8)])
def test_weyl_counts(kind, count):
    elems = list(weyl_elements(kind))
    assert len(elems) == count == weyl_order(kind)
    assert len({g.act((5, 3, 1)) for g in elems}) == count


def test_weyl_sign_is_determinant():
    import numpy as np

    kind = odd(2, 1)
    for g in weyl_elements(kind):
        cols = [g.act(tuple(int(i == j) for j in range(3))) for i in range(3)]
        assert round(np.linalg.det(np.array(cols))) == g.sign


def test_normalize_examples():
    w = Weight(odd(2, 2), (5, 1), (3, 1))
    assert normalize_euler(w) == (1, w)
    # a negative tail entry is the reflection of the dominant one
    assert normalize_euler(Weight(odd(2, 2), (3, -1), (3, 1))) == (-1, Weight(odd(2, 2), (3, 1), (3, 1)))
    assert normalize_euler(Weight(odd(1, 1), (1,), (-1,))) == (-1, Weight(odd(1, 1), (1,), (1,)))
    assert normalize_euler(Weight(odd(2, 1), (3, 3), (1,))) is None


@pytest.mark.parametrize("kind", [odd(2, 1), even(2, 1), gl(2, 1)])
def test_normalize_equivariant_and_idempotent(kind):
    vals = range(-5, 6, 2) if kind.family is Family.OSP_ODD else range(-4, 5, 2)
    for v in itertools.product(vals, repeat=3):
        w = Weight(kind, v[:2], v[2:])
        res = normalize_euler(w)
        if res is None:
            continue
        sign, dom = res
        assert normalize_euler(dom) == (1, dom)
        for g in weyl_elements(kind):
            u = g.act(v)
            assert normalize_euler(Weight(kind, u[:2], u[2:])) == (sign * g.sign, dom)
