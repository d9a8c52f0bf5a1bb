import random

import pytest

from superchar.diagrams import enumerate_diagrams, parse_diagram, weight_to_diagram
from superchar.errors import SupercharError
from superchar.fock import (
    Embedding,
    FockVector,
    Model,
    WedgeLabel,
    alpha_map,
    apply_E,
    apply_F,
    beta_map,
    embed_euler,
    euler_from_vector,
    euler_vector,
    wedge_normalize,
)
from superchar.kgroup import Basis, KGroupElement
from superchar.lattice import Weight

from conftest import even, odd


def test_normal_form():
    assert wedge_normalize([3, 1], [5]) == FockVector({WedgeLabel((1, 3), (5,)): -1})
    assert wedge_normalize([1, 3], [5]) == FockVector({WedgeLabel((1, 3), (5,)): 1})
    assert not wedge_normalize([1, 1], [5])


def test_apply_E_odd():
    x = wedge_normalize([3], [1])
    assert apply_E(3, 1, x) == wedge_normalize([3], [3]) + wedge_normalize([1], [1])
    assert not apply_E(9, 7, x)


def test_apply_F_even():
    x = wedge_normalize([-2], [2])
    assert apply_F(2, 0, x) == wedge_normalize([0], [2]).scale(2)
    assert not apply_F(6, 4, x)
    with pytest.raises(SupercharError):
        apply_E(0, 2, x, Model.EVEN_FULL)


def test_phi_example():
    d = weight_to_diagram(Weight(odd(2, 1), (3, 1), (1,)))
    got = embed_euler(KGroupElement.single(Basis.EULER, d), Embedding.PHI)
    assert set(got.terms) == {WedgeLabel((1, 3), (1,))}
    assert abs(got.terms[WedgeLabel((1, 3), (1,))]) == 1


def test_psi_minus_vanishes_on_zero_tail():
    d = weight_to_diagram(Weight(even(2, 1), (2, 0), (2,)))
    x = KGroupElement.single(Basis.EULER, d)
    assert not embed_euler(x, Embedding.PSI_MINUS)
    with pytest.raises(SupercharError):
        embed_euler(KGroupElement.single(Basis.EULER, parse_diagram("[+] ; x >", even(2, 1))), Embedding.PSI_MINUS)


def test_phi_injective():
    k = odd(2, 2)
    seen = {}
    for d in enumerate_diagrams(k, 5, tailless_only=True):
        lab = next(iter(euler_vector(d).terms))
        assert lab not in seen
        seen[lab] = d
        back = euler_from_vector(euler_vector(d), k)
        assert back == KGroupElement.single(Basis.EULER, d)


def test_alpha_beta():
    assert beta_map(wedge_normalize([0], [])) == wedge_normalize([1], [])
    assert not alpha_map(wedge_normalize([3], [1]))
    rng = random.Random(1)
    for _ in range(50):
        s = rng.sample(range(-8, 1, 2), 2)
        u = rng.sample(range(2, 12, 2), 2)
        x = wedge_normalize(s, u, rng.randint(-3, 3))
        assert alpha_map(beta_map(x)) == x
