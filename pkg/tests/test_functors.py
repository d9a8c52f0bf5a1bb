import pytest

from superchar.diagrams import atypicality, enumerate_diagrams, parse_diagram, to_text
from superchar.errors import SupercharError, UnsupportedConfiguration
from superchar.functors import (
    FunctorLabel,
    functors_for,
    parse_functor,
    reduction_step,
    switch_simple_pim,
    translate_euler,
    translate_pim,
    translate_simple,
    typicalization_path,
)
from superchar.kgroup import Basis, KGroupElement
from superchar.pims import pim_decomposition

from conftest import even, odd


def E(text, kind):
    return KGroupElement.single(Basis.EULER, parse_diagram(text, kind))


def texts(x):
    return {to_text(d): c for d, c in x.terms.items()}


def test_parse_functor():
    assert parse_functor("T(3/2,5/2)") == FunctorLabel.raise_(3)
    assert parse_functor("T(1,0)") == FunctorLabel.lower(0)
    assert str(parse_functor("sw")) == "sw"
    assert parse_functor("T(1,0)").adjoint == FunctorLabel.raise_(0)
    with pytest.raises(SupercharError):
        parse_functor("T(1,3)")


def test_table_rows():
    k = odd(1, 1)
    assert texts(translate_euler(E("; > <", k), parse_functor("T(3/2,5/2)"))) == {"; o x": 1, "; x": 1}
    assert texts(translate_euler(E("; o x", k), parse_functor("T(3/2,5/2)"))) == {"; < >": 1}
    e = even(1, 1)
    assert texts(translate_euler(E(">; <", e), parse_functor("T(0,1)"))) == {"[+] ; x": 1, "[-] ; x": 1}
    assert texts(translate_euler(E("[+] ; x", e), parse_functor("T(1,0)"))) == {">; <": 1}


def test_switch_on_euler():
    k = odd(2, 1)
    sw = FunctorLabel.switch()
    assert not translate_euler(E(">; x", k), sw)
    assert texts(translate_euler(E("(+) x1; >", k), sw)) == {"(+) x1; >": -1}


def test_switch_on_simples():
    k = odd(2, 2)
    sw = FunctorLabel.switch()
    assert texts(translate_simple(parse_diagram("(+) x2;", k), sw)) == {"(-) x2;": 1}
    assert texts(translate_simple(parse_diagram("; x x", k), sw)) == {"; x x": 1}
    assert not translate_simple(parse_diagram("x1>; <", k), sw)
    for d in enumerate_diagrams(k, 5):
        x = KGroupElement.single(Basis.PIM, d)
        twice = switch_simple_pim(switch_simple_pim(x))
        assert twice in (x, KGroupElement(Basis.PIM))


def test_elementary_changes_on_simples():
    assert texts(translate_simple(parse_diagram("; x o", odd(1, 1)), parse_functor("T(5/2,3/2)"))) == {"; > <": 1}
    got = translate_simple(parse_diagram("(+) x1; o", odd(1, 1)), parse_functor("T(3/2,1/2)"))
    assert texts(got) == {">; <": 1}
    e = even(1, 1)
    assert texts(translate_simple(parse_diagram(">; o o <", e), parse_functor("T(0,1)"))) == {"[+] ; > o <": 1, "[-] ; > o <": 1}
    assert texts(translate_simple(parse_diagram("x1>; o", even(2, 1)), parse_functor("T(0,1)"))) == {"x1; >": 1}


def test_even_pim_rules():
    e = even(2, 1)
    got = translate_pim(parse_diagram("x1; >", e), parse_functor("T(1,0)"))
    assert texts(got) == {"x1>;": 1, ">; x": 1}
    got = translate_pim(parse_diagram(">; <", even(1, 1)), parse_functor("T(0,1)"))
    assert texts(got) == {"x1;": 1}


def test_unsupported():
    with pytest.raises(UnsupportedConfiguration):
        translate_simple(parse_diagram("; > <", odd(1, 1)), parse_functor("T(3/2,5/2)"))


@pytest.mark.parametrize("kind", [odd(2, 2), even(2, 2), odd(3, 2), even(2, 1)])
def test_pim_translation_commutes_with_decomposition(kind):
    """``T[P] = sum of [P]`` for the images, checked in the Euler basis."""
    funcs = list(functors_for(kind, kind.tail, kind.tail + 10))
    checked = 0
    for d in enumerate_diagrams(kind, 5):
        for f in funcs:
            try:
                img = translate_pim(d, f)
            except UnsupportedConfiguration:
                continue
            lhs = translate_euler(pim_decomposition(d).terms, f)
            rhs = KGroupElement(Basis.EULER)
            for p, c in img.terms.items():
                rhs = rhs + pim_decomposition(p).terms.scale(c)
            assert lhs == rhs, (to_text(d), str(f))
            checked += 1
    assert checked > 0


def test_typicalization_paths():
    typical = parse_diagram("; > <", odd(1, 1))
    assert typicalization_path(typical) == []
    assert reduction_step(typical) is None
    for d in (parse_diagram("(+) x1;", odd(1, 1)), parse_diagram("x1;", even(1, 1))):
        path = typicalization_path(d)
        assert path
        assert atypicality(path[-1].source) == 0 or atypicality(path[0].source) == 0
    step = reduction_step(parse_diagram("x1;", even(1, 1)))
    assert str(step.functor) == "T(0,1)" and to_text(step.source) == ">; <"
