import pytest

from superchar.diagrams import parse_diagram
from superchar.errors import SupercharError
from superchar.kgroup import Basis, KGroupElement

from conftest import odd


def test_arithmetic_and_output():
    k = odd(2, 2)
    a, b = parse_diagram("; x x", k), parse_diagram("; x o x", k)
    x = KGroupElement.from_pairs(Basis.EULER, [(1, a), (2, b), (-1, a)])
    assert x.terms == {b: 2}
    y = x - KGroupElement.single(Basis.EULER, b, 2)
    assert not y
    z = KGroupElement(Basis.EULER, {a: -1, b: 1})
    assert z.lines() == ["+1 * E(; x o x)", "-1 * E(; x x)"]
    assert KGroupElement.from_json(z.to_json(), k) == z
    with pytest.raises(SupercharError):
        z + KGroupElement(Basis.PIM, {a: 1})
