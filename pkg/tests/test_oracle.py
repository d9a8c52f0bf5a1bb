import pytest

from superchar.diagrams import parse_diagram, to_text
from superchar.functors import FunctorLabel, parse_functor
from superchar.oracle import (
    translate_euler_oracle,
    verify_commuting_squares,
    verify_functor_tables,
    verify_pims,
    verify_serre,
)

from conftest import even, gl, odd


def test_oracle_examples():
    k = odd(1, 1)
    out = translate_euler_oracle(parse_diagram("; o x", k), parse_functor("T(3/2,5/2)"))
    assert {to_text(d): c for d, c in out.terms.items()} == {"; < >": 1}
    k = odd(2, 1)
    assert not translate_euler_oracle(parse_diagram(">; x", k), FunctorLabel.switch())
    out = translate_euler_oracle(parse_diagram("(+) x1; >", k), FunctorLabel.switch())
    assert {to_text(d): c for d, c in out.terms.items()} == {"(+) x1; >": -1}


def test_switch_rejected_outside_odd():
    with pytest.raises(ValueError):
        translate_euler_oracle(parse_diagram(">; <", even(1, 1)), FunctorLabel.switch())


@pytest.mark.parametrize(
    "kind, window, start",
    [(odd(2, 2), 5, 0), (even(2, 1), 5, 0), (gl(2, 1), 6, -2), (gl(2, 2), 5, -2)],
)
def test_table_audits(kind, window, start):
    rep = verify_functor_tables(kind, window, gl_start=start)
    assert rep.ok, rep.failures[:3]
    assert rep.checked > 0


@pytest.mark.parametrize("kind, start", [(odd(2, 2), 0), (even(2, 2), 0), (gl(2, 2), -2)])
def test_replay(kind, start):
    rep = verify_pims(kind, 6, gl_start=start)
    assert rep.ok, rep.failures[:3]


def test_squares_and_serre():
    assert verify_commuting_squares(odd(2, 1), 6).ok
    assert verify_commuting_squares(even(2, 1), 6).ok
    rep = verify_serre(odd(2, 2), count=20, seed=3)
    assert rep.ok and rep.checked == 80
    assert rep.to_json()["status"] == "pass"
