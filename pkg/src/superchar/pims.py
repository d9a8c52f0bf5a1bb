"""Decompositions of projective covers into Euler classes.

``[P_lambda] = sum a(lambda, mu) E(mu)``.  Tailless sources use the move set
of the cap diagram with unit coefficients.  Odd sources with a tail go
through the bar weight and pick up the sign ``(-1)^(x+y)``.  Even sources
with tail crosses are shifted to the odd family, computed there, and the
surviving terms are shifted back.
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass

from .charring import LaurentElement, euler_character
from .diagrams import (
    WeightDiagram,
    bar_weight,
    diagram_to_weights,
    inverse_prime_shift,
    p_set,
    p_set_moves,
    parse_diagram,
    prime_shift,
    to_text,
)
from .errors import SupercharError
from .kgroup import Basis, KGroupElement
from .lattice import Family


@dataclass(frozen=True)
class PimDecomposition:
    source: WeightDiagram
    terms: KGroupElement

    def coeff(self, d: WeightDiagram) -> int:
        return self.terms.coeff(d)

    def lines(self) -> list:
        return self.terms.lines()

    def __str__(self):
        return f"P({to_text(self.source)}) = {self.terms}"

    def to_json(self) -> dict:
        body = self.terms.to_json()
        return {"source": to_text(self.source), "basis": body["basis"], "terms": body["terms"]}

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def _unit(diagrams) -> KGroupElement:
    return KGroupElement(Basis.EULER, {d: 1 for d in diagrams})


def _odd_with_tail(d: WeightDiagram) -> KGroupElement:
    res = bar_weight(d)
    x = len(res.emerald)
    flip = d.tail_core is None and d.indicator == 1
    out = {}
    for nu, moved in p_set_moves(res.bar):
        y = len(moved & res.emerald)
        c = (-1) ** (x + y)
        if flip and nu.tail_crosses:
            c = -c
        out[nu] = out.get(nu, 0) + c
    return KGroupElement(Basis.EULER, out)


def _even_with_tail(d: WeightDiagram) -> KGroupElement:
    if d.tail_core is None:
        shifted = [prime_shift(d, 1), prime_shift(d, -1)]
    else:
        shifted = [prime_shift(d)]
    images = []
    for lam in shifted:
        kept = {}
        for nu, c in pim_decomposition(lam).terms.terms.items():
            if nu.tail_crosses:
                continue
            kept[nu] = c
        images.append(kept)
    if any(img != images[0] for img in images[1:]):
        raise SupercharError(f"a(lambda'_+, nu') != a(lambda'_-, nu') for {to_text(d)!r}")
    out = {}
    for nu, c in images[0].items():
        brackets = (1, -1) if nu.tail_core is None else (None,)
        for b in brackets:
            mu = inverse_prime_shift(nu, b)
            out[mu] = out.get(mu, 0) + c
    return KGroupElement(Basis.EULER, out)


@functools.lru_cache(maxsize=65536)
def _decompose(d: WeightDiagram) -> KGroupElement:
    fam = d.kind.family
    if fam is Family.GL or d.is_tailless:
        return _unit(p_set(d))
    if fam is Family.OSP_ODD:
        return _odd_with_tail(d)
    return _even_with_tail(d)


def pim_decomposition(d: WeightDiagram) -> PimDecomposition:
    """``[P_lambda]`` in the Euler basis."""
    return PimDecomposition(d, _decompose(d))


def bgg_multiplicity(nu: WeightDiagram, lam: WeightDiagram) -> int:
    """``b(nu, lambda) = a(lambda, nu)``: signed multiplicity of L_lambda in E(nu)."""
    if nu.kind != lam.kind:
        raise SupercharError("bgg_multiplicity needs diagrams of one kind")
    return pim_decomposition(lam).coeff(nu)


def euler_character_of(x: KGroupElement) -> LaurentElement:
    """Character of an Euler-basis element."""
    out = None
    for d, c in x.terms.items():
        ch = euler_character(diagram_to_weights(d)[0]).scale(c)
        out = ch if out is None else out + ch
    if out is None:
        raise SupercharError("character of the zero element has no fixed rank")
    return out


def pim_character(d: WeightDiagram) -> LaurentElement:
    """``Ch P_lambda = sum a(lambda, mu) Ch E(mu)``."""
    return euler_character_of(pim_decomposition(d).terms)


def decomposition_from_json(text: str, kind) -> PimDecomposition:
    data = json.loads(text)
    return PimDecomposition(
        parse_diagram(data["source"], kind), KGroupElement.from_json(data, kind)
    )
