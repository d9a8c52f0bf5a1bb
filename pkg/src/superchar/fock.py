"""Semi-infinite wedge models for the translation functors.

Two models share one representation.  In the odd model a label is
``w_{a_1} ^ ... ^ w_{a_m} (x) v_{b_1} ^ ... ^ v_{b_n}`` with half-integer
indices ``>= 1/2``; in the even model it is ``u_{i_1} ^ ... (x) u_{j_1} ^ ...``
with starred indices ``<= 0`` and unstarred indices ``> 0``.  Indices are
doubled integers and each list is kept strictly increasing.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from .diagrams import WeightDiagram, diagram_to_weights, replace_indicator
from .errors import SupercharError
from .kgroup import Basis, KGroupElement
from .lattice import Family, fmt_half


class Model(enum.Enum):
    ODD = "odd"
    EVEN_FULL = "even"


class Embedding(enum.Enum):
    PHI = "phi"
    PSI_PLUS = "psi+"
    PSI_MINUS = "psi-"


@dataclass(frozen=True, order=True)
class WedgeLabel:
    starred: tuple
    unstarred: tuple

    def format(self, model: Model = Model.ODD) -> str:
        s, u = ("w", "v") if model is Model.ODD else ("u", "u")
        left = "^".join(f"{s}[{fmt_half(i)}]" for i in self.starred)
        right = "^".join(f"{u}[{fmt_half(i)}]" for i in self.unstarred)
        return f"{left} (x) {right}"

    def __str__(self):
        return self.format()


def _sort_sign(xs: Sequence[int]):
    """``(sign, sorted tuple)`` of the sorting permutation, or None on a repeat."""
    if len(set(xs)) != len(xs):
        return None
    xs = list(xs)
    sign = 1
    for i in range(1, len(xs)):
        j = i
        while j > 0 and xs[j - 1] > xs[j]:
            xs[j - 1], xs[j] = xs[j], xs[j - 1]
            sign = -sign
            j -= 1
    return sign, tuple(xs)


def wedge_normalize(starred: Sequence[int], unstarred: Sequence[int], coeff: int = 1) -> "FockVector":
    """Bring raw wedge factors into normal form (repeats give zero)."""
    s1 = _sort_sign(starred)
    s2 = _sort_sign(unstarred)
    if s1 is None or s2 is None or coeff == 0:
        return FockVector()
    return FockVector({WedgeLabel(s1[1], s2[1]): coeff * s1[0] * s2[0]})


class FockVector:
    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[WedgeLabel, int]] = None):
        self.terms = {k: int(c) for k, c in (terms or {}).items() if c}

    def __add__(self, other: "FockVector") -> "FockVector":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return FockVector(out)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k: int) -> "FockVector":
        return FockVector({x: k * c for x, c in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, FockVector) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def format(self, model: Model = Model.ODD) -> str:
        if not self.terms:
            return "0"
        return " ".join(f"{c:+d}*{k.format(model)}" for k, c in sorted(self.terms.items()))

    def __str__(self):
        return self.format()

    __repr__ = __str__


def _sum(vectors: Iterable[FockVector]) -> FockVector:
    out = {}
    for vec in vectors:
        for k, c in vec.terms.items():
            out[k] = out.get(k, 0) + c
    return FockVector(out)


def _replace_slots(lst: tuple, old: int, new: int):
    """Index of ``old`` in ``lst`` replaced by ``new`` (None when absent)."""
    if old not in lst:
        return None
    return tuple(new if x == old else x for x in lst)


def apply_E(i: int, j: int, x: FockVector, model: Model = Model.ODD) -> FockVector:
    """Chevalley generator ``E_{i,j}`` acting as a derivation (doubled indices)."""
    parts = []
    for lab, c in x.terms.items():
        if model is Model.ODD:
            # v_j -> v_i
            new_u = _replace_slots(lab.unstarred, j, i)
            if new_u is not None:
                parts.append(wedge_normalize(lab.starred, new_u, c))
            # w_i -> (-1)^{i+j} w_j
            new_s = _replace_slots(lab.starred, i, j)
            if new_s is not None:
                sign = -1 if ((i + j) // 2) % 2 else 1
                parts.append(wedge_normalize(new_s, lab.unstarred, sign * c))
        else:
            if i <= 0 and j <= 0:
                new_s = _replace_slots(lab.starred, j, i)
                if new_s is not None:
                    parts.append(wedge_normalize(new_s, lab.unstarred, c))
            elif i > 0 and j > 0:
                new_u = _replace_slots(lab.unstarred, j, i)
                if new_u is not None:
                    parts.append(wedge_normalize(lab.starred, new_u, c))
            else:
                raise SupercharError(
                    f"E({fmt_half(i)},{fmt_half(j)}) mixes the two factors of the even model"
                )
    return _sum(parts)


def apply_F(i: int, j: int, x: FockVector) -> FockVector:
    """Folded generators of the even model (doubled, nonnegative indices).

    ``F_{i,j} = (-1)^{i+j+1}(E_{i,j} + E_{-j,-i})`` for ``i,j > 0``,
    ``F_{i,0} = 2 E_{0,-i}`` and ``F_{0,i} = E_{-i,0}``.
    """
    if i < 0 or j < 0 or i % 2 or j % 2:
        raise SupercharError("F indices must be nonnegative integers")
    if j == 0 and i > 0:
        return apply_E(0, -i, x, Model.EVEN_FULL).scale(2)
    if i == 0 and j > 0:
        return apply_E(-j, 0, x, Model.EVEN_FULL)
    if i == 0 or j == 0:
        raise SupercharError("F(0,0) is not a generator")
    sign = -1 if ((i + j) // 2 + 1) % 2 else 1
    total = apply_E(i, j, x, Model.EVEN_FULL) + apply_E(-j, -i, x, Model.EVEN_FULL)
    return total.scale(sign)


# -- embeddings of the Euler basis ----------------------------------------------

def euler_vector(d: WeightDiagram) -> FockVector:
    """``x_lambda`` for a tailless dominant diagram (odd or even family)."""
    if not d.is_tailless:
        raise SupercharError(f"{d} is not tailless")
    w = diagram_to_weights(d)[0]
    fam = d.kind.family
    if fam is Family.OSP_ODD:
        return wedge_normalize(w.a, w.b)
    if fam is Family.OSP_EVEN:
        return wedge_normalize([-abs(x) for x in w.a], w.b)
    raise SupercharError("GL has no Fock embedding here")


def sigma(x: KGroupElement) -> KGroupElement:
    """The involution flipping the bracket of even Euler labels."""
    return KGroupElement(x.basis, {replace_indicator(d): c for d, c in x.terms.items()})


def embed_euler(x: KGroupElement, which: Embedding) -> FockVector:
    """phi (odd family) or psi+/psi- (even family, on the matching eigenspace)."""
    which = Embedding(which)
    if x.basis is not Basis.EULER:
        raise SupercharError("embed_euler needs an element of the Euler basis")
    if which is Embedding.PHI:
        return _sum(euler_vector(d).scale(c) for d, c in x.terms.items())
    s = 1 if which is Embedding.PSI_PLUS else -1
    if s < 0:
        # labels with a_m = 0 are sigma-fixed and psi- sends them to zero
        x = KGroupElement(x.basis, {d: c for d, c in x.terms.items() if d.indicator is not None})
    if sigma(x) != x.scale(s):
        raise SupercharError(f"element is not in the {s:+d} eigenspace of sigma: {x}")
    return _sum(euler_vector(d).scale(c) for d, c in x.terms.items() if d.indicator == 1 or (s > 0 and d.indicator is None))


def euler_from_vector(x: FockVector, kind) -> KGroupElement:
    """Inverse of phi on the odd model."""
    from .diagrams import weight_to_diagram
    from .lattice import Weight

    out = {}
    for lab, c in x.terms.items():
        a = tuple(sorted(lab.starred, reverse=True))
        b = tuple(sorted(lab.unstarred, reverse=True))
        w = Weight(kind, a, b)
        d = weight_to_diagram(w)
        # x_lambda lists both factors in decreasing order
        sign = _sort_sign(a)[0] * _sort_sign(b)[0]
        out[d] = out.get(d, 0) + c * sign
    return KGroupElement(Basis.EULER, out)


# -- the maps alpha and beta ------------------------------------------------------

def _alpha_index(i: int, starred: bool) -> Optional[int]:
    if starred:
        return 1 - i  # w_i -> u_{1/2 - i}
    if i == 1:
        return None  # v_{1/2} -> 0
    return i - 1  # v_i -> u_{i - 1/2}


def alpha_map(x: FockVector) -> FockVector:
    """Odd model to the even model ``X^+``."""
    parts = []
    for lab, c in x.terms.items():
        if 1 in lab.unstarred:
            continue
        s = [_alpha_index(i, True) for i in lab.starred]
        u = [_alpha_index(i, False) for i in lab.unstarred]
        parts.append(wedge_normalize(s, u, c))
    return _sum(parts)


def beta_map(x: FockVector) -> FockVector:
    """Even model ``X^+`` to the odd model; a right inverse of alpha."""
    parts = []
    for lab, c in x.terms.items():
        s = [1 - i for i in lab.starred]  # u_i -> w_{1/2 - i}, i <= 0
        u = [i + 1 for i in lab.unstarred]  # u_i -> v_{i + 1/2}, i > 0
        parts.append(wedge_normalize(s, u, c))
    return _sum(parts)
