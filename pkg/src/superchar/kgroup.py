"""Finite integer combinations of diagram labels in a Grothendieck group."""

from __future__ import annotations

import enum
from typing import Iterable, Mapping, Optional

from .diagrams import WeightDiagram, parse_diagram, to_text
from .errors import SupercharError
from .lattice import SupergroupKind


class Basis(enum.Enum):
    EULER = "euler"
    PIM = "pim"
    SIMPLE = "simple"

    @property
    def letter(self) -> str:
        return {"euler": "E", "pim": "P", "simple": "L"}[self.value]


class KGroupElement:
    """``sum c_d [X(d)]`` over diagrams ``d`` for one basis ``X``."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis: Basis, terms: Optional[Mapping[WeightDiagram, int]] = None):
        self.basis = Basis(basis)
        self.terms = {d: int(c) for d, c in (terms or {}).items() if c}

    @classmethod
    def single(cls, basis: Basis, d: WeightDiagram, c: int = 1) -> "KGroupElement":
        return cls(basis, {d: c})

    @classmethod
    def from_pairs(cls, basis: Basis, pairs: Iterable) -> "KGroupElement":
        out = {}
        for c, d in pairs:
            out[d] = out.get(d, 0) + c
        return cls(basis, out)

    def _same(self, other: "KGroupElement"):
        if self.basis is not other.basis:
            raise SupercharError(f"cannot combine {self.basis.value} and {other.basis.value} elements")

    def __add__(self, other: "KGroupElement") -> "KGroupElement":
        self._same(other)
        out = dict(self.terms)
        for d, c in other.terms.items():
            out[d] = out.get(d, 0) + c
        return KGroupElement(self.basis, out)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k: int) -> "KGroupElement":
        return KGroupElement(self.basis, {d: k * c for d, c in self.terms.items()})

    def __eq__(self, other):
        return (
            isinstance(other, KGroupElement)
            and self.basis is other.basis
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.basis, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coeff(self, d: WeightDiagram) -> int:
        return self.terms.get(d, 0)

    def sorted_terms(self) -> list:
        """``[(coeff, diagram), ...]`` ordered by the diagram text."""
        return sorted(((c, d) for d, c in self.terms.items()), key=lambda t: to_text(t[1]))

    def lines(self) -> list:
        L = self.basis.letter
        return [f"{c:+d} * {L}({to_text(d)})" for c, d in self.sorted_terms()]

    def __str__(self):
        return " ".join(self.lines()) if self.terms else "0"

    __repr__ = __str__

    def to_json(self) -> dict:
        return {
            "basis": self.basis.value,
            "terms": [{"coeff": c, "diagram": to_text(d)} for c, d in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data: dict, kind: SupergroupKind) -> "KGroupElement":
        return cls.from_pairs(
            Basis(data["basis"]),
            ((t["coeff"], parse_diagram(t["diagram"], kind)) for t in data["terms"]),
        )
