"""Sparse Laurent polynomials on the doubled weight lattice and Euler characters.

An exponent vector has length m+n and uses the same doubled coordinates as
:class:`~superchar.lattice.Weight`, so ``e^{alpha/2}`` for a real root
``alpha`` has exponent ``alpha`` itself.
"""

from __future__ import annotations

import functools
from typing import Iterable, Mapping, Optional, Sequence

from .errors import InexactDivisionError, SupercharError
from .lattice import Family, SupergroupKind, Weight, fmt_half, positive_roots, weyl_elements

_INT64 = 2**63


def _check(c: int) -> int:
    if not -_INT64 <= c < _INT64:
        raise OverflowError(f"coefficient {c} overflows 64 bits")
    return c


class LaurentElement:
    """Finite integer combination of monomials ``e^v``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[tuple, int]] = None):
        self.terms = {tuple(v): _check(int(c)) for v, c in (terms or {}).items() if c}

    @classmethod
    def monomial(cls, v: Sequence[int], c: int = 1) -> "LaurentElement":
        return cls({tuple(v): c})

    @classmethod
    def one(cls, size: int) -> "LaurentElement":
        return cls({(0,) * size: 1})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, LaurentElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __len__(self):
        return len(self.terms)

    def coeff(self, v: Sequence[int]) -> int:
        return self.terms.get(tuple(v), 0)

    def __add__(self, other: "LaurentElement") -> "LaurentElement":
        out = dict(self.terms)
        for v, c in other.terms.items():
            out[v] = _check(out.get(v, 0) + c)
        return LaurentElement(out)

    def __neg__(self):
        return LaurentElement({v: -c for v, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k: int) -> "LaurentElement":
        return LaurentElement({v: k * c for v, c in self.terms.items()})

    def __mul__(self, other: "LaurentElement") -> "LaurentElement":
        if isinstance(other, int):
            return self.scale(other)
        out = {}
        for u, c in self.terms.items():
            for v, d in other.terms.items():
                w = tuple(x + y for x, y in zip(u, v))
                out[w] = _check(out.get(w, 0) + c * d)
        return LaurentElement(out)

    __rmul__ = __mul__

    def act(self, g) -> "LaurentElement":
        """Apply a Weyl element to every exponent."""
        return LaurentElement({g.act(v): c for v, c in self.terms.items()})

    def divide_binomial(self, alpha: Sequence[int], sign: int = -1) -> "LaurentElement":
        """Exact quotient by ``e^alpha + sign * e^-alpha``.

        Exponents split into chains ``base + t*alpha``; on each chain the
        quotient satisfies ``f(t) = q(t-1) + sign*q(t+1)`` and is solved from the top.
        """
        alpha = tuple(alpha)
        i = next(k for k, x in enumerate(alpha) if x)
        ai = alpha[i]
        chains = {}
        for v, c in self.terms.items():
            t = v[i] // ai
            base = tuple(x - t * y for x, y in zip(v, alpha))
            chains.setdefault(base, {})[t] = c
        q = {}
        for base, f in chains.items():
            lo, hi = min(f), max(f)
            qs = {}
            for t in range(hi, lo - 1, -1):
                val = f.get(t, 0) - sign * qs.get(t + 1, 0)
                qs[t - 1] = val
            if qs.get(lo - 1, 0) or (hi > lo and qs.get(lo, 0)):
                raise InexactDivisionError(f"remainder left dividing by the binomial at {alpha}")
            for t, c in qs.items():
                if c and lo < t < hi:
                    q[tuple(x + t * y for x, y in zip(base, alpha))] = _check(c)
        return LaurentElement(q)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for v in sorted(self.terms, reverse=True):
            c = self.terms[v]
            parts.append(f"{c:+d}*e[{','.join(str(x) for x in v)}]")
        return " ".join(parts)

    __repr__ = __str__

    def to_json(self) -> list:
        return [{"exponent": list(v), "coeff": c} for v, c in sorted(self.terms.items(), reverse=True)]

    @classmethod
    def from_json(cls, data: Iterable[dict]) -> "LaurentElement":
        return cls({tuple(t["exponent"]): t["coeff"] for t in data})


def numerator(w: Weight) -> LaurentElement:
    """``sum over W of epsilon(g) e^{g(lambda+rho)}``."""
    v = w.vector
    out = {}
    for g in weyl_elements(w.kind):
        u = g.act(v)
        out[u] = out.get(u, 0) + g.sign
    return LaurentElement(out)


@functools.lru_cache(maxsize=None)
def denominators(kind: SupergroupKind) -> tuple:
    """``(D0, D1)``: products of ``e^{a/2} - e^{-a/2}`` over even and ``e^{a/2} + e^{-a/2}`` over odd roots."""
    even, odd = positive_roots(kind)
    size = kind.m + kind.n
    d0 = d1 = LaurentElement.one(size)
    for r in even:
        d0 = d0 * LaurentElement({r: 1, tuple(-x for x in r): -1})
    for r in odd:
        d1 = d1 * LaurentElement({r: 1, tuple(-x for x in r): 1})
    return d0, d1


@functools.lru_cache(maxsize=4096)
def euler_character(w: Weight) -> LaurentElement:
    """``Ch E(lambda) = D1 * N(lambda) / D0`` with exact division."""
    d0, d1 = denominators(w.kind)
    even, _ = positive_roots(w.kind)
    f = d1 * numerator(w)
    for r in even:
        f = f.divide_binomial(r, -1)
    return f


def standard_character(kind: SupergroupKind, dual: bool = False) -> LaurentElement:
    """Weights of the standard module (``dual`` gives E* for GL)."""
    m, n = kind.m, kind.n
    size = m + n
    sgn = -1 if dual else 1

    def unit(k, c):
        v = [0] * size
        v[k] = c
        return tuple(v)

    out = {}
    for k in range(size):
        out[unit(k, 2 * sgn)] = 1
        if kind.is_osp:
            out[unit(k, -2)] = 1
    if kind.family is Family.OSP_ODD:
        out[(0,) * size] = 1
    return LaurentElement(out)


def lambda_exponent(w: Weight) -> tuple:
    """Exponent of ``e^lambda`` in the normalization of Euler characters."""
    from .lattice import true_rho

    return tuple(x - y for x, y in zip(w.vector, true_rho(w.kind)))
