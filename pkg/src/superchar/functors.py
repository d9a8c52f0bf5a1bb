"""Translation and switch functors on Euler, simple and projective labels.

The Euler-basis action is table driven: one table governs ``T_{a,a+1}`` for
every family (two adjacent positions change, everything else is kept), its
mirror image governs ``T_{a+1,a}``, and two small tables govern ``T_{0,1}``
and ``T_{1,0}`` at the even tail.  Any configuration the tables do not list
raises :class:`UnsupportedConfiguration`; it is never guessed.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterator, Optional

from .diagrams import (
    CROSS,
    EMPTY,
    GT,
    LT,
    WeightDiagram,
    atypicality,
    block_label,
    to_text,
)
from .errors import SupercharError, UnsupportedConfiguration
from .kgroup import Basis, KGroupElement
from .lattice import Family, SupergroupKind, fmt_half, parse_half

__all__ = [
    "FunctorKind",
    "FunctorLabel",
    "KGroupElement",
    "Basis",
    "parse_functor",
    "functors_for",
    "translate_euler",
    "switch_simple_pim",
    "translate_simple",
    "translate_pim",
    "PathStep",
    "reduction_step",
    "typicalization_path",
]


class FunctorKind(enum.Enum):
    RAISE = "raise"  # T_{a,a+1}
    LOWER = "lower"  # T_{a+1,a}
    SWITCH = "switch"


@dataclass(frozen=True)
class FunctorLabel:
    """``T_{a,a+1}``, ``T_{a+1,a}`` or ``sw``; ``a`` is a doubled position."""

    kind: FunctorKind
    a: Optional[int] = None

    @classmethod
    def raise_(cls, a: int) -> "FunctorLabel":
        return cls(FunctorKind.RAISE, a)

    @classmethod
    def lower(cls, a: int) -> "FunctorLabel":
        return cls(FunctorKind.LOWER, a)

    @classmethod
    def switch(cls) -> "FunctorLabel":
        return cls(FunctorKind.SWITCH)

    @property
    def adjoint(self) -> "FunctorLabel":
        if self.kind is FunctorKind.SWITCH:
            return self
        other = FunctorKind.LOWER if self.kind is FunctorKind.RAISE else FunctorKind.RAISE
        return FunctorLabel(other, self.a)

    def gamma_shift(self, kind: SupergroupKind) -> tuple:
        """``(plus, minus)`` positions: the target block is gamma + gamma_plus - gamma_minus."""
        if self.kind is FunctorKind.SWITCH:
            return None, None
        lo, hi = self.a, self.a + 2
        plus, minus = (lo, hi) if self.kind is FunctorKind.RAISE else (hi, lo)
        if kind.family is Family.OSP_EVEN:
            plus = None if plus == 0 else plus
            minus = None if minus == 0 else minus
        return plus, minus

    def __str__(self):
        if self.kind is FunctorKind.SWITCH:
            return "sw"
        lo, hi = fmt_half(self.a), fmt_half(self.a + 2)
        return f"T({lo},{hi})" if self.kind is FunctorKind.RAISE else f"T({hi},{lo})"

    __repr__ = __str__


_FUNCTOR_RE = re.compile(r"^\s*T\(\s*([-0-9/]+)\s*,\s*([-0-9/]+)\s*\)\s*$")


def parse_functor(text: str) -> FunctorLabel:
    if text.strip() == "sw":
        return FunctorLabel.switch()
    mt = _FUNCTOR_RE.match(text)
    if not mt:
        raise SupercharError(f"cannot parse functor {text!r} (expected T(a,a+1), T(a+1,a) or sw)")
    p, q = parse_half(mt.group(1)), parse_half(mt.group(2))
    if q == p + 2:
        return FunctorLabel.raise_(p)
    if p == q + 2:
        return FunctorLabel.lower(q)
    raise SupercharError(f"functor {text!r} does not join adjacent positions")


def functors_for(kind: SupergroupKind, lo: int, hi: int) -> Iterator[FunctorLabel]:
    """All translation functors with ``lo <= a < hi`` (doubled), plus ``sw`` for the odd family."""
    if kind.tail is not None:
        lo = max(lo, kind.tail)
    start = lo if (lo - kind.coord_parity) % 2 == 0 else lo + 1
    for a in range(start, hi, 2):
        yield FunctorLabel.raise_(a)
        yield FunctorLabel.lower(a)
    if kind.family is Family.OSP_ODD:
        yield FunctorLabel.switch()


# -- local access ----------------------------------------------------------------

def _tail_symbol(d: WeightDiagram) -> str:
    """Single symbol at the tail of a tailless diagram."""
    if d.tail_crosses:
        return CROSS
    return d.tail_core or EMPTY


def _sym(d: WeightDiagram, p: int) -> str:
    if p == d.kind.tail:
        return _tail_symbol(d)
    return d.at(p)


def _rebuild(d: WeightDiagram, changes: dict, tail=None) -> WeightDiagram:
    """Replace body symbols; ``tail`` is ``(crosses, core, indicator)`` when it changes."""
    syms = d.symbols
    for p, s in changes.items():
        if s == EMPTY:
            syms.pop(p, None)
        else:
            syms[p] = s
    k, core, ind = tail if tail is not None else (d.tail_crosses, d.tail_core, d.indicator)
    return WeightDiagram(d.kind, tuple(syms.items()), k, core, ind)


def _set_pair(d: WeightDiagram, p: int, sp: str, q: int, sq: str, bracket=None) -> WeightDiagram:
    """Tailless diagram with symbols ``sp`` at ``p`` and ``sq`` at ``q`` (``p`` may be the tail)."""
    fam = d.kind.family
    if p != d.kind.tail:
        return _rebuild(d, {p: sp, q: sq})
    if fam is Family.OSP_ODD:
        tail = (1, None, 1) if sp == CROSS else (0, None if sp == EMPTY else sp, None)
    else:
        if sp == EMPTY:
            tail = (0, None, d.indicator if bracket is None else bracket)
        else:
            tail = (0, sp, None)
    return _rebuild(d, {q: sq}, tail)


# -- the Euler tables ------------------------------------------------------------

o, x = EMPTY, CROSS

RAISE_TABLE = {
    (o, o): [], (o, LT): [(LT, o)], (o, GT): [], (o, x): [(LT, GT)],
    (LT, o): [], (LT, LT): [], (LT, GT): [], (LT, x): [],
    (GT, o): [(o, GT)], (GT, LT): [(o, x), (x, o)], (GT, GT): [], (GT, x): [(x, GT)],
    (x, o): [(LT, GT)], (x, LT): [(LT, x)], (x, GT): [], (x, x): [],
}

# T_{0,1} and T_{1,0} at the even tail: (tail, position 1) -> [(tail, bracket, position 1)]
TAIL_RAISE_TABLE = {
    (o, o): [], (o, LT): [], (o, GT): [], (o, x): [],
    (GT, LT): [(o, 1, x), (o, -1, x)],
    (GT, o): [(o, 1, GT), (o, -1, GT)],
    (GT, GT): [], (GT, x): [],
}
TAIL_LOWER_TABLE = {
    (o, o): [], (o, LT): [], (o, GT): [(GT, None, o)], (o, x): [(GT, None, LT)],
    (GT, LT): [], (GT, o): [], (GT, GT): [], (GT, x): [],
}
del o, x


def _lower_table(pair: tuple) -> list:
    """``T_{a+1,a}`` is the raising table read with the two positions exchanged."""
    p, q = pair
    return [(s, r) for r, s in RAISE_TABLE[(q, p)]]


def _check_kind(d: WeightDiagram, kind: SupergroupKind):
    if d.kind != kind:
        raise SupercharError(f"label {to_text(d)!r} belongs to {d.kind}, not {kind}")


def _euler_one(d: WeightDiagram, f: FunctorLabel) -> KGroupElement:
    kind = d.kind
    if not d.is_tailless:
        raise SupercharError(f"Euler labels must be tailless: {to_text(d)!r}")
    fam = kind.family
    out = KGroupElement(Basis.EULER)
    if f.kind is FunctorKind.SWITCH:
        if fam is not Family.OSP_ODD:
            raise SupercharError("the switch functor is defined for the odd family only")
        t = _tail_symbol(d)
        c = {EMPTY: 1, CROSS: -1}.get(t, 0)
        return KGroupElement.single(Basis.EULER, d, c)
    a = f.a
    if kind.tail is not None and a < kind.tail or (a - kind.coord_parity) % 2:
        raise SupercharError(f"{f} is not a functor for {kind}")
    p, q = a, a + 2
    pair = (_sym(d, p), _sym(d, q))
    if fam is Family.OSP_EVEN and a == 0:
        table = TAIL_RAISE_TABLE if f.kind is FunctorKind.RAISE else TAIL_LOWER_TABLE
        for tail_s, bracket, s1 in table[pair]:
            out = out + KGroupElement.single(Basis.EULER, _set_pair(d, p, tail_s, q, s1, bracket))
        return out
    rows = RAISE_TABLE[pair] if f.kind is FunctorKind.RAISE else _lower_table(pair)
    for sp, sq in rows:
        out = out + KGroupElement.single(Basis.EULER, _set_pair(d, p, sp, q, sq))
    return out


def translate_euler(x: KGroupElement, f: FunctorLabel) -> KGroupElement:
    """Apply a functor to an element of the Euler basis."""
    if x.basis is not Basis.EULER:
        raise SupercharError("translate_euler needs an Euler-basis element")
    out = KGroupElement(Basis.EULER)
    for d, c in x.terms.items():
        out = out + _euler_one(d, f).scale(c)
    return out


# -- simple and projective labels --------------------------------------------------

def switch_simple_pim(x: KGroupElement) -> KGroupElement:
    """The switch functor on simple or projective labels (odd family)."""
    if x.basis is Basis.EULER:
        return translate_euler(x, FunctorLabel.switch())
    out = {}
    for d, c in x.terms.items():
        if d.kind.family is not Family.OSP_ODD:
            raise SupercharError("the switch functor is defined for the odd family only")
        if d.tail_core is not None:
            continue
        img = d if d.tail_crosses == 0 else _rebuild(d, {}, (d.tail_crosses, None, -d.indicator))
        out[img] = out.get(img, 0) + c
    return KGroupElement(x.basis, out)


def _block_atypicality(kind: SupergroupKind, gamma: tuple) -> int:
    """Number of crosses of any diagram with the given gamma label."""
    return kind.n - sum(1 for _, c in gamma if c == 1)


def _target_atypicality(d: WeightDiagram, f: FunctorLabel) -> int:
    plus, minus = f.gamma_shift(d.kind)
    g = block_label(d).shifted(plus, minus).gamma
    if any(abs(c) > 1 for _, c in g):
        return -1
    return _block_atypicality(d.kind, g)


def _unsupported(d, f, what):
    raise UnsupportedConfiguration(f"{f} on {what} {to_text(d)!r} is outside the implemented tables")


def _tail(d):
    return d.tail_crosses, d.tail_core, d.indicator


def _elementary_pairs(d: WeightDiagram, a: int) -> list:
    """Elementary changes at ``(a, a+1)`` in which ``d`` takes part.

    Returns ``(lambda, mu, T)`` with ``T(L_lambda) = L_mu`` and hence
    ``T*(P_mu) = P_lambda``.
    """
    kind = d.kind
    p, q = a, a + 2
    R, L = FunctorLabel.raise_(a), FunctorLabel.lower(a)
    out = []
    if kind.tail is None or p != kind.tail:
        if kind.family is Family.OSP_EVEN and p == 0:
            return out
        table = [
            ((CROSS, EMPTY), (GT, LT), L),  # a)
            ((LT, EMPTY), (EMPTY, LT), L),  # b)
            ((EMPTY, LT), (LT, EMPTY), R),
            ((GT, EMPTY), (EMPTY, GT), R),  # c)
            ((EMPTY, GT), (GT, EMPTY), L),
        ]
        here = (d.at(p), d.at(q))
        for lam, mu, f in table:
            if here == lam:
                out.append((d, _rebuild(d, {p: mu[0], q: mu[1]}), f))
            if here == mu:
                out.append((_rebuild(d, {p: lam[0], q: lam[1]}), d, f))
        return out
    if kind.family is not Family.OSP_ODD:
        return out
    k, core, ind = _tail(d)
    s1 = d.at(q)

    def minus(kk):
        return (kk, None, -1) if kk else (0, None, None)

    # at) (+) x^k o -> x^{k-1}> <
    if k >= 1 and core is None and ind == 1 and s1 == EMPTY:
        out.append((d, _rebuild(d, {q: LT}, (k - 1, GT, None)), L))
    if core == GT and s1 == LT:
        out.append((_rebuild(d, {q: EMPTY}, (k + 1, None, 1)), d, L))
    # bt) x^k> o <-> (-) x^k >   and   ct) x^k< o <-> (-) x^k <
    for sym, f_in, f_out in ((GT, R, L), (LT, L, R)):
        if core == sym and s1 == EMPTY:
            other = _rebuild(d, {q: sym}, minus(k))
            out.append((d, other, f_in))
            out.append((other, d, f_out))
        if core is None and s1 == sym and (k == 0 or ind == -1):
            other = _rebuild(d, {q: EMPTY}, (k, sym, None))
            out.append((d, other, f_out))
            out.append((other, d, f_in))
    return out


def _odd_pairs(d: WeightDiagram, f: FunctorLabel, simple: bool) -> Optional[WeightDiagram]:
    if f.kind is FunctorKind.SWITCH:
        return None
    for lam, mu, t in _elementary_pairs(d, f.a):
        if simple and lam == d and t == f:
            return mu
        if not simple and mu == d and t.adjoint == f:
            return lam
    return None


def _even_simple(d: WeightDiagram, f: FunctorLabel) -> KGroupElement:
    k, core, _ = _tail(d)
    s1 = d.at(2)
    L = Basis.SIMPLE
    if f.kind is FunctorKind.RAISE:
        if core != GT:
            return KGroupElement(L)
        if s1 == EMPTY and k >= 1:
            return KGroupElement.single(L, _rebuild(d, {2: GT}, (k, None, None)))
        if s1 == CROSS:
            return KGroupElement.single(L, _rebuild(d, {2: GT}, (k + 1, None, None)))
        if s1 == EMPTY and k == 0:
            return KGroupElement(L, {_rebuild(d, {2: GT}, (0, None, s)): 1 for s in (1, -1)})
        _unsupported(d, f, "simple label")
    if core == GT or s1 not in (EMPTY, GT):
        return KGroupElement(L)
    if s1 == EMPTY and k >= 1:
        return KGroupElement.single(L, _rebuild(d, {2: LT}, (k - 1, GT, None)))
    if s1 == GT and k >= 1:
        return KGroupElement.single(L, _rebuild(d, {2: EMPTY}, (k, GT, None)))
    if s1 == GT and k == 0:
        return KGroupElement.single(L, _rebuild(d, {2: EMPTY}, (0, GT, None)))
    _unsupported(d, f, "simple label")


def translate_simple(d: WeightDiagram, f: FunctorLabel) -> KGroupElement:
    """Image of a simple label under an elementary change (or the even tail rules)."""
    if f.kind is FunctorKind.SWITCH:
        return switch_simple_pim(KGroupElement.single(Basis.SIMPLE, d))
    if d.kind.family is Family.OSP_EVEN and f.a == 0:
        if atypicality(d) < _target_atypicality(d, f):
            _unsupported(d, f, "simple label")
        return _even_simple(d, f)
    img = _odd_pairs(d, f, simple=True)
    if img is None:
        _unsupported(d, f, "simple label")
    return KGroupElement.single(Basis.SIMPLE, img)


def _even_pim(d: WeightDiagram, f: FunctorLabel) -> KGroupElement:
    k, core, _ = _tail(d)
    s1 = d.at(2)
    P = Basis.PIM
    if f.kind is FunctorKind.LOWER:  # T_{1,0}
        if core == GT:
            return KGroupElement(P)
        if k >= 1 and s1 == GT:  # a')
            first = _rebuild(d, {2: EMPTY}, (k, GT, None))
            second = _rebuild(d, {2: CROSS}, (k - 1, GT, None))
            return KGroupElement(P, {first: 1, second: 1})
        if k == 0 and s1 == GT:  # b')
            return KGroupElement.single(P, _rebuild(d, {2: EMPTY}, (0, GT, None)))
        _unsupported(d, f, "projective label")
    if core != GT:
        return KGroupElement(P)
    if s1 == LT:  # c')
        return KGroupElement.single(P, _rebuild(d, {2: EMPTY}, (k + 1, None, None)))
    if s1 == EMPTY and k >= 1:  # d')
        return KGroupElement.single(P, _rebuild(d, {2: GT}, (k, None, None)))
    if s1 == EMPTY and k == 0:  # e')
        return KGroupElement(P, {_rebuild(d, {2: GT}, (0, None, s)): 1 for s in (1, -1)})
    _unsupported(d, f, "projective label")


def translate_pim(d: WeightDiagram, f: FunctorLabel) -> KGroupElement:
    """Image of a projective label under an elementary change."""
    if f.kind is FunctorKind.SWITCH:
        return switch_simple_pim(KGroupElement.single(Basis.PIM, d))
    if d.kind.family is Family.OSP_EVEN and f.a == 0:
        if atypicality(d) > _target_atypicality(d, f):
            _unsupported(d, f, "projective label")
        return _even_pim(d, f)
    img = _odd_pairs(d, f, simple=False)
    if img is None:
        _unsupported(d, f, "projective label")
    return KGroupElement.single(Basis.PIM, img)


# -- typicalization ------------------------------------------------------------------

@dataclass(frozen=True)
class PathStep:
    """``[P(target)] = T([P(source)]) - sum [P(s)] for s in subtract``."""

    functor: FunctorLabel
    source: WeightDiagram
    target: WeightDiagram
    subtract: tuple = ()

    def __str__(self):
        s = f"P({to_text(self.target)}) = {self.functor} P({to_text(self.source)})"
        for sub in self.subtract:
            s += f" - P({to_text(sub)})"
        return s


def _shift_step(d: WeightDiagram, start: int) -> PathStep:
    """Push the run of core symbols starting at ``start`` one step right."""
    q = start
    while d.at(q) != EMPTY:
        if d.at(q) == CROSS:
            raise SupercharError("internal: a cross inside the core run")
        q += 2
    p = q - 2
    s = d.at(p)
    source = _rebuild(d, {p: EMPTY, q: s})
    # P(< o) = T_{p,q} P(o <);  P(> o) = T_{q,p} P(o >)
    f = FunctorLabel.raise_(p) if s == LT else FunctorLabel.lower(p)
    return PathStep(f, source, d)


def reduction_step(d: WeightDiagram) -> Optional[PathStep]:
    """One step of the constructive typicalization, or None for typical ``d``."""
    if atypicality(d) == 0:
        return None
    kind = d.kind
    fam = kind.family
    crosses = d.cross_positions
    if crosses:
        t = crosses[-1]
        if d.at(t + 2) == EMPTY:
            # a): P(x o) = T_{t,t+1} P(> <)
            return PathStep(FunctorLabel.raise_(t), _rebuild(d, {t: GT, t + 2: LT}), d)
        return _shift_step(d, t + 2)
    # only tail crosses remain
    first = kind.tail + 2
    if d.at(first) != EMPTY:
        return _shift_step(d, first)
    k, core, ind = _tail(d)
    t0 = kind.tail
    if fam is Family.OSP_ODD:
        if core is None and ind == 1:  # at)
            return PathStep(FunctorLabel.raise_(t0), _rebuild(d, {first: LT}, (k - 1, GT, None)), d)
        if core is None:  # (-) case via the switch functor
            return PathStep(FunctorLabel.switch(), _rebuild(d, {}, (k, None, 1)), d)
        if core == GT:  # bt)
            return PathStep(FunctorLabel.lower(t0), _rebuild(d, {first: GT}, (k, None, -1)), d)
        # ct)
        return PathStep(FunctorLabel.raise_(t0), _rebuild(d, {first: LT}, (k, None, -1)), d)
    if core is None:  # c'
        return PathStep(FunctorLabel.raise_(0), _rebuild(d, {first: LT}, (k - 1, GT, None)), d)
    # a': P(x^k> o) = T_{1,0} P(x^k >) - P(x^{k-1}> x)
    source = _rebuild(d, {first: GT}, (k, None, None))
    sub = _rebuild(d, {first: CROSS}, (k - 1, GT, None))
    return PathStep(FunctorLabel.lower(0), source, d, (sub,))


def typicalization_path(d: WeightDiagram) -> list:
    """Steps from a typical seed up to ``d`` (empty for typical ``d``)."""
    steps = []
    cur = d
    while True:
        step = reduction_step(cur)
        if step is None:
            break
        steps.append(step)
        cur = step.source
        if len(steps) > 10_000:
            raise SupercharError("typicalization did not terminate")
    steps.reverse()
    return steps
