"""Weight diagrams, cores, block labels, cap diagrams, the move set and bar weights.

Positions are doubled integers, like every coordinate in the package: the
odd orthosymplectic tail ``1/2`` is stored as ``1``.  A diagram stores its
non-tail symbols in ``body`` (GL diagrams have no tail, so everything lives
in the body) and the tail multiset separately as a cross count plus an
optional core symbol.

Text grammar (the only serialization)::

    diagram   := indicator? tailpart? body          (orthosymplectic)
               | "@" INT body                       (GL)
    indicator := "(+)" | "(-)" | "[+]" | "[-]"
    tailpart  := ("x" INT?)? (">" | "<")? ";"
    body      := (" " ("o" | "x" | ">" | "<"))*

The body starts at the first non-tail position (GL: at the anchor) and
trailing ``o`` are omitted on output.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field, replace
from typing import Iterable, Iterator, Optional

from .errors import DiagramSyntaxError, DominanceError, SupercharError
from .lattice import Family, SupergroupKind, Weight, fmt_half

EMPTY, LT, GT, CROSS = "o", "<", ">", "x"
_ALIASES = {"∘": EMPTY, "×": CROSS, "X": CROSS, "O": EMPTY}


@dataclass(frozen=True)
class WeightDiagram:
    kind: SupergroupKind
    body: tuple = ()
    tail_crosses: int = 0
    tail_core: Optional[str] = None
    indicator: Optional[int] = None

    def __post_init__(self):
        body = tuple(sorted((int(p), s) for p, s in dict(self.body).items() if s != EMPTY))
        object.__setattr__(self, "body", body)
        kind = self.kind
        tail = kind.tail
        par = kind.coord_parity
        for p, s in body:
            if s not in (LT, GT, CROSS):
                raise DominanceError(f"unknown symbol {s!r}")
            if p % 2 != par or (tail is not None and p <= tail):
                raise DominanceError(f"position {fmt_half(p)} is not a non-tail position of {kind}")
        if kind.family is Family.GL:
            if self.tail_crosses or self.tail_core or self.indicator:
                raise DominanceError("GL diagrams have no tail")
        else:
            if self.tail_crosses < 0:
                raise DominanceError("negative tail cross count")
            if self.tail_core not in (None, LT, GT):
                raise DominanceError(f"bad tail core {self.tail_core!r}")
            if kind.family is Family.OSP_EVEN and self.tail_core == LT:
                raise DominanceError("the even tail cannot contain <")
            if self.indicator not in (None, 1, -1):
                raise DominanceError("indicator must be +1, -1 or None")
            need = self.needs_indicator
            if need and self.indicator is None:
                raise DominanceError(f"diagram needs a sign indicator ({self._ind_role})")
            if not need and self.indicator is not None:
                raise DominanceError(f"sign indicator not allowed here ({self._ind_role})")
        nx = sum(1 for _, s in body if s in (GT, CROSS)) + self.tail_crosses + (self.tail_core == GT)
        ny = sum(1 for _, s in body if s in (LT, CROSS)) + self.tail_crosses + (self.tail_core == LT)
        if nx != kind.m or ny != kind.n:
            raise DominanceError(
                f"diagram has #(>)+#(x)={nx}, #(<)+#(x)={ny}; {kind} needs {kind.m}, {kind.n}"
            )

    # -- structure ---------------------------------------------------------
    @property
    def _ind_role(self):
        return "odd: tail with crosses and no core" if self.kind.family is Family.OSP_ODD else "even: empty tail"

    @property
    def needs_indicator(self) -> bool:
        fam = self.kind.family
        if fam is Family.OSP_ODD:
            return self.tail_crosses > 0 and self.tail_core is None
        if fam is Family.OSP_EVEN:
            return self.tail_crosses == 0 and self.tail_core is None
        return False

    @property
    def symbols(self) -> dict:
        return dict(self.body)

    def at(self, pos: int) -> str:
        """Symbol at a non-tail position ('o' when empty)."""
        return self.symbols.get(pos, EMPTY)

    @property
    def tail_empty(self) -> bool:
        return self.tail_crosses == 0 and self.tail_core is None

    @property
    def cross_positions(self) -> list:
        return [p for p, s in self.body if s == CROSS]

    @property
    def is_tailless(self) -> bool:
        fam = self.kind.family
        if fam is Family.GL:
            return True
        if fam is Family.OSP_EVEN:
            return self.tail_crosses == 0
        k = self.tail_crosses
        return k + (self.tail_core is not None) <= 1 and (k == 0 or self.indicator == 1)

    @property
    def support_end(self) -> int:
        """Largest occupied position (the tail if the body is empty)."""
        if self.body:
            return self.body[-1][0]
        return self.kind.tail if self.kind.tail is not None else 0

    def with_body(self, symbols: dict, **changes) -> "WeightDiagram":
        return replace(self, body=tuple(symbols.items()), **changes)

    def __str__(self):
        return to_text(self)

    def __repr__(self):
        return f"WeightDiagram({self.kind}, {to_text(self)!r})"


def tailless_diagram(kind, symbols, tail_crosses=0, tail_core=None, indicator=None) -> WeightDiagram:
    """Construct a diagram filling in the indicator forced by taillessness.

    Odd kinds: a lone tail cross gets ``(+)``.  Even kinds with an empty tail
    must be given the bracket explicitly.
    """
    if kind.family is Family.OSP_ODD:
        indicator = 1 if (tail_crosses > 0 and tail_core is None) else None
    elif kind.family is Family.OSP_EVEN and not (tail_crosses == 0 and tail_core is None):
        indicator = None
    return WeightDiagram(kind, tuple(symbols.items()), tail_crosses, tail_core, indicator)


# -- text ------------------------------------------------------------------

def to_text(d: WeightDiagram) -> str:
    kind = d.kind
    syms = d.symbols
    if kind.family is Family.GL:
        lo, hi = d.body[0][0], d.body[-1][0]
        cells = [syms.get(p, EMPTY) for p in range(lo, hi + 1, 2)]
        return f"@{lo // 2}" + "".join(" " + c for c in cells)
    out = ""
    if d.indicator is not None:
        sign = "+" if d.indicator > 0 else "-"
        out += (f"({sign})" if kind.family is Family.OSP_ODD else f"[{sign}]") + " "
    if d.tail_crosses:
        out += f"x{d.tail_crosses}"
    out += d.tail_core or ""
    out += ";"
    if d.body:
        start, hi = kind.tail + 2, d.body[-1][0]
        out += "".join(" " + syms.get(p, EMPTY) for p in range(start, hi + 1, 2))
    return out


_TAIL_RE = re.compile(r"^\s*(?:x(\d*))?\s*([<>])?\s*$")


def parse_diagram(text: str, kind: SupergroupKind) -> WeightDiagram:
    """Parse the canonical grammar (tolerant of extra whitespace and unicode symbols)."""
    s = text
    i = len(s) - len(s.lstrip())
    indicator = None
    if kind.family is Family.GL:
        mt = re.match(r"\s*@(-?\d+)", s)
        if not mt:
            raise DiagramSyntaxError("GL diagram must start with @INT", text, i)
        pos = 2 * int(mt.group(1))
        body_text, body_off = s[mt.end():], mt.end()
        tail_crosses, tail_core = 0, None
    else:
        if s[i:i + 3] in ("(+)", "(-)", "[+]", "[-]"):
            br = s[i]
            if (br == "(") != (kind.family is Family.OSP_ODD):
                raise DiagramSyntaxError(
                    f"indicator {s[i:i + 3]} does not belong to {kind}", text, i
                )
            indicator = 1 if s[i + 1] == "+" else -1
            i += 3
        semi = s.find(";", i)
        if semi >= 0:
            tail_text = s[i:semi].replace("×", "x")
            mt = _TAIL_RE.match(tail_text)
            if not mt:
                raise DiagramSyntaxError("bad tail (expected e.g. 'x3>;')", text, i)
            if mt.group(1) is None and "x" not in tail_text:
                tail_crosses = 0
            else:
                tail_crosses = int(mt.group(1)) if mt.group(1) else 1
            tail_core = mt.group(2)
            body_text, body_off = s[semi + 1:], semi + 1
        else:
            tail_crosses, tail_core = 0, None
            body_text, body_off = s[i:], i
        pos = kind.tail + 2
    symbols = {}
    for mt in re.finditer(r"\S+", body_text):
        tok = _ALIASES.get(mt.group(), mt.group())
        if tok not in (EMPTY, LT, GT, CROSS):
            raise DiagramSyntaxError(f"unknown symbol {mt.group()!r}", text, body_off + mt.start())
        if tok != EMPTY:
            symbols[pos] = tok
        pos += 2
    try:
        return WeightDiagram(kind, tuple(symbols.items()), tail_crosses, tail_core, indicator)
    except DominanceError as exc:
        raise DiagramSyntaxError(f"invalid diagram {text.strip()!r}: {exc}") from exc


# -- weights <-> diagrams --------------------------------------------------

def _xy(w: Weight):
    if w.kind.family is Family.GL:
        return list(w.a), [-y for y in w.b]
    # tail entries may carry signs, e.g. (-1/2,-1/2|1/2,1/2); the canonical-form
    # check in weight_to_diagram rejects anything else left of the tail
    return [abs(x) for x in w.a], list(w.b)


def weight_to_diagram(w: Weight) -> WeightDiagram:
    """The weight diagram of a dominant rho-shifted weight in canonical form."""
    kind = w.kind
    X, Y = _xy(w)
    tail = kind.tail
    if tail is not None:
        low = [v for v in X + Y if v < tail]
        if low:
            raise DominanceError(f"coordinate {fmt_half(low[0])} lies left of the tail")
    symbols = {}
    for p in sorted(set(X + Y)):
        if p == tail:
            continue
        cx, cy = X.count(p), Y.count(p)
        if cx > 1 or cy > 1:
            raise DominanceError(f"repeated coordinate at position {fmt_half(p)}")
        symbols[p] = CROSS if cx and cy else (GT if cx else LT)
    tail_crosses, tail_core = 0, None
    if tail is not None:
        cx, cy = X.count(tail), Y.count(tail)
        tail_crosses = min(cx, cy)
        diff = cx - cy
        if abs(diff) > 1 or (kind.family is Family.OSP_EVEN and diff < 0):
            raise DominanceError(f"tail multiset ({cx} '>', {cy} '<') is not allowed for {kind}")
        tail_core = GT if diff > 0 else (LT if diff < 0 else None)
    candidates = [None]
    if kind.family is Family.OSP_ODD and tail_crosses and tail_core is None:
        candidates = [1, -1]
    elif kind.family is Family.OSP_EVEN and not tail_crosses and tail_core is None:
        candidates = [1 if w.a[-1] > 0 else -1]
    for ind in candidates:
        d = WeightDiagram(kind, tuple(symbols.items()), tail_crosses, tail_core, ind)
        if w in diagram_to_weights(d):
            return d
    raise DominanceError(
        f"{w} is not a dominant weight in canonical order "
        f"(expected {diagram_to_weights(d)[0]} for this diagram shape)"
    )


def diagram_to_weights(d: WeightDiagram) -> list:
    """All canonical rho-shifted dominant weights with this diagram (a singleton)."""
    kind = d.kind
    X, Y = [], []
    for p, s in d.body:
        if s in (GT, CROSS):
            X.append(p)
        if s in (LT, CROSS):
            Y.append(p)
    if kind.family is Family.GL:
        a = sorted(X, reverse=True)
        b = sorted((-y for y in Y), reverse=True)
        return [Weight(kind, a, b)]
    t = kind.tail
    ntail_x = d.tail_crosses + (d.tail_core == GT)
    ntail_y = d.tail_crosses + (d.tail_core == LT)
    a = sorted(X, reverse=True)
    b = sorted(Y, reverse=True) + [t] * ntail_y
    if kind.family is Family.OSP_ODD:
        if ntail_x:
            first = -1 if d.indicator == -1 else 1
            a += [first] + [-1] * (ntail_x - 1)
    else:
        a += [0] * ntail_x
        if ntail_x == 0 and d.indicator == -1:
            a[-1] = -a[-1]
    return [Weight(kind, a, b)]


# -- invariants of a diagram -------------------------------------------------

def atypicality(d: WeightDiagram) -> int:
    return d.tail_crosses + len(d.cross_positions)


@dataclass(frozen=True)
class Core:
    kind: SupergroupKind
    body: tuple
    tail_core: Optional[str]
    bracket: Optional[int]

    def __str__(self):
        if self.kind.family is Family.GL:
            if not self.body:
                return "@"
            lo = self.body[0][0]
            syms = dict(self.body)
            return f"@{lo // 2}" + "".join(
                " " + syms.get(p, EMPTY) for p in range(lo, self.body[-1][0] + 1, 2)
            )
        out = "" if self.bracket is None else ("[+] " if self.bracket > 0 else "[-] ")
        out += (self.tail_core or "") + ";"
        syms = dict(self.body)
        if self.body:
            out += "".join(
                " " + syms.get(p, EMPTY) for p in range(self.kind.tail + 2, self.body[-1][0] + 1, 2)
            )
        return out


def _keeps_bracket(d: WeightDiagram) -> Optional[int]:
    if d.kind.family is Family.OSP_EVEN and atypicality(d) == 0 and d.tail_empty:
        return d.indicator
    return None


def core_of(d: WeightDiagram) -> Core:
    """Strip crosses and the indicator (the even typical bracket is kept)."""
    body = tuple((p, s) for p, s in d.body if s != CROSS)
    return Core(d.kind, body, d.tail_core, _keeps_bracket(d))


@dataclass(frozen=True)
class BlockLabel:
    """gl-infinity weight of the Fock vector, plus the even typical bracket."""

    gamma: tuple
    bracket: Optional[int] = None

    def shifted(self, plus: Optional[int], minus: Optional[int]) -> "BlockLabel":
        g = dict(self.gamma)
        for p, c in ((plus, 1), (minus, -1)):
            if p is not None:
                g[p] = g.get(p, 0) + c
        return BlockLabel(tuple(sorted((p, c) for p, c in g.items() if c)), None)


def gamma_of_vector(kind: SupergroupKind, v) -> tuple:
    """W-invariant block weight of an arbitrary rho-shifted vector.

    Each '<' at position p contributes +gamma_p, each '>' contributes
    -gamma_p; gamma_0 = 0 in the even family.
    """
    m = kind.m
    g = {}
    if kind.family is Family.GL:
        xs, ys = v[:m], [-y for y in v[m:]]
    else:
        xs, ys = [abs(x) for x in v[:m]], [abs(y) for y in v[m:]]
    for p in xs:
        g[p] = g.get(p, 0) - 1
    for p in ys:
        g[p] = g.get(p, 0) + 1
    if kind.family is Family.OSP_EVEN:
        g.pop(0, None)
    return tuple(sorted((p, c) for p, c in g.items() if c))


def block_label(d: WeightDiagram) -> BlockLabel:
    g = {}
    for p, s in d.body:
        if s == LT:
            g[p] = g.get(p, 0) + 1
        elif s == GT:
            g[p] = g.get(p, 0) - 1
    if d.tail_core is not None and d.kind.family is Family.OSP_ODD:
        g[d.kind.tail] = 1 if d.tail_core == LT else -1
    return BlockLabel(tuple(sorted(g.items())), _keeps_bracket(d))


# -- caps ----------------------------------------------------------------------

@dataclass(frozen=True)
class CapDiagram:
    caps: tuple  # ((left, right), ...) sorted by left end

    def __str__(self):
        return ", ".join(f"{fmt_half(l)}-{fmt_half(r)}" for l, r in self.caps)


def _caps(crosses: Iterable[int], occupied: set) -> list:
    """Join each cross, right to left, to the next free position on its right."""
    used = set()
    caps = []
    for p in sorted(crosses, reverse=True):
        q = p + 2
        while q in occupied or q in used:
            q += 2
        used.add(q)
        caps.append((p, q))
    return sorted(caps)


def _require_tailless(d: WeightDiagram):
    if not d.is_tailless:
        raise DominanceError(f"diagram {to_text(d)!r} is not tailless")


def cap_diagram(d: WeightDiagram) -> CapDiagram:
    _require_tailless(d)
    crosses = list(d.cross_positions)
    occupied = {p for p, _ in d.body}
    if d.tail_crosses:
        crosses.append(d.kind.tail)
    if d.kind.tail is not None and not d.tail_empty:
        occupied.add(d.kind.tail)
    return CapDiagram(tuple(_caps(crosses, occupied)))


def _move(d: WeightDiagram, moves) -> WeightDiagram:
    syms = d.symbols
    tail_crosses = d.tail_crosses
    for left, right in moves:
        if left == d.kind.tail:
            tail_crosses -= 1
        else:
            del syms[left]
        syms[right] = CROSS
    indicator = d.indicator
    if d.kind.family is Family.OSP_ODD:
        indicator = 1 if (tail_crosses and d.tail_core is None) else None
    return WeightDiagram(d.kind, tuple(syms.items()), tail_crosses, d.tail_core, indicator)


def p_set_moves(d: WeightDiagram) -> list:
    """``[(diagram, frozenset of moved left ends), ...]`` over all cap subsets."""
    caps = cap_diagram(d).caps
    out = []
    for choice in itertools.product((False, True), repeat=len(caps)):
        moves = [c for c, take in zip(caps, choice) if take]
        out.append((_move(d, moves), frozenset(l for l, _ in moves)))
    return out


def p_set(d: WeightDiagram) -> list:
    """The 2^k diagrams reached by moving crosses to the right ends of their caps."""
    return [x for x, _ in p_set_moves(d)]


# -- bar weight ----------------------------------------------------------------

@dataclass(frozen=True)
class BarResult:
    bar: WeightDiagram
    emerald: frozenset


def bar_weight(d: WeightDiagram) -> BarResult:
    """Relocate tail crosses to prescribed free positions (odd family)."""
    if d.kind.family is not Family.OSP_ODD:
        raise SupercharError("bar_weight needs an odd orthosymplectic diagram (prime_shift first)")
    k = d.tail_crosses
    if k == 0:
        raise DominanceError("bar_weight needs crosses at the tail")
    occupied = {p for p, _ in d.body}
    ends = {r for _, r in _caps(d.cross_positions, occupied)}

    def free_positions():
        q = d.kind.tail + 2
        while True:
            if q not in occupied and q not in ends:
                yield q
            q += 2

    free = list(itertools.islice(free_positions(), 2 * k))
    syms = d.symbols
    if d.tail_core is not None:
        targets = free[0 : 2 * k : 2]
        remaining = 0
    else:
        targets = free[1 : 2 * (k - 1) : 2]
        remaining = 1
    for q in targets:
        syms[q] = CROSS
    emerald = set(targets)
    if remaining:
        emerald.add(d.kind.tail)
    bar = WeightDiagram(
        d.kind, tuple(syms.items()), remaining, d.tail_core, 1 if remaining else None
    )
    return BarResult(bar, frozenset(emerald))


# -- even <-> odd shift ----------------------------------------------------------

def _odd_kind(kind):
    return SupergroupKind(Family.OSP_ODD, kind.m, kind.n)


def _even_kind(kind):
    return SupergroupKind(Family.OSP_EVEN, kind.m, kind.n)


def prime_shift(d: WeightDiagram, choose_sign: Optional[int] = None) -> WeightDiagram:
    """Shift an even diagram by +1/2 to an odd one (lambda -> lambda')."""
    if d.kind.family is not Family.OSP_EVEN:
        raise SupercharError("prime_shift needs an even orthosymplectic diagram")
    needs = d.tail_crosses > 0 and d.tail_core is None
    if needs and choose_sign not in (1, -1):
        raise SupercharError("tail has crosses and no '>': a sign (+1/-1) must be chosen")
    if not needs and choose_sign is not None:
        raise SupercharError("no sign may be chosen for this diagram")
    body = tuple((p + 1, s) for p, s in d.body)
    return WeightDiagram(_odd_kind(d.kind), body, d.tail_crosses, d.tail_core, choose_sign if needs else None)


def inverse_prime_shift(d: WeightDiagram, bracket: Optional[int] = None) -> WeightDiagram:
    """Shift an odd diagram without tail crosses or '<' back to the even family."""
    if d.kind.family is not Family.OSP_ODD:
        raise SupercharError("inverse_prime_shift needs an odd orthosymplectic diagram")
    if d.tail_crosses or d.tail_core == LT:
        raise DominanceError(f"{to_text(d)!r} has no even counterpart (tail holds x or <)")
    empty = d.tail_core is None
    if empty and bracket not in (1, -1):
        raise SupercharError("the even diagram has an empty tail: a bracket (+1/-1) is required")
    if not empty and bracket is not None:
        raise SupercharError("no bracket allowed: the tail is not empty")
    body = tuple((p - 1, s) for p, s in d.body)
    return WeightDiagram(_even_kind(d.kind), body, 0, d.tail_core, bracket if empty else None)


# -- enumeration -------------------------------------------------------------------

def enumerate_diagrams(
    kind: SupergroupKind, positions: int, tailless_only: bool = False, gl_start: int = 0
) -> Iterator[WeightDiagram]:
    """All dominant diagrams whose support lies in the first ``positions`` positions.

    For GL the window starts at the integer ``gl_start``.
    """
    m, n = kind.m, kind.n
    fam = kind.family
    if fam is Family.GL:
        cells = [2 * (gl_start + i) for i in range(positions)]
        for xs in itertools.combinations(cells, m):
            for ys in itertools.combinations(cells, n):
                syms = {p: GT for p in xs}
                for p in ys:
                    syms[p] = CROSS if p in syms else LT
                yield WeightDiagram(kind, tuple(syms.items()))
        return
    cells = [kind.tail + 2 * (i + 1) for i in range(positions - 1)]
    for combo in itertools.product((EMPTY, LT, GT, CROSS), repeat=len(cells)):
        nx = sum(1 for s in combo if s in (GT, CROSS))
        ny = sum(1 for s in combo if s in (LT, CROSS))
        rx, ry = m - nx, n - ny
        if rx < 0 or ry < 0:
            continue
        k, diff = min(rx, ry), rx - ry
        if abs(diff) > 1 or (fam is Family.OSP_EVEN and diff < 0):
            continue
        core = GT if diff > 0 else (LT if diff < 0 else None)
        body = tuple((p, s) for p, s in zip(cells, combo) if s != EMPTY)
        if fam is Family.OSP_ODD:
            inds = [1, -1] if (k and core is None) else [None]
        else:
            inds = [1, -1] if (not k and core is None) else [None]
        for ind in inds:
            d = WeightDiagram(kind, body, k, core, ind)
            if not tailless_only or d.is_tailless:
                yield d


def replace_indicator(d: WeightDiagram) -> WeightDiagram:
    """The sigma twist: flip a bracket or paren indicator, identity otherwise."""
    if d.indicator is None:
        return d
    return replace(d, indicator=-d.indicator)
