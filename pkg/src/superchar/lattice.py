"""Supergroup kinds, weights, rho, the Weyl group and Euler-label normalization.

All coordinates are stored *doubled* so that half-integers are exact: the
real coordinate ``3/2`` is stored as ``3``.  Weights are stored rho-shifted,
i.e. the tuple ``a`` holds ``2*(lambda+rho)`` on the epsilon basis and ``b``
on the delta basis.
"""

from __future__ import annotations

import enum
import itertools
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from .errors import EnumerationCapError, ParityError, SupercharError

DEFAULT_MAX_ENUM = 10**7


class Family(enum.Enum):
    GL = "gl"
    OSP_ODD = "osp-odd"
    OSP_EVEN = "osp-even"


@dataclass(frozen=True)
class SupergroupKind:
    """GL(m,n), SOSP(2m+1,2n) (``OSP_ODD``) or SOSP(2m,2n) (``OSP_EVEN``).

    GL with ``m < n`` is only accepted when ``allow_m_lt_n`` is set: the
    Borel subgroup is fixed for ``m >= n`` and the smaller case reuses the
    same formulas unchanged.
    """

    family: Family
    m: int
    n: int
    allow_m_lt_n: bool = False

    def __post_init__(self):
        if isinstance(self.family, str):
            object.__setattr__(self, "family", Family(self.family))
        if self.m < 1 or self.n < 1:
            raise SupercharError(f"m and n must be positive, got m={self.m}, n={self.n}")
        if self.family is Family.GL and self.m < self.n and not self.allow_m_lt_n:
            raise SupercharError("GL(m,n) with m < n requires allow_m_lt_n=True")

    @property
    def is_osp(self) -> bool:
        return self.family is not Family.GL

    @property
    def tail(self) -> Optional[int]:
        """Doubled tail position (1 for odd, 0 for even, None for GL)."""
        return {Family.GL: None, Family.OSP_ODD: 1, Family.OSP_EVEN: 0}[self.family]

    @property
    def coord_parity(self) -> int:
        """Required parity of every doubled coordinate."""
        return 1 if self.family is Family.OSP_ODD else 0

    def __str__(self):
        if self.family is Family.GL:
            return f"GL({self.m},{self.n})"
        if self.family is Family.OSP_ODD:
            return f"SOSP({2 * self.m + 1},{2 * self.n})"
        return f"SOSP({2 * self.m},{2 * self.n})"


def fmt_half(x: int) -> str:
    """Render a doubled integer as an integer or half-integer literal."""
    return str(x // 2) if x % 2 == 0 else f"{x}/2"


def parse_half(text: str) -> int:
    """Parse ``3/2``, ``-1/2``, ``2`` into a doubled integer."""
    value = Fraction(text.strip())
    doubled = value * 2
    if doubled.denominator != 1:
        raise ParityError(f"{text!r} is not an integer or half-integer")
    return int(doubled)


@dataclass(frozen=True)
class Weight:
    """A weight in doubled coordinates.

    ``shifted=True`` (the default) means the coordinates are those of
    ``lambda + rho`` and must have the family's parity.  ``shifted=False``
    marks a plain vector such as rho itself, which for GL(m,n) with m+n odd
    is half-integral.
    """

    kind: SupergroupKind
    a: tuple
    b: tuple
    shifted: bool = True

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))
        if len(self.a) != self.kind.m or len(self.b) != self.kind.n:
            raise SupercharError(
                f"{self.kind} needs {self.kind.m}+{self.kind.n} coordinates, "
                f"got {len(self.a)}+{len(self.b)}"
            )
        if not self.shifted:
            return
        p = self.kind.coord_parity
        for x in self.a + self.b:
            if x % 2 != p:
                raise ParityError(
                    f"coordinate {fmt_half(x)} has wrong parity for {self.kind} "
                    f"(expected {'half-integers' if p else 'integers'})"
                )

    @classmethod
    def from_plain(cls, kind: SupergroupKind, a: Sequence[int], b: Sequence[int]) -> "Weight":
        """Build from doubled coordinates of lambda (not rho-shifted)."""
        r = rho(kind)
        return cls(kind, tuple(x + y for x, y in zip(a, r.a)), tuple(x + y for x, y in zip(b, r.b)))

    def plain(self) -> tuple:
        """Doubled coordinates ``(a, b)`` of lambda itself."""
        r = rho(self.kind)
        return (
            tuple(x - y for x, y in zip(self.a, r.a)),
            tuple(x - y for x, y in zip(self.b, r.b)),
        )

    @property
    def vector(self) -> tuple:
        return self.a + self.b

    def __add__(self, other: Sequence[int]) -> "Weight":
        v = tuple(x + y for x, y in zip(self.vector, other))
        m = self.kind.m
        return Weight(self.kind, v[:m], v[m:])

    def to_text(self) -> str:
        fam = self.kind.family.value
        a = ",".join(fmt_half(x) for x in self.a)
        b = ",".join(fmt_half(x) for x in self.b)
        return f"group={fam} m={self.kind.m} n={self.kind.n} a={a} b={b}"

    def __str__(self):
        a = ",".join(fmt_half(x) for x in self.a)
        b = ",".join(fmt_half(x) for x in self.b)
        return f"({a}|{b})"


def rho(kind: SupergroupKind) -> Weight:
    """The rho vector for the fixed Borel subalgebra, doubled coordinates."""
    m, n = kind.m, kind.n
    if kind.family is Family.GL:
        a = [m - n - 2 * i for i in range(1, m + 1)]
        b = [m + n + 2 - 2 * j for j in range(1, n + 1)]
    elif kind.family is Family.OSP_ODD:
        if m >= n:
            a = [-1 + (2 * (m - n - i + 1) if i <= m - n else 0) for i in range(1, m + 1)]
            b = [1] * n
        else:
            a = [-1] * m
            b = [1 + (2 * (n - m - j) if j <= n - m else 0) for j in range(1, n + 1)]
    else:
        if m > n:
            a = [2 * (m - n - i) if i <= m - n else 0 for i in range(1, m + 1)]
            b = [0] * n
        else:
            a = [0] * m
            b = [2 * (n - m - j + 1) if j <= n - m else 0 for j in range(1, n + 1)]
    return Weight(kind, tuple(a), tuple(b), shifted=False)


def _borel_order(kind: SupergroupKind) -> list:
    """Basis vectors from top to bottom in the ordering fixed by the simple roots."""
    m, n = kind.m, kind.n
    eps = [("e", i) for i in range(m)]
    dlt = [("d", j) for j in range(n)]
    if kind.family is Family.GL:
        return eps + dlt

    def interleave(first, second):
        out = []
        for x, y in itertools.zip_longest(first, second):
            out += [z for z in (x, y) if z is not None]
        return out

    if kind.family is Family.OSP_ODD:
        if m >= n:
            return eps[: m - n] + interleave(eps[m - n :], dlt)
        return dlt[: n - m] + interleave(eps, dlt[n - m :])
    if m > n:
        return eps[: m - n] + interleave(dlt, eps[m - n :])
    return dlt[: n - m + 1] + interleave(eps, dlt[n - m + 1 :])


def positive_roots(kind: SupergroupKind) -> tuple:
    """``(even, odd)`` positive roots as integer vectors of length m+n.

    Vectors are in real (not doubled) coordinates, so ``e^{alpha/2}`` has the
    doubled exponent ``alpha``.
    """
    m, n = kind.m, kind.n
    size = m + n

    def vec(*pairs):
        v = [0] * size
        for (typ, idx), c in pairs:
            v[idx if typ == "e" else m + idx] += c
        return tuple(v)

    even, odd = [], []
    osp = kind.is_osp
    for typ, count in (("e", m), ("d", n)):
        for i, j in itertools.combinations(range(count), 2):
            even.append(vec(((typ, i), 1), ((typ, j), -1)))
            if osp:
                even.append(vec(((typ, i), 1), ((typ, j), 1)))
    if kind.family is Family.OSP_ODD:
        even += [vec((("e", i), 1)) for i in range(m)]
    if osp:
        even += [vec((("d", j), 2)) for j in range(n)]

    order = _borel_order(kind)
    for hi, lo in itertools.combinations(order, 2):
        if hi[0] == lo[0]:
            continue
        odd.append(vec((hi, 1), (lo, -1)))
        if osp:
            odd.append(vec((hi, 1), (lo, 1)))
    if kind.family is Family.OSP_ODD:
        odd += [vec((("d", j), 1)) for j in range(n)]
    return even, odd


def true_rho(kind: SupergroupKind) -> tuple:
    """Doubled ``sum(even positive) - sum(odd positive)``, i.e. 2*rho from the root data.

    Agrees with :func:`rho` for the orthosymplectic families; for GL the
    tabulated rho differs by a W-invariant vector orthogonal to every root.
    """
    even, odd = positive_roots(kind)
    size = kind.m + kind.n
    return tuple(sum(r[k] for r in even) - sum(r[k] for r in odd) for k in range(size))


def in_lambda_plus(w: Weight) -> bool:
    """Strict dominance of a rho-shifted weight (membership in Lambda^+)."""
    a, b = w.a, w.b
    fam = w.kind.family
    dec_b = all(x > y for x, y in zip(b, b[1:]))
    if fam is Family.GL:
        return all(x > y for x, y in zip(a, a[1:])) and dec_b
    if fam is Family.OSP_ODD:
        return all(x > y for x, y in zip(a, a[1:])) and a[-1] >= 1 and dec_b and b[-1] >= 1
    head = a[:-1]
    return (
        all(x > y for x, y in zip(head, head[1:]))
        and (not head or head[-1] > abs(a[-1]))
        and dec_b
        and b[-1] > 0
    )


@dataclass(frozen=True)
class WeylElement:
    """A pair of signed permutations acting by ``(w v)_i = sign_i * v_{perm_i}``."""

    perm_a: tuple
    signs_a: tuple
    perm_b: tuple
    signs_b: tuple

    @property
    def sign(self) -> int:
        """epsilon(w): the determinant of the action on the weight lattice."""
        s = _perm_sign(self.perm_a) * _perm_sign(self.perm_b)
        for x in self.signs_a + self.signs_b:
            s *= x
        return s

    def act(self, v: Sequence[int]) -> tuple:
        m = len(self.perm_a)
        a, b = v[:m], v[m:]
        return tuple(s * a[p] for p, s in zip(self.perm_a, self.signs_a)) + tuple(
            s * b[p] for p, s in zip(self.perm_b, self.signs_b)
        )

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        # (self*other)(v) = self(other(v))
        pa = tuple(other.perm_a[p] for p in self.perm_a)
        sa = tuple(s * other.signs_a[p] for p, s in zip(self.perm_a, self.signs_a))
        pb = tuple(other.perm_b[p] for p in self.perm_b)
        sb = tuple(s * other.signs_b[p] for p, s in zip(self.perm_b, self.signs_b))
        return WeylElement(pa, sa, pb, sb)


def _perm_sign(perm: Sequence[int]) -> int:
    inv = sum(1 for i, j in itertools.combinations(range(len(perm)), 2) if perm[i] > perm[j])
    return -1 if inv % 2 else 1


def weyl_order(kind: SupergroupKind) -> int:
    m, n = kind.m, kind.n
    if kind.family is Family.GL:
        return math.factorial(m) * math.factorial(n)
    c = 2**n * math.factorial(n) * math.factorial(m)
    return c * (2**m if kind.family is Family.OSP_ODD else 2 ** (m - 1))


def max_enum() -> int:
    return int(os.environ.get("SUPERCHAR_MAX_ENUM", DEFAULT_MAX_ENUM))


def weyl_elements(kind: SupergroupKind, cap: Optional[int] = None) -> Iterator[WeylElement]:
    """Enumerate W(g_0) exactly once per element."""
    cap = max_enum() if cap is None else cap
    if weyl_order(kind) > cap:
        raise EnumerationCapError(f"|W| = {weyl_order(kind)} for {kind} exceeds cap {cap}")
    m, n = kind.m, kind.n
    fam = kind.family

    def sign_choices(k, even_only):
        if fam is Family.GL:
            return [(1,) * k]
        out = list(itertools.product((1, -1), repeat=k))
        if even_only:
            out = [s for s in out if math.prod(s) == 1]
        return out

    a_side = [
        (p, s)
        for p in itertools.permutations(range(m))
        for s in sign_choices(m, fam is Family.OSP_EVEN)
    ]
    b_side = [(p, s) for p in itertools.permutations(range(n)) for s in sign_choices(n, False)]
    for pa, sa in a_side:
        for pb, sb in b_side:
            yield WeylElement(pa, sa, pb, sb)


def _sort_desc(vals: Sequence[int]) -> Optional[tuple]:
    """Sort strictly decreasing; returns ``(sign, sorted)`` or None on repeats."""
    if len(set(vals)) != len(vals):
        return None
    inv = sum(1 for i, j in itertools.combinations(range(len(vals)), 2) if vals[i] < vals[j])
    return (-1 if inv % 2 else 1), tuple(sorted(vals, reverse=True))


def normalize_euler(w: Weight) -> Optional[tuple]:
    """Move a rho-shifted weight into Lambda^+ by the Weyl group.

    Returns ``(epsilon(w), dominant)`` such that E(lambda) equals
    ``epsilon * E(dominant)``, or None when the stabilizer is nontrivial and
    the Euler class vanishes.
    """
    fam = w.kind.family
    a, b = list(w.a), list(w.b)
    sign = 1

    if fam is Family.GL:
        ra, rb = _sort_desc(a), _sort_desc(b)
        if ra is None or rb is None:
            return None
        return ra[0] * rb[0], Weight(w.kind, ra[1], rb[1])

    if 0 in b:
        return None
    neg_b = sum(1 for x in b if x < 0)
    rb = _sort_desc([abs(x) for x in b])
    if rb is None:
        return None
    sign *= rb[0] * (-1) ** neg_b

    if fam is Family.OSP_ODD:
        if 0 in a:
            return None
        ra = _sort_desc([abs(x) for x in a])
        if ra is None:
            return None
        sign *= ra[0] * (-1) ** sum(1 for x in a if x < 0)
        return sign, Weight(w.kind, ra[1], rb[1])

    # type D: an even number of sign flips, so epsilon is the permutation sign
    zeros = a.count(0)
    if zeros > 1:
        return None
    ra = _sort_desc([abs(x) for x in a])
    if ra is None:
        return None
    sign *= ra[0]
    dom = list(ra[1])
    if zeros == 0 and sum(1 for x in a if x < 0) % 2 == 1:
        dom[-1] = -dom[-1]
    return sign, Weight(w.kind, tuple(dom), rb[1])
