"""Brute-force translation functors in the character ring and audit sweeps.

The oracle never looks at the functor tables: it adds every weight of the
standard module to ``lambda + rho``, keeps the results in the target block,
and moves each into the dominant chamber with the Weyl group.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

from .diagrams import (
    block_label,
    diagram_to_weights,
    enumerate_diagrams,
    gamma_of_vector,
    to_text,
    weight_to_diagram,
)
from .functors import FunctorKind, FunctorLabel, functors_for, translate_euler
from .kgroup import Basis, KGroupElement
from .lattice import Family, SupergroupKind, Weight, normalize_euler


def _standard_weights(kind: SupergroupKind, f: FunctorLabel) -> list:
    size = kind.m + kind.n
    out = []
    signs = (1, -1) if kind.is_osp else ((1,) if f.kind is not FunctorKind.LOWER else (-1,))
    for k in range(size):
        for s in signs:
            v = [0] * size
            v[k] = 2 * s
            out.append(tuple(v))
    if kind.family is Family.OSP_ODD:
        out.append((0,) * size)
    return out


def translate_euler_oracle(d, f: FunctorLabel) -> KGroupElement:
    """``T(E(lambda))`` by tensor-expand, block-project and normalize."""
    kind = d.kind
    if f.kind is FunctorKind.SWITCH and kind.family is not Family.OSP_ODD:
        raise ValueError("the switch functor is defined for the odd family only")
    v = diagram_to_weights(d)[0].vector
    source = dict(gamma_of_vector(kind, v))
    plus, minus = f.gamma_shift(kind)
    for p, c in ((plus, 1), (minus, -1)):
        if p is not None:
            source[p] = source.get(p, 0) + c
    target = tuple(sorted((p, c) for p, c in source.items() if c))
    m = kind.m
    out = {}
    for eta in _standard_weights(kind, f):
        mu = tuple(x + y for x, y in zip(v, eta))
        if gamma_of_vector(kind, mu) != target:
            continue
        res = normalize_euler(Weight(kind, mu[:m], mu[m:]))
        if res is None:
            continue
        sign, dom = res
        lab = weight_to_diagram(dom)
        out[lab] = out.get(lab, 0) + sign
    return KGroupElement(Basis.EULER, out)


@dataclass
class Report:
    """Outcome of a verification sweep."""

    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "status": "pass" if self.ok else "fail",
            "checked": self.checked,
            "failures": self.failures[:50],
            "failure_count": len(self.failures),
            "seconds": round(self.seconds, 3),
        }

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}: {self.checked} cases, {len(self.failures)} mismatches ({self.seconds:.2f}s)"


def verify_functor_tables(kind: SupergroupKind, max_position: int = 8, gl_start: int = 0) -> Report:
    """Compare the tables with the oracle on every tailless diagram of the window.

    ``max_position`` counts positions, the tail included.
    """
    rep = Report(f"functor tables {kind} window {max_position}")
    t0 = time.perf_counter()
    if kind.family is Family.GL:
        lo = 2 * gl_start
        hi = 2 * (gl_start + max_position)
    else:
        lo = kind.tail
        hi = kind.tail + 2 * max_position
    funcs = list(functors_for(kind, lo, hi))
    for d in enumerate_diagrams(kind, max_position, tailless_only=True, gl_start=gl_start):
        src = KGroupElement.single(Basis.EULER, d)
        for f in funcs:
            rep.checked += 1
            got = translate_euler(src, f)
            want = translate_euler_oracle(d, f)
            if got != want:
                rep.failures.append(
                    {"diagram": to_text(d), "functor": str(f), "table": str(got), "oracle": str(want)}
                )
    rep.seconds = time.perf_counter() - t0
    return rep


def replay_pim(d, _memo=None) -> KGroupElement:
    """``[P_lambda]`` rebuilt along the typicalization path with the Euler tables."""
    from .functors import reduction_step

    memo = {} if _memo is None else _memo
    if d in memo:
        return memo[d]
    step = reduction_step(d)
    if step is None:
        out = KGroupElement.single(Basis.EULER, d)
    else:
        out = translate_euler(replay_pim(step.source, memo), step.functor)
        for sub in step.subtract:
            out = out - replay_pim(sub, memo)
    memo[d] = out
    return out


def verify_pims(kind: SupergroupKind, max_position: int = 8, gl_start: int = 0) -> Report:
    """Closed-form decompositions against the replay, plus character positivity for small ranks."""
    from .pims import pim_decomposition

    rep = Report(f"pim replay {kind} window {max_position}")
    t0 = time.perf_counter()
    memo = {}
    for d in enumerate_diagrams(kind, max_position, gl_start=gl_start):
        rep.checked += 1
        closed = pim_decomposition(d).terms
        replay = replay_pim(d, memo)
        if closed != replay:
            rep.failures.append({"diagram": to_text(d), "closed": str(closed), "replay": str(replay)})
    rep.seconds = time.perf_counter() - t0
    return rep


def _fock_operator(f: FunctorLabel, even: bool):
    from .fock import Model, apply_E, apply_F

    i, j = (f.a, f.a + 2) if f.kind is FunctorKind.RAISE else (f.a + 2, f.a)
    if even:
        return lambda x: apply_F(i, j, x)
    return lambda x: apply_E(i, j, x, Model.ODD)


def _primed(f: FunctorLabel) -> tuple:
    """``(T', factor)``: the odd functor matching an even one, shifted by 1/2."""
    factor = 2 if (f.kind is FunctorKind.LOWER and f.a == 0) else 1
    return FunctorLabel(f.kind, f.a + 1), factor


def _sigma_pairs(d):
    """Euler elements spanning the sigma eigenspaces that contain ``d``."""
    from .diagrams import replace_indicator
    from .fock import Embedding

    if d.indicator is None:
        return [(Embedding.PSI_PLUS, KGroupElement.single(Basis.EULER, d))]
    if d.indicator == -1:
        return []
    e, s = KGroupElement.single(Basis.EULER, d), KGroupElement.single(Basis.EULER, replace_indicator(d))
    return [(Embedding.PSI_PLUS, e + s), (Embedding.PSI_MINUS, e - s)]


def verify_commuting_squares(kind: SupergroupKind, max_position: int = 8) -> Report:
    """phi T = E phi (odd), psi T = F psi and T = alpha T' beta (even) on the window."""
    from .fock import Embedding, alpha_map, beta_map, embed_euler, euler_from_vector

    if kind.family is Family.GL:
        raise ValueError("the Fock-space squares concern the orthosymplectic families")
    rep = Report(f"commuting squares {kind} window {max_position}")
    t0 = time.perf_counter()
    lo, hi = kind.tail, kind.tail + 2 * max_position
    funcs = [f for f in functors_for(kind, lo, hi) if f.kind is not FunctorKind.SWITCH]
    even = kind.family is Family.OSP_EVEN
    odd_kind = SupergroupKind(Family.OSP_ODD, kind.m, kind.n)
    for d in enumerate_diagrams(kind, max_position, tailless_only=True):
        if not even:
            x = KGroupElement.single(Basis.EULER, d)
            for f in funcs:
                rep.checked += 1
                lhs = embed_euler(translate_euler(x, f), Embedding.PHI)
                rhs = _fock_operator(f, False)(embed_euler(x, Embedding.PHI))
                if lhs != rhs:
                    rep.failures.append({"square": "phi", "diagram": to_text(d), "functor": str(f)})
            continue
        for which, x in _sigma_pairs(d):
            for f in funcs:
                if f.a == 0 and which is Embedding.PSI_MINUS:
                    continue
                rep.checked += 1
                tx = translate_euler(x, f)
                psi_x = embed_euler(x, which)
                lhs = embed_euler(tx, which)
                if lhs != _fock_operator(f, True)(psi_x):
                    rep.failures.append({"square": which.value, "diagram": to_text(d), "functor": str(f)})
                if which is not Embedding.PSI_PLUS:
                    continue
                rep.checked += 1
                tp, factor = _primed(f)
                lifted = euler_from_vector(beta_map(psi_x), odd_kind)
                moved = embed_euler(translate_euler(lifted, tp), Embedding.PHI)
                if alpha_map(moved).scale(factor) != lhs:
                    rep.failures.append({"square": "alpha-beta", "diagram": to_text(d), "functor": str(f)})
    rep.seconds = time.perf_counter() - t0
    return rep


def random_fock_vector(kind: SupergroupKind, rng, max_index: int = 13, terms: int = 3):
    """A random odd-model vector with a few terms and small coefficients."""
    from .fock import FockVector, wedge_normalize

    cells = list(range(1, max_index + 1, 2))
    out = FockVector()
    for _ in range(terms):
        s = rng.sample(cells, kind.m)
        u = rng.sample(cells, kind.n)
        out = out + wedge_normalize(s, u, rng.randint(-3, 3))
    return out


def verify_serre(kind: SupergroupKind, count: int = 100, seed: int = 0) -> Report:
    """``[e,[e,f]] = 0`` for adjacent Chevalley generators on random odd-model vectors."""
    import random

    from .fock import Model, apply_E

    rep = Report(f"Serre relations {kind} x{count}")
    t0 = time.perf_counter()
    rng = random.Random(seed)
    for _ in range(count):
        x = random_fock_vector(kind, rng)
        a = rng.choice(range(1, 10, 2))
        for lower in (False, True):
            if lower:
                e = lambda y, a=a: apply_E(a + 2, a, y, Model.ODD)
                f = lambda y, a=a: apply_E(a + 4, a + 2, y, Model.ODD)
            else:
                e = lambda y, a=a: apply_E(a, a + 2, y, Model.ODD)
                f = lambda y, a=a: apply_E(a + 2, a + 4, y, Model.ODD)
            for g, h in ((e, f), (f, e)):
                rep.checked += 1
                val = g(g(h(x))) - g(h(g(x))).scale(2) + h(g(g(x)))
                if val:
                    rep.failures.append({"vector": str(x), "a": a, "lower": lower})
    rep.seconds = time.perf_counter() - t0
    return rep
