"""Acceptance suite: one PASS/FAIL line per criterion."""

import itertools
import random
import time

import pytest
import sympy

from superchar.charring import denominators, euler_character, lambda_exponent, numerator
from superchar.diagrams import (
    atypicality,
    bar_weight,
    cap_diagram,
    diagram_to_weights,
    enumerate_diagrams,
    p_set,
    parse_diagram,
    to_text,
    weight_to_diagram,
)
from superchar.fock import Embedding, alpha_map, beta_map, embed_euler, euler_from_vector
from superchar.functors import FunctorLabel, translate_euler
from superchar.kgroup import Basis, KGroupElement
from superchar.lattice import Family, SupergroupKind, Weight, in_lambda_plus
from superchar.oracle import verify_commuting_squares, verify_functor_tables, verify_pims, verify_serre
from superchar.pims import pim_character, pim_decomposition

from conftest import even, gl, odd

OSP = (Family.OSP_ODD, Family.OSP_EVEN)
SMALL = [
    SupergroupKind(f, m, n)
    for f in Family
    for m in (1, 2)
    for n in (1, 2)
    if not (f is Family.GL and m < n)
]


def report(capsys, name, ok, detail):
    with capsys.disabled():
        print(f"\n{'PASS' if ok else 'FAIL'} {name}: {detail}")


def decomposition(text, kind):
    d = pim_decomposition(parse_diagram(text, kind))
    return {to_text(x): c for x, c in d.terms.terms.items()}


GOLDEN = [
    # SOSP(7,6), tailless
    (odd(3, 3), "; x > < x", {"; x > < x": 1, "; x > < o x": 1, "; o > < x o x": 1, "; o > < o x x": 1}),
    (
        odd(3, 3),
        "; x x o x",
        {
            "; x x o x": 1,
            "; x o x x": 1,
            "; x x o o x": 1,
            "; x o x o x": 1,
            "; o x o x o x": 1,
            "; o o x x o x": 1,
            "; o x o o x x": 1,
            "; o o x o x x": 1,
        },
    ),
    # SOSP(5,4), odd tail
    (odd(2, 2), "x1>; <", {">; < x": -1, ">; < o x": 1}),
    (odd(2, 2), "(+) x2;", {"(+) x1; o x": -1, "; x x": -1, "(+) x1; o o x": 1, "; x o x": 1}),
    (odd(2, 2), "(-) x2;", {"(+) x1; o x": 1, "; x x": -1, "(+) x1; o o x": -1, "; x o x": 1}),
    # SOSP(4,2), even tail
    (even(2, 1), ">; > <", {">; > <": 1}),
    (even(2, 1), ">; x", {">; x": 1, ">; o x": 1}),
    (even(2, 1), ">; < >", {">; < >": 1}),
    (even(2, 1), "x1; o >", {"[+] ; x >": 1, "[-] ; x >": 1}),
    (even(2, 1), "x1; >", {"[+] ; > x": 1, "[-] ; > x": 1}),
    (even(2, 1), "x1>;", {">; x": -1, ">; o x": 1}),
    # SOSP(4,4)
    (even(2, 2), "x2;", {"[+] ; x x": -1, "[-] ; x x": -1, "[+] ; x o x": 1, "[-] ; x o x": 1}),
]


def test_criterion_1_golden_examples(capsys):
    t0 = time.perf_counter()
    bad = []
    for kind, text, want in GOLDEN:
        got = decomposition(text, kind)
        if got != want:
            bad.append((str(kind), text, got))
    # the SOSP(4,2) sum identity [P(x1>;) + P(>; x)] = 2 E(>; o x)
    k = even(2, 1)
    total = pim_decomposition(parse_diagram("x1>;", k)).terms + pim_decomposition(parse_diagram(">; x", k)).terms
    if total != KGroupElement.single(Basis.EULER, parse_diagram(">; o x", k), 2):
        bad.append(("SOSP(4,2)", "sum identity", str(total)))
    caps = str(cap_diagram(parse_diagram("; x x o x", odd(3, 3))))
    if caps != "3/2-13/2, 5/2-7/2, 9/2-11/2":
        bad.append(("SOSP(7,6)", "caps", caps))
    res = bar_weight(parse_diagram("(+) x3; x", odd(4, 4)))
    if to_text(res.bar) != "(+) x1; x o o x o x" or sorted(res.emerald) != [1, 9, 13]:
        bad.append(("SOSP(9,8)", "bar weight", to_text(res.bar)))
    dt = time.perf_counter() - t0
    ok = not bad and dt < 5
    report(capsys, "criterion 1 golden examples", ok, f"{len(GOLDEN) + 3} checks, {len(bad)} mismatches, {dt:.2f}s")
    assert not bad, bad
    assert dt < 5


def test_criterion_2_oracle_audit(capsys):
    t0 = time.perf_counter()
    checked, failures = 0, []
    for fam, m, n in itertools.product(OSP, (1, 2, 3), (1, 2, 3)):
        rep = verify_functor_tables(SupergroupKind(fam, m, n), 8)
        checked += rep.checked
        failures += rep.failures
    dt = time.perf_counter() - t0
    ok = not failures and dt < 120
    report(capsys, "criterion 2 oracle audit", ok, f"{checked} cases, {len(failures)} mismatches, {dt:.1f}s")
    assert not failures, failures[:5]
    assert dt < 120


def _factor_two_case():
    """``T_{1,0} = alpha o 2 T_{3/2,1/2} o beta`` on ``[+](o x) + [-](o x)``."""
    k = even(1, 1)
    x = KGroupElement(Basis.EULER, {parse_diagram("[+] ; x", k): 1, parse_diagram("[-] ; x", k): 1})
    f = FunctorLabel.lower(0)
    lhs = embed_euler(translate_euler(x, f), Embedding.PSI_PLUS)
    lifted = euler_from_vector(beta_map(embed_euler(x, Embedding.PSI_PLUS)), odd(1, 1))
    moved = embed_euler(translate_euler(lifted, FunctorLabel.lower(1)), Embedding.PHI)
    return bool(lhs) and alpha_map(moved).scale(2) == lhs and alpha_map(moved) != lhs


def test_criterion_3_commuting_squares(capsys):
    checked, failures = 0, []
    for fam, m, n in itertools.product(OSP, (1, 2, 3), (1, 2, 3)):
        rep = verify_commuting_squares(SupergroupKind(fam, m, n), 8)
        checked += rep.checked
        failures += rep.failures
    factor_two = _factor_two_case()
    ok = not failures and factor_two
    report(
        capsys,
        "criterion 3 commuting squares",
        ok,
        f"{checked} cases, {len(failures)} mismatches, factor-2 case {'holds' if factor_two else 'fails'}",
    )
    assert not failures, failures[:5]
    assert factor_two


def test_criterion_4_replay(capsys):
    checked, failures = 0, []
    kinds = [SupergroupKind(f, m, n) for f, m, n in itertools.product(OSP, (1, 2, 3), (1, 2, 3))]
    for kind in kinds:
        rep = verify_pims(kind, 8)
        checked += rep.checked
        failures += rep.failures
    for m, n in ((1, 1), (2, 1), (2, 2), (3, 2), (3, 3)):
        rep = verify_pims(gl(m, n), 6, gl_start=-2)
        checked += rep.checked
        failures += rep.failures
    report(capsys, "criterion 4 replay equivalence", not failures, f"{checked} diagrams, {len(failures)} mismatches")
    assert not failures, failures[:5]


def _dominant_weights(kind, bound):
    vals = range(-bound, bound + 1, 2) if kind.family is Family.OSP_ODD else range(-(bound - 1), bound, 2)
    out = []
    for v in itertools.product(vals, repeat=kind.m + kind.n):
        w = Weight(kind, v[: kind.m], v[kind.m :])
        if in_lambda_plus(w):
            out.append(w)
    return out


def test_criterion_5_characters(capsys):
    bad_identity = bad_positive = 0
    identities = pims = 0
    for kind in SMALL:
        d0, d1 = denominators(kind)
        for w in _dominant_weights(kind, 5)[:12]:
            identities += 1
            if d0 * euler_character(w) != d1 * numerator(w):
                bad_identity += 1
        start = -1 if kind.family is Family.GL else 0
        for d in enumerate_diagrams(kind, 4, gl_start=start):
            pims += 1
            ch = pim_character(d)
            lam = lambda_exponent(diagram_to_weights(d)[0])
            if min(ch.terms.values()) < 0 or ch.coeff(lam) < 1:
                bad_positive += 1
    rng = random.Random(0)
    families = rank_bad = 0
    for kind in SMALL:
        ws = _dominant_weights(kind, 5)
        for sample in (ws, rng.sample(ws, max(2, len(ws) // 2))):
            nums = [numerator(w) for w in sample]
            keys = sorted({v for x in nums for v in x.terms})
            rank = sympy.Matrix([[x.coeff(v) for v in keys] for x in nums]).rank()
            families += 1
            if rank != len(sample):
                rank_bad += 1
    ok = not (bad_identity or bad_positive or rank_bad) and families >= 20
    report(
        capsys,
        "criterion 5 characters",
        ok,
        f"D0*Ch=D1*N {identities - bad_identity}/{identities}, "
        f"PIM positivity {pims - bad_positive}/{pims}, rank {families - rank_bad}/{families} families",
    )
    assert not bad_identity and not bad_positive and not rank_bad
    assert families >= 20


def test_criterion_6_structure(capsys):
    problems = []
    diagrams = 0
    for kind in [odd(2, 2), odd(3, 3), even(2, 2), even(3, 3), gl(2, 2), gl(3, 3)]:
        for d in enumerate_diagrams(kind, 7, gl_start=-1):
            if not d.is_tailless:
                continue
            diagrams += 1
            if len(set(p_set(d))) != 2 ** atypicality(d):
                problems.append(("pset", to_text(d)))
            caps = cap_diagram(d).caps
            occupied = {p for p, _ in d.body}
            if kind.tail is not None and not d.tail_empty:
                occupied.add(kind.tail)
            for (l1, r1), (l2, r2) in itertools.combinations(caps, 2):
                if l1 < l2 < r1 < r2 or l2 < l1 < r2 < r1:
                    problems.append(("crossing", to_text(d)))
            covered = occupied | {r for _, r in caps}
            for l, r in caps:
                if any(q not in covered for q in range(l + 2, r, 2)):
                    problems.append(("free under cap", to_text(d)))
    trips = 0
    for kind in SMALL:
        for w in _dominant_weights(kind, 7):
            trips += 1
            d = weight_to_diagram(w)
            if diagram_to_weights(d) != [w] or parse_diagram(to_text(d), kind) != d:
                problems.append(("round trip", str(w)))
    serre = verify_serre(odd(3, 3), count=100, seed=0)
    ok = not problems and serre.ok
    report(
        capsys,
        "criterion 6 structure",
        ok,
        f"{diagrams} cap diagrams, {trips} round trips, Serre {serre.checked} cases, {len(problems)} problems",
    )
    assert not problems, problems[:5]
    assert serre.ok
