"""Command-line front end.

Exit codes: 0 success, 1 domain error, 2 verification failure, 3 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .diagrams import (
    bar_weight,
    cap_diagram,
    diagram_to_weights,
    p_set,
    parse_diagram,
    to_text,
    weight_to_diagram,
)
from .errors import DiagramSyntaxError, SupercharError
from .kgroup import Basis, KGroupElement
from .lattice import Family, SupergroupKind, Weight, parse_half

EXIT_OK, EXIT_DOMAIN, EXIT_VERIFY, EXIT_USAGE = 0, 1, 2, 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


def parse_weight(text: str, kind: SupergroupKind) -> Weight:
    """``a=5/2,3/2 b=1/2`` (or ``a=...;b=...``) as rho-shifted coordinates."""
    parts = {}
    for chunk in text.replace(";", " ").split():
        if "=" not in chunk:
            raise DiagramSyntaxError(f"expected key=values in weight, got {chunk!r}", text, text.find(chunk))
        key, _, vals = chunk.partition("=")
        key = key.strip()
        if key not in ("a", "b"):
            raise DiagramSyntaxError(f"unknown weight key {key!r}", text, text.find(chunk))
        parts[key] = tuple(parse_half(v) for v in vals.split(",") if v.strip())
    return Weight(kind, parts.get("a", ()), parts.get("b", ()))


def _kind(args) -> SupergroupKind:
    return SupergroupKind(Family(args.group), args.m, args.n, allow_m_lt_n=args.allow_m_lt_n)


def _label(args, kind):
    if args.diagram is not None:
        return parse_diagram(args.diagram, kind)
    if args.weight is not None:
        return weight_to_diagram(parse_weight(args.weight, kind))
    raise _UsageError("one of --diagram or --weight is required")


def _emit(args, text_lines, payload):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _cmd_diagram(args, kind):
    d = _label(args, kind)
    ws = diagram_to_weights(d)
    _emit(
        args,
        [to_text(d)] + [str(w) for w in ws],
        {"diagram": to_text(d), "weights": [{"a": w.a, "b": w.b} for w in ws]},
    )
    return EXIT_OK


def _cmd_pim(args, kind):
    from .pims import pim_decomposition

    dec = pim_decomposition(_label(args, kind))
    _emit(args, dec.lines(), dec.to_json())
    return EXIT_OK


def _cmd_char(args, kind):
    from .charring import euler_character
    from .pims import pim_character

    d = _label(args, kind)
    if args.basis == "pim":
        ch = pim_character(d)
    elif args.basis == "euler":
        ch = euler_character(diagram_to_weights(d)[0])
    else:
        raise _UsageError("char supports --basis euler or pim")
    lines = [f"{c:+d} * e[{','.join(str(x) for x in v)}]" for v, c in sorted(ch.terms.items(), reverse=True)]
    _emit(args, lines, {"diagram": to_text(d), "basis": args.basis, "terms": ch.to_json()})
    return EXIT_OK


def _cmd_translate(args, kind):
    from .functors import parse_functor, translate_euler, translate_pim, translate_simple

    if args.functor is None:
        raise _UsageError("translate needs --functor")
    d = _label(args, kind)
    f = parse_functor(args.functor)
    if args.basis == "euler":
        out = translate_euler(KGroupElement.single(Basis.EULER, d), f)
    elif args.basis == "pim":
        out = translate_pim(d, f)
    else:
        out = translate_simple(d, f)
    payload = out.to_json()
    payload.update(source=to_text(d), functor=str(f))
    _emit(args, out.lines(), payload)
    return EXIT_OK


def _cmd_caps(args, kind):
    d = _label(args, kind)
    caps = cap_diagram(d)
    lines = [str(caps)] if caps.caps else []
    _emit(args, lines, {"diagram": to_text(d), "caps": [list(c) for c in caps.caps]})
    return EXIT_OK


def _cmd_pset(args, kind):
    d = _label(args, kind)
    texts = sorted(to_text(x) for x in p_set(d))
    _emit(args, texts, {"diagram": to_text(d), "pset": texts})
    return EXIT_OK


def _cmd_bar(args, kind):
    d = _label(args, kind)
    res = bar_weight(d)
    from .lattice import fmt_half

    em = sorted(res.emerald)
    _emit(
        args,
        [to_text(res.bar), "emerald: " + ", ".join(fmt_half(p) for p in em)],
        {"diagram": to_text(d), "bar": to_text(res.bar), "emerald": em},
    )
    return EXIT_OK


def _cmd_verify(args, kind):
    from . import oracle

    gl_start = -2 if kind.family is Family.GL else 0
    reports = [
        oracle.verify_functor_tables(kind, args.max_pos, gl_start=gl_start),
        oracle.verify_pims(kind, args.max_pos, gl_start=gl_start),
    ]
    if kind.is_osp:
        reports.append(oracle.verify_commuting_squares(kind, args.max_pos))
        reports.append(oracle.verify_serre(kind, seed=args.seed))
    ok = all(r.ok for r in reports)
    _emit(
        args,
        [r.summary() for r in reports],
        {"group": args.group, "m": kind.m, "n": kind.n, "ok": ok, "reports": [r.to_json() for r in reports]},
    )
    return EXIT_OK if ok else EXIT_VERIFY


_COMMANDS = {
    "diagram": (_cmd_diagram, "weight to diagram and back"),
    "pim": (_cmd_pim, "decomposition of a projective cover into Euler classes"),
    "char": (_cmd_char, "Euler or PIM character"),
    "translate": (_cmd_translate, "apply a translation functor"),
    "caps": (_cmd_caps, "cap diagram of a tailless diagram"),
    "pset": (_cmd_pset, "diagrams reached along the caps"),
    "bar": (_cmd_bar, "bar weight of an odd diagram with tail crosses"),
    "verify": (_cmd_verify, "oracle audit, replay, commuting squares and Serre checks"),
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--group", choices=[f.value for f in Family], default="osp-odd")
    common.add_argument("--m", type=int, default=1)
    common.add_argument("--n", type=int, default=1)
    common.add_argument("--allow-m-lt-n", action="store_true", help="accept GL(m,n) with m < n")
    common.add_argument("--json", action="store_true")
    common.add_argument("--diagram")
    common.add_argument("--weight", help="rho-shifted, e.g. 'a=5/2,3/2 b=1/2'")
    common.add_argument("--functor", help="T(a,a+1), T(a+1,a) or sw")
    common.add_argument("--basis", choices=[b.value for b in Basis], default=None)
    common.add_argument("--max-pos", type=int, default=8)
    common.add_argument("--seed", type=int, default=0)

    parser = _Parser(prog="superchar", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True
    for name, (_, help_text) in _COMMANDS.items():
        sub.add_parser(name, parents=[common], help=help_text)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.basis is None:
            args.basis = "pim" if args.command == "char" else "euler"
        kind = _kind(args)
        return _COMMANDS[args.command][0](args, kind)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except SupercharError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
