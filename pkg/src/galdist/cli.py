"""Command-line front end. Every subcommand prints one JSON document (or aligned
text with --pretty). Exit codes: 0 success, 1 domain error, 2 parse error."""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .cuspidal_lines import Registry, default_registry
from .distinction import distinguish
from .double_cosets import contributing_cosets, enumerate_cosets
from .errors import DomainError, ParseError
from .expr import format_expr, format_segment, parse_expr
from .ladders import Multisegment
from .lfactor_algebra import (LinearForm, pole_order, telescope_gamma_identity,
                              unramified_asai, unramified_rs)
from .segments import Segment, jacquet_discrete
from .spherical_periods import (PeriodSpec, alpha_factor, spherical_period_closed,
                                spherical_period_recursive)
from .symmetric_words import verify_reduction_lemma


class _ArgError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _ArgError(message)


def _q(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise ParseError(f"expected comma-separated integers, got {text!r}", 0) from None


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"expected a rational number, got {text!r}", 0) from None


def _segments(value) -> list[Segment]:
    items = list(value) if isinstance(value, (tuple, Multisegment)) else [value]
    if not all(isinstance(x, Segment) for x in items):
        raise ParseError("expected a product of segments", 0, ("Seg(...)", "St(...)"))
    return items


def _chars(text: str) -> list[str]:
    return [c.strip() for c in text.split(",") if c.strip()]


def _cmd_distinguish(ns, reg):
    v = distinguish(parse_expr(ns.expr), reg)
    return {"status": v.status.value, "trace": list(v.trace),
            "witness": list(v.witness) if v.witness else None}


def _cmd_cosets(ns, reg):
    mats = enumerate_cosets(_int_list(ns.mbar))
    return {"count": len(mats), "cosets": [[list(r) for r in a.entries] for a in mats]}


def _cmd_contrib(ns, reg):
    sigma = _segments(parse_expr(ns.sigma))
    mbar = _int_list(ns.mbar) if ns.mbar else None
    mats = contributing_cosets(sigma, reg, mbar)
    return {"sigma": format_expr(tuple(sigma)), "count": len(mats),
            "cosets": [[list(r) for r in a.entries] for a in mats]}


def _cmd_jacquet(ns, reg):
    (d,) = _segments(parse_expr(ns.seg))
    pieces = jacquet_discrete(d, _int_list(ns.partition), reg)
    return {"segment": format_segment(d),
            "pieces": None if pieces is None else [format_segment(p) for p in pieces]}


def _cmd_lfactor(ns, reg):
    form = LinearForm.var(ns.var)
    if ns.asai:
        kind, _, chars = ns.asai.partition(";")
        if kind.strip() not in ("+", "-"):
            raise ParseError("Asai sign must be '+' or '-'", 0, ("'+'", "'-'"))
        return {"value": str(unramified_asai(_chars(chars), kind.strip(), form))}
    if ns.rs:
        left, sep, right = ns.rs.partition(";")
        if not sep:
            raise ParseError("expected 'chars;chars'", len(ns.rs), ("';'",))
        return {"value": str(unramified_rs(_chars(left), _chars(right), form))}
    if ns.telescope:
        p = telescope_gamma_identity(ns.telescope, ns.k, form)
        return {"product": str(p), "atoms": p.to_json()}
    raise ParseError("one of --asai, --rs, --telescope is required", 0)


def _cmd_period(ns, reg):
    blocks = [tuple(_chars(b)) for b in ns.sigma.split("|")]
    if len(blocks) != ns.r:
        raise ParseError(f"--r {ns.r} but {len(blocks)} blocks given", 0)
    spec = PeriodSpec(tuple(blocks))
    out = {}
    if ns.mode in ("closed", "both"):
        out["closed"] = str(spherical_period_closed(spec))
    if ns.mode in ("recursive", "both"):
        out["recursive"] = str(spherical_period_recursive(spec))
    if ns.mode == "both":
        out["equal"] = out["closed"] == out["recursive"]
    return out


def _cmd_alpha(ns, reg):
    reg[ns.rho]
    p = alpha_factor(ns.rho, ns.k, ns.l)
    out = {"product": str(p), "atoms": p.to_json()}
    if ns.at is not None:
        out["at"] = _q(ns.at)
        out["poleOrder"] = pole_order(p, {"s": ns.at}, reg)
    return out


def _cmd_verify(ns, reg):
    rows = []
    for kind in ("BB", "AB"):
        for a in range(1, ns.max + 1):
            for b in range(1, ns.max + 1):
                rep = verify_reduction_lemma(kind, a, b)
                rows.append({"kind": kind, "a": a, "b": b, "ok": rep.ok,
                             "failures": len(rep.failures)})
    return {"ok": all(r["ok"] for r in rows), "results": rows}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="galdist", description=__doc__)
    common = _Parser(add_help=False)
    common.add_argument("--registry", help="registry JSON file")
    common.add_argument("--pretty", action="store_true", help="aligned text instead of JSON")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    c = sub.add_parser("distinguish", parents=[common])
    c.add_argument("--expr", required=True)
    c.set_defaults(fn=_cmd_distinguish)

    c = sub.add_parser("cosets", parents=[common])
    c.add_argument("--mbar", required=True)
    c.set_defaults(fn=_cmd_cosets)

    c = sub.add_parser("contrib", parents=[common])
    c.add_argument("--sigma", required=True)
    c.add_argument("--mbar")
    c.set_defaults(fn=_cmd_contrib)

    c = sub.add_parser("jacquet", parents=[common])
    c.add_argument("--seg", required=True)
    c.add_argument("--partition", required=True)
    c.set_defaults(fn=_cmd_jacquet)

    c = sub.add_parser("lfactor", parents=[common])
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("--asai", help='sign and characters, e.g. "+;a,b"')
    g.add_argument("--rs", help='two character lists, e.g. "a,b;c"')
    g.add_argument("--telescope", metavar="RHO")
    c.add_argument("--k", type=int, default=1)
    c.add_argument("--var", default="s")
    c.set_defaults(fn=_cmd_lfactor)

    c = sub.add_parser("period", parents=[common])
    c.add_argument("--r", type=int, required=True)
    c.add_argument("--sigma", required=True, help='blocks separated by "|", e.g. "a,b|c"')
    c.add_argument("--mode", choices=("closed", "recursive", "both"), default="both")
    c.set_defaults(fn=_cmd_period)

    c = sub.add_parser("alpha", parents=[common])
    c.add_argument("--rho", required=True)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--l", type=int, default=1)
    c.add_argument("--at", type=_fraction)
    c.set_defaults(fn=_cmd_alpha)

    c = sub.add_parser("verify-lemmas", parents=[common])
    c.add_argument("--max", type=int, default=4)
    c.set_defaults(fn=_cmd_verify)
    return p


def _table(rows: list[dict]) -> list[str]:
    cols = sorted({k for r in rows for k in r})
    cells = [[c for c in cols]] + [[_cell(r.get(c)) for c in cols] for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(cols))]
    return ["  " + "  ".join(x.ljust(w) for x, w in zip(row, widths)).rstrip() for row in cells]


def _cell(v) -> str:
    return v if isinstance(v, str) else json.dumps(v)


def _pretty(doc: dict) -> str:
    width = max((len(k) for k in doc), default=0)
    lines = []
    for k in sorted(doc):
        v = doc[k]
        if isinstance(v, list) and v and isinstance(v[0], dict):
            lines.append(f"{k}:")
            lines += _table(v)
        else:
            lines.append(f"{k.ljust(width)}  {_cell(v)}")
    return "\n".join(lines)


def run(argv: list[str]) -> tuple[int, str]:
    """Run one invocation; returns (exit code, output document)."""
    try:
        ns = build_parser().parse_args(argv)
    except _ArgError as exc:
        return 2, json.dumps({"error": str(exc), "kind": "usage"}, sort_keys=True)
    except SystemExit as exc:  # --help
        return int(exc.code or 0), ""
    try:
        reg = Registry.load(ns.registry) if ns.registry else default_registry()
        doc = ns.fn(ns, reg)
    except ParseError as exc:
        return 2, json.dumps({"error": str(exc), "kind": "parse"}, sort_keys=True)
    except DomainError as exc:
        return 1, json.dumps({"error": str(exc), "kind": type(exc).__name__}, sort_keys=True)
    text = _pretty(doc) if ns.pretty else json.dumps(doc, sort_keys=True)
    return 0, text


def main(argv=None) -> int:
    code, text = run(sys.argv[1:] if argv is None else argv)
    if text:
        print(text, file=sys.stdout if code == 0 else sys.stderr)
    return code
