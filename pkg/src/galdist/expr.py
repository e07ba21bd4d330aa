"""Text syntax for segments, ladders, Speh blocks and their products.

    expr    := factor ('x' factor)*
    factor  := ['eta' '*'] atom ['@' number]
    atom    := Seg(id, number, number) | St(id, int)
             | Ladder[factor, ...] | Speh(factor, int) | Pair(Speh(factor, int), number)
    number  := ['-'] int ['/' int]

``format_expr`` prints the canonical form, which parses back to an equal value.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError, PreconditionError
from .ladders import FactorKind, Multisegment, UnitaryFactor
from .segments import Segment

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<id>[A-Za-z_][A-Za-z0-9_]*)|(?P<sym>[()\[\],*@/-]))")


def _tokenize(text: str):
    pos, out = 0, []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            pos += len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def cur(self):
        return self.toks[self.i]

    def error(self, *expected):
        kind, val, pos = self.cur
        what = "end of input" if kind == "end" else repr(val)
        raise ParseError(f"unexpected {what}", pos, expected)

    def accept(self, val):
        if self.cur[1] == val and self.cur[0] != "end":
            self.i += 1
            return True
        return False

    def expect(self, val):
        if not self.accept(val):
            self.error(repr(val))

    def ident(self):
        kind, val, _ = self.cur
        if kind != "id":
            self.error("identifier")
        self.i += 1
        return val

    def integer(self):
        kind, val, _ = self.cur
        if kind != "num":
            self.error("integer")
        self.i += 1
        return int(val)

    def number(self):
        neg = self.accept("-")
        n = Fraction(self.integer())
        if self.accept("/"):
            pos = self.cur[2]
            d = self.integer()
            if d == 0:
                raise ParseError("zero denominator", pos)
            n /= d
        return -n if neg else n

    def parse(self):
        items = [self.factor()]
        while self.cur[0] == "id" and self.cur[1] == "x":
            self.i += 1
            items.append(self.factor())
        if self.cur[0] != "end":
            self.error("'x'", "end of input")
        return items[0] if len(items) == 1 else tuple(items)

    def factor(self):
        eta = 0
        if self.cur[1] == "eta" and self.toks[self.i + 1][1] == "*":
            self.i += 2
            eta = 1
        value = self.atom()
        if self.accept("@"):
            value = _shift(value, self.number())
        if eta:
            value = _eta(value)
        return value

    def segment(self):
        pos = self.cur[2]
        v = self.factor()
        if not isinstance(v, Segment):
            raise ParseError("expected a segment", pos, ("Seg(...)", "St(...)"))
        return v

    def atom(self):
        kind, val, pos = self.cur
        if kind != "id":
            self.error("Seg", "St", "Ladder", "Speh", "Pair", "eta*")
        self.i += 1
        try:
            if val == "Seg":
                self.expect("(")
                rho = self.ident()
                self.expect(",")
                a = self.number()
                self.expect(",")
                b = self.number()
                self.expect(")")
                return Segment(rho, a, b)
            if val == "St":
                self.expect("(")
                rho = self.ident()
                self.expect(",")
                k = self.integer()
                self.expect(")")
                return Segment.steinberg(rho, k)
            if val == "Ladder":
                self.expect("[")
                segs = [self.segment()]
                while self.accept(","):
                    segs.append(self.segment())
                self.expect("]")
                return Multisegment(tuple(segs))
            if val == "Speh":
                self.expect("(")
                d = self.segment()
                self.expect(",")
                k = self.integer()
                self.expect(")")
                return UnitaryFactor.speh(d, k)
            if val == "Pair":
                self.expect("(")
                if self.cur[1] != "Speh":
                    self.error("Speh")
                sp = self.atom()
                self.expect(",")
                alpha = self.number()
                self.expect(")")
                return UnitaryFactor.pair(sp.delta, sp.k, alpha)
        except PreconditionError as exc:
            raise ParseError(str(exc), pos) from None
        self.i -= 1
        self.error("Seg", "St", "Ladder", "Speh", "Pair", "eta*")


def _shift(v, c):
    if isinstance(v, Segment):
        return v.shift(c)
    if isinstance(v, Multisegment):
        return v.shift(c)
    if isinstance(v, UnitaryFactor):
        return UnitaryFactor(v.kind, v.delta.shift(c), v.k, v.alpha)
    raise PreconditionError("cannot shift this value")


def _eta(v):
    if isinstance(v, Segment):
        return v.eta_twist()
    if isinstance(v, Multisegment):
        return Multisegment(tuple(s.eta_twist() for s in v))
    return UnitaryFactor(v.kind, v.delta.eta_twist(), v.k, v.alpha)


def parse_expr(text: str):
    """Parse an expression; a product of several factors comes back as a tuple."""
    return _Parser(text).parse()


def _num(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_segment(d: Segment) -> str:
    body = f"Seg({d.rho},{_num(d.a)},{_num(d.b)})"
    return "eta*" + body if d.eta_pow else body


def format_expr(v) -> str:
    if isinstance(v, Segment):
        return format_segment(v)
    if isinstance(v, Multisegment):
        return "Ladder[" + ",".join(format_segment(s) for s in v) + "]"
    if isinstance(v, UnitaryFactor):
        sp = f"Speh({format_segment(v.delta)},{v.k})"
        if v.kind is FactorKind.SPEH:
            return sp
        return f"Pair({sp},{_num(v.alpha)})"
    if isinstance(v, (tuple, list)):
        return " x ".join(format_expr(x) for x in v)
    raise TypeError(f"cannot format {type(v).__name__}")
