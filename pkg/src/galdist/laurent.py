"""Exact multivariate rational functions over Q.

Numerator and denominator are python-flint ``fmpq_mpoly`` objects. Laurent
monomials are absorbed into the denominator, so every value is stored as a
gcd-reduced quotient of honest polynomials whose denominator has leading
coefficient 1 (lex order on alphabetically sorted generators). That makes the
stored pair a canonical form: two values are equal iff their pairs agree.
"""
from __future__ import annotations

import contextvars
import re
from contextlib import contextmanager
from fractions import Fraction
from functools import lru_cache

import flint

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


@lru_cache(maxsize=None)
def _ctx(names: tuple[str, ...]):
    return flint.fmpq_mpoly_ctx.get(names, "lex")


_SHARED = contextvars.ContextVar("shared_names", default=())


@contextmanager
def shared_names(names):
    """Build new values over one common set of generators.

    Purely a speed-up: arithmetic between values over the same generators
    skips re-embedding the polynomials.
    """
    token = _SHARED.set(tuple(sorted(set(names))))
    try:
        yield
    finally:
        _SHARED.reset(token)


def _fmpq(x) -> flint.fmpq:
    x = Fraction(x)
    return flint.fmpq(x.numerator, x.denominator)


def _lift(poly, src: tuple[str, ...], dst: tuple[str, ...]):
    if src == dst:
        return poly
    idx = [dst.index(n) for n in src]
    out = {}
    for exps, c in poly.to_dict().items():
        e = [0] * len(dst)
        for i, k in zip(idx, exps):
            e[i] = k
        out[tuple(e)] = c
    return _ctx(dst).from_dict(out)


class RationalFunction:
    __slots__ = ("num", "den", "names")

    def __init__(self, num, den, names: tuple[str, ...], reduce: bool = True):
        self.names = names
        if reduce:
            if den.is_zero():
                raise ZeroDivisionError("rational function with zero denominator")
            if num.is_zero():
                ctx = _ctx(names)
                num, den = ctx.from_dict({}), ctx.from_dict({(0,) * len(names): 1})
            else:
                g = num.gcd(den)
                if not g.is_one():
                    num, den = num / g, den / g
                lc = den.leading_coefficient()
                if lc != 1:
                    num, den = num / lc, den / lc
        self.num = num
        self.den = den

    # construction
    @classmethod
    def constant(cls, c=0) -> "RationalFunction":
        names = _SHARED.get()
        ctx, zero = _ctx(names), (0,) * len(names)
        return cls(ctx.from_dict({zero: _fmpq(c)}) if c else ctx.from_dict({}),
                   ctx.from_dict({zero: 1}), names, reduce=False)

    @classmethod
    def monomial(cls, powers: dict[str, int], coeff=1) -> "RationalFunction":
        """coeff * prod name**power, negative powers allowed."""
        powers = {k: int(v) for k, v in powers.items() if v}
        for k in powers:
            if not _NAME.match(k):
                raise ValueError(f"bad variable name {k!r}")
        names = _SHARED.get()
        if not set(powers) <= set(names):
            names = tuple(sorted(powers))
        ctx = _ctx(names)
        up = tuple(max(powers.get(n, 0), 0) for n in names)
        down = tuple(max(-powers.get(n, 0), 0) for n in names)
        return cls(ctx.from_dict({up: _fmpq(coeff)}), ctx.from_dict({down: 1}), names)

    @classmethod
    def symbol(cls, name: str) -> "RationalFunction":
        return cls.monomial({name: 1})

    @classmethod
    def coerce(cls, x) -> "RationalFunction":
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.constant(x)
        if isinstance(x, str):
            return cls.symbol(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to RationalFunction")

    # arithmetic
    def _align(self, other: "RationalFunction"):
        if self.names == other.names:
            return self.names, self.num, self.den, other.num, other.den
        names = tuple(sorted(set(self.names) | set(other.names)))
        return (names,
                _lift(self.num, self.names, names), _lift(self.den, self.names, names),
                _lift(other.num, other.names, names), _lift(other.den, other.names, names))

    def __add__(self, other):
        other = RationalFunction.coerce(other)
        names, a, b, c, d = self._align(other)
        if b == d:
            return RationalFunction(a + c, b, names)
        return RationalFunction(a * d + c * b, b * d, names)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, self.names, reduce=False)

    def __sub__(self, other):
        return self + (-RationalFunction.coerce(other))

    def __rsub__(self, other):
        return RationalFunction.coerce(other) - self

    def __mul__(self, other):
        other = RationalFunction.coerce(other)
        names, a, b, c, d = self._align(other)
        return RationalFunction(a * c, b * d, names)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RationalFunction(self.den, self.num, self.names)

    def __truediv__(self, other):
        return self * RationalFunction.coerce(other).inverse()

    def __rtruediv__(self, other):
        return RationalFunction.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        k = int(k)
        if k < 0:
            return self.inverse() ** (-k)
        return RationalFunction(self.num ** k, self.den ** k, self.names, reduce=False)

    # comparison and display
    def used_names(self) -> tuple[str, ...]:
        used = set()
        for p in (self.num, self.den):
            for exps in p.monoms():
                used.update(n for n, e in zip(self.names, exps) if e)
        return tuple(n for n in self.names if n in used)

    def trimmed(self) -> "RationalFunction":
        used = self.used_names()
        if used == self.names:
            return self
        idx = [self.names.index(n) for n in used]
        ctx = _ctx(used)

        def proj(p):
            return ctx.from_dict({tuple(e[i] for i in idx): c for e, c in p.to_dict().items()})

        return RationalFunction(proj(self.num), proj(self.den), used, reduce=False)

    def _key(self):
        t = self.trimmed()
        return (t.names, tuple(sorted(t.num.to_dict().items())), tuple(sorted(t.den.to_dict().items())))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, str)):
            other = RationalFunction.coerce(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        # both sides are canonical and lifting keeps them canonical
        _, a, b, c, d = self._align(other)
        return a == c and b == d

    def __hash__(self):
        return hash(str(self))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def numerator(self) -> "RationalFunction":
        return RationalFunction(self.num, _ctx(self.names).from_dict({(0,) * len(self.names): 1}),
                                self.names, reduce=False)

    def denominator(self) -> "RationalFunction":
        return RationalFunction(self.den, _ctx(self.names).from_dict({(0,) * len(self.names): 1}),
                                self.names, reduce=False)

    def subs(self, values: dict) -> "RationalFunction":
        """Substitute rational numbers for some generators."""
        vals = {k: _fmpq(v) for k, v in values.items() if k in self.names}
        if not vals:
            return self
        return RationalFunction(self.num.subs(vals), self.den.subs(vals), self.names)

    def to_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant")
        n = self.num.leading_coefficient() if not self.num.is_zero() else flint.fmpq(0)
        d = self.den.leading_coefficient()
        q = n / d
        return Fraction(int(q.p), int(q.q))

    def __str__(self):
        t = self.trimmed()
        num = str(t.num)
        if t.den.is_one():
            return num
        return f"({num})/({t.den})"

    def __repr__(self):
        return f"RationalFunction({self})"
