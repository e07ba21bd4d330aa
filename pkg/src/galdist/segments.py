"""Segments [a,b] on a cuspidal line and their elementary relations."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .cuspidal_lines import Registry, TwistedCuspidal, conjugate_dual
from .errors import PreconditionError


@dataclass(frozen=True, order=True)
class Segment:
    """The segment [a,b] on the line eta^eta_pow * rho.

    Endpoints are un-scaled: the realized exponents are l*a, ..., l*b.
    """

    rho: str
    a: Fraction
    b: Fraction
    eta_pow: int = 0

    def __post_init__(self):
        a, b = Fraction(self.a), Fraction(self.b)
        if (b - a).denominator != 1 or b < a:
            raise PreconditionError(f"[{a},{b}] is not a segment (b-a must be a non-negative integer)")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "eta_pow", self.eta_pow % 2)

    @classmethod
    def steinberg(cls, rho: str, k: int, center=0, eta_pow: int = 0) -> "Segment":
        if k < 1:
            raise PreconditionError("St(rho,k) needs k >= 1")
        c = Fraction(center)
        half = Fraction(k - 1, 2)
        return cls(rho, c - half, c + half, eta_pow)

    @property
    def line(self) -> TwistedCuspidal:
        return TwistedCuspidal(self.rho, 0, self.eta_pow)

    @property
    def length(self) -> int:
        return int(self.b - self.a) + 1

    @property
    def center(self) -> Fraction:
        return (self.a + self.b) / 2

    def shift(self, c) -> "Segment":
        c = Fraction(c)
        return Segment(self.rho, self.a + c, self.b + c, self.eta_pow)

    def eta_twist(self, m: int = 1) -> "Segment":
        return Segment(self.rho, self.a, self.b, self.eta_pow + m)

    def degree(self, reg: Registry) -> int:
        return self.length * reg[self.rho].degree

    def cuspidals(self) -> list[TwistedCuspidal]:
        """Cuspidal support from the top exponent down (un-scaled)."""
        return [TwistedCuspidal(self.rho, self.b - i, self.eta_pow) for i in range(self.length)]

    def __str__(self):
        from .expr import format_segment
        return format_segment(self)


@dataclass(frozen=True)
class SegmentRelation:
    precedes: bool = False
    preceded_by: bool = False
    linked: bool = False
    juxtaposed: bool = False


def _precedes(d: Segment, e: Segment) -> bool:
    if d.rho != e.rho or d.eta_pow != e.eta_pow:
        return False
    if (e.b - d.b).denominator != 1:
        return False
    return d.a <= e.a - 1 <= d.b <= e.b - 1


def relate(d: Segment, d2: Segment) -> SegmentRelation:
    p = _precedes(d, d2)
    q = _precedes(d2, d)
    linked = p or q
    jux = linked and (d2.a == d.b + 1 or d.a == d2.b + 1)
    return SegmentRelation(p, q, linked, jux)


def linked(d: Segment, d2: Segment) -> bool:
    return _precedes(d, d2) or _precedes(d2, d)


@dataclass(frozen=True)
class Merge:
    union: Optional[Segment]
    intersection: Optional[Segment]


def merge(d: Segment, d2: Segment) -> Merge:
    if not linked(d, d2):
        return Merge(None, None)
    union = Segment(d.rho, min(d.a, d2.a), max(d.b, d2.b), d.eta_pow)
    lo, hi = max(d.a, d2.a), min(d.b, d2.b)
    inter = Segment(d.rho, lo, hi, d.eta_pow) if lo <= hi else None
    return Merge(union, inter)


def segment_dual(d: Segment, reg: Registry) -> Segment:
    """[a,b] on rho goes to [-b,-a] on the conjugate-dual line."""
    line = conjugate_dual(d.line, reg)
    return Segment(line.base, -d.b, -d.a, line.eta_pow)


def jacquet_discrete(d: Segment, partition: Sequence[int], reg: Registry) -> Optional[list[Segment]]:
    """Jacquet module of L(d) along the standard Levi of shape ``partition``.

    Returns the pieces (delta_1, ..., delta_t), delta_i living on the i-th
    block, with delta_1 carrying the top exponents. None when some block size
    is not a multiple of deg(rho).
    """
    lam = reg[d.rho].degree
    parts = [int(m) for m in partition]
    if any(m < 1 for m in parts):
        raise PreconditionError("partition entries must be positive")
    if sum(parts) != d.length * lam:
        raise PreconditionError(
            f"partition sums to {sum(parts)} but the segment has degree {d.length * lam}")
    if any(m % lam for m in parts):
        return None
    out = []
    top = d.b
    for m in parts:
        n = m // lam
        out.append(Segment(d.rho, top - n + 1, top, d.eta_pow))
        top -= n
    return out
