"""Ladders, Speh blocks, sub-standard kernels and unlinked grouping."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from .cuspidal_lines import Registry
from .errors import PreconditionError
from .segments import Segment, linked, merge, relate, segment_dual


@dataclass(frozen=True)
class Multisegment:
    segments: tuple[Segment, ...]

    def __post_init__(self):
        segs = tuple(self.segments)
        if not segs:
            raise PreconditionError("a multisegment needs at least one segment")
        lines = {s.line for s in segs}
        if len(lines) > 1:
            raise PreconditionError("all segments of a multisegment must lie on one line")
        object.__setattr__(self, "segments", segs)

    def __len__(self):
        return len(self.segments)

    def __iter__(self):
        return iter(self.segments)

    def __getitem__(self, i):
        return self.segments[i]

    @property
    def line(self):
        return self.segments[0].line

    def dual(self, reg: Registry) -> "Multisegment":
        """Conjugate dual: segment_dual of each segment, order reversed."""
        return Multisegment(tuple(segment_dual(s, reg) for s in reversed(self.segments)))

    def shift(self, c) -> "Multisegment":
        return Multisegment(tuple(s.shift(c) for s in self.segments))

    def __str__(self):
        from .expr import format_expr
        return format_expr(self)


def ms(*segs: Segment) -> Multisegment:
    return Multisegment(tuple(segs))


@dataclass(frozen=True)
class Classification:
    is_ladder: bool
    is_anti_ladder: bool
    is_proper: bool


def _is_ladder(segs: Sequence[Segment]) -> bool:
    return all(x.a > y.a and x.b > y.b for x, y in zip(segs, segs[1:]))


def _is_proper(segs: Sequence[Segment]) -> bool:
    return _is_ladder(segs) and all(relate(y, x).precedes for x, y in zip(segs, segs[1:]))


def classify_multisegment(m: Multisegment) -> Classification:
    segs = m.segments
    return Classification(_is_ladder(segs), _is_ladder(segs[::-1]), _is_proper(segs))


def is_proper_ladder(m: Multisegment) -> bool:
    return _is_proper(m.segments)


class FactorKind(str, Enum):
    SPEH = "Speh"
    PAIR = "ComplementaryPair"


@dataclass(frozen=True)
class UnitaryFactor:
    """u(delta,k), or nu^{-alpha} u(delta,k) x nu^{alpha} u(delta,k)."""

    kind: FactorKind
    delta: Segment
    k: int
    alpha: Fraction | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", FactorKind(self.kind))
        if self.k < 1:
            raise PreconditionError("Speh blocks need k >= 1")
        if self.kind is FactorKind.PAIR:
            if self.alpha is None:
                raise PreconditionError("a complementary pair needs alpha")
            alpha = Fraction(self.alpha)
            if not 0 < alpha < Fraction(1, 2):
                raise PreconditionError("alpha must lie in (0, 1/2)")
            object.__setattr__(self, "alpha", alpha)
        elif self.alpha is not None:
            raise PreconditionError("alpha only applies to complementary pairs")

    @classmethod
    def speh(cls, delta: Segment, k: int) -> "UnitaryFactor":
        return cls(FactorKind.SPEH, delta, k)

    @classmethod
    def pair(cls, delta: Segment, k: int, alpha) -> "UnitaryFactor":
        return cls(FactorKind.PAIR, delta, k, Fraction(alpha))

    def dual(self, reg: Registry) -> "UnitaryFactor":
        return UnitaryFactor(self.kind, segment_dual(self.delta, reg), self.k, self.alpha)

    def ladders(self) -> list[Multisegment]:
        """The Speh ladders whose product realizes this factor."""
        if self.kind is FactorKind.SPEH:
            return [speh(self.delta, self.k)]
        return [speh(self.delta.shift(-self.alpha), self.k),
                speh(self.delta.shift(self.alpha), self.k)]

    def __str__(self):
        from .expr import format_expr
        return format_expr(self)


def speh(delta: Segment, k: int) -> Multisegment:
    if k < 1:
        raise PreconditionError("speh needs k >= 1")
    half = Fraction(k + 1, 2)
    return Multisegment(tuple(delta.shift(half - i) for i in range(1, k + 1)))


def substandard_kernels(m: Multisegment) -> list[Multisegment]:
    """S_1, ..., S_{t-1}: Delta_i, Delta_{i+1} replaced by their union and intersection."""
    if len(m) < 2 or not is_proper_ladder(m):
        raise PreconditionError("substandard_kernels needs a proper ladder with t >= 2")
    segs = m.segments
    out = []
    for i in range(len(segs) - 1):
        mg = merge(segs[i], segs[i + 1])
        middle = [mg.union] + ([mg.intersection] if mg.intersection is not None else [])
        out.append(Multisegment(segs[:i] + tuple(middle) + segs[i + 2:]))
    return out


def split_proper(m: Multisegment) -> list[Multisegment]:
    """Cut a ladder between consecutive unlinked segments.

    In a ladder an unlinked consecutive pair separates everything above it
    from everything below it, so the pieces are proper and mutually unlinked.
    """
    if not classify_multisegment(m).is_ladder:
        raise PreconditionError("split_proper needs a ladder")
    pieces, cur = [], [m.segments[0]]
    for prev, s in zip(m.segments, m.segments[1:]):
        if relate(s, prev).precedes:
            cur.append(s)
        else:
            pieces.append(Multisegment(tuple(cur)))
            cur = [s]
    pieces.append(Multisegment(tuple(cur)))
    return pieces


def mutually_linked(x: Multisegment, y: Multisegment) -> bool:
    return any(linked(s, u) for s in x for u in y)


def decompose_unlinked(parts: Iterable[Multisegment]) -> list[list[Multisegment]]:
    """Connected components of the linkage graph, in order of first appearance."""
    parts = list(parts)
    n = len(parts)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if mutually_linked(parts[i], parts[j]):
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)
    groups: dict[int, list[Multisegment]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(parts[i])
    return [groups[k] for k in sorted(groups)]
