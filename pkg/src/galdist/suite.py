"""Enumerated small instances shared by the tests and the experiment scripts."""
from __future__ import annotations

import itertools
from fractions import Fraction

from .cuspidal_lines import CuspidalDatum, Duality, Registry
from .ladders import Multisegment, is_proper_ladder
from .segments import Segment, segment_dual

HALF = Fraction(1, 2)


def suite_registry() -> Registry:
    return Registry([
        CuspidalDatum("rd", 1, 1, Duality.DISTINGUISHED),
        CuspidalDatum("re", 1, 1, Duality.ETA_DISTINGUISHED),
        CuspidalDatum("rd3", 1, 3, Duality.DISTINGUISHED),
        CuspidalDatum("re3", 1, 3, Duality.ETA_DISTINGUISHED),
        CuspidalDatum("rd2", 2, 1, Duality.DISTINGUISHED),
        CuspidalDatum("rp", 1, 1, Duality.NOT_CONJ_SELF_DUAL, "rq"),
        CuspidalDatum("rq", 1, 1, Duality.NOT_CONJ_SELF_DUAL, "rp"),
    ])


SELF_DUAL_LINES = [(rho, eta) for rho in ("rd", "re", "rd3", "re3", "rd2") for eta in (0, 1)]


def candidate_segments(rho: str, eta: int = 0, max_len: int = 3, reach=Fraction(3)):
    """Segments with half-integral endpoints in [-reach, reach] and length <= max_len."""
    out = []
    a = -reach
    while a <= reach:
        for n in range(max_len):
            if a + n <= reach:
                out.append(Segment(rho, a, a + n, eta))
        a += HALF
    return out


def self_dual_ladders(reg: Registry, rho: str, eta: int = 0, max_t: int = 4, max_len: int = 3,
                      reach=Fraction(5, 2)) -> list[Multisegment]:
    """Conjugate self-dual proper ladders on one self-dual line."""
    cands = candidate_segments(rho, eta, max_len, reach)
    out = []
    for t in range(1, max_t + 1):
        half = (t + 1) // 2
        for top in itertools.product(cands, repeat=half):
            segs = list(top)
            if t % 2:
                if segment_dual(segs[-1], reg) != segs[-1]:
                    continue
                rest = [segment_dual(x, reg) for x in reversed(segs[:-1])]
            else:
                rest = [segment_dual(x, reg) for x in reversed(segs)]
            m = Multisegment(tuple(segs + rest))
            if is_proper_ladder(m):
                out.append(m)
    return out


def suite_ladders(reg: Registry | None = None) -> list[Multisegment]:
    reg = reg or suite_registry()
    out = []
    for rho, eta in SELF_DUAL_LINES:
        out += self_dual_ladders(reg, rho, eta)
    return out


def suite_standard_modules(reg: Registry | None = None, max_t: int = 3) -> list[tuple[Segment, ...]]:
    """Multisets of short segments near the origin, on self-dual and paired lines."""
    reg = reg or suite_registry()
    pool = []
    for rho in ("rd", "re", "rd2", "rp", "rq"):
        for c in (-HALF, 0, HALF):
            for k in (1, 2, 3):
                d = Segment.steinberg(rho, k, c)
                if (d.a.denominator == 1) == (k % 2 == 1) or c == 0:
                    pool.append(d)
    pool = sorted(set(pool))
    out = []
    for t in range(1, max_t + 1):
        for combo in itertools.combinations_with_replacement(pool, t):
            if sum(d.degree(reg) for d in combo) <= 6:
                out.append(combo)
    return out
