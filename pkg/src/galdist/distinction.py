"""Distinction verdicts for discrete series, standard modules, ladders and
unitary representations."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Optional, Sequence

from .cuspidal_lines import Registry, chi_distinguished
from .errors import PreconditionError
from .ladders import (Multisegment, UnitaryFactor, FactorKind, classify_multisegment,
                      decompose_unlinked, is_proper_ladder, speh, split_proper)
from .segments import Segment, merge, segment_dual


class Status(str, Enum):
    DISTINGUISHED = "Distinguished"
    ETA_DISTINGUISHED = "EtaDistinguished"
    NEITHER = "Neither"


@dataclass(frozen=True)
class DistinctionVerdict:
    status: Status
    witness: Optional[tuple[int, ...]] = None
    trace: tuple[str, ...] = field(default_factory=tuple)

    @property
    def distinguished(self) -> bool:
        return self.status is Status.DISTINGUISHED


def involution_search(n: int, pair_ok: Callable[[int, int], bool],
                      fixed_ok: Callable[[int], bool]) -> Optional[tuple[int, ...]]:
    """Lexicographically smallest involution eps of 1..n (as a one-line word)
    with pair_ok(i, eps(i)) for every moved i < eps(i) and fixed_ok(i) for
    fixed points. Indices passed to the callbacks are 0-based."""
    eps = [None] * n

    def go(i):
        while i < n and eps[i] is not None:
            i += 1
        if i == n:
            return True
        for j in range(i, n):
            if eps[j] is not None:
                continue
            if j == i:
                if not fixed_ok(i):
                    continue
            elif not pair_ok(i, j):
                continue
            eps[i], eps[j] = j, i
            if go(i + 1):
                return True
            eps[i] = eps[j] = None
        return False

    if go(0):
        return tuple(e + 1 for e in eps)
    return None


def discrete_series_distinction(d: Segment, reg: Registry) -> DistinctionVerdict:
    datum = reg[d.rho]
    if not datum.self_dual:
        return DistinctionVerdict(Status.NEITHER, trace=("not conjugate self-dual",))
    if d.center != 0:
        return DistinctionVerdict(Status.NEITHER, trace=("nonzero central exponent",))
    k = d.length
    rule = "Steinberg odd" if k % 2 else "Steinberg even"
    if chi_distinguished(d.line, datum.l * (k + 1), reg):
        return DistinctionVerdict(Status.DISTINGUISHED, trace=(rule,))
    return DistinctionVerdict(Status.ETA_DISTINGUISHED, trace=(rule,))


def standard_module_distinguished(deltas: Sequence[Segment], reg: Registry) -> DistinctionVerdict:
    deltas = list(deltas)
    duals = [segment_dual(d, reg) for d in deltas]
    eps = involution_search(
        len(deltas),
        lambda i, j: deltas[j] == duals[i],
        lambda i: discrete_series_distinction(deltas[i], reg).distinguished,
    )
    if eps is None:
        return DistinctionVerdict(Status.NEITHER, trace=("standard module: no dual pairing",))
    return DistinctionVerdict(Status.DISTINGUISHED, eps, ("standard module",))


def is_conjugate_self_dual(m: Multisegment, reg: Registry) -> bool:
    return m.dual(reg) == m


def proper_ladder_distinguished(m: Multisegment, reg: Registry) -> DistinctionVerdict:
    if not is_proper_ladder(m):
        raise PreconditionError("proper_ladder_distinguished needs a proper ladder")
    if not is_conjugate_self_dual(m, reg):
        return DistinctionVerdict(Status.NEITHER, trace=("ladder not conjugate self-dual",))
    t = len(m)
    if t % 2:
        mid = discrete_series_distinction(m[t // 2], reg)
        ok = mid.distinguished
        return DistinctionVerdict(Status.DISTINGUISHED if ok else Status.NEITHER,
                                  trace=("odd ladder",) + mid.trace)
    r = t // 2
    union = merge(m[r - 1], m[r]).union
    inner = discrete_series_distinction(union, reg)
    ok = inner.status is Status.ETA_DISTINGUISHED
    return DistinctionVerdict(Status.DISTINGUISHED if ok else Status.NEITHER,
                              trace=("even ladder",) + inner.trace)


def theta_induced_ladders(ladders: Sequence[Multisegment], reg: Registry) -> DistinctionVerdict:
    """Pair each ladder with its conjugate dual; unpaired ladders must be distinguished."""
    ladders = list(ladders)
    duals = [x.dual(reg) for x in ladders]
    eps = involution_search(
        len(ladders),
        lambda i, j: ladders[j] == duals[i],
        lambda i: proper_ladder_distinguished(ladders[i], reg).distinguished,
    )
    if eps is None:
        return DistinctionVerdict(Status.NEITHER, trace=("not theta-induced",))
    return DistinctionVerdict(Status.DISTINGUISHED, eps, ("theta-induced",))


def _factor_distinguished(f: UnitaryFactor, reg: Registry) -> bool:
    if f.kind is FactorKind.SPEH:
        return proper_ladder_distinguished(speh(f.delta, f.k), reg).distinguished
    # nu^-a u(d) x nu^a u(d) pairs with itself once u(d) is conjugate self-dual
    return segment_dual(f.delta, reg) == f.delta


def unitary_distinguished(factors: Sequence, reg: Registry) -> DistinctionVerdict:
    factors = list(factors)
    if not factors:
        raise PreconditionError("empty product")
    if all(isinstance(f, UnitaryFactor) for f in factors):
        duals = [f.dual(reg) for f in factors]
        eps = involution_search(
            len(factors),
            lambda i, j: factors[j] == duals[i],
            lambda i: _factor_distinguished(factors[i], reg),
        )
        if eps is None:
            return DistinctionVerdict(Status.NEITHER, trace=("unitary: not theta-induced",))
        return DistinctionVerdict(Status.DISTINGUISHED, eps, ("unitary: theta-induced",))

    ladders = []
    for f in factors:
        if isinstance(f, UnitaryFactor):
            ladders.extend(f.ladders())
        elif isinstance(f, Multisegment):
            if not classify_multisegment(f).is_ladder:
                raise PreconditionError("only ladder multisegments are supported")
            ladders.extend(split_proper(f))
        else:
            raise PreconditionError(f"unsupported factor {f!r}")
    groups = decompose_unlinked(ladders)
    if len(groups) != len(ladders):
        raise PreconditionError("ladder factors must be mutually unlinked")
    v = theta_induced_ladders(ladders, reg)
    return DistinctionVerdict(v.status, v.witness, ("unlinked ladders",) + v.trace)


def distinguish(value, reg: Registry) -> DistinctionVerdict:
    """Route a parsed expression to the matching criterion."""
    if isinstance(value, Segment):
        return discrete_series_distinction(value, reg)
    if isinstance(value, Multisegment):
        if is_proper_ladder(value):
            return proper_ladder_distinguished(value, reg)
        return unitary_distinguished([value], reg)
    if isinstance(value, UnitaryFactor):
        return unitary_distinguished([value], reg)
    items = list(value)
    if items and all(isinstance(x, Segment) for x in items):
        return standard_module_distinguished(items, reg)
    return unitary_distinguished(
        [Multisegment((x,)) if isinstance(x, Segment) else x for x in items], reg)
