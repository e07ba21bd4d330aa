"""Spherical open intertwining periods, the alpha factor and pole predicates.

``spherical_period_closed`` evaluates the product formula with the unramified
L-factor layer. ``spherical_period_recursive`` never looks at that formula: it
works with Satake values on a Borel, replays the block exchanges as simple
reflections (each one checked for admissibility), multiplies the rank-one
Gindikin-Karpelevich factors, splits off the first pair of blocks and recurses.
Both work in the inert normalization, with X_i = q_E^{-s_i} = Y_i^2.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cuspidal_lines import Registry
from .distinction import discrete_series_distinction, is_conjugate_self_dual
from .errors import InternalConsistencyError, PreconditionError, RangeError
from .ladders import Multisegment, is_proper_ladder
from .laurent import RationalFunction, shared_names
from .lfactor_algebra import (SQRT_Q, CuspSym, FactorAtom, FactorProduct, LinearForm,
                              char_value, q_minus, q_power, telescope_gamma_identity,
                              unramified_asai, unramified_rs, y_name)
from .segments import Segment, merge, relate
from .symmetric_words import (Permutation, admissible_root, embed_blockwise,
                              lemma_mu_word, s)


@dataclass(frozen=True)
class PeriodSpec:
    """sigma_1..sigma_r as lists of character symbols; blocks r+1..2r are the duals."""

    sigma: tuple[tuple[str, ...], ...]
    s_vars: tuple[str, ...] = ()

    def __post_init__(self):
        sig = tuple(tuple(str(c) for c in block) for block in self.sigma)
        if not sig or any(not block for block in sig):
            raise PreconditionError("a period spec needs r >= 1 non-empty blocks")
        object.__setattr__(self, "sigma", sig)
        names = tuple(self.s_vars) or tuple(f"s{i}" for i in range(1, len(sig) + 1))
        if len(names) != len(sig):
            raise PreconditionError("one s-variable per block")
        object.__setattr__(self, "s_vars", names)

    @property
    def r(self) -> int:
        return len(self.sigma)

    @property
    def sizes(self) -> list[int]:
        return [len(b) for b in self.sigma]

    def generators(self) -> set[str]:
        names = {SQRT_Q} | {y_name(v) for v in self.s_vars}
        for block in self.sigma:
            for c in block:
                names |= set(char_value(c).used_names())
        return names


def _inv(chars):
    return [1 / char_value(c) for c in chars]


def spherical_period_closed(spec: PeriodSpec) -> RationalFunction:
    with shared_names(spec.generators()):
        return _closed(spec)


def _closed(spec: PeriodSpec) -> RationalFunction:
    sv = [LinearForm.var(v) for v in spec.s_vars]
    out = RationalFunction.constant(1)
    for i in range(spec.r):
        for j in range(i + 1, spec.r):
            si, sj = spec.sigma[i], spec.sigma[j]
            minus, plus = sv[i] - sv[j], sv[i] + sv[j]
            out = out * unramified_rs(_inv(sj), si, minus) / unramified_rs(_inv(sj), si, minus, 1)
            out = out * unramified_rs(si, sj, plus) / unramified_rs(si, sj, plus, 1)
    for k in range(spec.r):
        two = sv[k].scale(2)
        out = out * unramified_asai(spec.sigma[k], "+", two) / unramified_asai(spec.sigma[k], "-", two, 1)
    return out


class _Replay:
    """Satake values along the Borel together with the current involution xi."""

    def __init__(self, vals: list[RationalFunction], xi: Permutation):
        self.vals = vals
        self.xi = xi
        self.value = RationalFunction.constant(1)
        self.steps = 0
        self._qe_inv = q_power(-2)

    def reflect(self, l: int):
        if not admissible_root(self.xi, l):
            raise InternalConsistencyError(f"reflection s_{l} is not admissible for xi={self.xi}")
        ratio = self.vals[l - 2] / self.vals[l - 1]
        self.value = self.value * (1 - self._qe_inv * ratio) / (1 - ratio)
        self.vals[l - 2], self.vals[l - 1] = self.vals[l - 1], self.vals[l - 2]
        self.xi = self.xi.conjugate(s(self.xi.n, l))
        self.steps += 1


def _open_involution(sizes: Sequence[int]) -> Permutation:
    """w_t blown up to the blocks I_1..I_r, J_r..J_1."""
    full = list(sizes) + list(sizes)[::-1]
    return embed_blockwise(Permutation.longest(len(full)), full)


def _exchange_for(layout: list[tuple[str, int]], sizes: Sequence[int]) -> Permutation:
    """The involution exchanging A_k and B_k for the given block layout."""
    start, pos = 1, {}
    for lab in layout:
        pos[lab] = start
        start += sizes[lab[1]]
    imgs = list(range(1, start))
    for k, n in enumerate(sizes):
        a, b = pos[("A", k)], pos[("B", k)]
        for x in range(n):
            imgs[a + x - 1], imgs[b + x - 1] = b + x, a + x
    return Permutation(tuple(imgs))


def _start(layout, sizes, label) -> int:
    p = 1
    for lab in layout:
        if lab == label:
            return p
        p += sizes[lab[1]]
    raise KeyError(label)


def _rank_one(vals: list[RationalFunction]) -> RationalFunction:
    """Period of a single pair of blocks (r = 1) from its Satake values."""
    n = len(vals) // 2
    rep = _Replay(list(vals), _open_involution([n]))
    total = RationalFunction.constant(1)
    q_inv = q_power(-1)
    while True:
        m = len(rep.vals) // 2
        # bring the partner of the first entry next to it
        for l in range(m + 1, 2, -1):
            rep.reflect(l)
        if rep.xi(1) != 2:
            raise InternalConsistencyError("pairing did not isolate a rank-one block")
        z = rep.vals[0]
        total = total * (1 + q_inv * z) / (1 - z)
        if m == 1:
            break
        rest = Permutation(tuple(x - 2 for x in rep.xi.images[2:]))
        if rest != _open_involution([m - 1]):
            raise InternalConsistencyError("parabolic split failed in the rank-one reduction")
        value, steps = rep.value, rep.steps
        rep = _Replay(rep.vals[2:], rest)
        rep.value, rep.steps = value, steps
    return total * rep.value


def spherical_period_recursive(spec: PeriodSpec, max_r: int = 3) -> RationalFunction:
    if spec.r > max_r:
        raise PreconditionError(f"recursion bound is r <= {max_r}")
    with shared_names(spec.generators()):
        return _recursive(spec)


def _recursive(spec: PeriodSpec) -> RationalFunction:
    sizes = spec.sizes
    vals = []
    x = [q_minus(LinearForm.var(v)) ** 2 for v in spec.s_vars]
    for k in range(spec.r):
        vals += [char_value(c) * x[k] for c in spec.sigma[k]]
    for k in reversed(range(spec.r)):
        vals += [1 / (char_value(c) * x[k]) for c in spec.sigma[k]]
    return _replay_blocks(vals, list(sizes))


def _replay_blocks(vals: list[RationalFunction], sizes: list[int]) -> RationalFunction:
    r = len(sizes)
    if r == 1:
        return _rank_one(vals)
    rep = _Replay(list(vals), _open_involution(sizes))
    layout = [("A", k) for k in range(r)] + [("B", k) for k in reversed(range(r))]
    a = sizes[0]
    # beta_1, ..., beta_{r-1}: move B_1 left past B_2, ..., B_r
    for i in range(1, r):
        b = sizes[i]
        start = _start(layout, sizes, ("B", i))
        for step in range(1, a + 1):
            for k in lemma_mu_word("BB", a, b, step):
                rep.reflect(start + k - (a + b + 1))
        p, q = layout.index(("B", i)), layout.index(("B", 0))
        layout[p], layout[q] = layout[q], layout[p]
        if rep.xi != _exchange_for(layout, sizes):
            raise InternalConsistencyError("block exchange after a BB step is not w_i")
    # beta'_{r-1}, ..., beta'_1: move B_1 left past A_r, ..., A_2
    for j in range(r - 1, 0, -1):
        b = sizes[j]
        start = _start(layout, sizes, ("A", j))
        for step in range(1, a + 1):
            for k in lemma_mu_word("AB", a, b, step):
                rep.reflect(start + k - (a + 1))
        p, q = layout.index(("A", j)), layout.index(("B", 0))
        layout[p], layout[q] = layout[q], layout[p]
        if rep.xi != _exchange_for(layout, sizes):
            raise InternalConsistencyError("block exchange after an AB step is not w'_j")
    head = 2 * a
    if any(rep.xi(p) > head for p in range(1, head + 1)):
        raise InternalConsistencyError("first pair of blocks is not stable")
    first = _rank_one(rep.vals[:head])
    rest = _replay_blocks(rep.vals[head:], sizes[1:])
    return rep.value * first * rest


# alpha factor and pole predicates

def alpha_factor(rho, k: int, l: int = 1) -> FactorProduct:
    """Telescoping product for St_{kl}(rho) in the variable 2s."""
    if k < 1 or l < 1:
        raise PreconditionError("k and l must be positive")
    return telescope_gamma_identity(rho, k * l, LinearForm.of(s=2))


@dataclass(frozen=True)
class IntertwiningPole:
    convergent_holomorphic: bool
    pole: bool
    simple: bool


def _realized(d: Segment, reg: Registry) -> tuple[Fraction, int]:
    return reg[d.rho].l * d.center, d.length


def intertwining_pole(dr: Segment, dr1: Segment, reg: Registry) -> IntertwiningPole:
    if dr.line != dr1.line:
        raise PreconditionError("segments lie on different cuspidal lines")
    l = reg[dr.rho].l
    sr, k1 = _realized(dr, reg)
    sr1, k2 = _realized(dr1, reg)
    if sr > sr1:
        return IntertwiningPole(True, False, False)
    if sr - sr1 < -Fraction(l * abs(k1 - k2), 2):
        rel = relate(dr, dr1)
        pole = rel.precedes and not rel.juxtaposed
        return IntertwiningPole(False, pole, pole)
    raise RangeError("s_r - s_{r+1} lies in the gap [-l|k1-k2|/2, 0] where no rule is stated")


def normalizing_factor(dr: Segment, dr1: Segment, reg: Registry) -> FactorProduct:
    """RS normalizing factor of the rank-one intertwining operator, in s."""
    l = reg[dr.rho].l
    sr, k1 = _realized(dr, reg)
    sr1, k2 = _realized(dr1, reg)
    rho = CuspSym(dr.rho, dr.eta_pow)
    rho_v = CuspSym(dr.rho, dr.eta_pow, dual=True)
    form = LinearForm.of(s=2)
    base = -(sr + sr1)
    return FactorProduct({
        FactorAtom.rs(rho, rho_v, form, base + Fraction(l * abs(k1 - k2), 2)): 1,
        FactorAtom.rs(rho, rho_v, form, base + Fraction(l * (k1 + k2), 2)): -1,
    })


@dataclass(frozen=True)
class PeriodPole:
    pole: bool
    reason: str


NOT_COVERED = "not covered by sufficiency; holomorphic per the even-ladder remark"


def period_pole_at_minus_sr(m: Multisegment, reg: Registry) -> PeriodPole:
    t = len(m)
    if t % 2 or not is_proper_ladder(m) or not is_conjugate_self_dual(m, reg):
        raise PreconditionError("needs a conjugate self-dual proper ladder with even length")
    r = t // 2
    rel = relate(m[r], m[r - 1])
    if rel.juxtaposed:
        return PeriodPole(False, "juxtaposed middle segments: holomorphic at -s_r")
    inter = merge(m[r - 1], m[r]).intersection
    if discrete_series_distinction(inter, reg).distinguished:
        return PeriodPole(True, "middle intersection distinguished: pole at -s_r")
    return PeriodPole(False, NOT_COVERED)
