import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from galdist.cuspidal_lines import default_registry
from galdist.errors import PreconditionError
from galdist.ladders import (Multisegment, UnitaryFactor, classify_multisegment, decompose_unlinked,
                             is_proper_ladder, ms, speh, substandard_kernels)
from galdist.segments import Segment, linked, merge, relate

H = Fraction(1, 2)
REG = default_registry()


def S(a, b, rho="rho"):
    return Segment(rho, Fraction(a), Fraction(b))


def test_classify_examples():
    c = classify_multisegment(ms(S(H, H), S(-H, -H)))
    assert c.is_ladder and c.is_proper
    c = classify_multisegment(ms(S(0, 1), S(-3, -2)))
    assert c.is_ladder and not c.is_proper
    c = classify_multisegment(ms(S(0, 0)))
    assert c.is_ladder and c.is_proper


def test_anti_ladder():
    c = classify_multisegment(ms(S(-1, -1), S(0, 0)))
    assert c.is_anti_ladder and not c.is_ladder


def test_mixed_lines_rejected():
    with pytest.raises(PreconditionError):
        ms(S(0, 0), S(0, 0, "rhoe"))


def test_speh_examples():
    assert speh(S(-H, H), 2) == ms(S(0, 1), S(-1, 0))
    assert speh(S(0, 0), 3) == ms(S(1, 1), S(0, 0), S(-1, -1))
    assert speh(S(0, 0), 1) == ms(S(0, 0))
    with pytest.raises(PreconditionError):
        speh(S(0, 0), 0)


def test_kernel_examples():
    assert substandard_kernels(ms(S(0, 1), S(-1, 0))) == [ms(S(-1, 1), S(0, 0))]
    assert substandard_kernels(ms(S(1, 1), S(0, 0))) == [ms(S(0, 1))]
    ks = substandard_kernels(ms(S(2, 3), S(1, 2), S(0, 1)))
    assert ks == [ms(S(1, 3), S(2, 2), S(0, 1)), ms(S(2, 3), S(0, 2), S(1, 1))]
    with pytest.raises(PreconditionError):
        substandard_kernels(ms(S(0, 1), S(-3, -2)))


def _kernels_oracle(m):
    out = []
    for i in range(len(m) - 1):
        lo, hi = m[i + 1], m[i]
        pts_hi = set(range(int(hi.a - lo.a), int(hi.b - lo.a) + 1))
        pts_lo = set(range(0, int(lo.b - lo.a) + 1))
        union, inter = pts_hi | pts_lo, pts_hi & pts_lo
        mid = [Segment(lo.rho, lo.a + min(union), lo.a + max(union), lo.eta_pow)]
        if inter:
            mid.append(Segment(lo.rho, lo.a + min(inter), lo.a + max(inter), lo.eta_pow))
        out.append(Multisegment(m.segments[:i] + tuple(mid) + m.segments[i + 2:]))
    return out


@st.composite
def proper_ladders(draw):
    t = draw(st.integers(2, 4))
    top = draw(st.integers(-2, 3))
    segs, a, b = [], top, top + draw(st.integers(0, 2))
    for _ in range(t):
        segs.append(S(a, b))
        a -= draw(st.integers(1, 2))
        b = draw(st.integers(max(a, b - 1 - 2), b - 1))
        b = max(b, a)
    m = Multisegment(tuple(segs))
    return m


@given(proper_ladders())
def test_kernels_match_oracle(m):
    if not is_proper_ladder(m):
        return
    ks = substandard_kernels(m)
    assert len(ks) == len(m) - 1
    assert ks == _kernels_oracle(m)


@given(st.sampled_from(["rho", "rhoe", "rho3"]), st.integers(1, 4), st.integers(1, 4),
       st.integers(0, 1))
def test_speh_proper_and_self_dual(rho, n, k, eta):
    d = Segment.steinberg(rho, n, eta_pow=eta)
    m = speh(d, k)
    assert is_proper_ladder(m)
    assert m.dual(REG) == m


def test_decompose_examples():
    a, b, c = ms(S(0, 0)), ms(S(5, 5)), ms(S(0, 1))
    assert decompose_unlinked([a, b]) == [[a], [b]]
    d = ms(S(1, 2))
    assert decompose_unlinked([c, d]) == [[c, d]]
    e = ms(S(10, 11))
    assert decompose_unlinked([c, e, d]) == [[c, d], [e]]


def _closure_groups(parts):
    n = len(parts)
    reach = [[i == j or any(linked(x, y) for x in parts[i] for y in parts[j]) for j in range(n)]
             for i in range(n)]
    for k, i, j in itertools.product(range(n), repeat=3):
        reach[i][j] = reach[i][j] or (reach[i][k] and reach[k][j])
    return {frozenset(j for j in range(n) if reach[i][j]) for i in range(n)}


@given(st.lists(st.tuples(st.integers(-4, 4), st.integers(0, 2)), min_size=1, max_size=6))
def test_decompose_matches_transitive_closure(spec):
    parts = [ms(S(a, a + n)) for a, n in spec]
    groups = decompose_unlinked(parts)
    assert sorted(str(p) for g in groups for p in g) == sorted(str(p) for p in parts)
    # identify groups by index; equal parts share an index set
    idx_groups = set()
    for g in groups:
        idx_groups.add(frozenset(i for i, p in enumerate(parts) if p in g))
    oracle = _closure_groups(parts)
    for g in oracle:
        assert any(g <= h for h in idx_groups)
    for g1, g2 in itertools.combinations(groups, 2):
        assert not any(linked(x, y) for p in g1 for q in g2 for x in p for y in q)


def test_unitary_factor_validation():
    with pytest.raises(PreconditionError):
        UnitaryFactor.pair(S(0, 0), 1, H)
    f = UnitaryFactor.pair(S(0, 0), 2, Fraction(1, 4))
    lo, hi = f.ladders()
    assert lo == speh(S(0, 0), 2).shift(-Fraction(1, 4))
    assert hi == speh(S(0, 0), 2).shift(Fraction(1, 4))
