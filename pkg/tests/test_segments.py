from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from galdist.cuspidal_lines import CuspidalDatum, Duality, Registry, default_registry
from galdist.errors import PreconditionError
from galdist.segments import Segment, jacquet_discrete, merge, relate, segment_dual

from conftest import same_line_pairs, segments

H = Fraction(1, 2)
REG = default_registry()


def S(a, b, rho="rho"):
    return Segment(rho, Fraction(a), Fraction(b))


def test_relate_examples():
    r = relate(S(0, 1), S(1, 2))
    assert (r.precedes, r.linked, r.juxtaposed) == (True, True, False)
    r = relate(S(0, 1), S(2, 3))
    assert r.precedes and r.juxtaposed
    r = relate(S(0, 1), S(0, 1))
    assert not any((r.precedes, r.preceded_by, r.linked, r.juxtaposed))


def test_relate_needs_integral_offset_and_line():
    assert not relate(S(0, 1), S(H, 3 * H)).linked
    assert not relate(S(0, 1), S(1, 2, "rhoe")).linked
    assert not relate(S(0, 1), S(1, 2).eta_twist()).linked


def test_merge_examples():
    m = merge(S(0, 1), S(1, 2))
    assert (m.union, m.intersection) == (S(0, 2), S(1, 1))
    m = merge(S(0, 0), S(1, 1))
    assert (m.union, m.intersection) == (S(0, 1), None)
    m = merge(S(0, 1), S(3, 4))
    assert (m.union, m.intersection) == (None, None)


def test_dual_examples():
    assert segment_dual(S(H, H), REG) == S(-H, -H)
    assert segment_dual(S(-H, H), REG) == S(-H, H)
    assert segment_dual(S(0, 1, "rho1"), REG) == S(-1, 0, "rho2")


def test_jacquet_examples():
    reg2 = Registry([CuspidalDatum("rho", 2, 1, Duality.DISTINGUISHED)])
    assert jacquet_discrete(S(-1, 1), [1, 1, 1], REG) == [S(1, 1), S(0, 0), S(-1, -1)]
    assert jacquet_discrete(S(-1, 1), [3], REG) == [S(-1, 1)]
    assert jacquet_discrete(S(0, 1), [1, 3], reg2) is None
    with pytest.raises(PreconditionError):
        jacquet_discrete(S(0, 1), [1, 2], REG)


def test_jacquet_unequal_pieces():
    # top piece first, its length given by the first block
    assert jacquet_discrete(S(-1, 2), [1, 3], REG) == [S(2, 2), S(-1, 1)]
    assert jacquet_discrete(S(-1, 2), [3, 1], REG) == [S(0, 2), S(-1, -1)]


@st.composite
def linked_pairs(draw):
    d = draw(segments())
    n = d.length - 1
    x = draw(st.integers(1, n + 1))
    m = n + 1 - x + draw(st.integers(0, 2))
    e = Segment(d.rho, d.a + x, d.a + x + m, d.eta_pow)
    return (d, e) if draw(st.booleans()) else (e, d)


@given(linked_pairs())
def test_linked_lengths_add_up(pair):
    d, e = pair
    assert relate(d, e).linked
    m = merge(d, e)
    inter = m.intersection.length if m.intersection else 0
    assert m.union.length + inter == d.length + e.length


@given(same_line_pairs())
def test_relation_invariants(pair):
    d, e = pair
    r = relate(d, e)
    assert not (r.precedes and r.preceded_by)
    if r.juxtaposed:
        assert r.linked
    if r.linked:
        assert r.precedes != r.preceded_by


@given(same_line_pairs())
def test_dual_reverses_precedence(pair):
    d, e = pair
    assume(REG[d.rho].self_dual)
    assert relate(d, e).precedes == relate(segment_dual(e, REG), segment_dual(d, REG)).precedes


@given(segments())
def test_dual_is_involution(d):
    assert segment_dual(segment_dual(d, REG), REG) == d


@given(segments())
def test_shift_by_one(d):
    r = relate(d, d.shift(1))
    assert r.precedes
    assert r.juxtaposed == (d.length == 1)


def _compositions(n):
    if n == 0:
        yield []
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            yield [first] + rest


@given(segments(max_len=5))
def test_jacquet_reverse_concatenation(d):
    for part in _compositions(d.length):
        pieces = jacquet_discrete(d, part, REG)
        assert [p.length for p in pieces] == part
        rising = [x for p in reversed(pieces) for x in reversed(p.cuspidals())]
        assert rising == d.cuspidals()[::-1]
