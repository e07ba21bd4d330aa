import itertools
from fractions import Fraction

import pytest

from galdist.cuspidal_lines import default_registry
from galdist.errors import InternalConsistencyError, PreconditionError, RangeError
from galdist.laurent import RationalFunction
from galdist.ladders import ms
from galdist.lfactor_algebra import CuspSym, FactorAtom, FactorProduct, LinearForm, pole_order
from galdist.segments import Segment, relate
from galdist import spherical_periods as sp
from galdist.spherical_periods import (NOT_COVERED, PeriodSpec, alpha_factor, intertwining_pole,
                                       normalizing_factor, period_pole_at_minus_sr,
                                       spherical_period_closed, spherical_period_recursive)

H = Fraction(1, 2)
REG = default_registry()
Q = RationalFunction.symbol("sqrt_q")
Y1 = RationalFunction.symbol("Y1")


def S(a, b, rho="rho"):
    return Segment(rho, Fraction(a), Fraction(b))


def test_rank_one_single_character():
    a = RationalFunction.symbol("a")
    x = a * Y1 ** 2
    # L+(2s, a) / L-(2s+1, a) in the inert normalization
    expected = (1 + x / Q ** 2) / (1 - x)
    assert spherical_period_closed(PeriodSpec((("a",),))) == expected
    assert spherical_period_recursive(PeriodSpec((("a",),))) == expected


@pytest.mark.parametrize("sigma", [(("a",), ("b",)), (("a", "b"), ("c",)), (("a",), ("b", "c")),
                                   (("a", "b"), ("a", "b"))])
def test_closed_equals_recursive(sigma):
    spec = PeriodSpec(sigma)
    assert spherical_period_closed(spec) == spherical_period_recursive(spec)


def test_three_blocks():
    spec = PeriodSpec((("a",), ("b",), ("c",)))
    assert spherical_period_closed(spec) == spherical_period_recursive(spec)
    with pytest.raises(PreconditionError):
        spherical_period_recursive(spec, max_r=2)


def test_recursion_catches_a_bad_word(monkeypatch):
    # negative control: a wrong reduced word must trip the admissibility check
    real = sp.lemma_mu_word

    def wrong(kind, a, b, i):
        return list(reversed(real(kind, a, b, i)))

    monkeypatch.setattr(sp, "lemma_mu_word", wrong)
    with pytest.raises(InternalConsistencyError):
        spherical_period_recursive(PeriodSpec((("a", "b"), ("c", "d"))))


def test_negative_control_changes_value():
    base = spherical_period_closed(PeriodSpec((("a",), ("b",))))
    other = spherical_period_closed(PeriodSpec((("a",), ("c",))))
    assert base != other


def test_alpha_examples():
    s = LinearForm.var("s")
    two = s.scale(2)
    rho, eta = CuspSym("rho1"), CuspSym("rho1", 1)
    assert alpha_factor("rho1", 1, 1) == FactorProduct({
        FactorAtom.asai("+", eta, two): 1, FactorAtom.asai("+", rho, two, 1): -1,
        FactorAtom.asai("+", rho, -two): 1, FactorAtom.asai("+", eta, -two, 1): -1})
    assert alpha_factor("rho1", 1, 3) == FactorProduct({
        FactorAtom.asai("+", eta, two): 1, FactorAtom.asai("+", rho, two, 3): -1,
        FactorAtom.asai("+", rho, -two): 1, FactorAtom.asai("+", eta, -two, 3): -1})


# frozen table: (rho, k, l) -> (order at kl/2, order at -kl/2)
ALPHA_TABLE = {
    ("rho", 1, 1): (0, -1), ("rhoe", 1, 1): (-1, 0),
    ("rho", 2, 1): (0, -1), ("rhoe", 2, 1): (-1, 0),
    ("rho3", 1, 3): (0, -1), ("rhoe3", 1, 3): (-1, 0),
    ("rho3", 2, 3): (0, -1), ("rhoe3", 2, 3): (-1, 0),
}


@pytest.mark.parametrize("key", sorted(ALPHA_TABLE))
def test_alpha_zero_pattern(key):
    rho, k, l = key
    p = alpha_factor(rho, k, l)
    half = Fraction(k * l, 2)
    assert (pole_order(p, {"s": half}, REG), pole_order(p, {"s": -half}, REG)) == ALPHA_TABLE[key]


def test_intertwining_examples():
    v = intertwining_pole(S(1, 1), S(0, 0), REG)
    assert v.convergent_holomorphic and not v.pole
    v = intertwining_pole(S(-1, 0), S(0, 1), REG)
    assert v.pole and v.simple
    v = intertwining_pole(S(-1, -1), S(0, 0), REG)
    assert not v.pole and not v.convergent_holomorphic
    with pytest.raises(RangeError):
        intertwining_pole(S(0, 0), S(0, 0), REG)
    with pytest.raises(PreconditionError):
        intertwining_pole(S(0, 0), S(1, 1, "rhoe"), REG)


def test_intertwining_matches_normalizing_factor():
    # in the divergent range the normalizing factor vanishes at s_r exactly for
    # juxtaposed preceding pairs, the pairs where the pole rule says "no pole"
    rows = 0
    for a1, n1, a2, n2 in itertools.product(range(-3, 2), range(3), range(-3, 3), range(3)):
        dr, dr1 = S(a1, a1 + n1), S(a2, a2 + n2)
        if not dr.center - dr1.center < -Fraction(abs(n1 - n2), 2):
            continue
        v = intertwining_pole(dr, dr1, REG)
        rel = relate(dr, dr1)
        order = pole_order(normalizing_factor(dr, dr1, REG), {"s": dr.center}, REG)
        assert (order == -1) == (rel.precedes and rel.juxtaposed)
        assert (v.pole or order == -1) == rel.precedes
        rows += 1
    assert rows > 20


def test_period_pole_examples():
    p = period_pole_at_minus_sr(ms(S(0, 1), S(-1, 0)), REG)
    assert p.pole
    p = period_pole_at_minus_sr(ms(S(H, H), S(-H, -H)), REG)
    assert not p.pole
    p = period_pole_at_minus_sr(ms(S(0, 1, "rhoe"), S(-1, 0, "rhoe")), REG)
    assert not p.pole and p.reason == NOT_COVERED
    with pytest.raises(PreconditionError):
        period_pole_at_minus_sr(ms(S(0, 0)), REG)
