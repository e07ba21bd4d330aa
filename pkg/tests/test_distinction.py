from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from galdist.cuspidal_lines import default_registry
from galdist.distinction import (Status, discrete_series_distinction, distinguish,
                                 involution_search, proper_ladder_distinguished,
                                 standard_module_distinguished, theta_induced_ladders,
                                 unitary_distinguished)
from galdist.errors import PreconditionError
from galdist.ladders import Multisegment, UnitaryFactor, is_proper_ladder, ms
from galdist.segments import Segment

H = Fraction(1, 2)
REG = default_registry()


def S(a, b, rho="rho"):
    return Segment(rho, Fraction(a), Fraction(b))


def test_discrete_series_examples():
    v = discrete_series_distinction(Segment.steinberg("rho", 3), REG)
    assert v.status is Status.DISTINGUISHED and v.trace == ("Steinberg odd",)
    assert discrete_series_distinction(Segment.steinberg("rho", 2), REG).status is Status.ETA_DISTINGUISHED
    assert discrete_series_distinction(Segment.steinberg("rho", 2, H), REG).status is Status.NEITHER
    assert discrete_series_distinction(S(0, 0, "rho1"), REG).status is Status.NEITHER


def test_standard_module_examples():
    v = standard_module_distinguished([S(H, H), S(-H, -H)], REG)
    assert v.distinguished and v.witness == (2, 1)
    v = standard_module_distinguished([S(0, 0)], REG)
    assert v.distinguished and v.witness == (1,)
    assert standard_module_distinguished([S(H, H), S(H, H)], REG).status is Status.NEITHER


def test_standard_module_partner_lines():
    v = standard_module_distinguished([S(0, 1, "rho1"), S(-1, 0, "rho2")], REG)
    assert v.distinguished and v.witness == (2, 1)


def test_ladder_examples():
    assert proper_ladder_distinguished(ms(S(H, H), S(-H, -H)), REG).distinguished
    assert proper_ladder_distinguished(ms(S(1, 1), S(0, 0), S(-1, -1)), REG).distinguished
    v = proper_ladder_distinguished(ms(S(H, H, "rhoe"), S(-H, -H, "rhoe")), REG)
    assert v.status is Status.NEITHER
    with pytest.raises(PreconditionError):
        proper_ladder_distinguished(ms(S(0, 1), S(-3, -2)), REG)


def test_unitary_examples():
    assert unitary_distinguished([UnitaryFactor.speh(S(0, 0), 2)], REG).distinguished
    f = UnitaryFactor.speh(S(0, 0, "rho1"), 2)
    v = unitary_distinguished([f, f.dual(REG)], REG)
    assert v.distinguished and v.witness == (2, 1)
    assert not unitary_distinguished([f], REG).distinguished
    v = unitary_distinguished([UnitaryFactor.pair(S(0, 0), 1, Fraction(1, 4))], REG)
    assert v.distinguished and v.witness == (1,)


def test_unitary_ladder_path():
    # a non-proper ladder splits into two unlinked proper pieces
    v = distinguish(ms(S(3, 3), S(-3, -3)), REG)
    assert v.distinguished and v.trace[0] == "unlinked ladders"
    with pytest.raises(PreconditionError):
        unitary_distinguished([ms(S(0, 1)), ms(S(1, 2))], REG)


def test_involution_search_lexicographic():
    eps = involution_search(4, lambda i, j: True, lambda i: True)
    assert eps == (1, 2, 3, 4)
    eps = involution_search(4, lambda i, j: True, lambda i: False)
    assert eps == (2, 1, 4, 3)
    assert involution_search(3, lambda i, j: True, lambda i: False) is None


# fixtures pi_j(rho): singletons nu^{i} rho around one Z([(j-1)/2, (j+1)/2]) block
def pi_j(rho, k, j):
    pts = [Fraction(1 - k, 2) + i for i in range(k)]
    z = {Fraction(j - 1, 2), Fraction(j + 1, 2)}
    ladders = [ms(Segment(rho, p, p)) for p in pts if p not in z]
    ladders.append(ms(Segment(rho, Fraction(j + 1, 2), Fraction(j + 1, 2)),
                      Segment(rho, Fraction(j - 1, 2), Fraction(j - 1, 2))))
    return ladders


ANTISTANDARD = [(rho, k, j) for rho in ("rho", "rhoe", "rho3", "rhoe3") for k in range(2, 7)
                for j in range(2 - k, k - 1, 2)]


@pytest.mark.parametrize("rho,k,j", ANTISTANDARD)
def test_antistandard_fixtures(rho, k, j):
    v = theta_induced_ladders(pi_j(rho, k, j), REG)
    # eta^l = eta since l is odd, so the j = 0 exclusion is "rho eta-distinguished"
    if j != 0 or REG[rho].duality.value == "EtaDistinguished":
        assert v.status is Status.NEITHER
    else:
        assert v.distinguished


def _expand(factors):
    out = []
    for f in factors:
        out.extend(f.ladders())
    return out


deltas = st.builds(lambda rho, n, c: Segment.steinberg(rho, n, c),
                   st.sampled_from(["rho", "rhoe", "rho1", "rho2"]), st.integers(1, 2),
                   st.sampled_from([0, 0, 1, -1]))
factors = st.one_of(
    st.builds(UnitaryFactor.speh, deltas, st.integers(1, 2)),
    st.builds(lambda d, k: UnitaryFactor.pair(d, k, Fraction(1, 4)), deltas, st.integers(1, 2)))


@given(st.lists(factors, min_size=1, max_size=4))
def test_unitary_matches_ladder_level_theta_induction(fs):
    direct = theta_induced_ladders(_expand(fs), REG).distinguished
    assert unitary_distinguished(fs, REG).distinguished == direct


@given(st.lists(st.tuples(st.integers(-2, 2), st.integers(0, 2)), min_size=1, max_size=3),
       st.sampled_from(["rho", "rhoe", "rho1"]))
def test_odd_ladders_stable_under_dual(spec, rho):
    segs = sorted({Segment(rho, Fraction(a), Fraction(a + n)) for a, n in spec}, reverse=True)
    m = Multisegment(tuple(segs))
    if len(m) % 2 == 0 or not is_proper_ladder(m):
        return
    assert proper_ladder_distinguished(m, REG).status == proper_ladder_distinguished(m.dual(REG), REG).status


@given(st.sampled_from(["rho", "rhoe", "rho3", "rhoe3"]), st.integers(1, 6), st.integers(0, 1))
def test_never_both(rho, k, eta):
    d = Segment.steinberg(rho, k, eta_pow=eta)
    v = discrete_series_distinction(d, REG)
    assert v.status in (Status.DISTINGUISHED, Status.ETA_DISTINGUISHED)
    assert discrete_series_distinction(d.eta_twist(), REG).status != v.status
