from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from divtower.fields import (
    QQ,
    Ambient,
    NotInLineageError,
    RationalFunctionField,
    Specialization,
    SpecializationError,
    Subfield,
    TowerField,
    adjoin_zeta,
    common_field,
    is_square,
    member,
    parse_rational,
)
from divtower.fields import _vec


def test_rational_sqrt_and_format():
    assert QQ.sqrt(QQ("9/4")) == QQ("3/2")
    assert QQ.sqrt(QQ(2)) is None
    assert QQ.sqrt(QQ(-4)) is None
    assert QQ.format(QQ("-6/4")) == "-3/2"
    assert parse_rational("7") == QQ(7)
    assert QQ(Fraction(1, 3)) == QQ("1/3")


def test_sqrt2_found_inside_two_radicands():
    F = TowerField.over(QQ)
    F, a = F.adjoin_sqrt(-6)
    F, b = F.adjoin_sqrt(-3)
    r = F.sqrt(2)
    assert r is not None and r * r == 2
    assert F.degree == 4


def test_adjoin_doubles_exactly_when_not_square():
    F = TowerField.over(QQ)
    F1, r = F.adjoin_sqrt(3)
    assert F1.degree == 2 and r * r == 3
    F2, w = F1.adjoin_sqrt(12)
    assert F2 is F1 and w * w == 12
    F3, g = F1.adjoin_sqrt(F1(2) + r)
    assert F3.degree == 4 and g * g == 2 + r


def test_adjoin_zero_rejected():
    with pytest.raises(ValueError):
        TowerField.over(QQ).adjoin_sqrt(0)


def test_zeta_chain_examples():
    F = TowerField.over(QQ)
    G, z, chain = adjoin_zeta(F, 1)
    assert G is F and z == -1
    G, i, _ = adjoin_zeta(F, 2)
    assert i * i == -1 and G.degree == 2
    G, z8, chain = adjoin_zeta(F, 3)
    assert z8**2 == chain[2] and z8**4 == -1 and z8**8 == 1


def test_zeta8_reuses_sqrt2():
    F = TowerField.over(QQ)
    F, _ = F.adjoin_sqrt(2)
    G, z8, chain = adjoin_zeta(F, 3)
    assert G.degree == 4  # only i was adjoined
    assert z8**2 == chain[2]


def test_lineage_and_branches():
    F = TowerField.over(QQ)
    A, a = F.adjoin_sqrt(2)
    B, b = F.adjoin_sqrt(3)
    assert common_field(F, A) is A
    with pytest.raises(NotInLineageError):
        a + b
    with pytest.raises(NotInLineageError):
        member(a, B)
    C, c = A.adjoin_sqrt(3)
    assert a + c == C(a) + c
    assert member(F(5), A) is not None
    assert member(c, A) is None


def test_member_roundtrip_in_subfield():
    F = TowerField.over(QQ)
    F, a = F.adjoin_sqrt(2)
    F, b = F.adjoin_sqrt(5)
    L = Subfield(F, [a * b])
    assert L.degree == 2
    x = 3 + 4 * a * b
    coords = member(x, L)
    assert coords is not None and L.expand(coords) == x
    assert member(a, L) is None


def test_subfield_equality_and_growth():
    F = TowerField.over(QQ)
    F, a = F.adjoin_sqrt(-6)
    F, b = F.adjoin_sqrt(-3)
    L1 = Subfield(F, [a, b])
    L2 = Subfield(F, [a + b])
    assert L1 == L2 and L1.degree == 4
    G, c = F.adjoin_sqrt(7)
    L3 = L1.extended([c])
    assert L3.degree == 8 and L1.degree == 4
    assert L3.contains_field(L1) and not L1.contains_field(L3)


def test_ambient_log():
    amb = Ambient(TowerField.over(QQ))
    r = amb.sqrt(2, label="r2")
    amb.sqrt(8)
    amb.sqrt(3)
    assert [label for label, _ in amb.log] == ["r2", "sqrt(3)"]
    assert amb.degree == 4 and amb(r) ** 2 == 2


def _tower():
    F = TowerField.over(QQ)
    F, r2 = F.adjoin_sqrt(2)
    F, r3 = F.adjoin_sqrt(3)
    F, w = F.adjoin_sqrt(1 + F(r2))
    return F


TOWER = _tower()
coeff = st.fractions(min_value=-20, max_value=20, max_denominator=9)
elem = st.lists(coeff, min_size=TOWER.degree, max_size=TOWER.degree).map(
    lambda cs: TOWER.element([QQ(c) for c in cs]))


@settings(max_examples=40, deadline=None)
@given(elem, elem, elem)
def test_field_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x and x * y == y * x
    if x:
        assert x * x.inverse() == 1
        assert (y / x) * x == y


@settings(max_examples=30, deadline=None)
@given(elem)
def test_sqrt_of_square(x):
    s = is_square(x * x)
    assert s is not None and s * s == x * x


@settings(max_examples=30, deadline=None)
@given(elem)
def test_adjoin_roundtrip(x):
    if not x:
        return
    F, g = TOWER.adjoin_sqrt(x)
    assert g * g == x
    assert (F is TOWER) == (TOWER.sqrt(x) is not None)
    assert F.degree in (TOWER.degree, 2 * TOWER.degree)


def test_base_norm_is_multiplicative():
    F = TOWER
    x = F.element([QQ(j + 1) for j in range(F.degree)])
    y = F.element([QQ((-1) ** j * (j + 2)) for j in range(F.degree)])
    rads, k = F._rads, F.height
    assert _vec.base_norm((x * y).c, rads, k) == _vec.base_norm(x.c, rads, k) * _vec.base_norm(y.c, rads, k)


def test_specialization_is_a_ring_map():
    R = RationalFunctionField(("a", "b"))
    a, b = R.gens
    F = TowerField.over(R)
    F, s = F.adjoin_sqrt(a)
    F, t = F.adjoin_sqrt(b + s)
    sp = Specialization(F, (2, 3))
    x = (s + a) / (b - 1) + t * s
    y = t - a * b + s / a
    assert sp(x * y) == sp(x) * sp(y) and sp(x + y) == sp(x) + sp(y)
    assert sp(s) ** 2 == 2 and sp(t) ** 2 == 3 + sp(s)
    assert Subfield(sp.target, [sp(t)]).degree <= Subfield(F, [t]).degree


def test_specialization_rejects_bad_points():
    R = RationalFunctionField(("a", "b"))
    a, b = R.gens
    F, s = TowerField.over(R).adjoin_sqrt(a)
    with pytest.raises(SpecializationError, match="square"):
        Specialization(F, (4, 1))
    sp = Specialization(F, (2, 1))
    with pytest.raises(SpecializationError, match="denominator"):
        sp(s / (b - 1))
    with pytest.raises(ValueError):
        Specialization(F, (2,))
