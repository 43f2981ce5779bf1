import pytest

from divtower.decoration import (
    DegenerateDecorationError,
    decorate,
    discriminant_certificate,
    independence_check,
    level_one_values,
    multiset_equal,
    symbolic_discriminant_identity,
    compare_chain_with_variants,
)
from divtower.fields import QQ, Ambient, RationalFunctionField, Subfield, TowerField
from divtower.towers import SPECIALIZATIONS, Workbench
from divtower.tree import children, enumerate_level, twin, vertex_from_label


def _a(alphas):
    F = TowerField.over(QQ)
    return level_one_values([F(x) for x in alphas])


def test_level_one_values():
    assert [str(x) for x in _a((0, 1, 3))] == ["-2", "3", "-1"]


def test_level_two_both_variants():
    v = vertex_from_label((1, 0), 1)
    d = decorate(_a((0, 1, 3)), 2)
    x, y = (d.values[c] for c in children(v))
    assert x + y == 8 and x * y == 4 and (x - 4) ** 2 == 12
    d = decorate(_a((0, 1, 3)), 2, variant="paper-literal", strict=False)
    x, y = (d.values[c] for c in children(v))
    assert x + y == 8 and x * y == 9 and (x - 4) ** 2 == 7


def test_paper_literal_degenerates_at_first_specialization():
    with pytest.raises(DegenerateDecorationError):
        decorate(_a((0, 1, 3)), 2, variant="paper-literal")
    d = decorate(_a((0, 1, 3)), 2, variant="paper-literal", strict=False)
    assert not d.is_valid and d.defects


def test_discriminant_examples():
    d = decorate(_a((0, 1, 3)), 3)
    cert = discriminant_certificate(d)
    assert cert["holds"] and cert["quadratics"] == 3 + 6
    first = [e for e in cert["entries"] if e["vertex"] == "1:0"][0]
    assert first["discriminant"] == "48"
    assert symbolic_discriminant_identity()


@pytest.mark.parametrize("alphas", SPECIALIZATIONS)
def test_level_five_branch(alphas):
    d = decorate(_a(alphas), 5, layout="branch")
    assert len(d.values) == 3 * 31
    assert all(d.values.values())
    for v in d.values:
        if v.level >= 2:
            assert d.values[v] != d.values[twin(v)]
    assert discriminant_certificate(d)["holds"]


def test_generic_level_two():
    R = RationalFunctionField(("a1", "a2", "a3"))
    amb = Ambient(TowerField.over(R))
    amb.sqrt(-1)
    a = level_one_values([amb(g) for g in R.gens])
    d = decorate(a, 2, ambient=amb)
    assert discriminant_certificate(d)["holds"]
    for v in enumerate_level(1):
        x, y = (d.values[c] for c in children(v))
        w, w2 = d.values[v], d.values[twin(v)]
        assert x * y == w * w and x + y == 2 * (2 * w2 + w)


@pytest.mark.parametrize("policy", ["swapped", "random"])
def test_policies_same_multisets(policy):
    a = _a((0, 2, 5))
    amb = Ambient(a[0].owner)
    d1 = decorate(a, 3, ambient=amb)
    d2 = decorate(a, 3, policy=policy, ambient=amb, seed=7)
    for m in (1, 2, 3):
        assert multiset_equal(d1.at_level(m), d2.at_level(m))


def test_random_policy_is_seeded():
    a = _a((1, 3, 8))
    d1 = decorate(a, 3, policy="random", ambient=Ambient(a[0].owner), seed=3)
    d2 = decorate(a, 3, policy="random", ambient=Ambient(a[0].owner), seed=3)
    assert all(repr(d1.values[v]) == repr(d2.values[v]) for v in d1.values)


@pytest.mark.parametrize("alphas", SPECIALIZATIONS)
def test_chain_agreement_stable(alphas):
    bench = Workbench(alphas)
    v = compare_chain_with_variants(bench.chain(3).values(), bench.a_values, 3, bench.ambient)
    assert v.passed
    assert "chain satisfies: construction-consistent" in v.notes


def test_variant_fields_compared_generically():
    bench = Workbench(None)
    v = compare_chain_with_variants(bench.chain(2).values(), bench.a_values, 2, bench.ambient, over=bench.K1().subfield)
    assert v.passed
    assert v.degrees["level_2_fields"] == {"construction-consistent": 8, "paper-literal": 16}
    assert "level 2 fields of the two variants differ" in v.notes


def test_independence_generic():
    bench = Workbench(None)
    v = independence_check(bench.a_values, 2, bench.ambient, bench.K1().subfield, mode="generic")
    assert v.passed


def test_bad_arguments():
    with pytest.raises(ValueError):
        decorate(_a((0, 1, 3)), 0)
    with pytest.raises(ValueError):
        decorate(_a((0, 1, 3)), 2, variant="other")
