import pytest

from divtower.decoration import multiset_equal
from divtower.fields import QQ, Ambient, Subfield, TowerField
from divtower.isogeny_chain import build_chain, extend, root_chain
from divtower.towers import Workbench
from divtower.tree import enumerate_level, parent, twin


@pytest.fixture(scope="module")
def bench():
    return Workbench((0, 1, 3))


def test_root_chain_values():
    F = TowerField.over(QQ)
    root, l1 = root_chain((F(0), F(1), F(3)))
    assert [n.a_value for n in l1] == [F(-2), F(3), F(-1)]
    E1 = l1[0].curve
    assert (E1.c2, E1.c1, E1.c0) == (F(-8), F(4), F(0))
    assert root.degree == 1 and all(n.degree == 2 for n in l1)


def test_level_one_kernels():
    amb = Ambient(TowerField.over(QQ))
    amb.sqrt(-1)
    F = amb.field
    root, l1 = root_chain((F(0), F(1), F(3)), zeta4=F.gen(1))
    E = root.curve
    for node, r in zip(l1, (0, 1, 3)):
        assert node.apply(E.point(r, 0)).is_infinity
        others = [s for s in (0, 1, 3) if s != r]
        for s in others:
            assert node.apply(E.point(s, 0)) == node.curve.point(0, 0)


def test_children_of_first_vertex():
    F = TowerField.over(QQ)
    _, l1 = root_chain((F(0), F(1), F(3)))
    kids = extend(l1[0])
    vals = [k.a_value for k in kids]
    assert vals[0] + vals[1] == 8 and vals[0] * vals[1] == 4
    assert (vals[0] - 4) ** 2 == 12
    a, b = vals
    E = kids[0].curve
    assert E.c2 == -2 * (b - 2 * a) and E.c1 == b * b and not E.c0


def test_chain_counts():
    F = TowerField.over(QQ)
    chain = build_chain((F(0), F(1), F(3)), 3, ambient=Ambient(F))
    for m in (1, 2, 3):
        assert len(chain.at_level(m)) == 3 * 2 ** (m - 1)
    for v, node in chain.nodes.items():
        if v.level >= 2:
            p = chain.nodes[parent(v)]
            t = chain.nodes[twin(v)]
            assert node.a_value + t.a_value == -p.curve.c2
            assert node.a_value * t.a_value == p.curve.c1
            assert node.curve.c2 == -2 * (t.a_value - 2 * node.a_value)


def test_level_one_curve_formula():
    F = TowerField.over(QQ)
    chain = build_chain((F(1), F(3), F(8)), 1)
    a = [n.a_value for n in chain.at_level(1)]
    for i, node in enumerate(chain.at_level(1)):
        ai, aj = a[i], a[(i + 1) % 3]
        assert node.curve.c2 == -2 * (2 * aj + ai) and node.curve.c1 == ai * ai


def test_degenerate_roots_rejected():
    F = TowerField.over(QQ)
    with pytest.raises(ValueError, match="distinct"):
        root_chain((F(0), F(0), F(1)))


def test_curve_coefficients_in_ancestor_field(bench):
    chain = bench.chain(3)
    K1 = bench.K1().subfield
    for v in enumerate_level(3):
        gens, u = [], v
        while u.level >= 1:
            gens.append(chain.nodes[u].a_value)
            gens.append(chain.nodes[twin(u)].a_value)
            u = parent(u)
        L = K1.extended(gens)
        node = chain.nodes[v]
        assert all(c in L for c in (node.curve.c2, node.curve.c1, node.curve.c0))


def test_labeled_kernels_and_agreement(bench):
    labeled = bench.chain(3, mode="labeled")
    assert len(labeled.kernel_checks) == 3 + 6 + 12
    assert all(c["holds"] for c in labeled.kernel_checks)
    assert all(c["half_image_is_2_torsion"] for c in labeled.kernel_checks)
    unlabeled = bench.chain(3)
    for m in (1, 2, 3):
        assert multiset_equal([n.a_value for n in labeled.at_level(m)], [n.a_value for n in unlabeled.at_level(m)])


def test_corrected_convention_flips_even_levels(bench):
    tw, co = bench.chain(3, convention="twisted"), bench.chain(3, convention="corrected")
    for m in (1, 2, 3):
        sign = 1 if m % 2 else -1
        assert multiset_equal([n.a_value for n in tw.at_level(m)], [sign * n.a_value for n in co.at_level(m)])
