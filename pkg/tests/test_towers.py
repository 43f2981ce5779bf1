import json

import pytest

from divtower.towers import CLAIMS, COMBINATORIAL, SPECIALIZATIONS, Workbench, verify

FAST_LEVEL_TWO = ("decoration-soundness", "chain-is-decoration", "assignment-independence", "k2prime-pairwise",
                  "k2-root-adjunction", "xfield-plus-root", "prime-in-xfield", "prime-in-division",
                  "division-sandwich", "main-theorem-pairs", "conventions-agree")


@pytest.fixture(scope="module")
def bench():
    return Workbench((0, 1, 3))


@pytest.fixture(scope="module")
def bench_rational():
    return Workbench((0, 1, 3), zeta_level=1, convention="corrected")


def test_rejects_repeated_roots():
    with pytest.raises(ValueError, match="distinct"):
        Workbench((0, 0, 1))


def test_small_fields(bench):
    assert bench.k().degree == 2 and bench.K1().degree == 2
    K2 = bench.Kn(2)
    target = bench.K1().extended([bench.sqrt(2), bench.sqrt(3)], "QQ(i, sqrt 2, sqrt 3)", [])
    assert K2.degree == 8 and K2.equals(target)


def test_third_level_degrees(bench):
    assert bench.Kn_prime(3).degree == 32
    K3 = bench.Kn(3)
    assert K3.degree == 64 and K3.contains(bench.Kn_prime(3))
    assert bench.ensure_zeta(3) in K3


def test_xfield_over_rationals(bench_rational):
    b = bench_rational
    Kx = b.Kx(2)
    expected = b.K1().extended([b.sqrt(3), b.sqrt(-2), b.sqrt(6)], "QQ(sqrt 3, sqrt -2, sqrt 6)", [])
    assert Kx.degree == 8 and Kx.equals(expected)
    assert b.sqrt(-1) in Kx.subfield


def test_level_two_prime_over_rationals(bench_rational):
    b = bench_rational
    K2p = b.Kn_prime(2)
    assert K2p.equals(b.Kx(2))
    pairwise = b.K1().extended([b.sqrt(-6), b.sqrt(-3), b.sqrt(2)], "", [])
    assert pairwise.degree == 4 and not K2p.equals(pairwise)


@pytest.mark.parametrize("alphas", SPECIALIZATIONS)
def test_identities_without_i(alphas):
    b = Workbench(alphas, zeta_level=1, convention="corrected")
    v = verify("k2prime-pairwise", 2, b)
    assert not v.passed
    assert v.checks[0]["holds"] and not v.checks[1]["holds"]
    assert b.sqrt(-1) in b.Kn(2).subfield
    for claim in ("xfield-plus-root", "prime-in-xfield", "prime-in-division"):
        assert verify(claim, 2, b).passed


def test_root_adjunction_needs_i():
    b = Workbench((0, 2, 5), zeta_level=1, convention="corrected")
    v = verify("k2-root-adjunction", 2, b)
    assert not v.checks[0]["holds"]
    assert verify("k2-root-adjunction", 2, Workbench((0, 2, 5))).passed


@pytest.mark.parametrize("alphas", SPECIALIZATIONS)
def test_level_two_claims(alphas):
    b = Workbench(alphas)
    for claim in FAST_LEVEL_TWO:
        v = verify(claim, 2, b)
        assert v.passed, (claim, v.to_dict())
    assert verify("k1prime-equals-k1", 1, b).passed


def test_level_three_claims(bench):
    for claim in ("division-index", "zeta8-in-k3", "chain-kernels"):
        v = verify(claim, 3, bench)
        assert v.passed, (claim, v.to_dict())


def test_index_equality_flag(bench):
    v = verify("division-index", 3, bench)
    entry = [c for c in v.checks if "<=" in c["check"]][0]
    assert entry["degree"] == 2 and entry["equality"]


def test_combinatorial_claims():
    for claim in COMBINATORIAL:
        assert verify(claim, 3).passed
    assert verify("isogeny-identities", 0).passed


def test_generic_level_two():
    b = Workbench(None)
    assert b.mode == "generic"
    v = verify("k2prime-pairwise", 2, b)
    assert v.passed and v.degrees["K2'"]["over_K1"] == 4
    assert verify("xfield-plus-root", 2, b).passed


def test_generic_level_three_is_gated():
    b = Workbench(None)
    v = verify("division-index", 3, b)
    assert not v.passed and any("long" in note for note in v.notes)


def test_reports_deterministic():
    def run():
        b = Workbench((0, 2, 5))
        out = {}
        for claim in ("k2prime-pairwise", "chain-is-decoration"):
            d = verify(claim, 2, b).to_dict()
            d.pop("runtime_s")
            out[claim] = d
        return json.dumps(out, sort_keys=True)
    assert run() == run()


def test_unknown_claim():
    with pytest.raises(ValueError):
        verify("nope", 2)
    assert len(CLAIMS) == 19


@pytest.mark.parametrize("alphas", SPECIALIZATIONS)
def test_basis_generates_division_field(alphas):
    b = Workbench(alphas)
    for n in (1, 2):
        pts = b.torsion.all_points(n)
        every = b.K1().extended([c for P in pts if not P.is_infinity for c in (P.x, P.y)], "all points", [])
        assert b.Kn(n).equals(every)
