import pytest
from hypothesis import given, settings, strategies as st

from helpers import seeded
from scrollulrich.cohomology import ResolutionPresentation
from scrollulrich.lattice import build_surface, intersect
from scrollulrich.oracle import sym_expand
from scrollulrich.rr import (BundleData, ChernError, chern_from_resolution, chi_bundle, chi_line, dual, p2_rank2_c2,
                             special_ulrich_numerics, sym_coefficients, sym_power, twist)

P2 = build_surface("P2")
Q = build_surface("Quadric")
K3 = build_surface("K3Lattice", (14, 16, 14))
SURF = [P2, Q, build_surface("F1"), build_surface("BlownPlane", 6), K3]


def test_chi_line_p2():
    assert [chi_line(P2, P2.divisor(d)) for d in range(-3, 4)] == [1, 0, 0, 1, 3, 6, 10]


def test_chi_bundle_examples():
    E = BundleData(K3, 2, K3.parse("H"), 5)
    assert chi_bundle(K3, E) == 2 * 2 + 7 - 5
    Et = twist(E, K3.parse("H - C"))
    assert (Et.c2, chi_bundle(K3, Et)) == (-1, 0)


@seeded
@settings(max_examples=120, deadline=None)
@given(st.sampled_from(SURF), st.data())
def test_twist_composition(S, data):
    v = lambda: S.divisor(*data.draw(st.lists(st.integers(-5, 5), min_size=S.rank, max_size=S.rank)))
    r = data.draw(st.integers(1, 4))
    B = BundleData(S, r, v(), 0 if r == 1 else data.draw(st.integers(-20, 20)))
    D1, D2 = v(), v()
    assert twist(twist(B, D1), D2) == twist(B, D1 + D2)
    assert twist(B, S.zero()) == B
    assert dual(dual(B)) == B


@pytest.mark.parametrize("j", range(0, 9))
def test_sym_power_matches_symbolic(j):
    assert sym_coefficients(j) == sym_expand(j)


def test_sym_power_numbers():
    E = BundleData(K3, 2, K3.parse("H"), 5)
    S2 = sym_power(E, 2)
    assert (S2.rank, S2.c1, S2.c2) == (3, 3 * K3.parse("H"), 48)
    assert sym_power(E, 1) == E
    assert sym_power(E, 0) == BundleData(K3, 1, K3.zero(), 0)
    with pytest.raises(ChernError):
        sym_power(S2, 2)


def test_resolution():
    pres = ResolutionPresentation([P2.parse("-h")] * 4, [P2.zero()] * 6)
    B = chern_from_resolution(P2, pres)
    assert (B.c1, B.c2) == (P2.parse("4h"), 10)
    with pytest.raises(ChernError):
        chern_from_resolution(P2, ResolutionPresentation([], [P2.zero()] * 3))


def test_special_numerics():
    F1 = build_surface("F1")
    F = special_ulrich_numerics(F1, F1.parse("3C0 + 5f"))
    assert (F.c1, F.c2) == (F1.parse("7C0 + 12f"), 35)
    Ft = twist(F, -F1.parse("3C0 + 5f"))
    assert (Ft.c1, Ft.c2) == (F1.parse("C0 + 2f"), 6)
    G = twist(special_ulrich_numerics(K3, K3.parse("H")), -K3.parse("H"))
    assert (G.c1, G.c2) == (K3.parse("H"), 11)


def test_p2_rank2():
    assert [p2_rank2_c2(e) for e in (1, 2, 3, 4, 5)] == [1, 1, 2, 4, 7]


def test_bad_bundle():
    with pytest.raises(ChernError):
        BundleData(P2, 0, P2.zero(), 0)


def test_chi_noether_consistency():
    # chi(O) from Riemann-Roch equals the model value on every surface
    for S in SURF:
        assert chi_line(S, S.zero()) == S.chi
        assert chi_line(S, S.canonical) == S.chi
        assert intersect(S, S.zero(), S.zero()) == 0
