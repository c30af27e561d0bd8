import pytest
from hypothesis import given, settings, strategies as st

from helpers import seeded
from scrollulrich.lattice import (Decomposition, DivisorClass, Indecomposable, Kind, LatticeError, ProvedImpossible, SurfaceModel,
                                  UnknownUpTo, Witness, as_kind, blow_up, build_surface, format_divisor, inertia,
                                  indecomposability_check, intersect, parse_divisor, pullback, represented_values, represents, residues)

P2 = build_surface("ProjectivePlane")
Q = build_surface("Quadric")
F1 = build_surface("Hirzebruch1")
CUBIC = build_surface("BlownPlane", 6)
K3A = build_surface("K3Lattice", (14,))
K3B = build_surface("K3Lattice", (14, 16, 14))
ALL = [P2, Q, F1, CUBIC, K3A, K3B]


def test_basic_numbers():
    assert intersect(P2, P2.canonical, P2.canonical) == 9
    assert intersect(Q, Q.canonical, Q.canonical) == 8
    assert intersect(F1, F1.canonical, F1.canonical) == 8
    assert intersect(CUBIC, CUBIC.canonical, CUBIC.canonical) == 3
    assert intersect(CUBIC, CUBIC.ample_ref, CUBIC.ample_ref) == 3
    for S in ALL:
        assert intersect(S, S.ample_ref, S.ample_ref) > 0
        # Noether: 12 chi = K^2 + e
        assert 12 * S.chi == intersect(S, S.canonical, S.canonical) + S.euler


def test_inertia():
    assert inertia(Q.gram) == (1, 1, 0)
    assert inertia(CUBIC.gram) == (1, 6, 0)
    assert inertia(K3B.gram) == (1, 1, 0)
    assert inertia(((0, 0), (0, 1))) == (1, 0, 1)


def test_twenty_seven_lines():
    lines = CUBIC.minus_one_curves
    assert len(lines) == 27 and len(set(lines)) == 27
    for L in lines:
        assert intersect(CUBIC, L, L) == -1
        assert intersect(CUBIC, L, CUBIC.canonical) == -1
    # each line meets exactly ten others
    for L in lines:
        assert sum(intersect(CUBIC, L, M) == 1 for M in lines) == 10


@pytest.mark.parametrize("kind,params", [("K3Lattice", (-2,)), ("K3Lattice", (2, 1, 2)), ("K3Lattice", (3,)),
                                         ("BlownPlane", (9,)), ("Nope", ())])
def test_bad_surfaces(kind, params):
    with pytest.raises(LatticeError):
        build_surface(kind, params)


def test_kind_aliases():
    assert as_kind("K3Lattice(2)") is Kind.K3
    assert as_kind("q2") is Kind.QUADRIC
    with pytest.raises(LatticeError):
        as_kind("torus")


def test_parse_format():
    D = parse_divisor(CUBIC, "e0 - 2e1 - e6")
    assert D == DivisorClass((1, -2, 0, 0, 0, 0, -1))
    assert format_divisor(CUBIC, D) == "e0 - 2e1 - e6"
    assert format_divisor(Q, Q.zero()) == "0"
    assert parse_divisor(K3B, "2*H - 3 C") == K3B.divisor(2, -3)
    with pytest.raises(LatticeError):
        parse_divisor(P2, "h + x")
    with pytest.raises(LatticeError):
        parse_divisor(P2, "h +")


@seeded
@settings(max_examples=150, deadline=None)
@given(st.sampled_from(ALL), st.data())
def test_parse_format_roundtrip(S, data):
    D = S.divisor(*data.draw(st.lists(st.integers(-30, 30), min_size=S.rank, max_size=S.rank)))
    assert parse_divisor(S, format_divisor(S, D)) == D


def test_divisor_arithmetic():
    a, b = K3B.divisor(1, 2), K3B.divisor(-3, 5)
    assert a + b == K3B.divisor(-2, 7)
    assert 2 * a - b == K3B.divisor(5, -1)
    assert -a == K3B.divisor(-1, -2)
    assert (a - a).is_zero()


def test_dimension_mismatch():
    with pytest.raises(LatticeError):
        intersect(Q, Q.divisor(1, 0), P2.divisor(1))


def test_represents():
    assert represents(K3B, -2) == ProvedImpossible(represents(K3B, -2).reason, 3)
    assert isinstance(represents(K3B, -2, moduli=(5,)), ProvedImpossible)
    assert represents(K3B, -2, moduli=(5,)).modulus == 5
    assert isinstance(represents(K3B, 0), ProvedImpossible)
    w = represents(K3B, 6)
    assert isinstance(w, Witness) and intersect(K3B, w.divisor, w.divisor) == 6
    assert represented_values(K3B, range(2, 14, 2)) == [6]
    # the form 14x^2 + 32xy + 14y^2 takes even values only
    assert residues(K3B, 2) == {0}
    assert isinstance(represents(K3B, 7), ProvedImpossible)
    # a value with a witness far away: the search gives up honestly
    r = represents(K3B, 14, bound=0)
    assert isinstance(r, (UnknownUpTo, Witness))


def test_indecomposable():
    for D in ("H", "C"):
        r = indecomposability_check(K3B, K3B.parse(D))
        assert isinstance(r, Indecomposable) and r.certified
        assert any("(6,6,1)" in t and "35" in t for t in r.trace)
    # 2H splits as H + H
    assert isinstance(indecomposability_check(K3B, K3B.parse("2H")), Decomposition)


def test_blow_up():
    B = blow_up(Q, 3)
    assert B.kind is Kind.BLOWUP and B.rank == 5
    assert intersect(B, B.canonical, B.canonical) == 8 - 3
    D = Q.divisor(2, 1)
    assert intersect(B, pullback(B, D), pullback(B, D)) == intersect(Q, D, D)


def test_record():
    rec = K3B.to_record()
    assert rec["gram"] == [[14, 16], [16, 14]] and rec["basis"] == ["H", "C"]
    assert isinstance(K3B, SurfaceModel)
