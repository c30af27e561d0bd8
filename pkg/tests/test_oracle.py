import pytest

from scrollulrich.catalog import CATALOG
from scrollulrich.oracle import brute_line_candidates, exhaustive_pair_match, kunneth_direct, sym_expand


def test_kunneth():
    assert kunneth_direct(3, -3).dims == (0, 8, 0)
    assert kunneth_direct(-2, -2).dims == (0, 0, 1)
    assert kunneth_direct(-1, 5).dims == (0, 0, 0)


def test_sym_expand():
    assert sym_expand(1) == (0, 1)
    assert sym_expand(2) == (2, 4)
    with pytest.raises(ValueError):
        sym_expand(9)


def test_brute_small_box():
    X = CATALOG["quadric"]
    b = brute_line_candidates(X, 2)
    assert sorted(tuple(D) for D in b[1]) == [(-1, 2), (2, -1)]
    assert [tuple(D) for D in b[2]] == [(-1, -1)]
    with pytest.raises(ValueError):
        brute_line_candidates(X, 0)


def test_brute_mitm_palatini():
    X = CATALOG["palatini"]
    b = brute_line_candidates(X, 3)
    # the a = 0 classes have e0-coefficient 4..6, outside this box
    assert len(b[2]) == 27 and b[0] == () and b[1] == ()
    assert len(brute_line_candidates(X, 6)[0]) == 27


def test_pair_match():
    X = CATALOG["k3-nl"]
    cands = [(2, (1, -1)), (0, (0, 1))]
    G = ((2, (1, 0)), 28)
    assert exhaustive_pair_match(X, G, cands) == []
    assert len(exhaustive_pair_match(X, ((2, (1, 0)), 32), cands)) == 2
