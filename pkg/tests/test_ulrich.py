import itertools

import pytest

from helpers import rng
from scrollulrich.catalog import CATALOG
from scrollulrich.chow import chi_pushforward, scroll_degree
from scrollulrich.lattice import DivisorClass
from scrollulrich.ulrich import (ChiBound, Exact, KnownFact, Status, UlrichLineCandidate, canonical_form, companion,
                                 enumerate_candidates, ext1_dimension, p2_case_analysis, satisfies_system,
                                 solve_chi_linear, verify_candidate)


@pytest.mark.parametrize("name", list(CATALOG))
def test_companion_involution(name, classified):
    X = CATALOG[name]
    for c in classified(name).candidates:
        if c.a in (0, 2):
            back = companion(X, companion(X, c))
            assert (back.a, back.D) == (c.a, c.D)
            assert satisfies_system(X, 2 - c.a, companion(X, c).D)


@pytest.mark.parametrize("name", list(CATALOG))
def test_candidates_are_ulrich_numerically(name, classified):
    X = CATALOG[name]
    for c in classified(name).candidates:
        assert [chi_pushforward(X, c.a - j, c.D) for j in (1, 2, 3)] == [0, 0, 0]
        assert chi_pushforward(X, c.a, c.D) == scroll_degree(X)


def test_permutation_equivariance(classified):
    X = CATALOG["palatini"]
    cl = classified("palatini")
    found = {(c.a, c.D): c.status for c in cl.candidates}
    r = rng("perm")
    for _ in range(10):
        p = list(range(6))
        r.shuffle(p)
        perm = lambda D: DivisorClass((D[0],) + tuple(D[1:][i] for i in p))
        assert {(a, perm(D)) for a, D in found} == set(found)
        for (a, D), st in list(found.items())[:12]:
            assert verify_candidate(X, UlrichLineCandidate(a, perm(D))).status is st


def test_orbits_and_canonical_form(classified):
    S = CATALOG["palatini"].surface
    cl = classified("palatini")
    for c in cl.candidates:
        n = len({tuple(v) for v in itertools.permutations(c.D[1:])})
        assert c.orbit_size == n
        assert canonical_form(S, c.D) == canonical_form(S, DivisorClass((c.D[0],) + tuple(reversed(c.D[1:]))))


def test_solver_rank1_and_obstruction():
    S = CATALOG["k3-general"].surface
    res = solve_chi_linear(S, S.parse("H"), 7)
    assert res.solutions == [] and "14*d[H] = 7" in res.obstruction
    res = solve_chi_linear(S, S.parse("H"), 14)
    assert res.solutions == [] or all(r[0] == 1 for r in res.solutions)


def test_statuses(classified):
    assert {c.status for c in classified("segre").candidates} == {Status.VERIFIED}
    assert {c.status for c in classified("p2-c2-6").candidates} == {Status.EXTERNAL}
    q = {tuple(c.D): c for c in classified("quadric").candidates if c.a == 0}
    w = q[(2, 2)].witness
    assert q[(2, 2)].status is Status.REJECTED and (w.index, w.bundle, w.note) == (2, "E", "Serre dual")


def test_needs_external_fact_without_it():
    from scrollulrich.chow import ScrollSpec
    X = CATALOG["p2-c2-6"]
    bare = ScrollSpec("bare", X.surface, X.bundle)
    en = enumerate_candidates(bare, 20, cross_check=False)
    sts = {verify_candidate(bare, c).status for c in en.candidates}
    assert sts == {Status.NUMERICAL}


def test_known_fact_nonvanishing():
    from scrollulrich.chow import ScrollSpec
    X = CATALOG["p2-c2-6"]
    bad = KnownFact("made-up", "test", "test", nonvanishing=((X.surface.divisor(-2), 1, 3),))
    Y = ScrollSpec("y", X.surface, X.bundle, known_facts=(bad,))
    c = verify_candidate(Y, UlrichLineCandidate(2, X.surface.divisor(-2)))
    assert c.status is Status.REJECTED and c.witness.dim == 3 and c.fact is bad


def test_ext_accepts_several_inputs(classified):
    X = CATALOG["quadric"]
    d = X.surface.divisor
    a = ext1_dimension(X, (1, d(2, -1)), (1, d(-1, 2)))
    cands = {tuple(c.D): c for c in classified("quadric").verified}
    b = ext1_dimension(X, cands[(2, -1)], cands[(-1, 2)])
    assert a == b == Exact(8)
    assert isinstance(ext1_dimension(CATALOG["k3-nl"], (2, CATALOG["k3-nl"].surface.parse("H - C")),
                                     (0, CATALOG["k3-nl"].surface.parse("C"))), ChiBound)


def test_p2_cases():
    cases = p2_case_analysis()
    assert [(c.e, c.b, c.c2, c.verdict) for c in cases] == [
        (2, -1, 3, "CatalogMismatch"), (2, -2, 1, "segre"), (4, -1, 10, "bordiga"),
        (4, -2, 6, "p2-c2-6"), (5, -1, 15, "p2-d10"), (5, -2, 10, "CatalogMismatch")]
    assert "outside" in cases[0].note and "outside" in cases[-1].note
