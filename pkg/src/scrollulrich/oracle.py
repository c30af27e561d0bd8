"""Brute-force validators, written without the formulas of the main modules.

Euler characteristics here come from ch . td on the surface, with
td(S) = 1 - K/2 + chi(O_S)[pt]:

    chi(O(D))  = chi0 + (D^2 - K.D)/2
    chi(E(D))  = ch_2 + ch_1.(-K)/2 + 2 chi0,  ch_1 = c1 + 2D,  ch_2 = (c1^2 - 2c2)/2 + c1.D + D^2

Everything is tabulated with numpy over a coefficient box.
"""
from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np
import sympy

from .cohomology import CohomologyVector
from .lattice import DivisorClass


def _quadrics(X, a: int):
    """The two conditions of type a as (alpha, functional, const) with value alpha D.D + l.D + const (= 2chi)."""
    S = X.surface
    G = np.array(S.gram, dtype=np.int64)
    K = np.array(S.canonical, dtype=np.int64)
    c1 = np.array(X.c1, dtype=np.int64)
    chi0 = S.chi
    ip = lambda u, v: int(u @ G @ v)
    chi_o = (1, -(G @ K), 2 * chi0)
    chi_e = (2, 2 * (G @ c1) - 2 * (G @ K), ip(c1, c1) - 2 * X.c2 - ip(c1, K) + 4 * chi0)

    def shifted(q, s):
        al, l, c = q
        return al, l - 2 * al * (G @ s), al * ip(s, s) - int(l @ s) + c

    if a == 2:
        return [chi_o, chi_e]
    if a == 1:
        return [chi_o, shifted(chi_o, c1)]
    if a == 0:
        return [shifted(chi_o, c1), shifted(chi_e, 2 * c1)]
    raise ValueError(a)


def _grid_solutions(G, conds, box):
    r = len(G)
    rng = np.arange(-box, box + 1, dtype=np.int64)
    pts = np.array(np.meshgrid(*([rng] * r), indexing="ij")).reshape(r, -1).T
    quad = np.einsum("ni,ij,nj->n", pts, G, pts)
    ok = np.ones(len(pts), dtype=bool)
    for al, l, c in conds:
        ok &= (al * quad + pts @ l + c) == 0
    return [tuple(int(x) for x in p) for p in pts[ok]]


def _half_table(diag, conds, idx, rng):
    """Per-condition partial sums over the coordinates in idx, for every point of the sub-box
    (flattened in C order over len(idx) copies of rng)."""
    vals = []
    for al, l, _ in conds:
        v = np.zeros((), dtype=np.int64)
        for i in idx:
            v = np.add.outer(v, al * diag[i] * rng * rng + l[i] * rng)
        vals.append(v.ravel())
    return vals


def _mitm_solutions(G, conds, box):
    r = len(G)
    diag = np.diag(G)
    rng = np.arange(-box, box + 1, dtype=np.int64)
    left = list(range(r // 2))
    right = list(range(r // 2, r))
    ua, va = _half_table(diag, conds, left, rng)
    ub, vb = _half_table(diag, conds, right, rng)
    (_, _, cu), (_, _, cv) = conds
    span = int(max(np.abs(va).max(), np.abs(vb).max()) + abs(cv)) * 2 + 1
    # sort the smaller (left) half, look up every point of the right half
    key_a = ua * span + va
    order = np.argsort(key_a, kind="stable")
    key_sorted = key_a[order]
    want = (-cu - ub) * span + (-cv - vb)
    lo = np.searchsorted(key_sorted, want, side="left")
    hi = np.searchsorted(key_sorted, want, side="right")
    shape_a, shape_b = (len(rng),) * len(left), (len(rng),) * len(right)
    out = []
    for jb in np.nonzero(hi > lo)[0]:
        pb = tuple(int(rng[k]) for k in np.unravel_index(jb, shape_b))
        for ia in order[lo[jb]:hi[jb]]:
            pa = tuple(int(rng[k]) for k in np.unravel_index(ia, shape_a))
            out.append(pa + pb)
    return out


@lru_cache(maxsize=64)
def brute_line_candidates(X, box: int = 20) -> dict[int, tuple[DivisorClass, ...]]:
    """All D in [-box, box]^rank solving the chi system of a xi + pi^*D, for a = 0, 1, 2."""
    if box < 1:
        raise ValueError("box must be at least 1")
    G = np.array(X.surface.gram, dtype=np.int64)
    diagonal = not np.any(G - np.diag(np.diag(G)))
    out = {}
    for a in (0, 1, 2):
        conds = _quadrics(X, a)
        if len(G) <= 3:
            sols = _grid_solutions(G, conds, box)
        elif diagonal:
            sols = _mitm_solutions(G, conds, box)
        else:
            raise NotImplementedError("box search needs rank <= 3 or a diagonal form")
        out[a] = tuple(sorted(DivisorClass(s) for s in sols))
    return out


def _p1(n: int) -> tuple[int, int]:
    # monomials of degree n in two variables; h1 by duality with O(-2 - n)
    count = lambda m: len(range(m + 1))
    return count(n), count(-2 - n)


def kunneth_direct(a: int, b: int) -> CohomologyVector:
    ha, hb = _p1(a), _p1(b)
    h = [0, 0, 0]
    for i, j in itertools.product(range(2), repeat=2):
        h[i + j] += ha[i] * hb[j]
    return CohomologyVector(*h)


def sym_expand(j: int) -> tuple[int, int]:
    """(coefficient of e1^2, coefficient of e2) in c2(S^j E), expanded symbolically."""
    if not 0 <= j <= 8:
        raise ValueError("0 <= j <= 8")
    a, b, p, q = sympy.symbols("a b p q")
    roots = [(j - i) * a + i * b for i in range(j + 1)]
    c2 = sum((roots[i] * roots[k] for i in range(j + 1) for k in range(i + 1, j + 1)), sympy.Integer(0))
    residual = sympy.Poly(sympy.expand(c2 - p * (a + b) ** 2 - q * a * b), a, b)
    sol = sympy.solve(residual.coeffs(), [p, q], dict=True)
    if not sol:
        return 0, 0
    return int(sol[0].get(p, 0)), int(sol[0].get(q, 0))


def exhaustive_pair_match(X, G_invariants, candidates) -> list:
    """Ordered pairs (L1, L2) of (a, D) with the same (c1, deg(c2 . pi^*H)) as G.

    G_invariants = ((a, D), degree).  For Li = a_i xi + pi^*D_i and A the reference polarization,
    deg(L1 L2 pi^*A) = a1 a2 (c1.A) + a1 (D2.A) + a2 (D1.A).
    """
    S = X.surface
    Gm = np.array(S.gram, dtype=np.int64)
    A = np.array(S.ample_ref, dtype=np.int64)
    c1 = np.array(X.c1, dtype=np.int64)
    (ga, gD), gdeg = G_invariants
    gD = np.array(gD, dtype=np.int64)
    lines = [(int(a), np.array(D, dtype=np.int64)) for a, D in candidates]
    out = []
    for (a1, D1), (a2, D2) in itertools.product(lines, repeat=2):
        if a1 + a2 != ga or not np.array_equal(D1 + D2, gD):
            continue
        deg = a1 * a2 * int(c1 @ Gm @ A) + a1 * int(D2 @ Gm @ A) + a2 * int(D1 @ Gm @ A)
        if deg == gdeg:
            out.append(((a1, tuple(int(x) for x in D1)), (a2, tuple(int(x) for x in D2))))
    return out
