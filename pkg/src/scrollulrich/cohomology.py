"""Cohomology of line bundles on the base surfaces and of rank-2 bundles given
by a two-term resolution by line bundles."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Sequence

from .lattice import (DivisorClass, Kind, LatticeError, ProvedImpossible, SurfaceModel, intersect,
                      represents)
from .rr import chi_line


@dataclass(frozen=True)
class CohomologyVector:
    h0: int
    h1: int
    h2: int
    exact: bool = True
    # inclusive upper ends of the intervals when not exact; (h0, h1, h2) are then the lower ends
    upper: tuple[int, int, int] | None = None

    @property
    def dims(self) -> tuple[int, int, int]:
        return self.h0, self.h1, self.h2

    @property
    def chi(self) -> int:
        return self.h0 - self.h1 + self.h2

    def vanishes(self) -> bool:
        return self.exact and self.dims == (0, 0, 0)

    def first_nonzero(self) -> tuple[int, int] | None:
        # h0 and h2 are computed directly, h1 only through chi, so they make better witnesses
        for i in (0, 2, 1):
            if self.dims[i]:
                return i, self.dims[i]
        return None

    def to_record(self) -> dict:
        rec = {"h0": self.h0, "h1": self.h1, "h2": self.h2, "exact": self.exact}
        if self.upper is not None:
            rec["upper"] = list(self.upper)
        return rec


@dataclass(frozen=True)
class ResolutionPresentation:
    """0 -> sum O(sources) -> sum O(targets) -> E -> 0."""

    sources: tuple[DivisorClass, ...]
    targets: tuple[DivisorClass, ...]
    label: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "sources", tuple(self.sources))
        object.__setattr__(self, "targets", tuple(self.targets))

    @property
    def rank(self) -> int:
        return len(self.targets) - len(self.sources)


class UnsupportedSurface(LatticeError):
    pass


# -- per kind ---------------------------------------------------------------

def _p2(S, D):
    (b,) = D
    if b >= 0:
        return CohomologyVector(comb(b + 2, 2), 0, 0)
    if b <= -3:
        return CohomologyVector(0, 0, comb(-b - 1, 2))
    return CohomologyVector(0, 0, 0)


def _quadric(S, D):
    a, b = D
    n = (a + 1) * (b + 1)
    if a >= 0 and b >= 0:
        return CohomologyVector(n, 0, 0)
    if a <= -2 and b <= -2:
        return CohomologyVector(0, 0, n)
    if a == -1 or b == -1:
        return CohomologyVector(0, 0, 0)
    return CohomologyVector(0, -n, 0)


def _f1_h0(alpha: int, beta: int) -> int:
    # pi_* O(alpha C0 + beta f) = sum_{k=0..alpha} O(beta - k) on the base line
    if alpha < 0:
        return 0
    return sum(max(0, beta - k + 1) for k in range(alpha + 1))


def _from_h0(S, D, h0_fn):
    h0 = h0_fn(D)
    h2 = h0_fn(S.canonical - D)
    return CohomologyVector(h0, h0 + h2 - chi_line(S, D), h2)


def _f1(S, D):
    return _from_h0(S, D, lambda E: _f1_h0(*E))


@lru_cache(maxsize=None)
def _forms(S: SurfaceModel):
    """Linear forms D -> D.H and D -> D.L for the (-1)-curves L."""
    n = S.rank
    form = lambda C: tuple(sum(S.gram[i][j] * C[j] for j in range(n)) for i in range(n))
    return form(S.ample_ref), tuple(form(L) for L in S.minus_one_curves)


def del_pezzo_h0(S: SurfaceModel, D: DivisorClass, order: Sequence[int] | random.Random | None = None) -> int:
    """h0 on a plane blown up at 2..6 general points by stripping fixed (-1)-curves.

    If D.L = -m < 0 for a line L then L is a fixed component of |D| of
    multiplicity at least m, so h0(D) = h0(D - mL).  Each step lowers D.H.
    Negative degree means no sections; once D is nef, D - K is ample and
    Kawamata-Viehweg gives h1 = h2 = 0, so h0 = chi.  ``order`` fixes the
    line priority (a permutation of indices, or an rng for random choices).
    """
    lines = S.minus_one_curves
    h_form, line_forms = _forms(S)
    dot = lambda w, v: sum(a * b for a, b in zip(w, v))
    v = tuple(D)
    while True:
        if dot(h_form, v) < 0:
            return 0
        meets = [dot(w, v) for w in line_forms]
        bad = [i for i, m in enumerate(meets) if m < 0]
        if not bad:
            return chi_line(S, DivisorClass(v))
        if isinstance(order, random.Random):
            i = order.choice(bad)
        elif order is not None:
            i = min(bad, key=list(order).index)
        else:
            i = bad[0]
        v = tuple(x + meets[i] * y for x, y in zip(v, lines[i]))


def _blown_plane(S, D):
    if not 2 <= S.points <= 6:
        raise UnsupportedSurface(f"line cohomology on {S.label} needs 2..6 points")
    return _from_h0(S, D, lambda E: del_pezzo_h0(S, E))


def _k3_facts(S: SurfaceModel) -> None:
    if S.rank == 1:
        if S.gram[0][0] <= 0:
            raise UnsupportedSurface("rank-1 K3 lattice needs H^2 > 0")
        return
    for t in (-2, 0):
        if not isinstance(represents(S, t), ProvedImpossible):
            raise UnsupportedSurface(f"K3 chamber rule needs the lattice to avoid {t}-classes")


def _k3_h0(S, D):
    # with no (-2)- or 0-classes, every nonzero effective class is ample, and
    # conversely D.D > 0, D.H > 0 forces D effective with h1 = h2 = 0
    if D.is_zero():
        return 1
    if intersect(S, D, S.ample_ref) > 0 and intersect(S, D, D) >= 2:
        return chi_line(S, D)
    return 0


def _k3(S, D):
    _k3_facts(S)
    return _from_h0(S, D, lambda E: _k3_h0(S, E))


_RULES = {
    Kind.P2: _p2,
    Kind.QUADRIC: _quadric,
    Kind.F1: _f1,
    Kind.BLOWN_PLANE: _blown_plane,
    Kind.K3: _k3,
}


def line_cohomology(S: SurfaceModel, D: DivisorClass) -> CohomologyVector:
    if len(D) != S.rank:
        raise LatticeError("divisor does not lie in the surface lattice")
    try:
        rule = _RULES[S.kind]
    except KeyError:
        raise UnsupportedSurface(f"no line cohomology algorithm for {S.label}") from None
    return rule(S, D)


def bundle_cohomology_from_resolution(S: SurfaceModel, pres: ResolutionPresentation,
                                      D: DivisorClass) -> CohomologyVector:
    """Cohomology of E(D) from 0 -> A(D) -> B(D) -> E(D) -> 0.

    H0(A) -> H0(B) is injective.  With r1, r2 the unknown ranks of
    H1(A) -> H1(B) and H2(A) -> H2(B):
        h0 = b0 - a0 + a1 - r1,  h1 = b1 - r1 + a2 - r2,  h2 = b2 - r2.
    """
    if pres.rank != 2:
        raise LatticeError(f"presentation has rank {pres.rank}, expected 2")
    a = [0, 0, 0]
    b = [0, 0, 0]
    for A in pres.sources:
        for i, h in enumerate(line_cohomology(S, A + D).dims):
            a[i] += h
    for B in pres.targets:
        for i, h in enumerate(line_cohomology(S, B + D).dims):
            b[i] += h
    m1, m2 = min(a[1], b[1]), min(a[2], b[2])
    lo = (b[0] - a[0] + a[1] - m1, b[1] - m1 + a[2] - m2, b[2] - m2)
    if m1 == 0 and m2 == 0:
        return CohomologyVector(*lo)
    hi = (b[0] - a[0] + a[1], b[1] + a[2], b[2])
    return CohomologyVector(*lo, exact=False, upper=hi)
