"""Riemann-Roch on surfaces and Chern class bookkeeping for twists, duals,
symmetric powers and presentations."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .lattice import DivisorClass, LatticeError, SurfaceModel, intersect


class ChernError(ValueError):
    pass


@dataclass(frozen=True)
class BundleData:
    """Rank and Chern data (c1 a divisor class, c2 a number) of a bundle on ``surface``."""

    surface: SurfaceModel = field(repr=False)
    rank: int
    c1: DivisorClass
    c2: int

    def __post_init__(self):
        if self.rank < 1:
            raise ChernError("rank must be positive")
        if len(self.c1) != self.surface.rank:
            raise LatticeError("c1 does not lie in the surface lattice")
        if self.rank == 1 and self.c2 != 0:
            raise ChernError("a line bundle has c2 = 0")

    @classmethod
    def line(cls, S: SurfaceModel, D: DivisorClass) -> "BundleData":
        return cls(S, 1, D, 0)

    def to_record(self) -> dict:
        return {"rank": self.rank, "c1": list(self.c1), "c2": self.c2}


def _integral(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise ChernError(f"{what} is not integral ({x}); lattice data is inconsistent")
    return int(x)


def chi_line(S: SurfaceModel, D: DivisorClass) -> int:
    val = S.chi + Fraction(intersect(S, D, D - S.canonical), 2)
    return _integral(val, "chi")


def chi_bundle(S: SurfaceModel, B: BundleData) -> int:
    c1 = B.c1
    val = B.rank * S.chi + Fraction(intersect(S, c1, c1 - S.canonical), 2) - B.c2
    return _integral(val, "chi")


def twist(B: BundleData, D: DivisorClass) -> BundleData:
    """Chern data of B(D).  For rank r: c1 + rD, c2 + (r-1) c1.D + C(r,2) D^2."""
    S = B.surface
    r = B.rank
    if r == 1:
        return BundleData(S, 1, B.c1 + D, 0)
    c2 = B.c2 + (r - 1) * intersect(S, B.c1, D) + comb(r, 2) * intersect(S, D, D)
    return BundleData(S, r, B.c1 + r * D, c2)


def dual(B: BundleData) -> BundleData:
    return BundleData(B.surface, B.rank, -B.c1, B.c2)


def sym_coefficients(j: int) -> tuple[int, int]:
    """(p, q) with c2(S^j E) = p c1^2 + q c2 for a rank-2 E.

    Roots of S^j E are (j-i)a + ib.  The pairwise sum is a symmetric quadratic
    in (a, b), namely P(a^2 + b^2) + R ab = P e1^2 + (R - 2P) e2.
    """
    if j < 0:
        raise ChernError("symmetric power index must be nonnegative")
    P = R = 0
    for i in range(j + 1):
        for k in range(i + 1, j + 1):
            # ((j-i)a + ib)((j-k)a + kb)
            P += (j - i) * (j - k)
            R += (j - i) * k + i * (j - k)
    return P, R - 2 * P


def sym_power(B: BundleData, j: int) -> BundleData:
    if B.rank != 2:
        raise ChernError("sym_power is implemented for rank-2 bundles")
    p, q = sym_coefficients(j)
    S = B.surface
    c1 = (j * (j + 1) // 2) * B.c1
    c2 = p * intersect(S, B.c1, B.c1) + q * B.c2
    if j == 0:
        return BundleData(S, 1, S.zero(), 0)
    return BundleData(S, j + 1, c1, c2)


def chern_from_resolution(S: SurfaceModel, pres) -> BundleData:
    """Whitney: c(E) = prod c(O(B_j)) / prod c(O(A_i)), truncated in degree 2."""
    rank = len(pres.targets) - len(pres.sources)
    if rank != 2:
        raise ChernError(f"presentation has rank {rank}, expected 2")
    A, Bs = list(pres.sources), list(pres.targets)
    e1B = sum(Bs, S.zero())
    e1A = sum(A, S.zero())
    e2B = sum(intersect(S, Bs[i], Bs[j]) for i in range(len(Bs)) for j in range(i + 1, len(Bs)))
    # complete homogeneous h2 of the source roots (from 1/prod(1 + a_i))
    h2A = sum(intersect(S, A[i], A[j]) for i in range(len(A)) for j in range(i, len(A)))
    c1 = e1B - e1A
    c2 = e2B - intersect(S, e1B, e1A) + h2A
    return BundleData(S, 2, c1, c2)


def special_ulrich_numerics(S: SurfaceModel, H: DivisorClass) -> BundleData:
    """Chern data of a special rank-2 Ulrich bundle on (S, H):
    c1 = 3H + K, c2 = (5H^2 + 3H.K)/2 + 2 chi(O_S)."""
    K = S.canonical
    c2 = Fraction(5 * intersect(S, H, H) + 3 * intersect(S, H, K), 2) + 2 * S.chi
    return BundleData(S, 2, 3 * H + K, _integral(c2, "c2 of the special Ulrich bundle"))


def p2_rank2_c2(e: int) -> int:
    """c2 of the rank-2 Ulrich bundle F on P^2 with c1(F) = e - 3 used for scrolls over P^2."""
    return _integral(Fraction(e * e - 3 * e + 4, 2), "c2")
