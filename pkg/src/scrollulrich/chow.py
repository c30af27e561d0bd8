"""Chow ring of a threefold scroll X = P(E) over a surface S, with E of rank 2.

Elements are kept in the reduced basis

    deg 0: 1
    deg 1: xi, pi^*e_i
    deg 2: xi.pi^*e_i, f            (f the class of a fiber)
    deg 3: [pt] = xi.f

using xi^2 = xi.pi^*c1(E) - c2(E) f, pi^*D.pi^*D' = (D.D') f, pi^*D.f = 0, f^2 = 0.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .cohomology import ResolutionPresentation
from .lattice import DivisorClass, LatticeError, SurfaceModel, blow_up, intersect, pair, parse_terms, pullback
from .rr import BundleData, ChernError, chern_from_resolution, chi_bundle, chi_line, dual, sym_power, twist


@dataclass(frozen=True)
class ScrollSpec:
    name: str
    surface: SurfaceModel
    bundle: BundleData
    presentations: tuple[ResolutionPresentation, ...] = ()
    known_facts: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "presentations", tuple(self.presentations))
        object.__setattr__(self, "known_facts", tuple(self.known_facts))
        if self.bundle.rank != 2:
            raise ChernError("a scroll needs a rank-2 bundle")
        if self.bundle.surface != self.surface:
            raise LatticeError("bundle lives on a different surface")
        for p in self.presentations:
            got = chern_from_resolution(self.surface, p)
            if (got.c1, got.c2) != (self.bundle.c1, self.bundle.c2):
                raise ChernError(f"presentation {p.label or p} gives c1={list(got.c1)}, c2={got.c2}, "
                                 f"not the scroll bundle")

    def __hash__(self):
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash((self.name, self.surface, self.bundle, self.presentations, self.known_facts))
            object.__setattr__(self, "_hash", h)
        return h

    @property
    def presentation(self) -> ResolutionPresentation | None:
        return self.presentations[0] if self.presentations else None

    @property
    def c1(self) -> DivisorClass:
        return self.bundle.c1

    @property
    def c2(self) -> int:
        return self.bundle.c2

    def fact(self, fact_id: str):
        return next((k for k in self.known_facts if k.id == fact_id), None)


@dataclass(frozen=True)
class ChowRing:
    name: str
    gram: tuple
    c1: tuple
    c2: int

    def __post_init__(self):
        n = len(self.gram)
        object.__setattr__(self, "_entries", tuple((i, j, self.gram[i][j]) for i in range(n) for j in range(n)
                                                   if self.gram[i][j]))
        object.__setattr__(self, "_c1g", tuple(pair(self.gram, self.c1, [int(i == k) for k in range(n)])
                                               for i in range(n)))

    def dot(self, u, v):
        return sum(g * u[i] * v[j] for i, j, g in self._entries)

    def c1_dot(self, v) -> Fraction:
        return sum(w * x for w, x in zip(self._c1g, v) if w)


@lru_cache(maxsize=None)
def ring(X: ScrollSpec) -> ChowRing:
    return ChowRing(X.name, X.surface.gram, tuple(X.c1), X.c2)


def _num(x):
    # integral values stay Python ints: Fraction arithmetic is the bottleneck of HRR
    if isinstance(x, int):
        return x
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


def _vec(v, n) -> tuple:
    if v is None:
        return (0,) * n
    if len(v) != n:
        raise LatticeError("divisor does not lie in the surface lattice")
    return tuple(_num(x) for x in v)


@dataclass(frozen=True)
class ChowElement:
    ring: ChowRing = field(repr=False)
    d0: Fraction = Fraction(0)
    d1_xi: Fraction = Fraction(0)
    d1_div: tuple = None
    d2_xi_div: tuple = None
    d2_f: Fraction = Fraction(0)
    d3: Fraction = Fraction(0)

    def __post_init__(self):
        n = len(self.ring.gram)
        for name in ("d0", "d1_xi", "d2_f", "d3"):
            object.__setattr__(self, name, _num(getattr(self, name)))
        object.__setattr__(self, "d1_div", _vec(self.d1_div, n))
        object.__setattr__(self, "d2_xi_div", _vec(self.d2_xi_div, n))

    def _parts(self):
        return (self.d0, self.d1_xi, self.d1_div, self.d2_xi_div, self.d2_f, self.d3)

    def _same(self, other):
        if not isinstance(other, ChowElement):
            return False
        if other.ring != self.ring:
            raise LatticeError(f"Chow elements of different scrolls: {self.ring.name} vs {other.ring.name}")
        return True

    def _combine(self, other, op):
        out = []
        for x, y in zip(self._parts(), other._parts()):
            out.append(tuple(op(a, b) for a, b in zip(x, y)) if isinstance(x, tuple) else op(x, y))
        return ChowElement(self.ring, *out)

    def __add__(self, other):
        if not self._same(other):
            return NotImplemented
        return self._combine(other, lambda a, b: a + b)

    def __sub__(self, other):
        if not self._same(other):
            return NotImplemented
        return self._combine(other, lambda a, b: a - b)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, k) -> "ChowElement":
        k = Fraction(k)
        out = [tuple(k * a for a in x) if isinstance(x, tuple) else k * x for x in self._parts()]
        return ChowElement(self.ring, *out)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not self._same(other):
            return NotImplemented
        return _product(self, other)

    def __rmul__(self, k):
        if isinstance(k, (int, Fraction)):
            return self.scale(k)
        return NotImplemented

    def degrees(self) -> set[int]:
        ds = set()
        if self.d0:
            ds.add(0)
        if self.d1_xi or any(self.d1_div):
            ds.add(1)
        if any(self.d2_xi_div) or self.d2_f:
            ds.add(2)
        if self.d3:
            ds.add(3)
        return ds

    def part(self, d: int) -> "ChowElement":
        z = Fraction(0)
        r = self.ring
        if d == 0:
            return ChowElement(r, self.d0)
        if d == 1:
            return ChowElement(r, z, self.d1_xi, self.d1_div)
        if d == 2:
            return ChowElement(r, d2_xi_div=self.d2_xi_div, d2_f=self.d2_f)
        if d == 3:
            return ChowElement(r, d3=self.d3)
        raise ValueError(d)

    @property
    def degree(self) -> Fraction:
        """Degree of the 0-cycle part, normalized by xi.f = [pt]."""
        return self.d3

    def line_data(self) -> tuple[int, DivisorClass]:
        """(a, D) for a degree-1 integral class a xi + pi^*D."""
        if self.degrees() - {1}:
            raise ValueError("not a divisor class")
        coeffs = (self.d1_xi,) + self.d1_div
        if any(c.denominator != 1 for c in coeffs):
            raise ValueError("divisor class is not integral")
        return int(self.d1_xi), DivisorClass(tuple(int(c) for c in self.d1_div))

    def to_record(self) -> dict:
        s = str
        return {
            "d0": s(self.d0),
            "d1": {"xi": s(self.d1_xi), "div": [s(x) for x in self.d1_div]},
            "d2": {"xi_div": [s(x) for x in self.d2_xi_div], "f": s(self.d2_f)},
            "d3": s(self.d3),
        }


def _product(x: ChowElement, y: ChowElement) -> ChowElement:
    R = x.ring
    g = R.gram
    n = len(g)
    # degree 1 times degree 1: (a xi + D)(b xi + D')
    a, D = x.d1_xi, x.d1_div
    b, E = y.d1_xi, y.d1_div
    ab = a * b
    xi_div = [ab * R.c1[i] + a * E[i] + b * D[i] for i in range(n)]
    f = -ab * R.c2 + R.dot(D, E)
    # degree 1 times degree 2: (a xi + D)(xi.M + g f) = a c1.M + a g + D.M
    def d1d2(a, D, M, gf):
        return a * R.c1_dot(M) + a * gf + R.dot(D, M)

    d3 = (x.d0 * y.d3 + x.d3 * y.d0 + d1d2(a, D, y.d2_xi_div, y.d2_f) + d1d2(b, E, x.d2_xi_div, x.d2_f))
    return ChowElement(
        R,
        x.d0 * y.d0,
        x.d0 * b + a * y.d0,
        tuple(x.d0 * E[i] + D[i] * y.d0 for i in range(n)),
        tuple(x.d0 * y.d2_xi_div[i] + x.d2_xi_div[i] * y.d0 + xi_div[i] for i in range(n)),
        x.d0 * y.d2_f + x.d2_f * y.d0 + f,
        d3,
    )


def product(X: ScrollSpec, x: ChowElement, y: ChowElement) -> ChowElement:
    R = ring(X)
    if x.ring != R or y.ring != R:
        raise LatticeError(f"element does not belong to the Chow ring of {X.name}")
    return _product(x, y)


# -- constructors -----------------------------------------------------------

def one(X) -> ChowElement:
    return ChowElement(ring(X), 1)


def xi(X) -> ChowElement:
    return ChowElement(ring(X), d1_xi=1)


def pull(X, D) -> ChowElement:
    return ChowElement(ring(X), d1_div=tuple(D))


def line_class(X, a: int, D) -> ChowElement:
    return ChowElement(ring(X), 0, a, tuple(D))


def fiber(X) -> ChowElement:
    return ChowElement(ring(X), d2_f=1)


def point(X) -> ChowElement:
    return ChowElement(ring(X), d3=1)


def zero(X) -> ChowElement:
    return ChowElement(ring(X))


def canonical(X) -> ChowElement:
    """K_X = -2 xi + pi^*(c1(E) + K_S)."""
    return line_class(X, -2, X.c1 + X.surface.canonical)


def parse_line_class(X: ScrollSpec, text: str) -> tuple[int, DivisorClass]:
    """Parse "a xi + D" (e.g. "2 xi + H - 2C", "-1 xi", "3l1 - 3l2")."""
    S = X.surface
    a = 0
    coeffs = [0] * S.rank
    if text.strip() == "0":
        return 0, S.zero()
    for c, label in parse_terms(text):
        if label == "xi":
            a += c
        elif label in S.basis:
            coeffs[S.basis.index(label)] += c
        else:
            raise LatticeError(f"unknown label {label!r} for {S.label} (labels: xi, {', '.join(S.basis)})")
    return a, DivisorClass(coeffs)


# -- numbers ----------------------------------------------------------------

def scroll_degree(X: ScrollSpec) -> int:
    x = xi(X)
    return int((x * x * x).degree)


def chi_pushforward(X: ScrollSpec, a: int, D: DivisorClass) -> int:
    """chi(X, a xi + pi^*D) through pi_* O(a) = S^a E and relative duality."""
    S = X.surface
    E = X.bundle
    if a >= 0:
        if a == 0:
            return chi_line(S, D)
        return chi_bundle(S, twist(sym_power(E, a), D))
    if a == -1:
        return 0
    j = -a - 2
    Ed = dual(E)
    shift = D - E.c1
    if j == 0:
        return -chi_line(S, shift)
    return -chi_bundle(S, twist(sym_power(Ed, j), shift))


def tangent_chern(X: ScrollSpec) -> tuple[ChowElement, ChowElement, ChowElement]:
    """c(T_X) = (1 + 2xi - pi^*c1(E)) . pi^*(1 - K_S + e(S)[pt])."""
    S = X.surface
    rel = line_class(X, 2, -X.c1)
    base1 = pull(X, -S.canonical)
    base2 = fiber(X).scale(S.euler)
    c1 = rel + base1
    c2 = rel * base1 + base2
    c3 = rel * base2
    return c1, c2, c3


@lru_cache(maxsize=None)
def todd(X: ScrollSpec) -> ChowElement:
    c1, c2, c3 = tangent_chern(X)
    return one(X) + c1.scale(Fraction(1, 2)) + (c1 * c1 + c2).scale(Fraction(1, 12)) + (c1 * c2).scale(Fraction(1, 24))


@lru_cache(maxsize=None)
def _line_hrr_data(X: ScrollSpec):
    c1, c2, _ = tangent_chern(X)
    return c1, c1 * c1 + c2, chi_hrr(X, (1, zero(X)))


def chi_hrr_line(X: ScrollSpec, a: int, D) -> int:
    """HRR for a line bundle L = a xi + pi^*D, kept in integer arithmetic:
    chi(L) = (2 L^3 + 3 L^2.c1 + L.(c1^2 + c2)) / 12 + chi(O_X), c_i = c_i(T_X)."""
    L = line_class(X, a, D)
    c1, q, chi0 = _line_hrr_data(X)
    L2 = L * L
    num = 2 * (L2 * L).degree + 3 * (L2 * c1).degree + (L * q).degree
    if num % 12:
        raise ChernError(f"HRR gives non-integral chi {num}/12 + {chi0}")
    return num // 12 + chi0


def chern_character(X: ScrollSpec, rank: int, c1: ChowElement, c2: ChowElement | None = None,
                    c3: ChowElement | None = None) -> ChowElement:
    z = zero(X)
    c2 = z if c2 is None else c2
    c3 = z if c3 is None else c3
    return (one(X).scale(rank) + c1 + (c1 * c1 - c2.scale(2)).scale(Fraction(1, 2))
            + (c1 * c1 * c1 - (c1 * c2).scale(3) + c3.scale(3)).scale(Fraction(1, 6)))


def line_ch(X: ScrollSpec, L: ChowElement) -> ChowElement:
    return chern_character(X, 1, L)


def chi_hrr(X: ScrollSpec, ch) -> int:
    """deg_3(ch . td(T_X)).  ``ch`` is a Chern character element or a tuple (rank, c1, c2, c3)."""
    if isinstance(ch, tuple):
        ch = chern_character(X, *ch)
    val = (ch * todd(X)).degree
    if val.denominator != 1:
        raise ChernError(f"HRR gives non-integral chi {val}")
    return int(val)


def pullback_twist_chern(X: ScrollSpec, F: BundleData) -> tuple[ChowElement, ChowElement]:
    """Chern classes of pi^*F (x) xi."""
    if F.rank == 1:
        return line_class(X, 1, F.c1), zero(X)
    if F.rank == 2:
        x = xi(X)
        return line_class(X, 2, F.c1), x * x + x * pull(X, F.c1) + fiber(X).scale(F.c2)
    raise ChernError("pullback_twist_chern supports rank 1 and 2")


def extension_chern(X: ScrollSpec, L1: ChowElement, L2: ChowElement) -> tuple[ChowElement, ChowElement]:
    for L in (L1, L2):
        if L.degrees() != {1}:
            raise ValueError("extension_chern needs nonzero pure degree-1 classes")
    return L1 + L2, product(X, L1, L2)


def pairing_with_ample(X: ScrollSpec, c2: ChowElement) -> int:
    """deg(c2 . pi^*H) with H the reference polarization of the base."""
    v = (c2 * pull(X, X.surface.ample_ref)).degree
    return int(v)


@dataclass(frozen=True)
class HyperplaneBlowup:
    surface: SurfaceModel
    H: DivisorClass
    adjunction_ok: bool

    @property
    def H2(self) -> int:
        return intersect(self.surface, self.H, self.H)


def hyperplane_blowup(X: ScrollSpec) -> HyperplaneBlowup:
    """Hyperplane section of X: S blown up at c2(E) points, H~ = c1(E) - sum E_i."""
    n = X.c2
    if n < 0:
        raise ChernError("hyperplane_blowup needs c2(E) >= 0")
    S = X.surface
    St = blow_up(S, n)
    Ht = pullback(St, X.c1) - DivisorClass(tuple([0] * S.rank + [1] * n))
    ok = St.canonical + Ht == pullback(St, S.canonical + X.c1)
    return HyperplaneBlowup(St, Ht, ok)
