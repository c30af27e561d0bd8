"""Picard lattices of the base surfaces and their intersection arithmetic.

Every surface is stored as an integral symmetric Gram matrix on a fixed basis:

    P2             (h)
    Quadric        (l1, l2)
    Hirzebruch1    (C0, f)
    BlownPlane(k)  (e0, e1, ..., ek)
    K3Lattice      (H) or (H, C)
    Blowup         base basis followed by (E1, ..., En)
"""
from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np


class LatticeError(ValueError):
    pass


class Kind(str, Enum):
    P2 = "ProjectivePlane"
    QUADRIC = "Quadric"
    F1 = "Hirzebruch1"
    BLOWN_PLANE = "BlownPlane"
    K3 = "K3Lattice"
    BLOWUP = "Blowup"


_KIND_ALIASES = {
    "p2": Kind.P2, "projectiveplane": Kind.P2,
    "quadric": Kind.QUADRIC, "q": Kind.QUADRIC, "q2": Kind.QUADRIC,
    "f1": Kind.F1, "hirzebruch1": Kind.F1,
    "blownplane": Kind.BLOWN_PLANE, "cubic": Kind.BLOWN_PLANE,
    "k3": Kind.K3, "k3lattice": Kind.K3,
    "blowup": Kind.BLOWUP,
}


def as_kind(kind) -> Kind:
    if isinstance(kind, Kind):
        return kind
    key = str(kind).replace("_", "").replace("-", "").lower()
    key = re.sub(r"\(.*\)$", "", key)
    try:
        return _KIND_ALIASES[key]
    except KeyError:
        raise LatticeError(f"unknown surface kind {kind!r}") from None


@dataclass(frozen=True, order=True)
class DivisorClass:
    """Integer coefficient vector on the basis of a Picard lattice."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        vals = []
        for c in self.coeffs:
            if isinstance(c, float) or int(c) != c:
                raise LatticeError(f"divisor coefficients must be integers, got {c!r}")
            vals.append(int(c))
        object.__setattr__(self, "coeffs", tuple(vals))

    @classmethod
    def zero(cls, rank: int) -> "DivisorClass":
        return cls((0,) * rank)

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def _check(self, other):
        if not isinstance(other, DivisorClass):
            return NotImplemented
        if len(other) != len(self):
            raise LatticeError(f"rank mismatch: {len(self)} vs {len(other)}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return DivisorClass(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return DivisorClass(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return DivisorClass(tuple(-a for a in self.coeffs))

    def __mul__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        return DivisorClass(tuple(k * a for a in self.coeffs))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __repr__(self):
        return f"DivisorClass{self.coeffs}"


@dataclass(frozen=True)
class SurfaceModel:
    kind: Kind
    basis: tuple[str, ...]
    gram: tuple[tuple[int, ...], ...]
    canonical: DivisorClass
    chi: int
    euler: int
    ample_ref: DivisorClass
    minus_one_curves: tuple[DivisorClass, ...] = ()
    points: int = 0
    base_label: str = ""

    def __hash__(self):
        # surfaces key several caches; hash the (large) field tuple once
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash((self.kind, self.basis, self.gram, self.canonical, self.chi, self.euler, self.ample_ref,
                      self.minus_one_curves, self.points, self.base_label))
            object.__setattr__(self, "_hash", h)
        return h

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def label(self) -> str:
        if self.kind is Kind.BLOWN_PLANE:
            return f"BlownPlane({self.points})"
        if self.kind is Kind.K3:
            return f"K3Lattice({self.rank})"
        if self.kind is Kind.BLOWUP:
            return f"Blowup({self.base_label},{self.points})"
        return self.kind.value

    def divisor(self, *coeffs: int) -> DivisorClass:
        if len(coeffs) == 1 and not isinstance(coeffs[0], int):
            coeffs = tuple(coeffs[0])
        if len(coeffs) != self.rank:
            raise LatticeError(f"{self.label} has rank {self.rank}, got {len(coeffs)} coefficients")
        return DivisorClass(coeffs)

    def zero(self) -> DivisorClass:
        return DivisorClass.zero(self.rank)

    def parse(self, text: str) -> DivisorClass:
        return parse_divisor(self, text)

    def format(self, D: DivisorClass) -> str:
        return format_divisor(self, D)

    def to_record(self) -> dict:
        return {
            "kind": self.label,
            "basis": list(self.basis),
            "gram": [list(r) for r in self.gram],
            "canonical": list(self.canonical),
            "chi": self.chi,
            "euler": self.euler,
            "ample_ref": list(self.ample_ref),
        }


# -- exact linear algebra ---------------------------------------------------

def inertia(gram: Sequence[Sequence[int]]) -> tuple[int, int, int]:
    """(positive, negative, zero) counts of a symmetric form, by exact congruence diagonalization."""
    m = [[Fraction(x) for x in row] for row in gram]
    n = len(m)
    pos = neg = zero = 0
    live = list(range(n))
    while live:
        p = next((i for i in live if m[i][i] != 0), None)
        if p is None:
            pair = next(((i, j) for i, j in itertools.combinations(live, 2) if m[i][j] != 0), None)
            if pair is None:
                zero += len(live)
                break
            i, j = pair
            # row/col i += row/col j turns the zero diagonal into 2*m[i][j]
            for k in range(n):
                m[i][k] += m[j][k]
            for k in range(n):
                m[k][i] += m[k][j]
            p = i
        piv = m[p][p]
        if piv > 0:
            pos += 1
        else:
            neg += 1
        live.remove(p)
        for i in live:
            f = m[i][p] / piv
            if f:
                for j in live:
                    m[i][j] -= f * m[p][j]
        for i in live:
            m[i][p] = m[p][i] = Fraction(0)
    return pos, neg, zero


def _validate(S: SurfaceModel) -> SurfaceModel:
    r = S.rank
    g = S.gram
    if len(g) != r or any(len(row) != r for row in g):
        raise LatticeError("Gram matrix shape does not match basis")
    if any(g[i][j] != g[j][i] for i in range(r) for j in range(r)):
        raise LatticeError("Gram matrix is not symmetric")
    pos, neg, zero = inertia(g)
    if zero or pos != 1:
        raise LatticeError(f"Gram matrix has signature ({pos},{neg},{zero}); expected (1,{r - 1})")
    for D in (S.canonical, S.ample_ref, *S.minus_one_curves):
        if len(D) != r:
            raise LatticeError("class does not lie in the lattice span")
    if intersect(S, S.ample_ref, S.ample_ref) <= 0:
        raise LatticeError("reference polarization has nonpositive square")
    if S.kind is Kind.K3:
        if not S.canonical.is_zero() or S.chi != 2 or S.euler != 24:
            raise LatticeError("K3 lattice needs K = 0, chi = 2, e = 24")
        if any(g[i][i] % 2 for i in range(r)):
            raise LatticeError("K3 lattice must be even")
    return S


def intersect(S: SurfaceModel, D1: DivisorClass, D2: DivisorClass) -> int:
    if len(D1) != S.rank or len(D2) != S.rank:
        raise LatticeError(f"dimension mismatch: lattice rank {S.rank}, classes of length {len(D1)}, {len(D2)}")
    g = S.gram
    return sum(D1[i] * g[i][j] * D2[j] for i in range(S.rank) for j in range(S.rank) if g[i][j])


def pair(gram, u: Sequence, v: Sequence):
    """Bilinear form on arbitrary (e.g. rational) coefficient vectors."""
    n = len(gram)
    return sum(u[i] * gram[i][j] * v[j] for i in range(n) for j in range(n) if gram[i][j])


# -- construction -----------------------------------------------------------

def _del_pezzo_lines(k: int) -> list[tuple[int, ...]]:
    lines = []
    for i in range(1, k + 1):
        v = [0] * (k + 1)
        v[i] = 1
        lines.append(tuple(v))
    for i, j in itertools.combinations(range(1, k + 1), 2):
        v = [0] * (k + 1)
        v[0], v[i], v[j] = 1, -1, -1
        lines.append(tuple(v))
    for five in itertools.combinations(range(1, k + 1), 5):
        v = [0] * (k + 1)
        v[0] = 2
        for i in five:
            v[i] = -1
        lines.append(tuple(v))
    return lines


def build_surface(kind, params=()) -> SurfaceModel:
    """Build one of the supported base surfaces.

    ``params`` is the number of points for BlownPlane, and for K3Lattice
    either ``(H2,)`` or ``(H2, HC, C2)``.
    """
    kind = as_kind(kind)
    if isinstance(params, int):
        params = (params,)
    params = tuple(params or ())
    D = DivisorClass
    if kind is Kind.P2:
        S = SurfaceModel(kind, ("h",), ((1,),), D((-3,)), 1, 3, D((1,)))
    elif kind is Kind.QUADRIC:
        S = SurfaceModel(kind, ("l1", "l2"), ((0, 1), (1, 0)), D((-2, -2)), 1, 4, D((1, 1)))
    elif kind is Kind.F1:
        S = SurfaceModel(kind, ("C0", "f"), ((-1, 1), (1, 0)), D((-2, -3)), 1, 4, D((1, 2)))
    elif kind is Kind.BLOWN_PLANE:
        k = params[0] if params else 6
        if not 0 <= k <= 6:
            raise LatticeError("BlownPlane supports 0..6 points")
        gram = tuple(tuple((1 if i == 0 else -1) if i == j else 0 for j in range(k + 1)) for i in range(k + 1))
        K = D((-3,) + (1,) * k)
        H = D((3,) + (-1,) * k)
        lines = tuple(D(v) for v in _del_pezzo_lines(k))
        S = SurfaceModel(kind, ("e0",) + tuple(f"e{i}" for i in range(1, k + 1)), gram, K, 1, 3 + k, H, lines, points=k)
    elif kind is Kind.K3:
        if len(params) == 1:
            (h2,) = params
            S = SurfaceModel(kind, ("H",), ((h2,),), D((0,)), 2, 24, D((1,)))
        elif len(params) == 3:
            h2, hc, c2 = params
            S = SurfaceModel(kind, ("H", "C"), ((h2, hc), (hc, c2)), D((0, 0)), 2, 24, D((1, 0)))
        else:
            raise LatticeError("K3Lattice needs (H2,) or (H2, HC, C2)")
    else:
        raise LatticeError(f"cannot build surface of kind {kind.value} directly")
    return _validate(S)


def blow_up(S: SurfaceModel, n: int) -> SurfaceModel:
    """Blow-up lattice of S at n points: basis extended by E1..En with Ei^2 = -1."""
    r = S.rank
    gram = tuple(tuple(S.gram[i][j] if i < r and j < r else (-1 if i == j else 0) for j in range(r + n))
                 for i in range(r + n))
    K = DivisorClass(tuple(S.canonical) + (1,) * n)
    # base polarization pulled back; only used as a positive reference class
    H = DivisorClass(tuple(S.ample_ref) + (0,) * n)
    return _validate(SurfaceModel(Kind.BLOWUP, S.basis + tuple(f"E{i}" for i in range(1, n + 1)), gram, K,
                                  S.chi, S.euler + n, H, points=n, base_label=S.label))


def pullback(S_tilde: SurfaceModel, D: DivisorClass) -> DivisorClass:
    return DivisorClass(tuple(D) + (0,) * (S_tilde.rank - len(D)))


# -- divisor text ----------------------------------------------------------

_TERM = re.compile(r"\s*([+-])?\s*(\d+)?\s*\*?\s*([A-Za-z][A-Za-z0-9_]*)\s*")


def parse_terms(text: str) -> list[tuple[int, str]]:
    """Split "2 xi + H - 2C" into [(2, 'xi'), (1, 'H'), (-2, 'C')]."""
    s = text.strip()
    if not s:
        raise LatticeError("empty expression")
    terms = []
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise LatticeError(f"cannot parse {text!r} at position {pos}")
        sign, num, label = m.groups()
        if terms and sign is None:
            raise LatticeError(f"missing operator before {label!r} in {text!r}")
        c = int(num) if num else 1
        terms.append((-c if sign == "-" else c, label))
        pos = m.end()
    return terms


def parse_divisor(S: SurfaceModel, text: str) -> DivisorClass:
    if text.strip() == "0":
        return S.zero()
    coeffs = [0] * S.rank
    for c, label in parse_terms(text):
        if label not in S.basis:
            raise LatticeError(f"unknown basis label {label!r} for {S.label} (labels: {', '.join(S.basis)})")
        coeffs[S.basis.index(label)] += c
    return DivisorClass(coeffs)


def format_divisor(S: SurfaceModel, D: DivisorClass) -> str:
    parts = []
    for c, label in zip(D, S.basis):
        if c == 0:
            continue
        mag = "" if abs(c) == 1 else str(abs(c))
        if not parts:
            parts.append(("-" if c < 0 else "") + mag + label)
        else:
            parts.append(("- " if c < 0 else "+ ") + mag + label)
    return " ".join(parts) if parts else "0"


# -- binary forms -----------------------------------------------------------

@dataclass(frozen=True)
class ProvedImpossible:
    reason: str
    modulus: int | None = None


@dataclass(frozen=True)
class Witness:
    divisor: DivisorClass


@dataclass(frozen=True)
class UnknownUpTo:
    bound: int


def _is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def _binary_form(S: SurfaceModel) -> tuple[int, int, int]:
    if S.rank != 2:
        raise LatticeError("represents() needs a rank-2 lattice")
    return S.gram[0][0], S.gram[0][1], S.gram[1][1]


def residues(S: SurfaceModel, m: int) -> set[int]:
    """Values of the quadratic form D.D modulo m."""
    A, B, C = _binary_form(S)
    a = np.arange(m, dtype=np.int64)
    vals = (A * a * a)[:, None] + (2 * B * np.outer(a, a)) + (C * a * a)[None, :]
    return set(np.unique(vals % m).tolist())


@lru_cache(maxsize=None)
def _box_by_size(bound: int) -> tuple[tuple[int, int], ...]:
    pts = itertools.product(range(-bound, bound + 1), repeat=2)
    return tuple(sorted(pts, key=lambda p: (max(abs(p[0]), abs(p[1])), abs(p[0]) + abs(p[1]), -p[0], -p[1])))


@lru_cache(maxsize=4096)
def represents(S: SurfaceModel, target: int, modulus_cap: int = 360, bound: int = 50,
               moduli: tuple[int, ...] | None = None):
    """Decide whether q(a, b) = D.D takes the value ``target`` on a nonzero D.

    target 0 is settled exactly by the discriminant; other targets by a
    bounded search for a witness and a congruence sieve for impossibility.
    Returns Witness, ProvedImpossible or UnknownUpTo.
    """
    A, B, C = _binary_form(S)
    disc = 4 * (B * B - A * C)
    if target == 0:
        if not _is_square(disc):
            return ProvedImpossible(f"discriminant {disc} is not a perfect square")
        k = math.isqrt(B * B - A * C)
        for a, b in ((-B + k, A), (-B - k, A), (1, 0), (0, 1)):
            g = math.gcd(a, b) or 1
            w = DivisorClass((a // g, b // g))
            if not w.is_zero() and intersect(S, w, w) == 0:
                return Witness(w)
        raise AssertionError("isotropic form without witness")  # pragma: no cover
    for a, b in _box_by_size(bound):
        if A * a * a + 2 * B * a * b + C * b * b == target:
            return Witness(DivisorClass((a, b)))
    for m in (moduli if moduli is not None else range(2, modulus_cap + 1)):
        if target % m not in residues(S, m):
            return ProvedImpossible(f"q(a,b) = {target} has no solution modulo {m}", m)
    return UnknownUpTo(bound)


@dataclass(frozen=True)
class Indecomposable:
    divisor: DivisorClass
    trace: tuple[str, ...]
    certified: bool = True


@dataclass(frozen=True)
class Decomposition:
    N: DivisorClass
    M: DivisorClass
    trace: tuple[str, ...] = field(default=())


def indecomposability_check(S: SurfaceModel, D: DivisorClass, bound: int = 50):
    """Show D admits no splitting D = N + M into classes with positive squares and N.M > 0."""
    n = intersect(S, D, D)
    if D.is_zero() or n <= 0:
        raise LatticeError("indecomposability_check needs D^2 > 0")
    trace = []
    certified = True
    for x in range(1, n):
        for y in range(1, n - x):
            if (n - x - y) % 2:
                continue
            z = (n - x - y) // 2
            if z <= 0:
                continue
            rx, ry = represents(S, x), represents(S, y)
            if isinstance(rx, ProvedImpossible) or isinstance(ry, ProvedImpossible):
                bad = x if isinstance(rx, ProvedImpossible) else y
                trace.append(f"({x},{y},{z}): {bad} not represented")
                continue
            det = x * y - z * z
            if det > 0:
                trace.append(f"({x},{y},{z}): survivor eliminated, det [[{x},{z}],[{z},{y}]] = {det} > 0 "
                             f"contradicts signature (1,1)")
                continue
            found = _realize(S, D, x, y, z, bound)
            if found is not None:
                trace.append(f"({x},{y},{z}): realized")
                return Decomposition(found, D - found, tuple(trace))
            trace.append(f"({x},{y},{z}): no lattice realization with coefficients <= {bound}")
            certified = False
    return Indecomposable(D, tuple(trace), certified)


def _realize(S, D, x, y, z, bound):
    for coeffs in itertools.product(range(-bound, bound + 1), repeat=S.rank):
        N = DivisorClass(coeffs)
        M = D - N
        if intersect(S, N, N) == x and intersect(S, M, M) == y and intersect(S, N, M) == z:
            return N
    return None


def represented_values(S: SurfaceModel, values: Iterable[int]) -> list[int]:
    return [t for t in values if isinstance(represents(S, t), Witness)]
