"""Ulrich line bundles on scrolls X = P(E) over surfaces, and rank-2 Ulrich data.

A line bundle a xi + pi^*D is Ulrich for xi only if a in {0, 1, 2}, and then:

    a = 2:  H*(S, D) = H*(S, E(D)) = 0
    a = 1:  H*(S, D) = H*(S, D - c1(E)) = 0
    a = 0:  H*(S, D - c1(E)) = H*(S, E(D - 2c1(E))) = 0

The a = 0 and a = 2 cases are exchanged by the companion D -> c1(E) + K_S - D
(Serre duality on S), so a = 0 is always handled through its companion.
Taking Euler characteristics, each case reduces to chi(D) = 0 together with a
linear condition on D:

    type 1:  2 c1.D = c1^2 + c1.K
    type 2:  c1.D = 2 chi(O_S) - chi(E)
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from . import chow
from .chow import ScrollSpec, chi_pushforward, extension_chern, line_class, pairing_with_ample, pullback_twist_chern
from .cohomology import bundle_cohomology_from_resolution, line_cohomology
from .lattice import DivisorClass, Kind, LatticeError, SurfaceModel, format_divisor, intersect
from .rr import BundleData, ChernError, chi_bundle, chi_line, special_ulrich_numerics, twist


class InternalInconsistency(RuntimeError):
    """Two independent computations disagree."""


@dataclass(frozen=True)
class KnownFact:
    """A result imported from the literature and never computed here.

    ``vanishes`` lists twists D with H*(S, E(D)) = 0 asserted by the fact;
    ``nonvanishing`` lists (D, i, dim) with h^i(S, E(D)) = dim.
    """

    id: str
    statement: str
    anchor: str
    vanishes: tuple = ()
    nonvanishing: tuple = ()

    def to_record(self) -> dict:
        return {"id": self.id, "statement": self.statement, "anchor": self.anchor}


GLOBAL_FACTS = {
    "ss-extension": KnownFact(
        "ss-extension",
        "A strictly semistable rank-2 Ulrich bundle is an extension of two Ulrich line bundles.",
        "Jordan-Holder filtration of semistable Ulrich bundles (Casanellas-Hartshorne)"),
    "lm-stable": KnownFact(
        "lm-stable",
        "The Lazarsfeld-Mukai bundle E_{B,zeta} on the K3 surface is mu_H-stable and mu_C-stable.",
        "Lazarsfeld-Mukai bundles on K3 surfaces"),
    "special-k3": KnownFact(
        "special-k3",
        "A special rank-2 Ulrich bundle exists on a polarized K3 surface.",
        "existence of special Ulrich bundles on K3 surfaces (Aprodu-Farkas-Ortega)"),
    "special-f1": KnownFact(
        "special-f1",
        "A special rank-2 Ulrich bundle exists on (F1, 3C0 + 5f).",
        "existence of special Ulrich bundles on Hirzebruch surfaces (Casnati)"),
    "cubic-rank2": KnownFact(
        "cubic-rank2",
        "On a cubic surface, p^*T_P2 + L is a rank-2 Ulrich bundle for (S, O_S(2)) for every Ulrich line bundle L "
        "of (S, O_S(1)).",
        "Beauville's construction applied to Ulrich line bundles on cubic surfaces"),
    "ext-simple": KnownFact(
        "ext-simple",
        "A nontrivial extension of two non-isomorphic Ulrich line bundles of the same slope is simple.",
        "Casanellas-Hartshorne-Geiss-Schreyer, simple extensions"),
}


class Status(str, Enum):
    NUMERICAL = "NumericalCandidate"
    VERIFIED = "Verified"
    REJECTED = "Rejected"
    EXTERNAL = "NeedsExternalFact"


@dataclass(frozen=True)
class Witness:
    """A nonzero cohomology group h^i(S, O(D)) or h^i(S, E(D))."""

    index: int
    bundle: str  # "O" or "E"
    divisor: DivisorClass
    dim: int
    exact: bool = True
    note: str = ""

    def group(self, S: SurfaceModel) -> str:
        d = format_divisor(S, self.divisor)
        return f"h{self.index}({d})" if self.bundle == "O" else f"h{self.index}(E({d}))"

    def describe(self, S: SurfaceModel) -> str:
        rel = "=" if self.exact else ">="
        s = f"{self.group(S)} {rel} {self.dim}"
        return f"{s} [{self.note}]" if self.note else s


@dataclass(frozen=True)
class UlrichLineCandidate:
    a: int
    D: DivisorClass
    status: Status = Status.NUMERICAL
    witness: Witness | None = None
    fact: KnownFact | None = None
    companion_of: tuple[int, DivisorClass] | None = None
    certificates: tuple[tuple[str, int], ...] = ()
    orbit_size: int = 1

    @property
    def key(self) -> tuple:
        return (-self.a, tuple(self.D))

    def chow(self, X):
        return line_class(X, self.a, self.D)

    def label(self, S: SurfaceModel) -> str:
        d = format_divisor(S, self.D)
        if self.a == 0:
            return f"pi*({d})"
        lead = "xi" if self.a == 1 else f"{self.a}xi"
        return f"{lead} + pi*({d})"


# -- enumeration ------------------------------------------------------------

def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    if b == 0:
        return (abs(a), (1 if a >= 0 else -1), 0)
    g, x, y = _ext_gcd(b, a % b)
    return g, y, x - (a // b) * y


def _functional(S: SurfaceModel, ell: DivisorClass) -> list[int]:
    return [sum(S.gram[i][j] * ell[j] for j in range(S.rank)) for i in range(S.rank)]


@dataclass
class LinearSystemResult:
    solutions: list[DivisorClass]
    obstruction: str | None = None
    method: str = ""


def _equation_text(S, ell, v, c, multiple_of_ample):
    terms = " + ".join(f"{x}*d[{lab}]" for x, lab in zip(v, S.basis) if x)
    s = f"{terms} = {c}" if terms else f"0 = {c}"
    if multiple_of_ample:
        m = multiple_of_ample
        s += f"  (i.e. {'' if m == 1 else m}D.H = {c})"
    return s


def _ample_multiple(S: SurfaceModel, ell: DivisorClass) -> int | None:
    H = S.ample_ref
    for m in range(1, 13):
        if m * H == ell:
            return m
    return None


def solve_chi_linear(S: SurfaceModel, ell: DivisorClass, rhs: Fraction, bound: int = 20) -> LinearSystemResult:
    """All D with chi(D) = 0 and ell.D = rhs (rhs may be a half-integer, which is an obstruction)."""
    m = _ample_multiple(S, ell)
    v = _functional(S, ell)
    g = math.gcd(*v)
    if Fraction(rhs).denominator != 1:
        num = Fraction(rhs) * 2
        v2 = [2 * x for x in v]
        return LinearSystemResult([], "no integral solution: " + _equation_text(S, ell, v2, int(num), m and 2 * m),
                                  "parity")
    c = int(rhs)
    if g == 0:
        raise LatticeError("degenerate linear condition")
    if c % g:
        eq = _equation_text(S, ell, v, c, m)
        return LinearSystemResult([], f"no integral solution: {eq} (left side divisible by {g})", "gcd")
    if S.rank == 1:
        sols = []
        if c % v[0] == 0:
            D = DivisorClass((c // v[0],))
            if chi_line(S, D) == 0:
                sols.append(D)
        return LinearSystemResult(sols, None, "rank 1")
    if S.rank == 2:
        return LinearSystemResult(_line_conic(S, v, c, g, bound), None, "line-conic")
    if _is_diagonal_hyperbolic(S):
        return LinearSystemResult(_ellipsoid(S, ell, c), None, "ellipsoid")
    raise LatticeError(f"no closed-form solver for {S.label}")


def _line_conic(S, v, c, g, bound):
    _, x, y = _ext_gcd(v[0], v[1])
    D0 = DivisorClass((x * (c // g), y * (c // g)))
    w = DivisorClass((v[1] // g, -v[0] // g))
    K = S.canonical
    # 2 chi(D0 + t w) = A t^2 + B t + C
    A = intersect(S, w, w)
    B = 2 * intersect(S, D0, w) - intersect(S, K, w)
    C = 2 * S.chi + intersect(S, D0, D0) - intersect(S, K, D0)
    ts = []
    if A:
        disc = B * B - 4 * A * C
        if disc >= 0 and math.isqrt(disc) ** 2 == disc:
            r = math.isqrt(disc)
            for num in {-B + r, -B - r}:
                if num % (2 * A) == 0:
                    ts.append(num // (2 * A))
    elif B:
        if C % B == 0:
            ts.append(-C // B)
    elif C == 0:
        # chi vanishes on the whole line; only a box can be listed
        ts = [t for t in range(-4 * bound - 4, 4 * bound + 5)
              if all(abs(x) <= bound for x in (D0 + t * w))]
    return sorted(D0 + t * w for t in ts)


def _is_diagonal_hyperbolic(S):
    g = S.gram
    return (g[0][0] == 1 and all(g[i][i] == -1 for i in range(1, S.rank))
            and all(g[i][j] == 0 for i in range(S.rank) for j in range(S.rank) if i != j))


def _ellipsoid(S, ell, c):
    """chi(D) = 0 and ell.D = c on a lattice with form x0^2 - sum xi^2.

    With D' = D - K/2 the first condition is D'^2 = K^2/4 - 2chi(O).  Writing
    D' = s ell + N with N orthogonal to ell, N is negative definite and
    Cauchy-Schwarz bounds the tail coordinates of N by a ball.
    """
    K = S.canonical
    A = list(ell)
    A2 = intersect(S, ell, ell)
    if A2 <= 0 or A[0] == 0:
        raise LatticeError("ellipsoid solver needs ell^2 > 0")
    Q = Fraction(intersect(S, K, K), 4) - 2 * S.chi
    cp = c - Fraction(intersect(S, ell, K), 2)
    s = cp / A2
    Nval = cp * cp / A2 - Q
    if Nval < 0:
        return []
    R = Nval * A[0] * A[0] / A2
    center = [Fraction(K[i], 2) + s * A[i] for i in range(1, S.rank)]
    out = []

    def rec(i, acc, left):
        if i == len(center):
            num = c + sum(A[j + 1] * acc[j] for j in range(len(acc)))
            if num % A[0] == 0:
                D = DivisorClass((num // A[0],) + tuple(acc))
                if chi_line(S, D) == 0 and intersect(S, ell, D) == c:
                    out.append(D)
            return
        r = math.isqrt(math.floor(left)) + 1
        lo = math.ceil(center[i] - r)
        for x in range(lo, math.floor(center[i] + r) + 1):
            d = (x - center[i]) ** 2
            if d <= left:
                rec(i + 1, acc + [x], left - d)

    rec(0, [], R)
    return sorted(out)


def type1_system(X: ScrollSpec) -> tuple[DivisorClass, Fraction]:
    S = X.surface
    c1 = X.c1
    return c1, Fraction(intersect(S, c1, c1) + intersect(S, c1, S.canonical), 2)


def type2_system(X: ScrollSpec) -> tuple[DivisorClass, Fraction]:
    S = X.surface
    return X.c1, Fraction(2 * S.chi - chi_bundle(S, X.bundle))


def companion(X: ScrollSpec, c: UlrichLineCandidate) -> UlrichLineCandidate:
    if c.a not in (0, 1, 2):
        raise ValueError("Ulrich line bundles have a in {0, 1, 2}")
    D = X.c1 + X.surface.canonical - c.D
    return UlrichLineCandidate(2 - c.a, D, companion_of=(c.a, c.D), orbit_size=c.orbit_size)


def satisfies_system(X: ScrollSpec, a: int, D: DivisorClass) -> bool:
    """Re-evaluate the defining chi conditions of a xi + pi^*D directly."""
    S, E = X.surface, X.bundle
    if a == 2:
        return chi_line(S, D) == 0 and chi_bundle(S, twist(E, D)) == 0
    if a == 1:
        return chi_line(S, D) == 0 and chi_line(S, D - X.c1) == 0
    if a == 0:
        return chi_line(S, D - X.c1) == 0 and chi_bundle(S, twist(E, D - 2 * X.c1)) == 0
    return False


@dataclass
class Enumeration:
    candidates: list[UlrichLineCandidate]
    obstructions: dict[int, str | None]
    methods: dict[int, str]
    cross_checked: bool = False


def enumerate_candidates(X: ScrollSpec, bound: int = 20, cross_check: bool = True) -> Enumeration:
    S = X.surface
    obstructions, methods = {}, {}
    cands = []
    for a, system in ((1, type1_system), (2, type2_system)):
        ell, rhs = system(X)
        res = solve_chi_linear(S, ell, rhs, bound)
        obstructions[a] = res.obstruction
        methods[a] = res.method
        for D in res.solutions:
            if not satisfies_system(X, a, D):
                raise InternalInconsistency(f"solver returned {D} which fails the type-{a} system")
            cands.append(UlrichLineCandidate(a, D))
    for c in [c for c in cands if c.a == 2]:
        cands.append(companion(X, c))
    for c in cands:
        if not satisfies_system(X, c.a, c.D):
            raise InternalInconsistency(f"candidate {c.a}, {c.D} fails its chi system")
    cands = _with_orbits(S, cands)
    cands.sort(key=lambda c: c.key)
    out = Enumeration(cands, obstructions, methods)
    if cross_check:
        from .oracle import brute_line_candidates
        brute = brute_line_candidates(X, bound)
        for a in (0, 1, 2):
            mine = sorted(tuple(c.D) for c in cands if c.a == a and max(map(abs, c.D)) <= bound)
            theirs = sorted(tuple(D) for D in brute[a])
            if mine != theirs:
                raise InternalInconsistency(
                    f"{X.name}: type a={a} closed form {mine} differs from box search {theirs}")
        out.cross_checked = True
    return out


def _orbit_size(D: DivisorClass, S: SurfaceModel) -> int:
    tail = list(D)[1:]
    n = math.factorial(len(tail))
    for v in set(tail):
        n //= math.factorial(tail.count(v))
    return n


def canonical_form(S: SurfaceModel, D: DivisorClass) -> DivisorClass:
    """Representative of the orbit of D under permutations of e1..ek (tail sorted descending)."""
    if S.kind is not Kind.BLOWN_PLANE:
        return D
    return DivisorClass((D[0],) + tuple(sorted(D[1:], reverse=True)))


def _with_orbits(S, cands):
    if S.kind is not Kind.BLOWN_PLANE:
        return cands
    return [replace(c, orbit_size=_orbit_size(c.D, S)) for c in cands]


# -- verification -----------------------------------------------------------

def _line_witness(S, D, note="") -> Witness | None:
    cv = line_cohomology(S, D)
    nz = cv.first_nonzero()
    if nz is None:
        return None
    return Witness(nz[0], "O", D, nz[1], note=note)


def _bundle_part(X: ScrollSpec, D: DivisorClass):
    """Decide H*(S, E(D)) = 0.  Returns (status, witness, fact)."""
    S = X.surface
    for pres in X.presentations:
        cv = bundle_cohomology_from_resolution(S, pres, D)
        if cv.exact:
            nz = cv.first_nonzero()
            if nz is None:
                return Status.VERIFIED, None, None
            return Status.REJECTED, Witness(nz[0], "E", D, nz[1], note=pres.label), None
        for i in (0, 2, 1):
            h = cv.dims[i]
            if h > 0:
                return Status.REJECTED, Witness(i, "E", D, h, exact=False, note=pres.label), None
    for fact in X.known_facts:
        for Dn, i, dim in fact.nonvanishing:
            if Dn == D:
                return Status.REJECTED, Witness(i, "E", D, dim, note=fact.id), fact
        if D in fact.vanishes:
            return Status.EXTERNAL, None, fact
    return Status.NUMERICAL, None, None


def _serre_witness(X, w: Witness) -> Witness:
    """Translate a witness for 2xi + pi^*D into one for its companion pi^*(c1 + K - D)."""
    K, c1 = X.surface.canonical, X.c1
    j = 2 - w.index
    if w.bundle == "O":
        # h^i(D) = h^{2-i}(K - D) and K - D = D' - c1
        return Witness(j, "O", K - w.divisor, w.dim, w.exact, "Serre dual")
    # h^i(E(D)) = h^{2-i}(E^v(K - D)) = h^{2-i}(E(K - D - c1)) = h^{2-i}(E(D' - 2c1))
    return Witness(j, "E", K - w.divisor - c1, w.dim, w.exact, "Serre dual")


def verify_candidate(X: ScrollSpec, c: UlrichLineCandidate) -> UlrichLineCandidate:
    S = X.surface
    if c.a == 0:
        partner = verify_candidate(X, companion(X, c))
        w = _serre_witness(X, partner.witness) if partner.witness else None
        certs = (("chi(D - c1)", chi_line(S, c.D - X.c1)),
                 ("chi(E(D - 2c1))", chi_bundle(S, twist(X.bundle, c.D - 2 * X.c1))))
        return replace(c, status=partner.status, witness=w, fact=partner.fact, certificates=certs,
                       companion_of=(2, partner.D))
    if c.a == 1:
        certs = (("chi(D)", chi_line(S, c.D)), ("chi(D - c1)", chi_line(S, c.D - X.c1)))
        w = _line_witness(S, c.D) or _line_witness(S, c.D - X.c1)
        return replace(c, status=Status.REJECTED if w else Status.VERIFIED, witness=w, certificates=certs)
    if c.a == 2:
        certs = (("chi(D)", chi_line(S, c.D)), ("chi(E(D))", chi_bundle(S, twist(X.bundle, c.D))))
        w = _line_witness(S, c.D)
        if w:
            return replace(c, status=Status.REJECTED, witness=w, certificates=certs)
        st, w, fact = _bundle_part(X, c.D)
        return replace(c, status=st, witness=w, fact=fact, certificates=certs)
    raise ValueError("Ulrich line bundles have a in {0, 1, 2}")


@dataclass
class Classification:
    scroll: ScrollSpec
    candidates: list[UlrichLineCandidate]
    obstructions: dict[int, str | None]
    methods: dict[int, str]
    cross_checked: bool

    def with_status(self, *statuses) -> list[UlrichLineCandidate]:
        return [c for c in self.candidates if c.status in statuses]

    @property
    def verified(self):
        return self.with_status(Status.VERIFIED)

    @property
    def accepted(self):
        """Candidates not rejected: verified, or resting on an imported fact."""
        return self.with_status(Status.VERIFIED, Status.EXTERNAL)

    def classes(self, statuses=None):
        """Candidates up to permutation of the exceptional classes: (a, canonical D, orbit size, status)."""
        S = self.scroll.surface
        seen = {}
        for c in self.candidates:
            if statuses and c.status not in statuses:
                continue
            key = (c.a, canonical_form(S, c.D))
            seen.setdefault(key, (c.a, key[1], c.orbit_size, c.status))
        return sorted(seen.values(), key=lambda t: (-t[0], tuple(t[1])))


def classify(X: ScrollSpec, bound: int = 20, cross_check: bool = True) -> Classification:
    en = enumerate_candidates(X, bound, cross_check)
    cands = [verify_candidate(X, c) for c in en.candidates]
    return Classification(X, cands, en.obstructions, en.methods, en.cross_checked)


# -- Ext and chi ------------------------------------------------------------

@dataclass(frozen=True)
class Exact:
    value: int


@dataclass(frozen=True)
class ChiBound:
    value: int  # -chi, a lower bound for h^1


def _as_line(X, L):
    if isinstance(L, UlrichLineCandidate):
        return L.a, L.D
    if isinstance(L, tuple):
        return L
    return L.line_data()


def ext1_dimension(X: ScrollSpec, L_target, L_source):
    """dim Ext^1(L_source, L_target) = h^1(X, L_target - L_source) = h^1(S, S^da E(dD))."""
    at, Dt = _as_line(X, L_target)
    as_, Ds = _as_line(X, L_source)
    da, dD = at - as_, Dt - Ds
    S = X.surface
    if da not in (0, 1, 2):
        raise ValueError(f"difference of xi-coefficients {da} outside 0..2")
    cv = None
    if da == 0:
        cv = line_cohomology(S, dD)
    elif da == 1:
        for pres in X.presentations:
            cv = bundle_cohomology_from_resolution(S, pres, dD)
            if cv.exact:
                break
    if cv is not None and cv.exact:
        return Exact(cv.h1)
    return ChiBound(-chi_pushforward(X, da, dD))


def end_pieces(X: ScrollSpec, L1, L2) -> list:
    """Graded pieces O, O, L1 - L2, L2 - L1 of End of an extension of L2 by L1."""
    L1 = L1 if isinstance(L1, chow.ChowElement) else line_class(X, *_as_line(X, L1))
    L2 = L2 if isinstance(L2, chow.ChowElement) else line_class(X, *_as_line(X, L2))
    z = chow.zero(X)
    return [(z, 2), (L1 - L2, 1), (L2 - L1, 1)]


def chi_endomorphisms(X: ScrollSpec, pieces: Sequence) -> tuple[int, int]:
    """chi of a bundle with the given line-bundle graded pieces, and 1 - chi."""
    total = 0
    rank = 0
    for item in pieces:
        L, mult = item if isinstance(item, tuple) else (item, 1)
        if not isinstance(L, chow.ChowElement) or mult < 1:
            raise ValueError("pieces must be (degree-1 class, positive multiplicity)")
        if L.degrees() - {1}:
            raise ValueError("each piece must be a divisor class")
        a, D = L.line_data()
        total += mult * chi_pushforward(X, a, D)
        rank += mult
    if rank == 0:
        raise ValueError("empty piece list")
    return total, 1 - total


# -- rank-2 constructions ---------------------------------------------------

class Provenance(str, Enum):
    SPECIAL = "SpecialUlrichTwist"
    EXPLICIT = "Explicit"


@dataclass(frozen=True)
class PullbackUlrich:
    scroll: str
    F: BundleData
    c1: chow.ChowElement
    c2: chow.ChowElement
    chi_F: int
    chi_F_twist: int
    provenance: Provenance
    facts: tuple[KnownFact, ...] = ()

    @property
    def c1_line(self) -> tuple[int, DivisorClass]:
        return self.c1.line_data()


def special_twist(X: ScrollSpec) -> BundleData:
    """Special Ulrich numerics of (S, c1(E)) twisted by -c1(E)."""
    S = X.surface
    return twist(special_ulrich_numerics(S, X.c1), -X.c1)


def construct_pullback_ulrich(X: ScrollSpec, F: BundleData | None = None,
                              provenance: Provenance = Provenance.SPECIAL,
                              facts: Iterable[KnownFact] = ()) -> PullbackUlrich:
    """G = pi^*F (x) xi is Ulrich when H*(S, F) = H*(S, F(-c1(E))) = 0; the chi parts are checked here."""
    S = X.surface
    provenance = Provenance(provenance)
    if provenance is Provenance.SPECIAL:
        expected = special_twist(X)
        if F is None:
            F = expected
        elif (F.rank, F.c1, F.c2) != (expected.rank, expected.c1, expected.c2):
            raise ChernError("F does not have the special Ulrich twist numerics")
    elif F is None:
        raise ValueError("an explicit construction needs F")
    chi_F = chi_bundle(S, F)
    chi_Ft = chi_bundle(S, twist(F, -X.c1))
    if chi_F or chi_Ft:
        raise ChernError(f"chi certificate fails: chi(F) = {chi_F}, chi(F(-c1(E))) = {chi_Ft}")
    c1, c2 = pullback_twist_chern(X, F)
    return PullbackUlrich(X.name, F, c1, c2, chi_F, chi_Ft, provenance, tuple(facts))


def cubic_rank2_bundle(S: SurfaceModel, L: DivisorClass) -> BundleData:
    """F with c1 = 2L - H, c2 = H^2 - H.L + L^2 on a cubic surface."""
    H = S.ample_ref
    return BundleData(S, 2, 2 * L - H, intersect(S, H, H) - intersect(S, H, L) + intersect(S, L, L))


@dataclass(frozen=True)
class Verdict:
    kind: str  # NotAnExtension or PossibleExtension
    reason: str
    pairs: tuple = ()
    G_c1: tuple = ()
    G_degree: int = 0
    extension_degrees: tuple = ()
    conclusion: str = ""


def stability_discriminator(X: ScrollSpec, G: PullbackUlrich, candidates: Sequence[UlrichLineCandidate]) -> Verdict:
    for c in candidates:
        if c.status not in (Status.VERIFIED, Status.EXTERNAL):
            raise ValueError(f"candidate {c.a}, {list(c.D)} is not an accepted Ulrich line bundle")
    S = X.surface
    g_c1 = G.c1.line_data()
    g_deg = pairing_with_ample(X, G.c2)
    c1_match, full = [], []
    ext_degrees = set()
    for L, M in itertools.product(candidates, repeat=2):
        if L.a + M.a != 2:
            continue
        e1, e2 = extension_chern(X, L.chow(X), M.chow(X))
        if e1.line_data() != g_c1:
            continue
        d = pairing_with_ample(X, e2)
        ext_degrees.add(d)
        c1_match.append((L, M))
        if d == g_deg:
            full.append((L, M))
    ctx = dict(G_c1=(g_c1[0], tuple(g_c1[1])), G_degree=g_deg, extension_degrees=tuple(sorted(ext_degrees)))
    if full:
        return Verdict("PossibleExtension", "an extension of Ulrich line bundles has the same c1 and c2.H",
                       tuple((L.a, tuple(L.D), M.a, tuple(M.D)) for L, M in full), **ctx)
    conclusion = "stable (via: " + GLOBAL_FACTS["ss-extension"].statement + ")"
    if not candidates:
        return Verdict("NotAnExtension", "no Ulrich line bundles: vacuous", conclusion=conclusion, **ctx)
    if not c1_match:
        c1_txt = f"{g_c1[0]}xi + pi*({format_divisor(S, g_c1[1])})"
        return Verdict("NotAnExtension", f"c1(G) = {c1_txt} is not L + L' for any pair of candidates",
                       conclusion=conclusion, **ctx)
    return Verdict("NotAnExtension",
                   f"deg(c2(G).pi*H) = {g_deg} but extensions with the same c1 give {sorted(ext_degrees)}",
                   conclusion=conclusion, **ctx)


# -- scrolls over P2 --------------------------------------------------------

@dataclass(frozen=True)
class P2Case:
    e: int
    b: int
    c2: int
    degree: int
    verdict: str  # a catalog name, or CatalogMismatch
    note: str = ""


def p2_case_analysis(known: dict | None = None, e_values=(2, 4, 5), degrees=(3, 12)) -> list[P2Case]:
    """For scrolls over P2 with c1(E) = e: chi(b) = 0 forces b in {-1, -2}, and then
    chi(E(b)) = 0 fixes c2.  Pairs (e, c2) not matching a known scroll are CatalogMismatch."""
    if known is None:
        from .catalog import CATALOG
        known = {(X.c1[0], X.c2): name for name, X in CATALOG.items() if X.surface.kind is Kind.P2}
    out = []
    for e in e_values:
        for b in (-1, -2):
            # chi(E(b)) = 0 with c1 = e:  2b^2 + e^2 + 2be + 6b + 3e - 2c2 + 4 = 0
            num = 2 * b * b + e * e + 2 * b * e + 6 * b + 3 * e + 4
            if num % 2:
                continue
            c2 = num // 2
            d = e * e - c2
            name = known.get((e, c2))
            if name is None:
                note = f"degree {d}" + ("" if degrees[0] <= d <= degrees[1] else " outside the range")
                out.append(P2Case(e, b, c2, d, "CatalogMismatch", note))
            else:
                out.append(P2Case(e, b, c2, d, name))
    return out
