"""The scrolls studied here, with the numbers expected of them, and a JSON loader for new ones.

Spec-file schema (JSON)::

    {
      "name": "my-scroll",
      "surface": {"kind": "K3Lattice", "params": [14, 16, 14]},
      "bundle": {"c1": "H", "c2": 5},
      "presentations": [{"sources": ["-h"], "targets": ["0", "0", "0"]}]
    }

``surface`` may also repeat any field of the SurfaceModel record (basis, gram,
canonical, chi, euler, ample_ref); repeated fields must agree with the built
surface.  Divisors are strings in the basis labels or integer lists.
Unknown keys are rejected.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

from .chow import ScrollSpec
from .cohomology import ResolutionPresentation
from .lattice import DivisorClass, LatticeError, SurfaceModel, build_surface, parse_divisor
from .rr import BundleData
from .ulrich import KnownFact


class SpecFileError(ValueError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    scroll: ScrollSpec
    base: str
    expected: dict = field(default_factory=dict, compare=False, hash=False)


def _scroll(name, S, c1, c2, presentations=(), facts=()):
    c1 = parse_divisor(S, c1) if isinstance(c1, str) else c1
    return ScrollSpec(name, S, BundleData(S, 2, c1, c2), tuple(presentations), tuple(facts))


def _pres(S, sources, targets, label):
    p = lambda xs: tuple(parse_divisor(S, x) for x in xs)
    return ResolutionPresentation(p(sources), p(targets), label)


def _palatini_type2() -> tuple[DivisorClass, ...]:
    reps = [(-1, (1, 0, 0, 0, 0, 0)), (-2, (1, 1, 1, 1, 0, 0)), (-3, (2, 1, 1, 1, 1, 1))]
    out = set()
    for a, tail in reps:
        for perm in set(itertools.permutations(tail)):
            out.add(DivisorClass((a,) + perm))
    return tuple(sorted(out))


def build_catalog() -> dict[str, CatalogEntry]:
    P2 = build_surface("ProjectivePlane")
    Q = build_surface("Quadric")
    F1 = build_surface("Hirzebruch1")
    cubic = build_surface("BlownPlane", 6)
    k3a = build_surface("K3Lattice", (14,))
    k3b = build_surface("K3Lattice", (14, 16, 14))

    p2_c2_6 = KnownFact(
        "p2-c2-6-vanishing",
        "H^i(P2, E(-2)) = 0 for all i: E is stable, so H^0(E(-2)) = 0, and chi(E(-2)) = 0 = h^2.",
        "stability of E for the degree-10 scroll (Ionescu) and the stability vanishing lemma "
        "(Okonek-Schneider-Spindler)",
        vanishes=(P2.divisor(-2),))
    palatini = KnownFact(
        "palatini-vanishing",
        "H^i(S, E(D)) = 0 for the 27 type-2 classes D, checked one by one with "
        "0 -> O_S(D) -> E(D) -> I_Z(2H + D) -> 0.",
        "the Palatini bundle as an extension of I_Z(2H), Z five points",
        vanishes=_palatini_type2())
    k3 = KnownFact(
        "k3-vanishing",
        "H^0(S, E(H - C)) = 0, hence H^i(S, E(H - C)) = 0 for all i since chi = 0 and h^2 = h^0(E(-H + C))"
        " by Serre duality on the K3.",
        "mu-stability of the Lazarsfeld-Mukai bundle E_{B,zeta}",
        vanishes=(k3b.parse("H - C"),))

    entries = [
        CatalogEntry("segre", _scroll("segre", P2, "2h", 1, [_pres(P2, [], ["h", "h"], "E = O(1)^2")]),
                     "P2", {"degree": 3, "accepted": [(2, (-2,)), (0, (1,))]}),
        CatalogEntry("bordiga", _scroll("bordiga", P2, "4h", 10, [_pres(P2, ["-h"] * 4, ["0"] * 6,
                                                                          "O(-1)^4 -> O^6")]),
                     "P2", {"degree": 6, "accepted": [(2, (-1,)), (0, (2,))]}),
        CatalogEntry("p2-d10", _scroll("p2-d10", P2, "5h", 15, [_pres(P2, ["-h"] * 5, ["0"] * 7,
                                                                        "O(-1)^5 -> O^7")]),
                     "P2", {"degree": 10, "accepted": [(2, (-1,)), (0, (3,))]}),
        CatalogEntry("p2-c2-6", _scroll("p2-c2-6", P2, "4h", 6, facts=[p2_c2_6]),
                     "P2", {"degree": 10, "accepted": [(2, (-2,)), (0, (3,))]}),
        CatalogEntry("palatini", _scroll("palatini", cubic, "6e0 - 2e1 - 2e2 - 2e3 - 2e4 - 2e5 - 2e6", 5,
                                         facts=[palatini]),
                     "BlownPlane(6)",
                     {"degree": 7,
                      "classes": [(2, (-1, 1, 0, 0, 0, 0, 0)), (2, (-2, 1, 1, 1, 1, 0, 0)),
                                  (2, (-3, 2, 1, 1, 1, 1, 1)), (0, (4, -2, -1, -1, -1, -1, -1)),
                                  (0, (5, -2, -2, -2, -2, -1, -1)), (0, (6, -3, -2, -2, -2, -2, -2))]}),
        CatalogEntry("quadric", _scroll("quadric", Q, "3l1 + 3l2", 9, [
            _pres(Q, ["-3l2"], ["l1 - l2", "l1", "l1 + l2"], "O(0,-3) -> O(1,-1)+O(1,0)+O(1,1)"),
            _pres(Q, ["-3l1"], ["-l1 + l2", "l2", "l1 + l2"], "O(-3,0) -> O(-1,1)+O(0,1)+O(1,1)"),
        ]), "Quadric", {"degree": 9, "accepted": [(1, (2, -1)), (1, (-1, 2))]}),
        CatalogEntry("f1-c2-10", _scroll("f1-c2-10", F1, "3C0 + 5f", 10), "Hirzebruch1",
                     {"degree": 11, "accepted": []}),
        CatalogEntry("f1-c2-11", _scroll("f1-c2-11", F1, "3C0 + 5f", 11), "Hirzebruch1",
                     {"degree": 10, "accepted": []}),
        CatalogEntry("k3-general", _scroll("k3-general", k3a, "H", 5), "K3Lattice(1)",
                     {"degree": 9, "accepted": []}),
        CatalogEntry("k3-nl", _scroll("k3-nl", k3b, "H", 5, facts=[k3]), "K3Lattice(2)",
                     {"degree": 9, "accepted": [(2, (1, -1)), (0, (0, 1))]}),
    ]
    return {e.name: e for e in entries}


ENTRIES = build_catalog()
CATALOG: dict[str, ScrollSpec] = {k: v.scroll for k, v in ENTRIES.items()}


def get(name: str) -> ScrollSpec:
    try:
        return CATALOG[name]
    except KeyError:
        raise KeyError(f"unknown scroll {name!r}; known: {', '.join(CATALOG)}") from None


# -- spec files -------------------------------------------------------------

_TOP = {"name", "surface", "bundle", "presentations", "presentation"}
_SURF = {"kind", "params", "basis", "gram", "canonical", "chi", "euler", "ample_ref"}
_BUNDLE = {"c1", "c2"}
_PRES = {"sources", "targets", "label"}


def _check_keys(obj, allowed, where):
    if not isinstance(obj, dict):
        raise SpecFileError(f"{where} must be an object")
    extra = set(obj) - allowed
    if extra:
        raise SpecFileError(f"unknown key(s) in {where}: {', '.join(sorted(extra))}")


def _divisor(S: SurfaceModel, x, where):
    try:
        if isinstance(x, str):
            return parse_divisor(S, x)
        if isinstance(x, list) and all(isinstance(v, int) for v in x):
            return S.divisor(*x)
    except LatticeError as e:
        raise SpecFileError(f"{where}: {e}") from None
    raise SpecFileError(f"{where}: expected a divisor string or integer list, got {x!r}")


def scroll_from_record(rec: dict) -> ScrollSpec:
    _check_keys(rec, _TOP, "spec file")
    for k in ("name", "surface", "bundle"):
        if k not in rec:
            raise SpecFileError(f"missing key {k!r}")
    s = rec["surface"]
    _check_keys(s, _SURF, "surface")
    params = s.get("params", ())
    if "gram" in s and "params" not in s:
        g = s["gram"]
        params = (g[0][0],) if len(g) == 1 else (g[0][0], g[0][1], g[1][1])
    try:
        S = build_surface(s.get("kind"), params)
    except (LatticeError, TypeError, IndexError) as e:
        raise SpecFileError(f"surface: {e}") from None
    built = S.to_record()
    for k in ("basis", "gram", "canonical", "chi", "euler", "ample_ref"):
        if k in s and s[k] != built[k]:
            raise SpecFileError(f"surface.{k} = {s[k]!r} disagrees with the {S.label} model ({built[k]!r})")
    b = rec["bundle"]
    _check_keys(b, _BUNDLE, "bundle")
    if not isinstance(b.get("c2"), int):
        raise SpecFileError("bundle.c2 must be an integer")
    c1 = _divisor(S, b.get("c1"), "bundle.c1")
    pres_list = rec.get("presentations", [])
    if "presentation" in rec:
        pres_list = list(pres_list) + [rec["presentation"]]
    pres = []
    for i, p in enumerate(pres_list):
        _check_keys(p, _PRES, f"presentations[{i}]")
        src = tuple(_divisor(S, x, f"presentations[{i}].sources") for x in p.get("sources", []))
        tgt = tuple(_divisor(S, x, f"presentations[{i}].targets") for x in p.get("targets", []))
        pres.append(ResolutionPresentation(src, tgt, p.get("label", f"presentation {i}")))
    try:
        return ScrollSpec(str(rec["name"]), S, BundleData(S, 2, c1, b["c2"]), tuple(pres))
    except (LatticeError, ValueError) as e:
        raise SpecFileError(str(e)) from None


def load_spec_file(path) -> ScrollSpec:
    try:
        with open(path) as fh:
            rec = json.load(fh)
    except json.JSONDecodeError as e:
        raise SpecFileError(f"{path}: invalid JSON ({e})") from None
    return scroll_from_record(rec)
