"""Command line front end: ``scroll-ulrich {list, classify, chi, verify}``.

Exit codes: 0 pass, 1 regression failure, 2 unknown scroll name,
3 parse error (bundle text or spec file), 4 internal inconsistency
(HRR and pushforward disagree, or classification contradicts itself).

JSON output of ``classify``::

    {"scroll": name, "surface": {kind, basis, gram, canonical, chi, euler, ample_ref},
     "bundle": {"rank": 2, "c1": [...], "c2": int}, "degree": int, "cross_checked": bool,
     "candidates": [{"a", "D", "label", "status", "witness", "fact", "companion_of",
                     "orbit_size", "certificates"}, ...],
     "classes": [{"a", "D", "orbit_size", "status"}, ...],
     "obstructions": {"0"|"1"|"2": str|null}, "methods": {...}}

JSON output of ``chi``: {"scroll", "a", "D", "pushforward", "hrr"}.
JSON output of ``verify``: see scrollulrich.report.
Keys are sorted, so identical invocations give identical bytes.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .catalog import ENTRIES, SpecFileError, get, load_spec_file
from .chow import chern_character, chi_hrr, chi_pushforward, line_class, parse_line_class, scroll_degree
from .lattice import LatticeError, format_divisor
from .report import run_regression
from .ulrich import InternalInconsistency, classify

EXIT_OK, EXIT_FAIL, EXIT_UNKNOWN, EXIT_PARSE, EXIT_INTERNAL = 0, 1, 2, 3, 4


class UnknownScroll(LookupError):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _resolve(target: str):
    """A catalog name or a path to a JSON spec file."""
    if target in ENTRIES:
        return get(target)
    if os.path.exists(target):
        return load_spec_file(target)
    raise UnknownScroll(target)


def cmd_list(args, out) -> int:
    rows = [("name", "base", "c1(E)", "c2(E)", "degree")]
    for name, e in ENTRIES.items():
        X = e.scroll
        rows.append((name, e.base, format_divisor(X.surface, X.c1), str(X.c2), str(scroll_degree(X))))
    if args.json:
        out.write(_dump([dict(zip(("name", "base", "c1", "c2", "degree"), r)) for r in rows[1:]]) + "\n")
        return EXIT_OK
    widths = [max(len(r[i]) for r in rows) for i in range(5)]
    for r in rows:
        out.write("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n")
    return EXIT_OK


def _candidate_record(S, c) -> dict:
    return {
        "a": c.a,
        "D": list(c.D),
        "label": c.label(S),
        "status": c.status.value,
        "witness": c.witness.describe(S) if c.witness else None,
        "fact": c.fact.id if c.fact else None,
        "companion_of": [c.companion_of[0], list(c.companion_of[1])] if c.companion_of else None,
        "orbit_size": c.orbit_size,
        "certificates": [list(x) for x in c.certificates],
    }


def classification_record(X, cl) -> dict:
    S = X.surface
    return {
        "scroll": X.name,
        "surface": S.to_record(),
        "bundle": {"rank": 2, "c1": list(X.c1), "c2": X.c2},
        "degree": scroll_degree(X),
        "cross_checked": cl.cross_checked,
        "candidates": [_candidate_record(S, c) for c in sorted(cl.candidates, key=lambda c: c.key)],
        "classes": [{"a": a, "D": list(D), "orbit_size": n, "status": st.value} for a, D, n, st in cl.classes()],
        "obstructions": {str(k): v for k, v in cl.obstructions.items()},
        "methods": {str(k): v for k, v in cl.methods.items()},
    }


def cmd_classify(args, out) -> int:
    X = _resolve(args.target)
    cl = classify(X, args.bound, cross_check=True)
    if args.box != args.bound:
        from .ulrich import enumerate_candidates
        enumerate_candidates(X, args.box, cross_check=True)
    rec = classification_record(X, cl)
    if args.json:
        out.write(_dump(rec) + "\n")
        return EXIT_OK
    S = X.surface
    out.write(f"{X.name}: degree {rec['degree']}, oracle agrees: {cl.cross_checked}\n")
    for c in sorted(cl.candidates, key=lambda c: c.key):
        line = f"  {c.label(S):40s} {c.status.value}"
        if c.witness:
            line += f"  witness {c.witness.describe(S)}"
        if c.fact:
            line += f"  fact {c.fact.id}"
        if c.orbit_size > 1:
            line += f"  orbit {c.orbit_size}"
        out.write(line + "\n")
    if S.points:
        out.write("  classes up to permutation:\n")
        for a, D, n, st in cl.classes():
            out.write(f"    a={a} {format_divisor(S, D)}  orbit {n}  {st.value}\n")
    for k, v in sorted(cl.obstructions.items()):
        if v:
            out.write(f"  type {k}: {v}\n")
    return EXIT_OK


def cmd_chi(args, out) -> int:
    X = _resolve(args.target)
    try:
        a, D = parse_line_class(X, args.bundle)
    except (LatticeError, ValueError) as e:
        raise SpecFileError(f"cannot parse bundle {args.bundle!r}: {e}") from None
    a += args.twist
    push = chi_pushforward(X, a, D)
    hrr = chi_hrr(X, chern_character(X, 1, line_class(X, a, D)))
    if push != hrr:
        raise InternalInconsistency(f"chi mismatch for ({a}, {list(D)}): pushforward {push}, HRR {hrr}")
    if args.json:
        out.write(_dump({"scroll": X.name, "a": a, "D": list(D), "pushforward": push, "hrr": hrr}) + "\n")
    else:
        out.write(f"pushforward: {push}\nhrr: {hrr}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    rep = run_regression(bound=args.bound, box=args.box, strict=args.strict)
    out.write((rep.to_json() + "\n") if args.json else rep.to_markdown())
    if not rep.ok:
        sys.stderr.write("failures: " + ", ".join(rep.failures) + "\n")
        return EXIT_FAIL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="scroll-ulrich", description="Ulrich line bundles on threefold scrolls")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("list", help="catalog table")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_list)

    s = sub.add_parser("classify", help="enumerate and verify Ulrich line bundle candidates")
    s.add_argument("target", help="catalog name or JSON spec file")
    s.add_argument("--bound", type=int, default=20)
    s.add_argument("--box", type=int, default=20, help="oracle box half-width")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("chi", help="Euler characteristic of a line bundle on the scroll")
    s.add_argument("target", help="catalog name or JSON spec file")
    s.add_argument("--bundle", required=True, help='"a xi + D", D in the surface basis, e.g. "2 xi + H - 2C"')
    s.add_argument("--twist", type=int, default=0, help="add j xi")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_chi)

    s = sub.add_parser("verify", help="full regression report over the catalog")
    s.add_argument("--bound", type=int, default=20)
    s.add_argument("--box", type=int, default=20)
    s.add_argument("--strict", action="store_true", help="treat NeedsExternalFact as failure")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except UnknownScroll as e:
        sys.stderr.write(f"unknown scroll {e.args[0]!r}; known: {', '.join(ENTRIES)}\n")
        return EXIT_UNKNOWN
    except (SpecFileError, LatticeError) as e:
        sys.stderr.write(f"parse error: {e}\n")
        return EXIT_PARSE
    except InternalInconsistency as e:
        sys.stderr.write(f"internal inconsistency: {e}\n")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
