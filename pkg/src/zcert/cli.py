"""Command-line interface: certify catalog entries and classify family
members.

Exit codes: 0 everything certified / holds, 1 any failure, 2 usage or
catalog-parse errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .catalog import CatalogError, certify, four_pairs_check, load_catalog, reproduce
from .curves import classify_family
from .exact import QuadExtElem
from .k3 import embedding_exists
from .lattices import ambient, discriminant_form, overlattice


def _entry(catalog, entry_id):
    try:
        return catalog.get(entry_id)
    except KeyError as e:
        print(f"error: {e}", file=sys.stderr)
        sys.exit(2)


def _print_member_line(m):
    emb = m.get("embedding", {})
    print(f"  {m['id']}: index {m.get('index')}, |disc| {m.get('disc_order')} "
          f"{tuple(m.get('invariant_factors', ()))}, "
          f"conditions {m.get('urabe_i', {}).get('verdict')}/"
          f"{m.get('urabe_ii', {}).get('verdict')}, "
          f"embedding {emb.get('verdict')} ({emb.get('method')})")


def cmd_lattice(args, catalog):
    entry = _entry(catalog, args.entry)
    from .catalog import decode_member_glue

    bad = 0
    for member in entry.members:
        try:
            vectors, alternates, codes = decode_member_glue(entry.config, member.glue)
            N = ambient(entry.config)
            M = overlattice(N, vectors)
            D = discriminant_form(M)
            alt = f" (alternate D-generator on {list(alternates)})" if alternates else ""
            print(f"  {member.id}: index {M.index}, |det| {abs(M.det())}, "
                  f"disc {tuple(D.factors)}{alt}")
        except (CatalogError, ValueError) as e:
            print(f"  {member.id}: FAILED: {e}")
            bad += 1
    return 1 if bad else 0


def cmd_urabe(args, catalog):
    entry = _entry(catalog, args.entry)
    rep = certify(entry, check_embedding=False)
    for m in rep["members"]:
        print(f"  {m['id']}: condition (i) {m.get('urabe_i', {}).get('verdict')}, "
              f"condition (ii) {m.get('urabe_ii', {}).get('verdict')}")
    ok = all(m.get("urabe_i", {}).get("verdict") == "holds"
             and m.get("urabe_ii", {}).get("verdict") == "holds"
             for m in rep["members"])
    return 0 if ok else 1


def cmd_embed(args, catalog):
    entry = _entry(catalog, args.entry)
    from .catalog import decode_member_glue

    bad = 0
    for member in entry.members:
        vectors, _, _ = decode_member_glue(entry.config, member.glue)
        M = overlattice(ambient(entry.config), vectors)
        rep = embedding_exists(M)
        wit = f" witness {rep.witnesses}" if rep.witnesses else ""
        print(f"  {member.id}: {rep.verdict} ({rep.method}){wit}")
        if rep.verdict == "fails":
            bad += 1
    return 1 if bad else 0


def cmd_curves(args, catalog):
    entry = _entry(catalog, args.entry)
    if not entry.curves:
        print("  no explicit equations stored for this entry")
        return 0
    rep = certify(entry, check_embedding=False)
    bad = [p for p in rep["problems"] if "curve" in p]
    for c in rep["curves"]:
        print(f"  {c['member']}: configuration {c['configuration']['verdict']}, "
              f"total Milnor {c.get('total_milnor')}")
        for s in c.get("specials", []):
            vals = ", ".join(f"point {i}: {got} (expected {want})"
                             for i, want, got in s["values"])
            against = ("sextic" if s["against"] == "sextic"
                       else f"factor {s['against']}")
            print(f"    degree-{s['degree']} auxiliary vs {against}: {vals}")
    for p in bad:
        print(f"  problem: {p}")
    return 1 if bad else 0


def cmd_certify(args, catalog):
    entry = _entry(catalog, args.entry)
    rep = certify(entry)
    print(f"{entry.id}: {rep['verdict']}")
    for m in rep["members"]:
        _print_member_line(m)
    for c in rep["comparisons"]:
        tag = "NOT distinguished" if c["groups_isomorphic"] else "distinguished"
        print(f"  {c['pair'][0]} vs {c['pair'][1]}: {tag}")
    for p in rep["problems"]:
        print(f"  problem: {p}")
    for f in rep["flags"]:
        print(f"  flag: {f}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rep, fh, indent=1, sort_keys=True)
    return 0 if rep["verdict"] == "certified" else 1


def cmd_reproduce(args, catalog):
    agg = reproduce(catalog, scope=args.scope)
    for rep in agg["reports"]:
        status = rep["verdict"]
        marker = "ok " if status == "certified" else "!! "
        print(f"{marker}{rep['entry']:34s} {status}")
        for p in rep["problems"]:
            print(f"      {p}")
    print(f"\n{agg['certified']}/{agg['entries']} certified "
          f"({agg['partially_certified']} partial, {agg['failed']} failed); "
          f"{agg['necessary_only_members']}/{agg['total_members']} members "
          f"passed the embedding check by necessary conditions only")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(agg, fh, indent=1, sort_keys=True)
    return 0 if agg["failed"] == 0 else 1


def cmd_fourpairs(args, catalog):
    rep = four_pairs_check(catalog)
    print(f"{rep['distinguished']}/{rep['pairs']} pairs distinguished; "
          f"all overlattice conditions hold: {rep['all_urabe_hold']}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rep, fh, indent=1, sort_keys=True)
    ok = rep["distinguished"] == rep["pairs"] and rep["all_urabe_hold"]
    return 0 if ok else 1


def parse_lambda(text):
    """Parse 'p/q' or 'a+b*sqrt(-3)' style parameters (also 'sqrt-3', '-sqrt-3')."""
    text = text.strip().replace(" ", "")
    m = re.fullmatch(r"(-?\d+(?:/\d+)?)", text)
    if m:
        return QuadExtElem(Fraction(m.group(1)))
    m = re.fullmatch(
        r"(?:(-?\d+(?:/\d+)?)\+)?(-?)(\d+(?:/\d+)?\*)?sqrt\(?(-?\d+)\)?", text)
    if not m:
        raise ValueError(f"cannot parse parameter {text!r}")
    a = Fraction(m.group(1)) if m.group(1) else Fraction(0)
    b = Fraction(m.group(3)[:-1]) if m.group(3) else Fraction(1)
    if m.group(2) == "-":
        b = -b
    return QuadExtElem(a, b, int(m.group(4)))


def cmd_family(args, catalog):
    lam = parse_lambda(args.lam)
    res = classify_family(args.kind, lam)
    line = f"{args.kind} family at {lam}: {res.verdict}"
    if res.verdict == "type3":
        line += f" (node at {res.node}"
        if res.contact:
            line += f", contact parameters r={res.contact[0]}, s={res.contact[1]}"
        line += ")"
    print(line)
    if res.reason:
        print(f"  {res.reason}")
    return 0


def main(argv=None):
    ap = argparse.ArgumentParser(
        prog="zcert",
        description="Certify pairs/triplets of sextic-curve constructions by "
                    "lattice invariants and exact curve geometry.")
    ap.add_argument("--catalog", help="path to an alternate catalog JSON")
    sub = ap.add_subparsers(dest="command", required=True)

    for name, fn in [("lattice", cmd_lattice), ("urabe", cmd_urabe),
                     ("embed", cmd_embed), ("curves", cmd_curves)]:
        p = sub.add_parser(name)
        p.add_argument("entry")
        p.set_defaults(fn=fn)
    p = sub.add_parser("certify")
    p.add_argument("entry")
    p.add_argument("--json")
    p.set_defaults(fn=cmd_certify)
    p = sub.add_parser("reproduce")
    p.add_argument("--scope", choices=["examples", "tables", "triplets", "all"],
                   default="all")
    p.add_argument("--json")
    p.set_defaults(fn=cmd_reproduce)
    p = sub.add_parser("fourpairs")
    p.add_argument("--json")
    p.set_defaults(fn=cmd_fourpairs)
    p = sub.add_parser("family")
    p.add_argument("--kind", choices=["X", "Y"], required=True)
    p.add_argument("--lambda", dest="lam", required=True,
                   help="rational or a+b*sqrt(-3)")
    p.set_defaults(fn=cmd_family)

    args = ap.parse_args(argv)
    try:
        catalog = load_catalog(args.catalog)
    except CatalogError as e:
        print(f"catalog error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"cannot read catalog: {e}", file=sys.stderr)
        return 2
    try:
        return args.fn(args, catalog)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
