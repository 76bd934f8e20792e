"""Catalog of lattice/curve constructions, the digit-code decoder for
overlattice generators, and the certification pipeline.

A catalog entry describes one construction: a Dynkin configuration, two or
three overlattices of Z*lam (+) L(G) given by glue codes or explicit vectors,
frozen expected invariants (discriminant orders, indices), and optionally
explicit sextic equations with their singular points and distinguishing
auxiliary curves.  ``certify`` rebuilds everything from scratch and checks
the stored expectations; members of a pair/triplet must be pairwise
distinguished by their discriminant groups.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from .exact import QuadExtElem
from .curves import (
    CurveWithFactors,
    ProjPoint,
    TernaryForm,
    intersection_at,
    shared_component,
    verify_configuration,
)
from .k3 import class_check, embedding_exists, urabe_condition_i, urabe_condition_ii
from .lattices import (
    ambient,
    component_disc_order,
    component_generator,
    component_spans,
    discriminant_form,
    glue_digits,
    glue_subgroup_digits,
    groups_isomorphic,
    overlattice,
    parse_config,
)

# local branch labels per singularity type (two labels when the singularity
# has two local branches)
_BRANCH_LABELS = {
    ("A", "even"): ("I",),
    ("A", "odd"): ("I", "II"),
    ("D", "odd"): ("I", "II"),
    ("D", "even"): ("I", "II", "III"),
    ("E", 6): ("I",),
    ("E", 7): ("I", "II"),
    ("E", 8): ("I",),
}


def branch_labels(letter, n):
    if letter == "E":
        return _BRANCH_LABELS[("E", n)]
    return _BRANCH_LABELS[(letter, "even" if n % 2 == 0 else "odd")]


class CatalogError(ValueError):
    pass


# ---------------------------------------------------------------------------
# glue-code decoding


def decode_glue(code, cfg, alternates=()):
    """Rational glue vector for a digit code over the ambient basis of cfg.

    The first digit counts lam/2; digit i >= 1 counts the canonical generator
    of component i's discriminant group.  ``alternates`` lists component
    indices (0-based over root components) whose D-type generator should be
    replaced by the other order-4 class.
    """
    cfg = tuple(cfg)
    if code == "-":
        return None
    if len(code) != 1 + len(cfg):
        raise CatalogError(
            f"code {code!r} has {len(code)} digits, expected {1 + len(cfg)}")
    digits = [int(ch) for ch in code]
    rank = 1 + sum(n for _, n in cfg)
    vec = [Fraction(0)] * rank
    vec[0] = Fraction(digits[0], 2)
    for ci, ((letter, n), (start, k)) in enumerate(zip(cfg, component_spans(cfg))):
        order = component_disc_order(letter, n)
        if order == 0:
            raise CatalogError("unsupported non-cyclic component D_even")
        d = digits[ci + 1]
        if d == 0:
            continue
        gen = component_generator(letter, n, alternate=(ci in alternates))
        if not gen and d % max(order, 1):
            raise CatalogError(f"digit {d} invalid for trivial group {letter}{n}")
        for i in range(k):
            vec[start + i] += d * gen[i]
    return vec


def encode_glue(vec, cfg, alternates=()):
    """Digit code of a dual vector (roundtrip inverse of decode_glue)."""
    digits = glue_digits(cfg, vec)
    if alternates:
        # re-derive digits with the alternate generator on those components
        digits = list(digits)
        for ci in alternates:
            letter, n = cfg[ci]
            start, k = component_spans(cfg)[ci]
            part = [Fraction(v) for v in vec[start:start + k]]
            gen = component_generator(letter, n, alternate=True)
            order = component_disc_order(letter, n)
            for t in range(order):
                diff = [p - t * g for p, g in zip(part, gen)]
                if all(x.denominator == 1 for x in diff):
                    digits[ci + 1] = t
                    break
        digits = tuple(digits)
    return "".join(str(d) for d in digits)


def decode_member_glue(cfg, specs):
    """Decode all glue specs of one member, retrying the alternate order-4
    generator of D-components when the canonical choice fails to produce an
    even overlattice.  Returns (vectors, alternates, codes)."""
    from itertools import combinations

    cfg = tuple(cfg)
    codes = []
    explicit = []
    for spec in specs:
        if isinstance(spec, str):
            codes.append(spec)
        elif isinstance(spec, dict) and "vector" in spec:
            explicit.append([Fraction(*pair) for pair in spec["vector"]])
        else:
            raise CatalogError(f"bad glue spec {spec!r}")
    d_comps = [i for i, (letter, n) in enumerate(cfg) if letter == "D"]
    N = ambient(cfg)
    last_err = None
    for r in range(len(d_comps) + 1):
        for alt in combinations(d_comps, r):
            try:
                vectors = list(explicit)
                for code in codes:
                    v = decode_glue(code, cfg, alternates=alt)
                    if v is not None:
                        vectors.append(v)
                overlattice(N, vectors)  # validation only
                return vectors, alt, codes
            except (CatalogError, ValueError) as e:
                last_err = e
                continue
    raise CatalogError(f"no valid decoding for {codes or explicit}: {last_err}")


# ---------------------------------------------------------------------------
# entry model


@dataclass
class Member:
    id: str
    glue: list  # raw specs (strings / {"vector": ...})


@dataclass
class CurveData:
    member: str
    factors: list  # of TernaryForm
    points: list  # of (ProjPoint, (letter, n))
    specials: list  # of dicts {degree, form, against, expect}


@dataclass
class CatalogEntry:
    id: str
    kind: str  # classical | example | triplet | fourpairs | table
    milnor_class: int
    singularities: str
    config: tuple
    configuration: object  # "irreducible" | list of rows
    members: list
    expected_disc_orders: list
    expected_indices: list
    field_d: object = None
    curves: list = field(default_factory=list)
    class_checks: list = field(default_factory=list)
    reachability: list = field(default_factory=list)
    special_columns: list = field(default_factory=list)
    notes: str = ""


@dataclass
class Catalog:
    entries: list

    def __iter__(self):
        return iter(self.entries)

    def get(self, entry_id):
        for e in self.entries:
            if e.id == entry_id:
                return e
        raise KeyError(f"no catalog entry {entry_id!r}")

    def by_kind(self, *kinds):
        return [e for e in self.entries if e.kind in kinds]


def _parse_field_elem(raw, d):
    """[[an,ad],[bn,bd]] -> a + b*sqrt(d); [an,ad] -> rational shorthand."""
    if isinstance(raw, list) and len(raw) == 2 and all(isinstance(x, int) for x in raw):
        return QuadExtElem(Fraction(raw[0], raw[1]))
    (an, ad), (bn, bd) = raw
    b = Fraction(bn, bd)
    if b == 0:
        return QuadExtElem(Fraction(an, ad))
    if d is None:
        raise CatalogError("irrational coefficient without a field tag")
    return QuadExtElem(Fraction(an, ad), b, d)


def _parse_form(coeffs, d):
    out = {}
    for key, raw in coeffs.items():
        exps = tuple(int(t) for t in key.split(","))
        if len(exps) != 3:
            raise CatalogError(f"bad monomial key {key!r}")
        out[exps] = _parse_field_elem(raw, d)
    return TernaryForm(out)


def _validate_configuration(entry):
    cfg = entry.config
    if entry.configuration == "irreducible":
        return
    rows = entry.configuration
    degs = [row["degree"] for row in rows]
    if sum(degs) != 6:
        raise CatalogError(f"{entry.id}: component degrees {degs} do not sum to 6")
    if any(row.get("parts") is None for row in rows):
        return  # degrees-only configuration
    for ci, (letter, n) in enumerate(cfg):
        seen = []
        for row in rows:
            seen.extend(row["parts"][ci])
        want = branch_labels(letter, n)
        if sorted(seen) != sorted(want):
            raise CatalogError(
                f"{entry.id}: component {ci} ({letter}{n}) has branches {seen}, "
                f"expected {list(want)}")


def load_catalog(path=None):
    """Load and schema-validate the catalog (the shipped one by default)."""
    if path is None:
        raw = resources.files("zcert").joinpath("data/catalog.json").read_text()
    else:
        with open(path) as fh:
            raw = fh.read()
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as e:
        raise CatalogError(f"catalog is not valid JSON: {e}") from None
    if not isinstance(doc, dict) or "entries" not in doc:
        raise CatalogError("catalog must be an object with an 'entries' list")
    entries = []
    for pos, e in enumerate(doc["entries"]):
        where = f"entries[{pos}]"
        try:
            config = tuple((c[0], int(c[1])) for c in e["config"])
            members = [Member(m["id"], m["glue"]) for m in e["members"]]
            entry = CatalogEntry(
                id=e["id"],
                kind=e["kind"],
                milnor_class=int(e["milnor_class"]),
                singularities=e["singularities"],
                config=config,
                configuration=e.get("configuration", "irreducible"),
                members=members,
                expected_disc_orders=list(e["expected"]["disc_orders"]),
                expected_indices=list(e["expected"]["indices"]),
                field_d=e.get("field_d"),
                class_checks=e.get("class_checks", []),
                reachability=e.get("reachability", []),
                special_columns=e.get("special_columns", []),
                notes=e.get("notes", ""),
            )
            if parse_config(entry.singularities) != config:
                raise CatalogError("singularities string disagrees with config")
            if entry.kind not in ("classical", "example", "triplet", "fourpairs", "table"):
                raise CatalogError(f"unknown kind {entry.kind!r}")
            if len(members) < 2:
                raise CatalogError("an entry needs at least two members")
            if len(entry.expected_disc_orders) != len(members):
                raise CatalogError("expected disc_orders misaligned with members")
            if len(entry.expected_indices) != len(members):
                raise CatalogError("expected indices misaligned with members")
            _validate_configuration(entry)
            for c in e.get("curves", []):
                d = c.get("field_d", entry.field_d)
                factors = [_parse_form(f, d) for f in c["factors"]]
                degs = sorted(f.degree for f in factors)
                if sum(degs) != 6:
                    raise CatalogError("curve factor degrees do not sum to 6")
                pts = []
                for p in c["points"]:
                    coords = [_parse_field_elem(x, d) for x in p["coords"]]
                    pts.append((ProjPoint(coords), (p["type"][0], int(p["type"][1]))))
                types = sorted(t for _, t in pts)
                if types != sorted(config):
                    raise CatalogError("curve point types disagree with config")
                specials = []
                for s in c.get("specials", []):
                    specials.append({
                        "degree": int(s["degree"]),
                        "form": _parse_form(s["form"], d) if s.get("form") else None,
                        "against": s.get("against", "sextic"),
                        "expect": [(int(i), int(v)) for i, v in s["expect"]],
                    })
                entry.curves.append(CurveData(c["member"], factors, pts, specials))
            entries.append(entry)
        except CatalogError as err:
            raise CatalogError(f"{where} ({e.get('id', '?')}): {err}") from None
        except (KeyError, TypeError, ValueError) as err:
            raise CatalogError(f"{where} ({e.get('id', '?')}): malformed field: {err!r}") from None
    if not entries:
        raise CatalogError("catalog has no entries")
    return Catalog(entries)


# ---------------------------------------------------------------------------
# certification


def _build_member(entry, member):
    cfg = entry.config
    vectors, alternates, codes = decode_member_glue(cfg, member.glue)
    N = ambient(cfg)
    M = overlattice(N, vectors)
    M.config = cfg
    return M, vectors, alternates, codes


def certify(entry, check_embedding=True):
    """Certification report for one catalog entry (dict, JSON-stable)."""
    t0 = time.perf_counter()
    report = {
        "entry": entry.id,
        "kind": entry.kind,
        "singularities": entry.singularities,
        "members": [],
        "comparisons": [],
        "curves": [],
        "class_checks": [],
        "reachability": [],
        "problems": [],
        "flags": [],
    }
    problems = report["problems"]
    built = {}
    for mi, member in enumerate(entry.members):
        rec = {"id": member.id}
        try:
            M, vectors, alternates, codes = _build_member(entry, member)
        except (CatalogError, ValueError) as e:
            rec["error"] = str(e)
            problems.append(f"{member.id}: construction failed: {e}")
            report["members"].append(rec)
            continue
        built[member.id] = M
        D = discriminant_form(M)
        rec["index"] = M.index
        rec["disc_order"] = D.order
        rec["invariant_factors"] = list(D.factors)
        if alternates:
            rec["alternate_generators"] = list(alternates)
            report["flags"].append(
                f"{member.id}: decoded with alternate D-generator on components {list(alternates)}")
        # roundtrip the digit codes
        for code, vec in zip(codes, vectors[len(vectors) - len(codes):]):
            back = encode_glue(vec, entry.config, alternates=alternates)
            if back != code:
                problems.append(f"{member.id}: code {code} re-encodes to {back}")
        if entry.expected_disc_orders[mi] != D.order:
            problems.append(
                f"{member.id}: disc order {D.order} != expected {entry.expected_disc_orders[mi]}")
        if entry.expected_indices[mi] != M.index:
            problems.append(
                f"{member.id}: index {M.index} != expected {entry.expected_indices[mi]}")
        r1 = urabe_condition_i(M)
        r2 = urabe_condition_ii(M)
        rec["urabe_i"] = r1.as_dict()
        rec["urabe_ii"] = r2.as_dict()
        if r1.verdict != "holds":
            problems.append(f"{member.id}: first overlattice condition fails")
        if r2.verdict != "holds":
            problems.append(f"{member.id}: second overlattice condition fails")
        if check_embedding:
            emb = embedding_exists(M)
            rec["embedding"] = emb.as_dict()
            if emb.verdict == "fails":
                problems.append(f"{member.id}: no primitive embedding into the K3 lattice")
        report["members"].append(rec)
    # pairwise discriminant comparison
    ids = [m.id for m in entry.members]
    all_dist = True
    for i in range(len(ids)):
        for j in range(i + 1, len(ids)):
            if ids[i] in built and ids[j] in built:
                iso = groups_isomorphic(discriminant_form(built[ids[i]]),
                                        discriminant_form(built[ids[j]]))
                report["comparisons"].append(
                    {"pair": [ids[i], ids[j]], "groups_isomorphic": iso})
                if iso:
                    all_dist = False
                    problems.append(
                        f"{ids[i]} and {ids[j]} have isomorphic discriminant groups")
            else:
                all_dist = False
    report["all_distinguished"] = all_dist and len(built) == len(ids)
    # curve verification
    for cd in entry.curves:
        crec = {"member": cd.member}
        curve = CurveWithFactors([(f, 1) for f in cd.factors])
        conf = verify_configuration(curve, cd.points)
        crec["configuration"] = conf.as_dict()
        if conf.verdict != "holds":
            problems.append(f"curve {cd.member}: configuration check fails")
        else:
            crec["total_milnor"] = conf.data["total_milnor"]
            if conf.data["total_milnor"] != entry.milnor_class:
                problems.append(
                    f"curve {cd.member}: total Milnor {conf.data['total_milnor']} "
                    f"!= {entry.milnor_class}")
        # configuration table cross-check: factor degrees
        if entry.configuration != "irreducible":
            want = sorted(r["degree"] for r in entry.configuration)
            got = sorted(f.degree for f in cd.factors)
            if want != got:
                problems.append(
                    f"curve {cd.member}: factor degrees {got} != configuration {want}")
        svals = []
        for spec in cd.specials:
            aux = spec["form"]
            if aux is None:
                continue
            target = (curve.product if spec["against"] == "sextic"
                      else cd.factors[spec["against"]])
            if shared_component(target, aux):
                problems.append(f"curve {cd.member}: special curve shares a component")
                continue
            got = []
            for (pi, want) in spec["expect"]:
                val = intersection_at(target, aux, cd.points[pi][0])
                got.append([pi, want, val if val != float("inf") else "infinite"])
                if val != want:
                    problems.append(
                        f"curve {cd.member}: special intersection at point {pi} "
                        f"is {val}, expected {want}")
            svals.append({"degree": spec["degree"], "against": spec["against"],
                          "values": got})
        crec["specials"] = svals
        report["curves"].append(crec)
    # divisor-class checks
    for cc in entry.class_checks:
        M = built.get(cc["member"])
        ok = False
        if M is not None:
            coeffs = [Fraction(*p) for p in cc["coeffs"]]
            ok = class_check(M, coeffs, cc["norm"], cc["lam_pairing"])
        expected = cc.get("expect", True)
        report["class_checks"].append(
            {"member": cc["member"], "norm": cc["norm"],
             "lam_pairing": cc["lam_pairing"], "holds": ok})
        if ok != expected:
            problems.append(f"class check on {cc['member']} returned {ok}")
    # discriminant-projection reachability checks
    for rc in entry.reachability:
        M = built.get(rc["member"])
        got = None
        if M is not None:
            digits = glue_subgroup_digits(entry.config, M.glue)
            got = any(d[rc["component"]] == rc["target"] % _component_order(entry.config, rc["component"])
                      for d in digits)
        report["reachability"].append(
            {"member": rc["member"], "component": rc["component"],
             "target": rc["target"], "reachable": got})
        if got != rc["expect"]:
            problems.append(
                f"reachability on {rc['member']} component {rc['component']} "
                f"target {rc['target']}: got {got}, expected {rc['expect']}")
    report["verdict"] = "failed" if problems else "certified"
    if not problems and any("error" in m for m in report["members"]):
        report["verdict"] = "partially-certified"
    report["seconds"] = round(time.perf_counter() - t0, 3)
    return report


def _component_order(cfg, component):
    if component == 0:
        return 2
    letter, n = cfg[component - 1]
    return component_disc_order(letter, n)


def reproduce(catalog, scope="all", check_embedding=True):
    """Certify every entry in scope; aggregate report."""
    kinds = {
        "examples": ("example",),
        "tables": ("table",),
        "triplets": ("triplet",),
        "all": ("classical", "example", "triplet", "fourpairs", "table"),
    }
    if scope not in kinds:
        raise CatalogError(f"unknown scope {scope!r}")
    entries = catalog.by_kind(*kinds[scope])
    reports = [certify(e, check_embedding=check_embedding) for e in entries]
    agg = {
        "scope": scope,
        "entries": len(reports),
        "certified": sum(r["verdict"] == "certified" for r in reports),
        "partially_certified": sum(r["verdict"] == "partially-certified" for r in reports),
        "failed": sum(r["verdict"] == "failed" for r in reports),
        "necessary_only_members": sum(
            1 for r in reports for m in r["members"]
            if m.get("embedding", {}).get("verdict") == "passed-necessary-only"),
        "total_members": sum(len(r["members"]) for r in reports),
        "reports": reports,
    }
    return agg


def four_pairs_check(catalog):
    """Certify the four same-combination pairs (3A5+2A1) and summarize."""
    entries = catalog.by_kind("fourpairs")
    reports = [certify(e) for e in entries]
    return {
        "pairs": len(reports),
        "distinguished": sum(r["all_distinguished"] for r in reports),
        "all_urabe_hold": all(
            m.get("urabe_i", {}).get("verdict") == "holds"
            and m.get("urabe_ii", {}).get("verdict") == "holds"
            for r in reports for m in r["members"]),
        "reports": reports,
    }
