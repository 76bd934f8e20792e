#!/usr/bin/env python3
"""Regenerate src/zcert/data/catalog.json.

Builds every catalog entry from first principles, computes the frozen
expected invariants (overlattice index and discriminant-group order) with the
lattice kernel, validates decoding/evenness/distinguishability for every
entry, and writes the JSON artifact.  Curve data (exact coefficients and
singular points) is embedded for the entries that carry explicit equations.
"""

import json
import os
import sys
from fractions import Fraction as F

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from zcert.exact import QuadExtElem as Q
from zcert.lattices import ambient, discriminant_form, overlattice, parse_config
from zcert.catalog import decode_member_glue
from zcert.curves import family_member, family_node_points

OUT = os.path.join(os.path.dirname(__file__), "..", "src", "zcert", "data", "catalog.json")


# --- serialization helpers -------------------------------------------------

def fr(x):
    x = F(x)
    return [x.numerator, x.denominator]


def fe(x):
    """Field element -> [[an,ad],[bn,bd]]."""
    if isinstance(x, Q):
        return [fr(x.a), fr(x.b)]
    return [fr(x), [0, 1]]


def form_json(coeffs):
    out = {}
    for k, v in coeffs.items():
        out[",".join(str(e) for e in k)] = fe(v)
    return out


def vec_json(vec):
    return [fr(x) for x in vec]


def point_json(coords, typ):
    return {"coords": [fe(c) for c in coords], "type": [typ[0], typ[1]]}


# --- glue vector builders ---------------------------------------------------

def zero_vec(cfg):
    return [F(0)] * (1 + sum(n for _, n in cfg))


def add_chain(vec, start, coeffs, den):
    for i, c in enumerate(coeffs):
        vec[start + i] += F(c, den)
    return vec


def weighted(start, n, den, vec):
    return add_chain(vec, start, range(1, n + 1), den)


# --- entry assembly ---------------------------------------------------------

ENTRIES = []


def milnor_of(cfg):
    return sum(n for _, n in cfg)


def make_entry(eid, kind, sing, members, configuration="irreducible",
               field_d=None, curves=(), class_checks=(), reachability=(),
               special_columns=(), notes=""):
    cfg = parse_config(sing)
    N = ambient(cfg)
    disc_orders = []
    indices = []
    for mid, specs in members:
        vectors, alternates, codes = decode_member_glue(cfg, specs)
        M = overlattice(N, vectors)
        D = discriminant_form(M)
        disc_orders.append(D.order)
        indices.append(M.index)
        if alternates:
            print(f"  note: {eid}/{mid} used alternate D-generators {alternates}")
    # within-entry distinguishability (hard requirement for the catalog)
    if len(set(disc_orders)) != len(disc_orders):
        # orders equal does not yet mean isomorphic, but every construction
        # here distinguishes by order; flag loudly if not
        print(f"  WARNING {eid}: disc orders not pairwise distinct: {disc_orders}")
    entry = {
        "id": eid,
        "kind": kind,
        "milnor_class": milnor_of(cfg),
        "singularities": sing,
        "config": [[l, n] for l, n in cfg],
        "configuration": configuration,
        "members": [{"id": mid, "glue": list(specs)} for mid, specs in members],
        "expected": {"disc_orders": disc_orders, "indices": indices},
    }
    if field_d is not None:
        entry["field_d"] = field_d
    if curves:
        entry["curves"] = list(curves)
    if class_checks:
        entry["class_checks"] = list(class_checks)
    if reachability:
        entry["reachability"] = list(reachability)
    if special_columns:
        entry["special_columns"] = list(special_columns)
    if notes:
        entry["notes"] = notes
    ENTRIES.append(entry)
    print(f"ok {eid}: orders {disc_orders} indices {indices}")
    return entry


def conf_rows(cfg_len, rows):
    out = []
    for degree, parts in rows:
        plist = []
        for ci in range(cfg_len):
            val = parts.get(ci, "")
            plist.append([t for t in val.split(",") if t])
        out.append({"degree": degree, "parts": plist})
    return out


def conf_degrees(degrees):
    return [{"degree": d, "parts": None} for d in degrees]


# ===========================================================================
# classical pair: six cusps
# ===========================================================================

cfg = parse_config("6A2")
u = zero_vec(cfg)
for i in range(6):
    add_chain(u, 1 + 2 * i, (1, 2), 3)
D_class = [F(1)] + [-x for x in u[1:]]
make_entry(
    "classical-6a2", "classical", "6A2",
    members=[("L", []), ("Lp", ["0111111"])],
    configuration="irreducible",
    class_checks=[{"member": "Lp", "coeffs": vec_json(D_class), "norm": -2,
                   "lam_pairing": 2, "expect": True}],
    reachability=[
        {"member": "L", "component": 0, "target": 1, "expect": False},
        {"member": "Lp", "component": 0, "target": 1, "expect": False},
    ],
    special_columns=[{"degree": 2, "values": [[i, 2] for i in range(6)]}],
)

# ===========================================================================
# the five maximal (Milnor 19) pairs
# ===========================================================================

# --- E6+A11+2A1 -------------------------------------------------------------
cfg = parse_config("E6+A11+2A1")
u = zero_vec(cfg)
weighted(7, 11, 2, u)
u[18] += F(1, 2)
u[19] += F(1, 2)
v = zero_vec(cfg)
add_chain(v, 1, (3, 2, 4, 6, 5, 4), 3)
weighted(7, 11, 6, v)
v[18] += F(1, 2)
v[19] += F(1, 2)
Dv = [F(1)] + [-x for x in v[1:]]
Dv[17] += 1  # the effective representative carries one extra e17
quartic1 = {(3, 0, 1): 3, (2, 2, 0): 3, (1, 3, 0): -3, (0, 4, 0): 2}
conic1 = {(1, 0, 1): 3, (0, 0, 2): -1, (0, 1, 1): 3, (0, 2, 0): 3}
s3 = lambda a, b=0: Q(F(*a) if isinstance(a, tuple) else F(a),
                      F(*b) if isinstance(b, tuple) else F(b), -3)
conic2 = {(0, 1, 1): 1, (1, 1, 0): 3, (2, 0, 0): 8, (1, 0, 1): 3}
quartic2 = {(0, 3, 1): 3, (1, 3, 0): 1, (0, 2, 2): -2, (1, 2, 1): 3,
            (0, 1, 3): 3, (1, 1, 2): 3, (1, 0, 3): 1}
conicQ = {(1, 1, 0): 1, (1, 0, 1): 1, (0, 1, 1): 1}
make_entry(
    "m19-e6-a11-2a1", "example", "E6+A11+2A1",
    members=[("M1", [{"vector": vec_json(u)}]), ("M2", [{"vector": vec_json(v)}])],
    configuration=conf_rows(4, [
        (4, {0: "I", 1: "I", 2: "I", 3: "I"}),
        (2, {1: "II", 2: "II", 3: "II"}),
    ]),
    field_d=-3,
    curves=[
        {"member": "M1",
         "factors": [form_json(quartic1), form_json(conic1)],
         "points": [
             point_json([1, 0, 0], ("A", 11)),
             point_json([0, 0, 1], ("E", 6)),
             point_json([1, s3((3, 2), (1, 1)), s3((33, 4), (15, 4))], ("A", 1)),
             point_json([1, s3((3, 2), (-1, 1)), s3((33, 4), (-15, 4))], ("A", 1)),
         ],
         "specials": []},
        {"member": "M2",
         "factors": [form_json(conic2), form_json(quartic2)],
         "points": [
             point_json([1, 0, 0], ("E", 6)),
             point_json([1, -2, -2], ("A", 11)),
             point_json([0, 1, 0], ("A", 1)),
             point_json([0, 0, 1], ("A", 1)),
         ],
         "specials": [
             {"degree": 2, "form": form_json(conicQ), "against": "sextic",
              "expect": [[0, 4], [1, 4], [2, 2], [3, 2]]},
             {"degree": 2, "form": form_json(conicQ), "against": 1,
              "expect": [[0, 4], [1, 2]]},
         ]},
    ],
    class_checks=[{"member": "M2", "coeffs": vec_json(Dv), "norm": -2,
                   "lam_pairing": 2, "expect": True}],
    reachability=[
        {"member": "M1", "component": 0, "target": 1, "expect": False},
        {"member": "M1", "component": 2, "target": 2, "expect": False},
        {"member": "M2", "component": 2, "target": 2, "expect": True},
    ],
)

# --- A11+A5+3A1 -------------------------------------------------------------
cfg = parse_config("A11+A5+3A1")
u1 = zero_vec(cfg); weighted(1, 11, 2, u1); u1[18] += F(1, 2); u1[19] += F(1, 2)
u2 = zero_vec(cfg); u2[0] += F(1, 2); weighted(12, 5, 2, u2); u2[18] += F(1, 2); u2[19] += F(1, 2)
vv = zero_vec(cfg); weighted(1, 11, 6, vv); weighted(12, 5, 3, vv); vv[18] += F(1, 2); vv[19] += F(1, 2)
L1 = {(1, 0, 0): 2, (0, 1, 0): -5, (0, 0, 1): 3}
Co = {(1, 0, 1): 16, (0, 2, 0): -16, (0, 1, 1): -4, (0, 0, 2): 3}
Cu = {(2, 0, 1): 4, (1, 2, 0): -4, (1, 1, 1): -2, (0, 3, 0): 1, (0, 2, 1): 1}
L2 = {(0, 0, 1): 1, (1, 0, 0): -1}
Cu2 = {(2, 0, 1): 1, (1, 2, 0): -1, (0, 2, 1): 1}
Co2 = {(1, 0, 1): 1, (0, 2, 0): -1, (0, 0, 2): 1}
make_entry(
    "m19-a11-a5-3a1", "example", "A11+A5+3A1",
    members=[("M1", [{"vector": vec_json(u1)}, {"vector": vec_json(u2)}]),
             ("M2", [{"vector": vec_json(u1)}, {"vector": vec_json(u2)},
                     {"vector": vec_json(vv)}])],
    configuration=conf_rows(5, [
        (3, {0: "I", 1: "I", 2: "I,II"}),
        (2, {0: "II", 3: "I", 4: "I"}),
        (1, {1: "II", 3: "II", 4: "II"}),
    ]),
    field_d=-3,
    curves=[
        {"member": "M1",
         "factors": [form_json(L1), form_json(Co), form_json(Cu)],
         "points": [
             point_json([1, 0, 0], ("A", 11)),
             point_json([1, 1, 1], ("A", 5)),
             point_json([0, 0, 1], ("A", 1)),
             point_json([1, s3((34, 43), (-4, 43)), s3((28, 43), (-20, 129))], ("A", 1)),
             point_json([1, s3((34, 43), (4, 43)), s3((28, 43), (20, 129))], ("A", 1)),
         ],
         "specials": []},
        {"member": "M2", "field_d": 2,
         "factors": [form_json(L2), form_json(Cu2), form_json(Co2)],
         "points": [
             point_json([1, 0, 0], ("A", 11)),
             point_json([0, 1, 0], ("A", 5)),
             point_json([0, 0, 1], ("A", 1)),
             point_json([1, Q(0, 1, 2), 1], ("A", 1)),
             point_json([1, Q(0, -1, 2), 1], ("A", 1)),
         ],
         "specials": []},
    ],
    notes="one node coordinate corrected to lie on the curve "
          "(verified by elimination)",
)

# --- A17+2A1 ----------------------------------------------------------------
cfg = parse_config("A17+2A1")
u = zero_vec(cfg); u[0] += F(1, 2); weighted(1, 17, 2, u)
v = zero_vec(cfg); v[0] += F(1, 2); weighted(1, 17, 6, v)
cA = {(2, 0, 1): 1, (1, 2, 0): -1, (0, 3, 0): 1, (1, 1, 1): 1, (0, 2, 1): 7}
cB = {(2, 0, 1): s3(29, 9), (1, 2, 0): s3(-29, -9), (1, 1, 1): s3(-484, 18),
      (0, 3, 0): 542, (1, 0, 2): s3(3078, -54), (0, 2, 1): s3(-3901, 135),
      (0, 0, 3): s3(13851, -243), (0, 1, 2): s3(1539, -27)}
f1 = {(2, 0, 1): 1, (0, 3, 0): 1, (1, 1, 1): 1, (0, 2, 1): 1, (0, 0, 3): F(-1, 16)}
f2 = {(2, 0, 1): 1, (0, 3, 0): 1, (1, 1, 1): 1, (0, 2, 1): 1}
tangent = {(0, 0, 1): 1}
make_entry(
    "m19-a17-2a1", "example", "A17+2A1",
    members=[("M1", [{"vector": vec_json(u)}]), ("M2", [{"vector": vec_json(v)}])],
    configuration=conf_rows(3, [
        (3, {0: "I", 1: "I,II"}),
        (3, {0: "II", 2: "I,II"}),
    ]),
    field_d=-3,
    curves=[
        {"member": "M1",
         "factors": [form_json(cA), form_json(cB)],
         "points": [
             point_json([1, 0, 0], ("A", 17)),
             point_json([0, 0, 1], ("A", 1)),
             point_json([1, s3((1, 13), (3, 65)), s3((1, 390), (7, 1170))], ("A", 1)),
         ],
         "specials": [{"degree": 1, "form": form_json(tangent), "against": "sextic",
                       "expect": [[0, 4]]}]},
        {"member": "M2",
         "factors": [form_json(f1), form_json(f2)],
         "points": [
             point_json([1, 0, 0], ("A", 17)),
             point_json([1, -2, 4], ("A", 1)),
             point_json([0, 0, 1], ("A", 1)),
         ],
         "specials": [{"degree": 1, "form": form_json(tangent), "against": "sextic",
                       "expect": [[0, 6]]}]},
    ],
)

# --- A15+A3+A1 --------------------------------------------------------------
cfg = parse_config("A15+A3+A1")
u = zero_vec(cfg); u[0] += F(1, 2); weighted(1, 15, 4, u)
add_chain(u, 16, (1, 2, 3), 2); u[19] += F(1, 2)
v = zero_vec(cfg); v[0] += F(1, 2); weighted(1, 15, 8, v); add_chain(v, 16, (1, 2, 3), 4)
s2e = lambda k: Q(0, k, -2)
co4 = {(1, 0, 1): 2, (0, 2, 0): 2, (0, 0, 2): -2, (0, 1, 1): s2e(1)}
qu4 = {(3, 0, 1): 4, (2, 2, 0): 4, (2, 0, 2): 4, (2, 1, 1): s2e(-2), (1, 3, 0): s2e(-4),
       (1, 2, 1): 34, (1, 1, 2): s2e(12), (0, 4, 0): 22, (0, 3, 1): s2e(15), (0, 2, 2): -18}
co42 = {(1, 0, 1): 1, (0, 2, 0): 1, (0, 0, 2): F(-1, 2)}
qu42 = {(3, 0, 1): 1, (2, 2, 0): 1, (1, 2, 1): 2, (0, 2, 2): 1, (2, 0, 2): F(3, 2)}
make_entry(
    "m19-a15-a3-a1", "example", "A15+A3+A1",
    members=[("M1", [{"vector": vec_json(u)}]),
             ("M2", [{"vector": vec_json(v)}])],
    configuration=conf_rows(3, [
        (4, {0: "I", 1: "I,II", 2: "I,II"}),
        (2, {0: "II"}),
    ]),
    field_d=-2,
    curves=[
        {"member": "M1",
         "factors": [form_json(co4), form_json(qu4)],
         "points": [
             point_json([1, 0, 0], ("A", 15)),
             point_json([0, 0, 1], ("A", 3)),
             point_json([1, Q(0, F(-1, 3), -2), F(2, 9)], ("A", 1)),
         ],
         "specials": [{"degree": 1, "form": form_json({(0, 1, 0): 1}),
                       "against": "sextic", "expect": [[0, 2], [1, 2]]}]},
        {"member": "M2",
         "factors": [form_json(co42), form_json(qu42)],
         "points": [
             point_json([1, 0, 0], ("A", 15)),
             point_json([0, 1, 0], ("A", 3)),
             point_json([0, 0, 1], ("A", 1)),
         ],
         "specials": [{"degree": 1, "form": form_json({(0, 0, 1): 1}),
                       "against": "sextic", "expect": [[0, 4], [1, 2]]}]},
    ],
)

# --- 2A9+A1 -----------------------------------------------------------------
cfg = parse_config("2A9+A1")
u = zero_vec(cfg); u[0] += F(1, 2); weighted(1, 9, 2, u)
v = zero_vec(cfg); v[0] += F(1, 2); weighted(1, 9, 5, v); weighted(10, 9, 10, v)
q5e = lambda a, b=0: Q(F(*a) if isinstance(a, tuple) else F(a),
                       F(*b) if isinstance(b, tuple) else F(b), 5)
quint = {(3, 0, 2): 1, (2, 2, 1): 2, (1, 4, 0): 1, (0, 5, 0): q5e((25, 2), (-5, 2)),
         (1, 3, 1): q5e(27, -5), (2, 0, 3): q5e(-22, 6), (2, 1, 2): q5e((29, 2), (-5, 2)),
         (1, 2, 2): q5e(-21, 6), (1, 1, 3): q5e((-19, 2), (7, 2)), (1, 0, 4): q5e(-9, 4)}
quint2 = {(2, 3, 0): 1, (1, 2, 2): 2, (0, 1, 4): 1, (3, 2, 0): F(3, 4), (2, 2, 1): 1,
          (4, 1, 0): F(9, 64), (3, 1, 1): F(3, 8), (2, 1, 2): 1, (1, 1, 3): 1,
          (5, 0, 0): F(125, 27648)}
make_entry(
    "m19-2a9-a1", "example", "2A9+A1",
    members=[("M1", [{"vector": vec_json(u)}]),
             ("M2", [{"vector": vec_json(v)}])],
    configuration=conf_rows(3, [
        (5, {0: "I,II", 1: "I", 2: "I,II"}),
        (1, {1: "II"}),
    ]),
    field_d=5,
    curves=[
        {"member": "M1",
         "factors": [form_json({(1, 0, 0): 1}), form_json(quint)],
         "points": [
             point_json([1, 0, 0], ("A", 9)),
             point_json([0, 0, 1], ("A", 9)),
             point_json([1, q5e(-39, (-87, 5)), q5e(648, (1449, 5))], ("A", 1)),
         ],
         "specials": [{"degree": 1, "form": form_json({(0, 1, 0): 1}),
                       "against": "sextic", "expect": [[0, 2]]}]},
        {"member": "M2",
         "factors": [form_json({(0, 1, 0): 1}), form_json(quint2)],
         "points": [
             point_json([0, 1, 0], ("A", 9)),
             point_json([0, 0, 1], ("A", 9)),
             point_json([1, F(-5, 48), F(-1, 4)], ("A", 1)),
         ],
         "specials": [{"degree": 1, "form": form_json({(1, 0, 0): 1}),
                       "against": "sextic", "expect": [[0, 4]]}]},
    ],
    notes="the two components meet at the second A9 with contact order five",
)

print("examples done", file=sys.stderr)

# ===========================================================================
# the four triplets
# ===========================================================================

# --- three conics: 3A5+3A1 --------------------------------------------------
# A5 points at the coordinate points; A1 nodes from the family formulas.
z3 = Q(F(-1, 2), F(1, 2), -3)


def family_curve_json(kind, lam, member, specials):
    cur = family_member(kind, lam)
    pts = [point_json([1, 0, 0], ("A", 5)), point_json([0, 1, 0], ("A", 5)),
           point_json([0, 0, 1], ("A", 5))]
    for t in family_node_points(kind, Q.coerce(lam)):
        pts.append({"coords": [fe(c) for c in t], "type": ["A", 1]})
    factors = [form_json(f.c) for f, _ in cur.factors]
    return {"member": member, "field_d": -3, "factors": factors,
            "points": pts, "specials": specials}


q0_form = {(0, 1, 1): 1, (1, 1, 0): -1, (1, 0, 1): -1}
# nodal cubic for the third member (contact parameters r=1, s=-1)
n3_form = {(1, 2, 0): 1, (0, 2, 1): -1, (1, 0, 2): 1, (0, 1, 2): -1, (1, 1, 1): -1}

cfg = parse_config("3A5+3A1")
Dcls = zero_vec(cfg)
Dcls[0] = F(1)
add_chain(Dcls, 1, (-1, -2, -3, -4, -2), 3)
add_chain(Dcls, 6, (-1, -2, -3, -4, -2), 3)
add_chain(Dcls, 11, (-2, -4, -3, -2, -1), 3)
Ccls = zero_vec(cfg)
Ccls[0] = F(3, 2)
add_chain(Ccls, 1, (-1, -2, -3, -2, -1), 2)
add_chain(Ccls, 6, (-1, -2, -3, -2, -1), 2)
add_chain(Ccls, 11, (-1, -2, -3, -4, -3), 2)

make_entry(
    "tri-3a5-3a1", "triplet", "3A5+3A1",
    members=[("A1", ["0033011", "0303101"]),
             ("A2", ["0112011", "0033101"]),
             ("A3", ["0033011", "0303101", "1333000"])],
    configuration=conf_rows(6, [
        (2, {1: "I", 2: "I", 3: "I", 4: "I"}),
        (2, {0: "I", 2: "II", 3: "II", 5: "I"}),
        (2, {0: "II", 1: "II", 4: "II", 5: "II"}),
    ]),
    field_d=-3,
    curves=[
        family_curve_json("Y", 5, "A1", []),
        family_curve_json("X", 5, "A2",
                          [{"degree": 2, "form": form_json(q0_form),
                            "against": "sextic",
                            "expect": [[0, 4], [1, 4], [2, 4]]}]),
        family_curve_json("Y", 3, "A3",
                          [{"degree": 3, "form": form_json(n3_form),
                            "against": "sextic",
                            "expect": [[0, 6], [1, 6], [2, 6]]}]),
    ],
    class_checks=[
        {"member": "A2", "coeffs": vec_json(Dcls), "norm": -2,
         "lam_pairing": 2, "expect": True},
        {"member": "A3", "coeffs": vec_json(Ccls), "norm": -2,
         "lam_pairing": 3, "expect": True},
    ],
)

# --- 2A7+A3 ------------------------------------------------------------------
r2 = Q(0, 1, 2)
a = Q(1); bb = Q(2)
c22 = 2*r2*a*bb - 2*a*a*bb - bb + 2*r2*a - Q(3)
c30 = a*a*a*bb - 2*r2*a*a + 2*a
c21 = 3*r2*a*a*bb - 3*a*a*a*bb - 2*a*bb + 4*r2*a*a - 8*a + 2*r2
c12 = 3*a*a*a*bb - 6*r2*a*a*bb + 8*a*bb - 2*r2*a*a - 2*r2*bb + 6*a - 2*r2
c03 = 3*r2*a*a*bb - a*a*a*bb - 6*a*bb + 2*r2*bb
c13 = a*a*bb - 2*r2*a*bb + 2*bb
c31 = a*a*bb - 2*r2*a + 2
lead2 = Q(2) * (r2*a/Q(2) - Q(1)) * (r2*a/Q(2) - Q(1))
conicT1 = {(2, 0, 0): 1, (1, 1, 0): a, (1, 0, 1): r2 - a, (0, 1, 1): 1}
quartT1 = {(2, 0, 2): lead2, (2, 1, 1): Q(-2)*lead2, (2, 2, 0): lead2,
           (0, 2, 2): c22, (1, 3, 0): c30, (1, 2, 1): c21, (1, 1, 2): c12,
           (1, 0, 3): c03, (0, 3, 1): c31, (0, 1, 3): c13}
a2 = 1; b2 = 2
conicT2 = {(2, 0, 0): 1, (1, 1, 0): a2, (1, 0, 1): -a2, (0, 1, 1): 1}
quartT2 = {(2, 0, 2): a2*a2, (2, 1, 1): -2*a2*a2, (2, 2, 0): a2*a2,
           (0, 2, 2): 1 - b2 - 2*a2*a2*b2, (1, 3, 0): a2**3*b2,
           (1, 2, 1): a2*(2 - 2*b2 - 3*a2*a2*b2), (1, 1, 2): -a2*(2 - 2*b2 - 3*a2*a2*b2),
           (1, 0, 3): -a2**3*b2, (0, 3, 1): a2*a2*b2, (0, 1, 3): a2*a2*b2}
auxT2 = {(1, 1, 0): a2, (1, 0, 1): -a2, (0, 1, 1): 1}
a3c = 1; b3c = 1
conicT3 = {(1, 1, 0): 1, (0, 0, 2): 1}
quartT3 = {(3, 1, 0): 1, (2, 0, 2): 1, (2, 1, 1): b3c, (2, 2, 0): -2,
           (1, 0, 3): b3c, (1, 1, 2): F(b3c*b3c, 4) - 2, (1, 2, 1): -b3c,
           (1, 3, 0): 1, (0, 0, 4): a3c, (0, 1, 3): -b3c, (0, 2, 2): 1}
make_entry(
    "tri-2a7-a3", "triplet", "2A7+A3",
    members=[("M1", ["0440"]), ("M2", ["0222"]), ("M3", ["1111"])],
    configuration=conf_rows(3, [
        (4, {0: "I", 1: "I", 2: "I,II"}),
        (2, {0: "II", 1: "II"}),
    ]),
    curves=[
        {"member": "M1", "field_d": 2,
         "factors": [form_json(conicT1), form_json(quartT1)],
         "points": [point_json([0, 1, 0], ("A", 7)), point_json([0, 0, 1], ("A", 7)),
                    point_json([1, 0, 0], ("A", 3))],
         "specials": []},
        {"member": "M2",
         "factors": [form_json(conicT2), form_json(quartT2)],
         "points": [point_json([0, 1, 0], ("A", 7)), point_json([0, 0, 1], ("A", 7)),
                    point_json([1, 0, 0], ("A", 3))],
         "specials": [{"degree": 2, "form": form_json(auxT2), "against": "sextic",
                       "expect": [[0, 4], [1, 4], [2, 4]]}]},
        {"member": "M3",
         "factors": [form_json(conicT3), form_json(quartT3)],
         "points": [point_json([1, 0, 0], ("A", 7)), point_json([0, 1, 0], ("A", 7)),
                    point_json([1, 1, 0], ("A", 3))],
         "specials": [{"degree": 1, "form": form_json({(0, 0, 1): 1}),
                       "against": "sextic",
                       "expect": [[0, 2], [1, 2], [2, 2]]}]},
    ],
    notes="equation parameters frozen at generic values; the third member's "
          "collinear singular points sit on the line x2 = 0",
)

# --- 2A7+A3+A1 ----------------------------------------------------------------
i1 = Q(0, 1, -1)
lamP = F(1)
quartP1 = {(2, 2, 0): i1, (2, 1, 1): 2, (2, 0, 2): -i1,
           (1, 0, 3): -(Q(2*lamP) - 2*i1), (1, 1, 2): -(Q(2*lamP + 2) - 2*i1),
           (1, 2, 1): Q(-(2*lamP + 2)), (1, 3, 0): Q(-2*lamP),
           (0, 1, 3): Q(2*lamP) - 2*i1, (0, 2, 2): Q(2*lamP + 2) - i1,
           (0, 3, 1): Q(2*lamP)}
quartP2 = {(2, 0, 2): 1, (2, 1, 1): 2, (2, 2, 0): 1, (1, 3, 0): -2*lamP,
           (1, 2, 1): -(2*lamP + 2), (1, 1, 2): -(2*lamP + 2), (1, 0, 3): -2*lamP,
           (0, 3, 1): 2*lamP, (0, 2, 2): 2*lamP + 1, (0, 1, 3): 2*lamP}
quartP3 = {(0, 3, 1): 1, (0, 2, 2): -2, (0, 1, 3): 1, (4, 0, 0): lamP}
lineA = {(0, 1, 0): 1, (1, 0, 0): -1}
lineB = {(0, 0, 1): 1, (1, 0, 0): -1}
make_entry(
    "tri-2a7-a3-a1", "triplet", "2A7+A3+A1",
    members=[("M1", ["04400", "10401"]), ("M2", ["02220", "10401"]),
             ("M3", ["01311", "10401"])],
    configuration=conf_rows(4, [
        (4, {0: "I", 1: "I", 2: "I,II"}),
        (1, {0: "II", 3: "I"}),
        (1, {1: "II", 3: "II"}),
    ]),
    curves=[
        {"member": "M1", "field_d": -1,
         "factors": [form_json(lineA), form_json(lineB), form_json(quartP1)],
         "points": [point_json([0, 1, 0], ("A", 7)), point_json([0, 0, 1], ("A", 7)),
                    point_json([1, 0, 0], ("A", 3)), point_json([1, 1, 1], ("A", 1))],
         "specials": []},
        {"member": "M2",
         "factors": [form_json(lineA), form_json(lineB), form_json(quartP2)],
         "points": [point_json([0, 1, 0], ("A", 7)), point_json([0, 0, 1], ("A", 7)),
                    point_json([1, 0, 0], ("A", 3)), point_json([1, 1, 1], ("A", 1))],
         "specials": [{"degree": 2, "form": form_json(q0_form), "against": "sextic",
                       "expect": [[0, 4], [1, 4], [2, 4]]}]},
        {"member": "M3",
         "factors": [form_json({(0, 1, 0): 1}), form_json({(0, 0, 1): 1}),
                     form_json(quartP3)],
         "points": [point_json([0, 1, 0], ("A", 7)), point_json([0, 0, 1], ("A", 7)),
                    point_json([0, 1, 1], ("A", 3)), point_json([1, 0, 0], ("A", 1))],
         "specials": [{"degree": 1, "form": form_json({(1, 0, 0): 1}),
                       "against": "sextic",
                       "expect": [[0, 2], [1, 2], [2, 2]]}]},
    ],
    notes="equation parameter frozen at a generic value",
)

# --- A15+A3 -------------------------------------------------------------------
lamD = F(1)
quartD1 = {(0, 4, 0): 3*lamD + 2, (3, 0, 1): -4, (2, 0, 2): lamD, (2, 1, 1): -4*lamD,
           (2, 2, 0): -4, (1, 1, 2): -2*lamD, (1, 2, 1): 4*lamD + 4,
           (1, 3, 0): -4*lamD, (0, 2, 2): lamD}
conicD1 = {(1, 0, 1): 2, (0, 2, 0): 2, (0, 0, 2): 1}
conicD2 = {(1, 0, 1): 1, (0, 2, 0): -1, (0, 0, 2): lamD}
quartD2 = {(3, 0, 1): 1, (2, 2, 0): -1, (0, 4, 0): -5*lamD, (1, 2, 1): 10*lamD,
           (2, 0, 2): -4*lamD}
conicD3 = {(1, 0, 1): 1, (0, 2, 0): 1, (0, 1, 1): -1, (0, 0, 2): 1}
quartD3 = {(3, 0, 1): 1, (2, 2, 0): 1, (0, 0, 4): lamD, (2, 1, 1): -1, (2, 0, 2): 1}
make_entry(
    "tri-a15-a3", "triplet", "A15+A3",
    members=[("M1", ["080"]), ("M2", ["042"]), ("M3", ["121"])],
    configuration=conf_rows(2, [
        (4, {0: "I", 1: "I,II"}),
        (2, {0: "II"}),
    ]),
    curves=[
        {"member": "M1",
         "factors": [form_json(conicD1), form_json(quartD1)],
         "points": [point_json([1, 0, 0], ("A", 15)), point_json([0, 0, 1], ("A", 3))],
         "specials": []},
        {"member": "M2",
         "factors": [form_json(conicD2), form_json(quartD2)],
         "points": [point_json([1, 0, 0], ("A", 15)), point_json([0, 0, 1], ("A", 3))],
         "specials": [{"degree": 2, "form": form_json({(1, 0, 1): 1, (0, 2, 0): -1}),
                       "against": "sextic", "expect": [[0, 8], [1, 4]]}]},
        {"member": "M3",
         "factors": [form_json(conicD3), form_json(quartD3)],
         "points": [point_json([1, 0, 0], ("A", 15)), point_json([0, 1, 0], ("A", 3))],
         "specials": [{"degree": 1, "form": form_json({(0, 0, 1): 1}),
                       "against": "sextic", "expect": [[0, 4], [1, 2]]}]},
    ],
    notes="equation parameters frozen at generic values",
)

# ===========================================================================
# four pairs with the same combination 3A5+2A1
# ===========================================================================

FP = [
    ("fp-quintic-line", [5, 1], [("A1", ["130011"]), ("A2", ["112211"])]),
    ("fp-quartic-conic", [4, 2], [("B1", ["033011"]), ("B2", ["011211"])]),
    ("fp-two-cubics", [3, 3], [("D1", ["133300"]), ("D2", ["111100"])]),
    ("fp-cubic-conic-line", [3, 2, 1],
     [("G1", ["003311", "130011"]), ("G2", ["011211", "100311"])]),
]
for eid, degs, members in FP:
    make_entry(eid, "fourpairs", "3A5+2A1", members=members,
               configuration=conf_degrees(degs))

print("triplets and pairs done", file=sys.stderr)

# ===========================================================================
# table rows: Milnor number 18 / 17 / 16 / <= 15
# ===========================================================================
# Each row: (singularities, configuration, member code sets, special column).
# configuration: "irr" or list of (degree, {componentIndex: labels}).
# member code sets: list over members; each member is one code or a list of
# codes (multi-generator overlattices).
# special column: (degree, [(componentIndex, intersection value), ...]) -- a
# distinguishing low-degree curve's intersection numbers, stored as data.

T18 = [
    ("3E6", "irr", ["-", "0111"], (2, [(0, 4), (1, 4), (2, 4)])),
    ("2E6+A5+A1", "irr", ["-", "01120"], (2, [(0, 4), (1, 4), (2, 4)])),
    ("E6+A11+A1", "irr", ["-", "0140"], (2, [(0, 4), (1, 8)])),
    ("E6+A8+A2+2A1", "irr", ["-", "013100"], (2, [(0, 4), (1, 6), (2, 2)])),
    ("E6+2A5+2A1",
     [(5, {0: "I", 1: "I,II", 2: "I", 3: "I", 4: "I"}),
      (1, {2: "II", 3: "II", 4: "II"})],
     ["100311", "111211"], (2, [(0, 4), (1, 4), (2, 4)])),
    ("E6+2A5+2A1",
     [(4, {0: "I", 1: "I", 2: "I", 3: "I", 4: "I"}),
      (2, {1: "II", 2: "II", 3: "II", 4: "II"})],
     ["003311", "011111"],
     (2, [(0, 4), (1, 2), (2, 2), (3, 2), (4, 2)])),
    ("D7+A11",
     [(4, {0: "II", 1: "II"}), (2, {0: "I", 1: "I"})],
     ["026", "013"], (2, [(0, 6), (1, 6)])),
    ("D7+A7+A3+A1",
     [(4, {0: "II", 1: "I", 2: "I"}),
      (1, {0: "I", 2: "II", 3: "I"}),
      (1, {1: "II", 3: "II"})],
     [["02420", "10401"], ["01210", "10401"]],
     (2, [(0, 6), (1, 4), (2, 2)])),
    ("A17+A1", "irr", ["-", "060"], (2, [(0, 12)])),
    ("A17+A1",
     [(3, {0: "I", 1: "I,II"}), (3, {0: "II"})],
     ["190", "130"], (1, [(0, 6)])),
    ("A14+A2+2A1", "irr", ["-", "05100"], (2, [(0, 10), (1, 2)])),
    ("A11+A5+2A1",
     [(5, {0: "I,II", 1: "I", 2: "I", 3: "I"}),
      (1, {1: "II", 2: "II", 3: "II"})],
     ["10311", "14111"], (2, [(0, 8), (1, 4)])),
    ("A11+A5+2A1",
     [(4, {0: "I", 1: "I,II", 2: "I", 3: "I"}),
      (2, {0: "II", 2: "II", 3: "II"})],
     ["10311", "14111"], (2, [(0, 8), (1, 4)])),
    ("A11+A5+2A1",
     [(3, {0: "I", 1: "I", 2: "I,II"}),
      (3, {0: "II", 1: "II", 3: "I,II"})],
     ["10311", "14111"], (1, [(0, 4), (1, 2)])),
    ("A11+A5+2A1",
     [(3, {0: "I", 1: "I"}),
      (2, {0: "II", 2: "I", 3: "I"}),
      (1, {1: "II", 2: "II", 3: "II"})],
     [["06011", "10311"], ["02211", "10311"]],
     (2, [(0, 4), (1, 4), (2, 2), (3, 2)])),
    ("A11+2A2+3A1",
     [(4, {0: "I", 1: "I", 2: "I", 3: "I,II", 4: "I", 5: "I"}),
      (2, {0: "II", 4: "II", 5: "II"})],
     ["0600011", "0211011"],
     (2, [(0, 4), (1, 2), (2, 2), (4, 2), (5, 2)])),
    ("A11+2A2+3A1",
     [(3, {0: "I", 1: "I", 3: "I", 4: "I", 5: "I"}),
      (3, {0: "II", 2: "I", 3: "II", 4: "II", 5: "II"})],
     ["1600111", "1211111"], (2, [(0, 8), (1, 2), (2, 2)])),
    ("2A9", "irr", ["-", "024"], (2, [(0, 4), (1, 8)])),
    ("2A9",
     [(5, {0: "I,II", 1: "I"}), (1, {1: "II"})],
     ["105", "121"], (1, [(0, 4), (1, 2)])),
    ("A9+2A4+A1", "irr", ["-", "02220"], (2, [(0, 4), (1, 4), (2, 4)])),
    ("A9+2A4+A1",
     [(5, {0: "I", 1: "I", 2: "I", 3: "I,II"}), (1, {0: "II"})],
     ["15000", "11110"], (1, [(0, 2), (1, 2), (2, 2)])),
    ("2A8+2A1", "irr", ["-", "03300"], (2, [(0, 6), (1, 6)])),
    ("A8+A5+A2+3A1",
     [(5, {0: "I", 1: "I", 2: "I", 3: "I,II", 4: "I", 5: "I"}),
      (1, {1: "II", 4: "II", 5: "II"})],
     ["1030011", "1311011"], (2, [(0, 6), (1, 4), (2, 2)])),
    ("2A7+A3+A1",
     [(4, {0: "I", 1: "I", 2: "I,II", 3: "I,II"}),
      (2, {0: "II", 1: "II"})],
     ["01311", "12221"], (2, [(0, 6), (1, 2), (2, 2), (3, 2)])),
    ("3A5+3A1",
     [(4, {0: "I,II", 1: "I", 2: "I", 3: "I", 4: "I"}),
      (1, {1: "II", 3: "II", 5: "I"}),
      (1, {2: "II", 4: "II", 5: "II"})],
     [["0033011", "1003101"], ["0211011", "1003101"]],
     (2, [(0, 4), (1, 2), (2, 2), (3, 2), (4, 2)])),
    ("3A5+3A1",
     [(3, {0: "I", 1: "I", 2: "I", 3: "I,II"}),
      (2, {1: "II", 2: "II", 4: "I", 5: "I"}),
      (1, {0: "II", 4: "II", 5: "II"})],
     [["0033011", "1300011"], ["0211011", "1300011"]],
     (2, [(0, 4), (1, 2), (2, 2), (3, 2), (4, 2)])),
]

T17 = [
    ("2E6+A5", "irr", ["-", "0112"], (2, [(0, 4), (1, 4), (2, 4)])),
    ("2E6+2A2+A1", "irr", ["-", "011110"],
     (2, [(0, 4), (1, 4), (2, 2), (3, 2)])),
    ("E6+A11", "irr", ["-", "014"], (2, [(0, 4), (1, 8)])),
    ("E6+A8+A2+A1", "irr", ["-", "01310"], (2, [(0, 4), (1, 6), (2, 2)])),
    ("E6+2A5+A1", "irr", ["-", "01220"], (2, [(0, 4), (1, 4), (2, 4)])),
    ("E6+A5+2A2+2A1", "irr", ["-", "0121100"],
     (2, [(0, 4), (1, 4), (2, 2), (3, 2)])),
    ("E6+A5+2A2+2A1",
     [(5, {0: "I", 1: "I", 2: "I", 3: "I", 4: "I", 5: "I"}),
      (1, {1: "II", 4: "II", 5: "II"})],
     ["1030011", "1111111"], (2, [(0, 4), (1, 4), (2, 2), (3, 2)])),
    ("D7+A7+A3",
     [(4, {0: "II", 1: "I", 2: "I"}), (2, {0: "I", 1: "II", 2: "II"})],
     ["0242", "0121"], (2, [(0, 6), (1, 4), (2, 2)])),
    ("D7+3A3+A1",
     [(4, {0: "II", 1: "I", 2: "I", 3: "I"}),
      (1, {2: "II", 3: "II", 4: "I"}),
      (1, {0: "I", 1: "II", 4: "II"})],
     [["022220", "100221"], ["011110", "100221"]],
     (2, [(0, 6), (1, 2), (2, 2), (3, 2)])),
    ("2D5+A7",
     [(4, {0: "II", 1: "II", 2: "I"}), (2, {0: "I", 1: "I", 2: "II"})],
     ["0224", "0112"], (2, [(0, 4), (1, 4), (2, 4)])),
    ("2D5+2A3+A1",
     [(4, {0: "II", 1: "II", 2: "I", 3: "I"}),
      (1, {0: "I", 2: "II", 4: "I"}),
      (1, {1: "I", 3: "II", 4: "II"})],
     [["022220", "102021"], ["011110", "102021"]],
     (2, [(0, 4), (1, 4), (2, 2), (3, 2)])),
    ("D5+A11+A1",
     [(4, {0: "II", 1: "I", 2: "I,II"}), (2, {0: "I", 1: "II"})],
     ["0260", "0131"], (2, [(0, 4), (1, 6), (2, 2)])),
    ("D5+A7+A3+2A1",
     [(4, {0: "II", 1: "I", 2: "I", 3: "I,II"}),
      (1, {0: "I", 2: "II", 4: "I"}),
      (1, {1: "II", 4: "II"})],
     [["024200", "104001"], ["012110", "104001"]],
     (2, [(0, 4), (1, 4), (2, 2), (3, 2)])),
    ("A17", "irr", ["-", "06"], (2, [(0, 12)])),
    ("A17", [(3, {0: "I"}), (3, {0: "II"})], ["19", "13"], (1, [(0, 6)])),
    ("A15+2A1",
     [(4, {0: "I", 1: "I,II", 2: "I,II"}), (2, {0: "II"})],
     ["0800", "0411"], (2, [(0, 8), (1, 2), (2, 2)])),
    ("A14+A2+A1", "irr", ["-", "0510"], (2, [(0, 10), (1, 2)])),
    ("A11+A5+A1", "irr", ["-", "0420"], (2, [(0, 8), (1, 4)])),
    ("A11+A5+A1",
     [(3, {0: "I", 1: "I", 2: "I,II"}), (3, {0: "II", 1: "II"})],
     ["1630", "1210"], (1, [(0, 4), (1, 2)])),
    ("A11+2A3",
     [(4, {0: "I", 1: "I", 2: "I,II"}), (2, {0: "II", 1: "II"})],
     ["0620", "0312"], (2, [(0, 6), (1, 4), (2, 2)])),
    ("A11+2A2+2A1", "irr", ["-", "041100"], (2, [(0, 8), (1, 2), (2, 2)])),
    ("A11+2A2+2A1",
     [(4, {0: "I", 1: "I", 2: "I", 3: "I", 4: "I"}),
      (2, {0: "II", 3: "II", 4: "II"})],
     ["060011", "021111"],
     (2, [(0, 4), (1, 2), (2, 2), (3, 2), (4, 2)])),
    ("A9+2A4", "irr", ["-", "0222"], (2, [(0, 4), (1, 4), (2, 4)])),
    ("A9+2A4",
     [(5, {0: "I", 1: "I", 2: "I"}), (1, {0: "II"})],
     ["1500", "1111"], (1, [(0, 2), (1, 2), (2, 2)])),
    ("2A8+A1", "irr", ["-", "0330"], (2, [(0, 6), (1, 6)])),
    ("A8+A5+A2+2A1", "irr", ["-", "032100"], (2, [(0, 6), (1, 4), (2, 2)])),
    ("A8+A5+A2+2A1",
     [(5, {0: "I", 1: "I", 2: "I", 3: "I", 4: "I"}),
      (1, {1: "II", 3: "II", 4: "II"})],
     ["103011", "131111"], (2, [(0, 6), (1, 4), (2, 2)])),
    ("A8+3A2+3A1", "irr", ["-", "03111000"],
     (2, [(0, 6), (1, 2), (2, 2), (3, 2)])),
    ("2A7+3A1",
     [(4, {0: "I", 1: "I", 2: "I,II", 3: "I,II"}),
      (1, {0: "II", 4: "I"}),
      (1, {1: "II", 4: "II"})],
     [["044000", "104001"], ["022110", "104001"]],
     (2, [(0, 4), (1, 4), (2, 2), (3, 2)])),
    ("A7+3A3+A1",
     [(4, {0: "I", 1: "I,II", 2: "I", 3: "I"}),
      (1, {2: "II", 3: "II", 4: "I"}),
      (1, {0: "II", 4: "II"})],
     [["040220", "100221"], ["021120", "102201"]],
     (2, [(0, 4), (1, 4), (2, 2), (3, 2)])),
    ("2A5+2A2+3A1",
     [(5, {0: "I,II", 1: "I", 2: "I", 3: "I", 4: "I,II", 5: "I", 6: "I"}),
      (1, {1: "II", 5: "II", 6: "II"})],
     ["10300011", "11211011"], (2, [(0, 4), (1, 4), (2, 2), (3, 2)])),
    ("2A5+2A2+3A1",
     [(4, {0: "I", 1: "I", 2: "I", 3: "I", 4: "I,II", 5: "I", 6: "I"}),
      (2, {0: "II", 1: "II", 5: "II", 6: "II"})],
     ["03300011", "01111011"],
     (2, [(0, 2), (1, 2), (2, 2), (3, 2), (5, 2), (6, 2)])),
    ("2A5+2A2+3A1",
     [(3, {0: "I", 1: "I", 2: "I", 4: "I", 5: "I", 6: "I"}),
      (3, {0: "II", 1: "II", 3: "I", 4: "II", 5: "II", 6: "II"})],
     ["13300111", "11111111"], (2, [(0, 4), (1, 4), (2, 2), (3, 2)])),
    ("2A5+2A2+3A1",
     [(4, {0: "I", 1: "I", 2: "I", 3: "I", 5: "I", 6: "I"}),
      (1, {0: "II", 4: "I", 5: "II"}),
      (1, {1: "II", 4: "II", 6: "II"})],
     [["03300011", "10300101"], ["01111011", "10300101"]],
     (2, [(0, 2), (1, 2), (2, 2), (3, 2), (5, 2), (6, 2)])),
    ("4A4+A1", "irr", ["-", "011220"],
     (2, [(0, 4), (1, 4), (2, 2), (3, 2)])),
]

T16 = [
    ("2E6+2A2", "irr", ["-", "01111"], (2, [(0, 4), (1, 4), (2, 2), (3, 2)])),
    ("E6+A8+A2", "irr", ["-", "0131"], (2, [(0, 4), (1, 6), (2, 2)])),
    ("E6+2A5", "irr", ["-", "0122"], (2, [(0, 4), (1, 4), (2, 4)])),
    ("E6+A5+2A2+A1", "irr", ["-", "012110"],
     (2, [(0, 4), (1, 4), (2, 2), (3, 2)])),
    ("E6+4A2+2A1", "irr", ["-", "01111100"],
     (2, [(0, 4), (1, 2), (2, 2), (3, 2), (4, 2)])),
    ("D7+3A3",
     [(4, {0: "II", 1: "I", 2: "I", 3: "I"}),
      (2, {0: "I", 1: "II", 2: "II", 3: "II"})],
     ["02222", "01111"], (2, [(0, 6), (1, 2), (2, 2), (3, 2)])),
    ("2D5+2A3",
     [(4, {0: "II", 1: "II", 2: "I", 3: "I"}),
      (2, {0: "I", 1: "I", 2: "II", 3: "II"})],
     ["02222", "01111"], (2, [(0, 4), (1, 4), (2, 2), (3, 2)])),
    ("D5+A7+A3+A1",
     [(4, {0: "II", 1: "I", 2: "I", 3: "I,II"}),
      (2, {0: "I", 1: "II", 2: "II"})],
     ["02420", "01211"], (2, [(0, 4), (1, 4), (2, 2), (3, 2)])),
    ("D5+3A3+2A1",
     [(4, {0: "II", 1: "I", 2: "I", 3: "I", 5: "I,II"}),
      (1, {0: "I", 1: "II", 4: "I"}),
      (1, {2: "II", 3: "II", 4: "II"})],
     [["0222200", "1002201"], ["0111110", "1002201"]],
     (2, [(0, 4), (1, 2), (2, 2), (3, 2), (4, 2)])),
    ("A14+A2", "irr", ["-", "051"], (2, [(0, 10), (1, 2)])),
    ("A11+A5", "irr", ["-", "042"], (2, [(0, 8), (1, 4)])),
    ("A11+A5",
     [(3, {0: "I", 1: "I"}), (3, {0: "II", 1: "II"})],
     ["163", "121"], (1, [(0, 4), (1, 2)])),
    ("A11+A3+2A1",
     [(4, {0: "I", 1: "I", 2: "I,II", 3: "I,II"}), (2, {0: "II", 1: "II"})],
     ["06200", "03111"], (2, [(0, 6), (1, 2), (2, 2), (3, 2)])),
    ("A11+2A2+A1", "irr", ["-", "04110"], (2, [(0, 8), (1, 2), (2, 2)])),
    ("2A8", "irr", ["-", "033"], (2, [(0, 6), (1, 6)])),
    ("A8+A5+A2+A1", "irr", ["-", "03210"], (2, [(0, 6), (1, 4), (2, 2)])),
    ("A8+3A2+2A1", "irr", ["-", "0311100"],
     (2, [(0, 6), (1, 2), (2, 2), (3, 2)])),
    ("2A7+2A1",
     [(4, {0: "I", 1: "I", 2: "I,II", 3: "I,II"}), (2, {0: "II", 1: "II"})],
     ["04400", "02211"], (2, [(0, 4), (1, 4), (2, 2), (3, 2)])),
    ("A7+3A3",
     [(4, {0: "I", 1: "I,II", 2: "I", 3: "I"}), (2, {0: "II", 2: "II", 3: "II"})],
     ["04022", "02112"], (2, [(0, 4), (1, 4), (2, 2), (3, 2)])),
    ("A7+2A3+3A1",
     [(4, {0: "I", 1: "I", 2: "I", 3: "I,II", 4: "I,II"}),
      (1, {0: "II", 5: "I"}),
      (1, {1: "II", 2: "II", 5: "II"})],
     [["0422000", "1022001"], ["0211110", "1022001"]],
     (2, [(0, 4), (1, 2), (2, 2), (3, 2), (4, 2)])),
    ("3A5+A1", "irr", ["-", "02220"], (2, [(0, 4), (1, 4), (2, 4)])),
    ("3A5+A1",
     [(3, {0: "I", 1: "I", 2: "I", 3: "I,II"}),
      (3, {0: "II", 1: "II", 2: "II"})],
     ["13330", "11110"], (1, [(0, 2), (1, 2), (2, 2)])),
    ("2A5+2A2+2A1", "irr", ["-", "0221100"],
     (2, [(0, 4), (1, 4), (2, 2), (3, 2)])),
    ("2A5+2A2+2A1",
     [(5, {0: "I,II", 1: "I", 2: "I", 3: "I", 4: "I", 5: "I"}),
      (1, {1: "II", 4: "II", 5: "II"})],
     ["1030011", "1121111"], (2, [(0, 6), (1, 6)])),
    ("2A5+2A2+2A1",
     [(4, {0: "I", 1: "I", 2: "I", 3: "I", 4: "I", 5: "I"}),
      (2, {0: "II", 1: "II", 4: "II", 5: "II"})],
     ["0330011", "0111111"],
     (2, [(0, 2), (1, 2), (2, 2), (3, 2), (4, 2), (5, 2)])),
    ("A5+4A2+3A1", "irr", ["-", "021111000"],
     (2, [(0, 4), (1, 2), (2, 2), (3, 2), (4, 2)])),
    ("A5+4A2+3A1",
     [(5, {0: "I", 1: "I", 2: "I", 3: "I", 4: "I", 5: "I,II", 6: "I", 7: "I"}),
      (1, {0: "II", 6: "II", 7: "II"})],
     ["130000011", "111111011"],
     (2, [(0, 4), (1, 2), (2, 2), (3, 2), (4, 2)])),
    ("4A4", "irr", ["-", "02211"], (2, [(0, 4), (1, 4), (2, 2), (3, 2)])),
    ("5A3+A1",
     [(4, {0: "I,II", 1: "I", 2: "I", 3: "I", 4: "I"}),
      (1, {1: "II", 2: "II", 5: "I"}),
      (1, {3: "II", 4: "II", 5: "II"})],
     [["0022220", "1000221"], ["0111120", "1002201"]],
     (2, [(0, 4), (1, 2), (2, 2), (3, 2), (4, 2)])),
]

T15 = [
    ("E6+A5+2A2", "irr", ["-", "01211"], (2, [(0, 4), (1, 4), (2, 2), (3, 2)])),
    ("E6+4A2+A1", "irr", ["-", "0111110"],
     (2, [(0, 4), (1, 2), (2, 2), (3, 2), (4, 2)])),
    ("D5+3A3+A1",
     [(4, {0: "II", 1: "I", 2: "I", 3: "I", 4: "I,II"}),
      (2, {0: "I", 1: "II", 2: "II", 3: "II"})],
     ["022220", "011111"], (2, [(0, 4), (1, 2), (2, 2), (3, 2), (4, 2)])),
    ("A11+2A2", "irr", ["-", "0411"], (2, [(0, 8), (1, 2), (2, 2)])),
    ("A8+A5+A2", "irr", ["-", "0321"], (2, [(0, 6), (1, 4), (2, 2)])),
    ("A8+3A2+A1", "irr", ["-", "031110"],
     (2, [(0, 6), (1, 2), (2, 2), (3, 2)])),
    ("A7+2A3+2A1",
     [(4, {0: "I", 1: "I", 2: "I", 3: "I,II", 4: "I,II"}),
      (2, {0: "II", 1: "II", 2: "II"})],
     ["042200", "021111"], (2, [(0, 4), (1, 2), (2, 2), (3, 2), (4, 2)])),
    ("3A5", "irr", ["-", "0222"], (2, [(0, 4), (1, 4), (2, 4)])),
    ("3A5",
     [(3, {0: "I", 1: "I", 2: "I"}), (3, {0: "II", 1: "II", 2: "II"})],
     ["1333", "1111"], (1, [(0, 2), (1, 2), (2, 2)])),
    ("2A5+2A2+A1", "irr", ["-", "022110"],
     (2, [(0, 4), (1, 4), (2, 2), (3, 2)])),
    ("A5+4A2+2A1", "irr", ["-", "02111100"],
     (2, [(0, 4), (1, 2), (2, 2), (3, 2), (4, 2)])),
    ("A5+4A2+2A1",
     [(5, {0: "I", 1: "I", 2: "I", 3: "I", 4: "I", 5: "I", 6: "I"}),
      (1, {0: "II", 5: "II", 6: "II"})],
     ["13000011", "11111111"],
     (2, [(0, 4), (1, 2), (2, 2), (3, 2), (4, 2)])),
    ("5A3",
     [(4, {0: "I,II", 1: "I", 2: "I", 3: "I", 4: "I"}),
      (2, {1: "II", 2: "II", 3: "II", 4: "II"})],
     ["002222", "011112"], (2, [(0, 4), (1, 2), (2, 2), (3, 2), (4, 2)])),
    ("4A3+3A1",
     [(4, {0: "I", 1: "I", 2: "I", 3: "I", 4: "I,II", 5: "I,II"}),
      (1, {0: "II", 1: "II", 6: "I"}),
      (1, {2: "II", 3: "II", 6: "II"})],
     [["02222000", "10022001"], ["01111011", "10022100"]],
     (2, [(0, 2), (1, 2), (2, 2), (3, 2), (4, 2), (5, 2)])),
    ("6A2+3A1", "irr", ["-", "0111111000"],
     (2, [(0, 2), (1, 2), (2, 2), (3, 2), (4, 2), (5, 2)])),
    ("E6+4A2", "irr", ["-", "011111"],
     (2, [(0, 4), (1, 2), (2, 2), (3, 2), (4, 2)])),
    ("A8+3A2", "irr", ["-", "03111"], (2, [(0, 6), (1, 2), (2, 2), (3, 2)])),
    ("2A5+2A2", "irr", ["-", "02211"], (2, [(0, 4), (1, 4), (2, 2), (3, 2)])),
    ("A5+4A2+A1", "irr", ["-", "0211110"],
     (2, [(0, 4), (1, 2), (2, 2), (3, 2), (4, 2)])),
    ("4A3+2A1",
     [(4, {0: "I", 1: "I", 2: "I", 3: "I", 4: "I,II", 5: "I,II"}),
      (2, {0: "II", 1: "II", 2: "II", 3: "II"})],
     ["0222200", "0111111"],
     (2, [(0, 2), (1, 2), (2, 2), (3, 2), (4, 2), (5, 2)])),
    ("6A2+2A1", "irr", ["-", "011111100"],
     (2, [(0, 2), (1, 2), (2, 2), (3, 2), (4, 2), (5, 2)])),
    ("A5+4A2", "irr", ["-", "021111"],
     (2, [(0, 4), (1, 2), (2, 2), (3, 2), (4, 2)])),
    ("6A2+A1", "irr", ["-", "01111110"],
     (2, [(0, 2), (1, 2), (2, 2), (3, 2), (4, 2), (5, 2)])),
]


def add_table(rows, milnor):
    seen = {}
    for sing, configuration, codesets, special in rows:
        slug = sing.lower().replace("+", "-")
        seen[slug] = seen.get(slug, 0) + 1
        suffix = chr(ord("a") + seen[slug] - 1) if sum(
            1 for s, *_ in rows if s == sing) > 1 else ""
        eid = f"t{milnor}-{slug}" + (f"-{suffix}" if suffix else "")
        cfg = parse_config(sing)
        members = []
        for mi, cs in enumerate(codesets):
            specs = cs if isinstance(cs, list) else ([] if cs == "-" else [cs])
            if isinstance(cs, str) and cs != "-":
                specs = [cs]
            members.append((f"M{mi+1}", specs))
        configuration_rows = ("irreducible" if configuration == "irr"
                              else conf_rows(len(cfg), configuration))
        make_entry(eid, "table", sing, members=members,
                   configuration=configuration_rows,
                   special_columns=[{"degree": special[0],
                                     "values": [[ci, v] for ci, v in special[1]]}])


add_table(T18, 18)
add_table(T17, 17)
add_table(T16, 16)
add_table(T15, 15)

# ---------------------------------------------------------------------------
# write

doc = {
    "version": 1,
    "conventions": {
        "basis": "lam first (lam^2 = 2), then the root components in order; "
                 "A_n and D_n are chains e1..en with the D fork e_n ~ e_{n-2}; "
                 "E_n is the chain e2..en with e1 attached to e4",
        "generators": "A_n: sum(i*e_i)/(n+1); D_odd: dual of e_n (order 4, "
                      "alternate = 3x); E6/E7: dual of e_n; lam: lam/2",
        "codes": "first digit counts lam/2, digit i counts the canonical "
                 "generator of component i",
    },
    "entries": ENTRIES,
}
os.makedirs(os.path.dirname(OUT), exist_ok=True)
with open(OUT, "w") as fh:
    json.dump(doc, fh, indent=1, sort_keys=True)
print(f"wrote {OUT} with {len(ENTRIES)} entries")
