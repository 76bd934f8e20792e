import random
from fractions import Fraction as F

import pytest

from zcert.curves import (
    INFINITE,
    BivarPoly,
    CurveWithFactors,
    ProjPoint,
    TernaryForm,
    classify_ade,
    classify_family,
    family_member,
    family_node_points,
    intersection_at,
    local_intersection,
    milnor,
    singular_at,
    special_curve_check,
    uni_divmod,
    uni_mul,
    verify_configuration,
)
from zcert.exact import QuadExtElem as Q

ZERO = Q(0)
ONE = Q(1)


def B(d):
    return BivarPoly(d)


def test_local_intersection_basics():
    y = B({(0, 1): 1})
    assert local_intersection(y, B({(0, 1): 1, (3, 0): -1})) == 3
    assert local_intersection(B({(1, 0): 1}), y) == 1
    assert local_intersection(y, y) == INFINITE
    # symmetric
    f = B({(0, 2): 1, (3, 0): -1})
    g = B({(1, 1): 1, (2, 0): 2})
    assert local_intersection(f, g) == local_intersection(g, f)
    # nonzero constant term: multiplicity 0
    assert local_intersection(B({(0, 0): 1, (1, 0): 1}), y) == 0


def test_local_intersection_additivity():
    f = B({(0, 1): 1, (2, 0): -1})  # y - x^2
    g1 = B({(1, 0): 1})              # x
    g2 = B({(0, 1): 1, (3, 0): 1})   # y + x^3
    prod = g1 * g2
    assert (local_intersection(f, prod)
            == local_intersection(f, g1) + local_intersection(f, g2))


def test_shared_component_through_origin():
    h = B({(0, 1): 1, (2, 0): -1})
    f = h * B({(1, 0): 1, (0, 0): 1})
    g = h * B({(0, 1): 1, (0, 0): 2})
    assert local_intersection(f, g) == INFINITE
    # shared factor away from the origin stays finite
    far = B({(0, 0): 1, (1, 0): 1})  # 1 + x
    f2 = B({(1, 0): 1}) * far
    g2 = B({(0, 1): 1}) * far
    assert local_intersection(f2, g2) == 1


def suspension(n):
    """x1^2 x0^(n-1) - x2^(n+1): A_n at (1:0:0)."""
    return TernaryForm({(n - 1, 2, 0): 1, (0, 0, n + 1): -1})


def test_milnor_suspension_family():
    for n in range(1, 18):
        f = suspension(n)
        assert milnor(f, ProjPoint([1, 0, 0])) == n, n


def test_milnor_errors_and_smooth():
    conic = TernaryForm({(0, 1, 1): 1, (2, 0, 0): -1})
    assert milnor(conic, ProjPoint([0, 0, 1])) == 0
    # non-reduced: double line
    dbl = TernaryForm({(0, 2, 0): 1})
    with pytest.raises(ValueError, match="isolated"):
        milnor(dbl, ProjPoint([1, 0, 0]))


def test_singular_at():
    conic = TernaryForm({(0, 1, 1): 1, (2, 0, 0): -1})
    assert not singular_at(conic, ProjPoint([0, 0, 1]))
    cusp = TernaryForm({(1, 0, 2): 1, (0, 3, 0): -1})
    assert singular_at(cusp, ProjPoint([1, 0, 0]))


def test_classify_examples():
    assert classify_ade(suspension(11), ProjPoint([1, 0, 0])).ade == ("A", 11)
    node = TernaryForm({(1, 0, 2): 1, (1, 2, 0): -1, (0, 3, 0): 1})
    assert classify_ade(node, ProjPoint([1, 0, 0])).ade == ("A", 1)
    cusp = TernaryForm({(1, 0, 2): 1, (0, 3, 0): -1})
    assert classify_ade(cusp, ProjPoint([1, 0, 0])).ade == ("A", 2)
    # three concurrent lines: D4
    d4 = TernaryForm({(0, 2, 1): 1, (0, 1, 2): -1})
    assert classify_ade(d4, ProjPoint([1, 0, 0])).ade == ("D", 4)
    # x2 x1^2 + x2^4: one double + one simple cubic-jet line, mu = 5
    d5 = TernaryForm({(1, 2, 1): 1, (0, 0, 4): 1})
    assert classify_ade(d5, ProjPoint([1, 0, 0])).ade == ("D", 5)
    # E6: x^3 + y^4
    e6 = TernaryForm({(1, 3, 0): 1, (0, 0, 4): 1})
    assert classify_ade(e6, ProjPoint([1, 0, 0])).ade == ("E", 6)
    # E7: x^3 + x y^3
    e7 = TernaryForm({(1, 3, 0): 1, (0, 1, 3): 1})
    assert classify_ade(e7, ProjPoint([1, 0, 0])).ade == ("E", 7)
    # E8: x^3 + y^5
    e8 = TernaryForm({(2, 3, 0): 1, (0, 0, 5): 1})
    assert classify_ade(e8, ProjPoint([1, 0, 0])).ade == ("E", 8)


def test_classify_rejects_non_simple():
    # x^4 + y^4: not simple (mu = 9, zero cubic jet)
    f = TernaryForm({(0, 4, 0): 1, (0, 0, 4): 1})
    with pytest.raises(ValueError, match="not simple"):
        classify_ade(f, ProjPoint([1, 0, 0]))
    smooth = TernaryForm({(0, 1, 1): 1, (2, 0, 0): -1})
    with pytest.raises(ValueError, match="smooth"):
        classify_ade(smooth, ProjPoint([0, 0, 1]))


def _subst_linear(p, a, b, c, d):
    """Substitute x -> a x + b y, y -> c x + d y in a bivariate polynomial."""
    out = BivarPoly({})
    X = BivarPoly({(1, 0): a, (0, 1): b})
    Y = BivarPoly({(1, 0): c, (0, 1): d})
    for (i, j), v in p.c.items():
        term = BivarPoly({(0, 0): v})
        for _ in range(i):
            term = term * X
        for _ in range(j):
            term = term * Y
        out = out + term
    return out


def _homogenize(p, deg):
    out = {}
    for (i, j), v in p.c.items():
        assert i + j <= deg
        out[(deg - i - j, i, j)] = v
    return TernaryForm(out)


LOCAL_MODELS = [
    ("A1", {(2, 0): 1, (0, 2): -1}),
    ("A2", {(0, 2): 1, (3, 0): -1}),
    ("A5", {(0, 2): 1, (6, 0): -1}),
    ("D4", {(2, 1): 1, (0, 3): -1}),
    ("D6", {(2, 1): 1, (0, 5): 1}),
    ("E6", {(3, 0): 1, (0, 4): 1}),
    ("E7", {(3, 0): 1, (1, 3): 1}),
    ("E8", {(3, 0): 1, (0, 5): 1}),
]


def test_classify_invariant_under_linear_changes():
    rng = random.Random(99)
    for label, model in LOCAL_MODELS:
        want = (label[0], int(label[1:]))
        done = 0
        while done < 20:
            a, b, c, d = (rng.randint(-3, 3) for _ in range(4))
            if a * d - b * c == 0:
                continue
            p = _subst_linear(BivarPoly(model), a, b, c, d)
            deg = max(i + j for i, j in p.c)
            rec = classify_ade(_homogenize(p, deg), ProjPoint([1, 0, 0]))
            assert rec.ade == want, (label, a, b, c, d)
            done += 1


# ---------------------------------------------------------------------------
# resultant oracle


def _to_x_coeffs(p):
    """Bivariate as polynomial in x with UniPoly-in-y coefficients."""
    degx = max((i for i, j in p.c), default=-1)
    out = []
    for i in range(degx + 1):
        degy = max((j for (ii, j) in p.c if ii == i), default=-1)
        col = [ZERO] * (degy + 1)
        for (ii, j), v in p.c.items():
            if ii == i:
                col[j] = v
        while col and not col[-1]:
            col.pop()
        out.append(col)
    return out


def _poly_det_bareiss(M):
    """Determinant of a matrix of univariate polynomials, fraction-free."""
    n = len(M)
    M = [[list(x) for x in row] for row in M]
    sign = 1
    prev = [ONE]
    for k in range(n - 1):
        if not M[k][k]:
            piv = next((i for i in range(k + 1, n) if M[i][k]), None)
            if piv is None:
                return []
            M[k], M[piv] = M[piv], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = [x for x in uni_mul(M[i][j], M[k][k])]
                sub = uni_mul(M[i][k], M[k][j])
                mx = max(len(num), len(sub))
                num = num + [ZERO] * (mx - len(num))
                sub = sub + [ZERO] * (mx - len(sub))
                diff = [x - y for x, y in zip(num, sub)]
                while diff and not diff[-1]:
                    diff.pop()
                q, r = uni_divmod(diff, prev)
                assert not r, "Bareiss division not exact"
                M[i][j] = q
            M[i][k] = []
        prev = M[k][k]
    out = M[n - 1][n - 1]
    if sign < 0:
        out = [-x for x in out]
    return out


def resultant_x(f, g):
    """Res_x(f, g) as a univariate polynomial in y (Sylvester determinant)."""
    fa = _to_x_coeffs(f)
    ga = _to_x_coeffs(g)
    m = len(fa) - 1
    n = len(ga) - 1
    assert m >= 0 and n >= 0
    size = m + n
    S = [[[] for _ in range(size)] for _ in range(size)]
    for i in range(n):
        for k in range(m + 1):
            S[i][i + k] = list(fa[m - k])
    for i in range(m):
        for k in range(n + 1):
            S[n + i][i + k] = list(ga[n - k])
    return _poly_det_bareiss(S)


def _ord(poly):
    for i, c in enumerate(poly):
        if c:
            return i
    return INFINITE


def _uni_gcd_deg(u, v):
    from zcert.curves import uni_gcd

    g = uni_gcd(u, v)
    return len(g) - 1 if g else -1


def test_fulton_matches_resultant_oracle():
    rng = random.Random(31337)
    checked = 0
    attempts = 0
    while checked < 50 and attempts < 3000:
        attempts += 1
        def rand_poly():
            p = {}
            deg = rng.randint(1, 3)
            for i in range(deg + 1):
                for j in range(deg + 1 - i):
                    if i == j == 0:
                        continue
                    if rng.random() < 0.6:
                        c = rng.randint(-3, 3)
                        if c:
                            p[(i, j)] = c
            return BivarPoly(p)

        f, g = rand_poly(), rand_poly()
        if f.is_zero() or g.is_zero():
            continue
        from zcert.curves import bivar_gcd

        if bivar_gcd(f, g).total_degree() > 0:
            continue
        fx = f.restrict_y0()
        gx = g.restrict_y0()
        if not fx or not gx:
            continue
        # leading x-coefficient must not vanish at y = 0
        fa, ga = _to_x_coeffs(f), _to_x_coeffs(g)
        if len(fa) - 1 != len(fx) - 1 or len(ga) - 1 != len(gx) - 1:
            continue
        # origin must be the only common zero on the line y = 0
        u = fx[_ord(fx):]
        v = gx[_ord(gx):]
        if _uni_gcd_deg(u, v) != 0:
            continue
        res = resultant_x(f, g)
        if not res:
            continue
        assert _ord(res) == local_intersection(f, g), (f.c, g.c)
        checked += 1
    assert checked == 50


# ---------------------------------------------------------------------------
# configurations, special curves, families


def test_verify_configuration_smooth_conic():
    conic = CurveWithFactors([(TernaryForm({(0, 1, 1): 1, (2, 0, 0): -1}), 1)])
    rep = verify_configuration(conic, [])
    assert rep.verdict == "holds"
    assert rep.data["total_milnor"] == 0


def test_verify_configuration_mismatch():
    cusp = CurveWithFactors([(TernaryForm({(1, 0, 2): 1, (0, 3, 0): -1}), 1)])
    rep = verify_configuration(cusp, [(ProjPoint([1, 0, 0]), ("A", 1))])
    assert rep.verdict == "fails"


def test_special_curve_transverse_line():
    sextic = family_member("X", 5)
    line = TernaryForm({(0, 0, 1): 1})  # x2 = 0 through the smooth point (1:5:0)
    assert special_curve_check(sextic, line, [(ProjPoint([1, 5, 0]), 1)])
    assert not special_curve_check(sextic, line, [(ProjPoint([1, 5, 0]), 2)])


def test_special_curve_shared_component():
    sextic = family_member("X", 5)
    with pytest.raises(ValueError, match="shares a component"):
        special_curve_check(sextic, sextic.factors[0][0], [])


def test_family_members():
    cur = family_member("X", -1)
    assert cur.degree == 6
    assert len(cur.factors) == 3
    pts = family_node_points("X", Q(5))
    prod = cur.product
    cur5 = family_member("X", 5)
    for t in pts:
        assert singular_at(cur5.product, ProjPoint(t))
    with pytest.raises(ValueError, match="sqrt"):
        family_member("Y", Q(0, 1, 2))


def test_classify_family_key_values():
    assert classify_family("X", 5).verdict == "type2"
    r = classify_family("Y", 3)
    assert r.verdict == "type3"
    assert r.contact == (Q(1), Q(-1))
    assert classify_family("Y", 2).verdict == "degenerate"
    assert classify_family("Y", 5).verdict == "type1"
    assert classify_family("X", 1).verdict == "degenerate"
    assert classify_family("Y", Q(0, 1, -3)).verdict == "type3"
