import random
from fractions import Fraction as F

import pytest

from zcert.lattices import (
    ambient,
    component_disc_order,
    component_generator,
    discriminant_form,
    forms_isomorphic,
    glue_digits,
    groups_isomorphic,
    milgram_signature,
    overlattice,
    parse_config,
    projection_reachable,
    root_lattice,
)
from zcert.exact import mat_vec


def zero(cfg):
    return [F(0)] * (1 + sum(n for _, n in cfg))


def weighted(vec, start, n, den):
    for i in range(1, n + 1):
        vec[start + i - 1] += F(i, den)
    return vec


def example1_overlattices():
    cfg = parse_config("E6+A11+2A1")
    N = ambient(cfg)
    u = zero(cfg)
    weighted(u, 7, 11, 2)
    u[18] += F(1, 2)
    u[19] += F(1, 2)
    v = zero(cfg)
    for i, c in enumerate((3, 2, 4, 6, 5, 4)):
        v[1 + i] = F(c, 3)
    weighted(v, 7, 11, 6)
    v[18] += F(1, 2)
    v[19] += F(1, 2)
    M1 = overlattice(N, [u])
    M2 = overlattice(N, [v])
    M1.config = cfg
    M2.config = cfg
    return cfg, N, u, v, M1, M2


def test_root_lattices():
    assert root_lattice("A", 1).gram == ((-2,),)
    A2 = root_lattice("A", 2)
    assert A2.gram == ((-2, 1), (1, -2))
    assert abs(A2.det()) == 3
    E6 = root_lattice("E", 6)
    assert E6.rank == 6 and abs(E6.det()) == 3
    assert abs(root_lattice("E", 7).det()) == 2
    assert abs(root_lattice("E", 8).det()) == 1
    assert abs(root_lattice("D", 5).det()) == 4
    assert root_lattice("D", 4).signature() == (0, 4)
    with pytest.raises(ValueError):
        root_lattice("D", 3)
    with pytest.raises(ValueError):
        root_lattice("E", 9)
    with pytest.raises(ValueError):
        root_lattice("A", 0)


def test_ambient():
    N = ambient(parse_config("E6+A11+2A1"))
    assert N.rank == 20
    assert abs(N.det()) == 288
    assert N.signature() == (1, 19)
    N6 = ambient(parse_config("6A2"))
    assert N6.rank == 13 and abs(N6.det()) == 1458
    N1 = ambient(parse_config("A1"))
    assert N1.rank == 2 and abs(N1.det()) == 4
    with pytest.raises(ValueError, match="exceeds"):
        ambient(parse_config("A15+A15"))


def test_overlattice_classical():
    cfg = parse_config("6A2")
    N = ambient(cfg)
    u = zero(cfg)
    for i in range(6):
        u[1 + 2 * i] = F(1, 3)
        u[2 + 2 * i] = F(2, 3)
    L = overlattice(N, [u])
    assert L.index == 3
    assert abs(L.det()) == 162
    assert overlattice(N, []).index == 1


def test_overlattice_example1():
    _, N, u, v, M1, M2 = example1_overlattices()
    assert M1.index == 2 and abs(M1.det()) == 72
    assert M2.index == 6 and abs(M2.det()) == 8
    assert abs(M1.det()) * M1.index ** 2 == abs(N.det())
    # subgroup containment M1 inside M2 (3v = u mod the root lattice)
    assert M2.member(u)
    assert not M1.member(v)


def test_overlattice_errors():
    cfg = parse_config("A2")
    N = ambient(cfg)
    bad = [F(0), F(1, 2), F(0)]  # pairs 1/2-integrally with e2
    with pytest.raises(ValueError, match="not in dual"):
        overlattice(N, [bad])
    # dual vector with odd square: w of A2 has w^2 = -2/3, so take A1 case
    cfg1 = parse_config("A1")
    N1 = ambient(cfg1)
    odd = [F(0), F(1, 2)]  # (e/2)^2 = -1/2
    with pytest.raises(ValueError, match="not an even overlattice"):
        overlattice(N1, [odd])


def test_discriminant_form_basic():
    zlam = ambient(())
    dz = discriminant_form(zlam)
    assert dz.factors == (2,)
    assert dz.q((1,)) == F(1, 2)
    dA2 = discriminant_form(root_lattice("A", 2))
    assert dA2.factors == (3,)
    assert dA2.q((1,)) == F(-2, 3) % 2
    _, N, _, _, M1, M2 = example1_overlattices()
    assert discriminant_form(M2).order == 8
    assert discriminant_form(M1).order == 72
    assert discriminant_form(N).order == 288


def test_discriminant_form_props():
    # q(x+y) - q(x) - q(y) = 2 b(x,y) mod 2Z on random elements
    rng = random.Random(5)
    D = discriminant_form(ambient(parse_config("A3+A2")))
    facs = D.factors
    for _ in range(40):
        x = tuple(rng.randrange(d) for d in facs)
        y = tuple(rng.randrange(d) for d in facs)
        s = tuple((a + b) % d for a, b, d in zip(x, y, facs))
        assert (D.q(s) - D.q(x) - D.q(y)) % 2 == (2 * D.b(x, y)) % 2


def test_milgram_examples():
    class Trivial:
        factors = ()
        order = 1

        def elements(self):
            return iter(())

        def q(self, x):
            return F(0)

    assert milgram_signature(discriminant_form(ambient(()))) == 1
    assert milgram_signature(discriminant_form(root_lattice("A", 1))) == 7
    d = discriminant_form(root_lattice("A", 2))
    assert milgram_signature(d) == (0 - 2) % 8


def test_milgram_matches_signature_all_roots():
    for letter, n in [("A", 1), ("A", 2), ("A", 5), ("A", 11), ("D", 5),
                      ("D", 7), ("E", 6), ("E", 7)]:
        L = root_lattice(letter, n)
        p, q = L.signature()
        assert milgram_signature(discriminant_form(L)) == (p - q) % 8, (letter, n)
    for sing in ["6A2", "E6+A11+2A1", "2A9+A1", "3A5+2A1"]:
        N = ambient(parse_config(sing))
        p, q = N.signature()
        assert milgram_signature(discriminant_form(N)) == (p - q) % 8, sing


def test_groups_isomorphic():
    _, _, _, _, M1, M2 = example1_overlattices()
    d1, d2 = discriminant_form(M1), discriminant_form(M2)
    assert not groups_isomorphic(d1, d2)
    assert groups_isomorphic(d1, d1)
    from zcert.lattices import DiscriminantForm

    z4 = DiscriminantForm((4,), [[F(1, 4)]])
    z22 = DiscriminantForm((2, 2), [[F(1, 2), F(0)], [F(0), F(1, 2)]])
    assert not groups_isomorphic(z4, z22)


def test_forms_isomorphic():
    from zcert.lattices import DiscriminantForm

    d = discriminant_form(root_lattice("A", 2))
    assert forms_isomorphic(d, d)
    a = DiscriminantForm((3,), [[F(2, 3)]])
    b = DiscriminantForm((3,), [[F(4, 3)]])
    assert not forms_isomorphic(a, b)
    # negation changes the A2 form (q = 2/3 vs 4/3) but A1 + A1 is symmetric
    assert not forms_isomorphic(d, d.negated())
    big = DiscriminantForm((101, 101), [[F(1, 101), F(0)], [F(0), F(1, 101)]])
    with pytest.raises(ValueError, match="too large"):
        forms_isomorphic(big, big)


def test_member_and_reachability():
    cfg, N, u, v, M1, M2 = example1_overlattices()
    assert M1.member(u)
    half = [F(1, 2)] + [F(0)] * 19
    assert not M2.member(half)
    for k in range(N.rank):
        basis_vec = [F(int(i == k)) for i in range(N.rank)]
        assert M1.member(basis_vec)
    assert not projection_reachable(M1, 0, 1)
    assert projection_reachable(M2, 2, 2)
    assert not projection_reachable(M1, 2, 2)
    assert projection_reachable(M1, 1, 0)  # zero class always reachable
    with pytest.raises(ValueError, match="component out of range"):
        projection_reachable(M1, 9, 1)


def test_component_generators():
    # A_n generator has order n+1 and the documented coefficient pattern
    w = component_generator("A", 3)
    assert w == [F(1, 4), F(2, 4), F(3, 4)]
    assert component_disc_order("D", 7) == 4
    s = component_generator("D", 7)
    G = root_lattice("D", 7).gram_rows()
    q = sum(a * b for a, b in zip(s, mat_vec(G, s)))
    assert q % 2 == F(-7, 4) % 2
    with pytest.raises(ValueError):
        component_generator("D", 6)
    # digits of a decoded vector round-trip (spot check)
    cfg = parse_config("D7+A11")
    from zcert.catalog import decode_glue

    vec = decode_glue("026", cfg)
    assert glue_digits(cfg, vec) == (0, 2, 6)


def test_index_squared_law_random_glue():
    rng = random.Random(2024)
    configs = ["A2+A1", "A3+A2", "A5", "2A3", "A7+A1", "D5", "E6+A2"]
    built = 0
    trials = 0
    while built < 100 and trials < 4000:
        trials += 1
        cfg = parse_config(rng.choice(configs))
        N = ambient(cfg)
        dN = discriminant_form(N)
        facs = dN.factors
        exps = tuple(rng.randrange(d) for d in facs)
        if not any(exps):
            continue
        vec = [F(0)] * N.rank
        for e, gen in zip(exps, dN.gens):
            for i, g in enumerate(gen):
                vec[i] += e * g
        try:
            M = overlattice(N, [vec])
        except ValueError:
            continue  # odd square: not an even overlattice
        built += 1
        assert abs(M.det()) * M.index ** 2 == abs(N.det())
        assert discriminant_form(M).order == abs(M.det())
    assert built == 100
