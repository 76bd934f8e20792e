import random
from fractions import Fraction as F

import pytest

from zcert.exact import (
    QuadExtElem,
    det,
    hnf,
    hnf_basis,
    invariant_factors,
    invert_symmetric,
    mat_mul,
    quad_field_op,
    snf,
)

A2_GRAM = [[-2, 1], [1, -2]]


def test_snf_1x1():
    _, D, _ = snf([[2]])
    assert D == [[2]]


def test_snf_a2_invariant_factors():
    assert invariant_factors(A2_GRAM) == (3,)


def test_snf_zero_matrix():
    _, D, _ = snf([[0, 0], [0, 0]])
    assert D == [[0, 0], [0, 0]]


def test_snf_transforms_and_divisibility():
    rng = random.Random(7)
    for _ in range(60):
        m = rng.randint(1, 5)
        n = rng.randint(1, 5)
        A = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
        U, D, V = snf(A)
        assert mat_mul(mat_mul(U, A), V) == D
        assert abs(det(U)) == 1 and abs(det(V)) == 1
        diag = [D[k][k] for k in range(min(m, n))]
        assert all(d >= 0 for d in diag)
        for a, b in zip(diag, diag[1:]):
            if a and b:
                assert b % a == 0
            if a == 0:
                assert b == 0
        if m == n:
            prod = 1
            for d in diag:
                prod *= d
            assert prod == abs(det(A))


def test_hnf_examples():
    assert hnf([[2, 0], [0, 2]]) == [[2, 0], [0, 2]]
    assert hnf([[1, 2], [2, 4]]) == [[1, 2], [0, 0]]
    assert hnf([[3, 6], [1, 2]]) == [[1, 2], [0, 0]]


def test_hnf_idempotent_and_row_space():
    rng = random.Random(11)
    for _ in range(40):
        m = rng.randint(1, 4)
        n = rng.randint(1, 4)
        A = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(m)]
        H = hnf(A)
        assert hnf(H) == H
        # every original row is an integer combination of the basis rows
        basis = hnf_basis(A)
        for row in A:
            r = list(row)
            for b in basis:
                piv = next(j for j, x in enumerate(b) if x)
                q = r[piv] // b[piv]
                r = [x - q * y for x, y in zip(r, b)]
            assert all(x == 0 for x in r)


def test_invert_symmetric():
    assert invert_symmetric([[2]]) == [[F(1, 2)]]
    inv = invert_symmetric(A2_GRAM)
    assert inv == [[F(-2, 3), F(-1, 3)], [F(-1, 3), F(-2, 3)]]
    eye = [[1, 0], [0, 1]]
    assert invert_symmetric(eye) == [[F(1), F(0)], [F(0), F(1)]]
    assert mat_mul(A2_GRAM, inv) == [[F(1), F(0)], [F(0), F(1)]]


def test_invert_symmetric_degenerate():
    with pytest.raises(ValueError, match="degenerate Gram"):
        invert_symmetric([[1, 2], [2, 4]])
    with pytest.raises(ValueError, match="symmetric"):
        invert_symmetric([[1, 2], [3, 4]])


def test_quad_field_examples():
    s = QuadExtElem(0, 1, -3)
    assert (1 + s) * (1 - s) == 4
    zeta = QuadExtElem(F(-1, 2), F(1, 2), -3)
    assert zeta * zeta * zeta == 1
    x = QuadExtElem(F(3), F(5), -3)
    assert quad_field_op("conj", x) + x == 6
    assert quad_field_op("eq", x, x)


def test_quad_field_errors():
    a = QuadExtElem(1, 1, -3)
    b = QuadExtElem(1, 1, 2)
    with pytest.raises(ValueError, match="mixed"):
        quad_field_op("add", a, b)
    with pytest.raises(ZeroDivisionError):
        quad_field_op("div", a, QuadExtElem(0))
    with pytest.raises(ValueError):
        QuadExtElem(1, 1, 12)  # not squarefree
    with pytest.raises(ValueError):
        QuadExtElem(1, 1, 1)


def test_quad_field_axioms_randomized():
    rng = random.Random(3)

    def rand_elem(d):
        return QuadExtElem(F(rng.randint(-5, 5), rng.randint(1, 4)),
                           F(rng.randint(-5, 5), rng.randint(1, 4)), d)

    for d in (-1, -2, -3, 2, 5):
        for _ in range(25):
            x, y, z = (rand_elem(d) for _ in range(3))
            assert (x + y) + z == x + (y + z)
            assert x * (y + z) == x * y + x * z
            assert (x * y) * z == x * (y * z)
            if y:
                assert (x / y) * y == x
            assert x.conj().conj() == x
            assert (x * y).conj() == x.conj() * y.conj()
