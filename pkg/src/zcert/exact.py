"""Exact arithmetic kernel: rationals, quadratic field elements, integer
matrix normal forms.

Everything here is exact; no floats anywhere.  Rationals are
``fractions.Fraction``, matrices are plain lists of lists.  The normal
forms (Smith, Hermite) use deterministic pivoting so their outputs are
reproducible across runs.
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction


def _is_squarefree(d: int) -> bool:
    d = abs(d)
    f = 2
    while f * f <= d:
        if d % (f * f) == 0:
            return False
        f += 1
    return True


class QuadExtElem:
    """Element a + b*sqrt(d) of a real or imaginary quadratic field Q(sqrt d).

    ``d`` is a squarefree integer != 0, 1, or None for plain rationals.
    Elements of distinct fields never mix; rationals coerce into any field.
    Immutable and hashable.
    """

    __slots__ = ("d", "a", "b")

    def __init__(self, a, b=0, d=None):
        a = Fraction(a)
        b = Fraction(b)
        if b == 0:
            d = None
        elif d is None:
            raise ValueError("irrational part requires a field tag d")
        if d is not None:
            if d in (0, 1) or not _is_squarefree(d):
                raise ValueError(f"field tag must be squarefree and != 0, 1: {d}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    def __setattr__(self, *args):
        raise AttributeError("QuadExtElem is immutable")

    @staticmethod
    def coerce(x, d=None):
        if isinstance(x, QuadExtElem):
            return x
        return QuadExtElem(Fraction(x))

    def _join(self, other):
        """Common field tag, or raise on a genuine mismatch."""
        if self.d is None:
            return other.d
        if other.d is None or other.d == self.d:
            return self.d
        raise ValueError(f"mixed quadratic fields: sqrt({self.d}) vs sqrt({other.d})")

    @property
    def is_rational(self):
        return self.b == 0

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __add__(self, other):
        other = QuadExtElem.coerce(other)
        d = self._join(other)
        return QuadExtElem(self.a + other.a, self.b + other.b, d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExtElem(-self.a, -self.b, self.d)

    def __sub__(self, other):
        return self + (-QuadExtElem.coerce(other))

    def __rsub__(self, other):
        return QuadExtElem.coerce(other) - self

    def __mul__(self, other):
        other = QuadExtElem.coerce(other)
        d = self._join(other)
        if d is None:
            return QuadExtElem(self.a * other.a)
        return QuadExtElem(
            self.a * other.a + self.b * other.b * d,
            self.a * other.b + self.b * other.a,
            d,
        )

    __rmul__ = __mul__

    def norm(self):
        """Field norm a^2 - d*b^2 (a rational)."""
        if self.d is None:
            return self.a * self.a
        return self.a * self.a - self.d * self.b * self.b

    def conj(self):
        return QuadExtElem(self.a, -self.b, self.d)

    def __truediv__(self, other):
        other = QuadExtElem.coerce(other)
        d = self._join(other)
        if not other:
            raise ZeroDivisionError("division by zero field element")
        n = other.norm()
        num = self * other.conj()
        return QuadExtElem(num.a / n, num.b / n, d)

    def __rtruediv__(self, other):
        return QuadExtElem.coerce(other) / self

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QuadExtElem(other)
        if not isinstance(other, QuadExtElem):
            return NotImplemented
        if self.b == 0 and other.b == 0:
            return self.a == other.a
        return self.a == other.a and self.b == other.b and self.d == other.d

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def as_fraction(self):
        if self.b != 0:
            raise ValueError(f"{self} is irrational")
        return self.a

    def __repr__(self):
        if self.b == 0:
            return str(self.a)
        s = "" if self.a == 0 else f"{self.a}"
        t = f"{self.b}*sqrt({self.d})" if abs(self.b) != 1 else f"sqrt({self.d})"
        if self.b < 0 and abs(self.b) == 1:
            t = "-" + t
        return t if not s else (f"{s}+{t}" if self.b > 0 else f"{s}{'' if t.startswith('-') else '-'}{t}")


def quad_field_op(op, x, y=None):
    """Dispatch arithmetic on QuadExtElem by op tag.

    op in {add, sub, mul, div, conj, eq}; conj is unary.
    """
    x = QuadExtElem.coerce(x)
    if op == "conj":
        return x.conj()
    y = QuadExtElem.coerce(y)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    if op == "eq":
        return x == y
    raise ValueError(f"unknown op tag {op!r}")


# ---------------------------------------------------------------------------
# integer / rational matrices as lists of lists


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(A, B):
    n, k, m = len(A), len(B), len(B[0])
    assert len(A[0]) == k, "dimension mismatch"
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def mat_vec(A, v):
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def transpose(A):
    return [list(row) for row in zip(*A)]


def mat_copy(A):
    return [list(row) for row in A]


def det(A):
    """Exact determinant via fraction-free Bareiss elimination."""
    n = len(A)
    M = [[Fraction(x) for x in row] for row in A]
    sign = 1
    for k in range(n):
        piv = next((i for i in range(k, n) if M[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            M[k], M[piv] = M[piv], M[k]
            sign = -sign
        for i in range(k + 1, n):
            f = M[i][k] / M[k][k]
            for j in range(k, n):
                M[i][j] -= f * M[k][j]
    d = Fraction(sign)
    for k in range(n):
        d *= M[k][k]
    return d


def rat_inv(A):
    """Exact inverse of a square rational matrix (Gauss-Jordan)."""
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(A)]
    for k in range(n):
        piv = next((i for i in range(k, n) if M[i][k] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        M[k], M[piv] = M[piv], M[k]
        p = M[k][k]
        M[k] = [x / p for x in M[k]]
        for i in range(n):
            if i != k and M[i][k] != 0:
                f = M[i][k]
                M[i] = [x - f * y for x, y in zip(M[i], M[k])]
    return [row[n:] for row in M]


def invert_symmetric(G):
    """Exact rational inverse of a symmetric nondegenerate integer matrix."""
    n = len(G)
    for i in range(n):
        for j in range(i):
            if G[i][j] != G[j][i]:
                raise ValueError("matrix not symmetric")
    try:
        return rat_inv(G)
    except ValueError:
        raise ValueError("degenerate Gram") from None


# ---------------------------------------------------------------------------
# Smith and Hermite normal forms


def snf(A):
    """Smith normal form with transforms: returns (U, D, V), U*A*V = D.

    U, V unimodular; D diagonal with d1 | d2 | ... >= 0.  Pivot choice is
    the smallest-|entry| nonzero in row-major scan order, so the output is
    deterministic.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    D = [[int(x) for x in row] for row in A]
    U = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, c):  # row dst += c * row src
        D[dst] = [x + c * y for x, y in zip(D[dst], D[src])]
        U[dst] = [x + c * y for x, y in zip(U[dst], U[src])]

    def add_col(src, dst, c):
        for row in D:
            row[dst] += c * row[src]
        for row in V:
            row[dst] += c * row[src]

    def negate_row(i):
        D[i] = [-x for x in D[i]]
        U[i] = [-x for x in U[i]]

    r = min(m, n)
    for k in range(r):
        while True:
            piv = None
            best = None
            for i in range(k, m):
                for j in range(k, n):
                    v = abs(D[i][j])
                    if v and (best is None or v < best):
                        best, piv = v, (i, j)
            if piv is None:
                break
            i, j = piv
            if i != k:
                swap_rows(k, i)
            if j != k:
                swap_cols(k, j)
            # clear column k
            dirty = False
            for i in range(k + 1, m):
                if D[i][k]:
                    q = D[i][k] // D[k][k]
                    add_row(k, i, -q)
                    if D[i][k]:
                        dirty = True
            for j in range(k + 1, n):
                if D[k][j]:
                    q = D[k][j] // D[k][k]
                    add_col(k, j, -q)
                    if D[k][j]:
                        dirty = True
            if dirty:
                continue
            # enforce divisibility of the remaining block
            offender = None
            for i in range(k + 1, m):
                for j in range(k + 1, n):
                    if D[i][j] % D[k][k]:
                        offender = i
                        break
                if offender:
                    break
            if offender is None:
                break
            add_row(offender, k, 1)
        if k < m and k < n and D[k][k] < 0:
            negate_row(k)
    return U, D, V


def invariant_factors(A):
    """Nontrivial diagonal entries (> 1) of the Smith form of A."""
    _, D, _ = snf(A)
    r = min(len(D), len(D[0]) if D else 0)
    return tuple(D[k][k] for k in range(r) if D[k][k] not in (0, 1))


def hnf(A):
    """Row Hermite normal form (canonical): pivots positive, entries above a
    pivot reduced into [0, pivot), zero rows moved to the bottom.  Output has
    the same shape as the input and the same row space.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    H = [[int(x) for x in row] for row in A]
    row = 0
    for col in range(n):
        while True:
            nz = [i for i in range(row, m) if H[i][col]]
            if not nz:
                break
            i0 = min(nz, key=lambda i: (abs(H[i][col]), i))
            if i0 != row:
                H[row], H[i0] = H[i0], H[row]
            done = True
            for i in range(row + 1, m):
                if H[i][col]:
                    q = H[i][col] // H[row][col]
                    H[i] = [x - q * y for x, y in zip(H[i], H[row])]
                    if H[i][col]:
                        done = False
            if done:
                break
        if row < m and H[row][col]:
            if H[row][col] < 0:
                H[row] = [-x for x in H[row]]
            for i in range(row):
                q = H[i][col] // H[row][col]
                if q:
                    H[i] = [x - q * y for x, y in zip(H[i], H[row])]
            row += 1
            if row == m:
                break
    return H


def hnf_basis(A):
    """Nonzero rows of hnf(A): a canonical basis of the row space over Z."""
    return [row for row in hnf(A) if any(row)]


def solve_int_kernel(t):
    """Basis of the integer kernel of the linear form x -> sum(x_i * t_i).

    Returns rows spanning {x in Z^n : x . t = 0}.
    """
    n = len(t)
    U, D, _ = snf([[x] for x in t])
    # U * t = (g, 0, ..., 0); rows 1..n-1 of U span the kernel
    rows = [U[i] for i in range(1, n)]
    if D[0][0] == 0:
        rows = [U[0]] + rows
    return rows
