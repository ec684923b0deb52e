"""Exact dense linear algebra over rationals and arbitrary-precision integers.

Everything here is exact: determinants use fraction-free elimination,
linear solves use rational LU, and characteristic polynomials are
recovered from exact integer determinant evaluations at integer points.
Floating point never appears.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm


class SingularMatrixError(ValueError):
    """Raised when an operation requires a nonsingular matrix."""


def _require_square(matrix) -> int:
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise ValueError("matrix is not square")
    return n


def det_bareiss(matrix) -> int:
    """Exact determinant of a square integer matrix.

    Fraction-free (Bareiss) elimination with first-nonzero row pivoting.
    Row updates are applied lazily: a row untouched for several pivot steps
    is rescaled only when it next participates, which keeps the cost at
    O(n * b^2) for matrices of bandwidth b instead of O(n^3).
    """
    n = _require_square(matrix)
    if n == 0:
        return 1
    rows = []
    for row in matrix:
        current = []
        for entry in row:
            if isinstance(entry, Fraction):
                if entry.denominator != 1:
                    raise ValueError("det_bareiss requires integer entries")
                entry = entry.numerator
            elif not isinstance(entry, int):
                raise ValueError("det_bareiss requires integer entries")
            current.append(entry)
        rows.append(current)

    sign = 1
    # pivot_hist[c] = pivot produced by column c-1 (minor of order c); [0] = 1
    pivot_hist = [1]
    lag = [0] * n  # rows[i] reflects the state after eliminating column lag[i]-1

    def refresh(i: int, c: int) -> None:
        # Bring row i up to the state after column c-1 was eliminated.
        if lag[i] == c:
            return
        num, den = pivot_hist[c], pivot_hist[lag[i]]
        row = rows[i]
        for j in range(n):
            if row[j]:
                row[j] = row[j] * num // den
        lag[i] = c

    for c in range(n):
        pivot_row = next((i for i in range(c, n) if rows[i][c]), None)
        if pivot_row is None:
            return 0
        if pivot_row != c:
            rows[c], rows[pivot_row] = rows[pivot_row], rows[c]
            lag[c], lag[pivot_row] = lag[pivot_row], lag[c]
            sign = -sign
        refresh(c, c)
        pivot = rows[c][c]
        prev = pivot_hist[c]
        for i in range(c + 1, n):
            if not rows[i][c]:
                continue
            refresh(i, c)
            head = rows[i][c]
            row_i, row_c = rows[i], rows[c]
            for j in range(c + 1, n):
                if row_c[j] or row_i[j]:
                    row_i[j] = (pivot * row_i[j] - head * row_c[j]) // prev
            row_i[c] = 0
            lag[i] = c + 1
        pivot_hist.append(pivot)
    return sign * pivot_hist[n]


# ---------------------------------------------------------------------------
# polynomials: ascending coefficient lists over Fraction/int


def poly_trim(p: list) -> list:
    while len(p) > 1 and p[-1] == 0:
        p = p[:-1]
    return p


def poly_mul(p: list, q: list) -> list:
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            if b != 0:
                out[i + j] += a * b
    return out


def poly_eval(p: list, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _newton_interpolate(xs: list[int], ys: list[int]) -> list[Fraction]:
    m = len(xs)
    coef = [Fraction(y) for y in ys]
    for j in range(1, m):
        for i in range(m - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = [coef[m - 1]]
    for i in range(m - 2, -1, -1):
        # poly <- poly*(x - xs[i]) + coef[i]
        shifted = [Fraction(0)] + poly
        for j, c in enumerate(poly):
            shifted[j] -= xs[i] * c
        shifted[0] += coef[i]
        poly = shifted
    return poly


def char_poly(matrix) -> list[Fraction]:
    """Exact char polynomial det(xI - M), ascending coefficients, monic.

    Rows are scaled to clear denominators, det(x*S - T) is evaluated with
    fraction-free elimination at n+1 integer points, and the polynomial is
    recovered by Newton interpolation.  The result is exact for any square
    rational matrix; sparse or banded matrices are handled in near-linear
    time per evaluation.
    """
    n = _require_square(matrix)
    if n == 0:
        return [Fraction(1)]
    scales = []
    scaled_rows = []
    for row in matrix:
        entries = [Fraction(e) for e in row]
        s = lcm(*(e.denominator for e in entries)) if entries else 1
        scales.append(s)
        scaled_rows.append([int(e * s) for e in entries])

    # Evaluation nodes 0, 1, -1, 2, -2, ... keep entry growth small.
    nodes = [0]
    while len(nodes) < n + 1:
        k = (len(nodes) + 1) // 2
        nodes.append(k if len(nodes) % 2 == 1 else -k)

    values = []
    for x in nodes:
        work = [list(r) for r in scaled_rows]
        for i in range(n):
            work[i][i] = x * scales[i] - work[i][i]
            for j in range(n):
                if j != i:
                    work[i][j] = -work[i][j]
        values.append(det_bareiss(work))

    poly = _newton_interpolate(nodes, values)
    denominator = 1
    for s in scales:
        denominator *= s
    poly = [c / denominator for c in poly]
    while len(poly) < n + 1:
        poly.append(Fraction(0))
    if poly[-1] != 1:
        raise ArithmeticError("characteristic polynomial is not monic; interpolation bug")
    return poly


# ---------------------------------------------------------------------------
# exact LU with partial pivoting


class LUDecomposition:
    """Exact LU factorization (first-nonzero partial pivoting) of a rational matrix.

    Factor once, then solve many right-hand sides.  Elimination skips zero
    entries, so banded systems factor and solve in O(n * b^2) / O(n * b).
    """

    def __init__(self, matrix) -> None:
        n = _require_square(matrix)
        self.n = n
        self.perm = list(range(n))
        self._low: list[list[tuple[int, Fraction]]] = [[] for _ in range(n)]
        u = [[Fraction(e) for e in row] for row in matrix]
        for c in range(n):
            pivot_row = next((i for i in range(c, n) if u[i][c] != 0), None)
            if pivot_row is None:
                raise SingularMatrixError("matrix is singular")
            if pivot_row != c:
                u[c], u[pivot_row] = u[pivot_row], u[c]
                self._low[c], self._low[pivot_row] = self._low[pivot_row], self._low[c]
                self.perm[c], self.perm[pivot_row] = self.perm[pivot_row], self.perm[c]
            pivot = u[c][c]
            row_c = u[c]
            for i in range(c + 1, n):
                if u[i][c] == 0:
                    continue
                f = u[i][c] / pivot
                self._low[i].append((c, f))
                row_i = u[i]
                for j in range(c + 1, n):
                    if row_c[j]:
                        row_i[j] -= f * row_c[j]
                row_i[c] = Fraction(0)
        self._u = u
        self._unz = [
            [j for j in range(i + 1, n) if u[i][j] != 0] for i in range(n)
        ]

    def solve(self, rhs) -> list[Fraction]:
        if len(rhs) != self.n:
            raise ValueError("right-hand side has wrong length")
        y = [Fraction(rhs[p]) for p in self.perm]
        for i in range(self.n):
            acc = y[i]
            for c, f in self._low[i]:
                if y[c]:
                    acc -= f * y[c]
            y[i] = acc
        x = [Fraction(0)] * self.n
        for i in range(self.n - 1, -1, -1):
            acc = y[i]
            for j in self._unz[i]:
                if x[j]:
                    acc -= self._u[i][j] * x[j]
            x[i] = acc / self._u[i][i]
        return x


def solve(matrix, rhs) -> list[Fraction]:
    """Exact solution of M x = rhs.

    Raises SingularMatrixError for singular M and ValueError for shape
    mismatches, so the two failure modes are distinguishable.
    """
    if len(rhs) != len(matrix):
        raise ValueError("matrix and right-hand side sizes disagree")
    return LUDecomposition(matrix).solve(rhs)


# ---------------------------------------------------------------------------
# graph matrices


def laplacian(g, order=None) -> list[list[int]]:
    """Combinatorial Laplacian (degree matrix minus adjacency), integer entries.

    ``order`` selects the vertex order of rows/columns (default: the
    graph's own order).  Any order gives a similar matrix with the same
    spectrum, so callers may pick one that concentrates the nonzeros.
    """
    vs = tuple(order) if order is not None else g.vertices
    pos = {v: i for i, v in enumerate(vs)}
    if len(pos) != g.vertex_count:
        raise ValueError("order must be a permutation of the graph's vertices")
    n = len(vs)
    mat = [[0] * n for _ in range(n)]
    for i, v in enumerate(vs):
        mat[i][i] = g.degree(v)
        for w in g.neighbors(v):
            mat[i][pos[w]] = -1
    return mat


def random_walk_laplacian(g, order=None) -> list[list[Fraction]]:
    """Degree-scaled Laplacian D^-1 L.

    Shares its characteristic polynomial with the symmetric normalized
    Laplacian D^-1/2 L D^-1/2 (they are similar), while keeping every
    entry rational.  Requires every vertex to have at least one neighbor.
    """
    vs = tuple(order) if order is not None else g.vertices
    pos = {v: i for i, v in enumerate(vs)}
    if len(pos) != g.vertex_count:
        raise ValueError("order must be a permutation of the graph's vertices")
    n = len(vs)
    mat = [[Fraction(0)] * n for _ in range(n)]
    for i, v in enumerate(vs):
        d = g.degree(v)
        if d == 0:
            raise ValueError(f"vertex {v} is isolated; normalization undefined")
        mat[i][i] = Fraction(1)
        for w in g.neighbors(v):
            mat[i][pos[w]] = Fraction(-1, d)
    return mat
