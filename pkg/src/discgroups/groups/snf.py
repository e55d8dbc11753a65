"""Exact Smith normal form over the integers.

Matrices are lists of lists of Python ints, so nothing ever overflows.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ConsistencyError

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A: Matrix, B: Matrix) -> Matrix:
    if not A:
        return []
    cols = len(B[0]) if B else 0
    Bt = list(zip(*B)) if B else [()] * cols
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def determinant(M: Matrix) -> int:
    """Bareiss fraction-free elimination."""
    n = len(M)
    if n == 0:
        return 1
    A = [row[:] for row in M]
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


@dataclass
class SmithForm:
    """``U * A * V == D`` with ``U``, ``V`` unimodular and ``D`` diagonal."""

    D: Matrix
    U: Matrix
    V: Matrix

    @property
    def diagonal(self) -> list[int]:
        k = min(len(self.D), len(self.D[0]) if self.D else 0)
        return [self.D[i][i] for i in range(k)]

    @property
    def rank(self) -> int:
        return sum(1 for x in self.diagonal if x)

    def certify(self, A: Matrix) -> None:
        if matmul(matmul(self.U, A), self.V) != self.D:
            raise ConsistencyError("U*A*V does not reproduce D")
        if abs(determinant(self.U)) != 1 or abs(determinant(self.V)) != 1:
            raise ConsistencyError("transform matrices are not unimodular")
        diag = self.diagonal
        for i, row in enumerate(self.D):
            for j, x in enumerate(row):
                if i != j and x:
                    raise ConsistencyError("D is not diagonal")
        nz = [x for x in diag if x]
        if any(x < 0 for x in diag) or any(b % a for a, b in zip(nz, nz[1:])):
            raise ConsistencyError("invariant factors do not form a divisibility chain")
        if any(diag[k] == 0 and diag[k + 1] != 0 for k in range(len(diag) - 1)):
            raise ConsistencyError("zero invariant factor before a nonzero one")


def smith_normal_form(A: Matrix) -> SmithForm:
    """Smith form by pivoting on the smallest nonzero absolute value."""
    m = len(A)
    n = len(A[0]) if m else 0
    D = [list(map(int, row)) for row in A]
    U = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (D, V):
            for row in M:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        for M in (D, U):
            rs, rd = M[src], M[dst]
            for k, x in enumerate(rs):
                if x:
                    rd[k] += q * x

    def add_col(dst, src, q):
        for M in (D, V):
            for row in M:
                if row[src]:
                    row[dst] += q * row[src]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = D[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = D[t][t]
            dirty = False
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // p))
                    dirty = dirty or D[i][t] != 0
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // p))
                    dirty = dirty or D[t][j] != 0
            if dirty:
                # a remainder is now smaller than the pivot; move it in
                best = None
                for i in range(t, m):
                    if D[i][t] and (best is None or abs(D[i][t]) < best[0]):
                        best = (abs(D[i][t]), i, "r")
                for j in range(t, n):
                    if D[t][j] and (best is None or abs(D[t][j]) < best[0]):
                        best = (abs(D[t][j]), j, "c")
                if best[2] == "r":
                    swap_rows(t, best[1])
                else:
                    swap_cols(t, best[1])
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if D[t][t] < 0:
            for M in (D, U):
                M[t] = [-x for x in M[t]]
    return SmithForm(D, U, V)


def lattice_basis(rows: list[list[int]], ncols: int) -> Matrix:
    """Echelon basis of the row lattice, built with unimodular row operations."""
    basis: dict[int, list[int]] = {}
    for row in rows:
        r = list(row)
        for c in range(ncols):
            if r[c] == 0:
                continue
            b = basis.get(c)
            if b is None:
                basis[c] = r if r[c] > 0 else [-x for x in r]
                break
            g, x, y = _egcd(b[c], r[c])
            a_, r_ = b[c] // g, r[c] // g
            basis[c] = [x * u + y * v for u, v in zip(b, r)]
            r = [a_ * v - r_ * u for u, v in zip(b, r)]
    return [basis[c] for c in sorted(basis)]


def in_row_lattice(row: list[int], basis: Matrix) -> bool:
    r = list(row)
    for b in basis:
        c = next(k for k, x in enumerate(b) if x)
        if r[c] % b[c]:
            return False
        q = r[c] // b[c]
        if q:
            r = [u - q * v for u, v in zip(r, b)]
    return not any(r)


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    """``g, x, y`` with ``x*a + y*b == g == gcd(a, b) > 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0
