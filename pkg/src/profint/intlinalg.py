"""Exact integer linear algebra: extended gcd, Smith normal form with
unimodular witnesses, modular congruence systems, and the solvability test
for a single integer-coefficient equation over the restricted completion.

Matrices hold arbitrary-precision integers and are immutable after
construction.  The Smith reduction pivots on the smallest nonzero absolute
value (ties broken lexicographically), so the witnesses L and R are
reproducible across runs.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import InputError
from .pseudonumber import Pseudonumber, eval_mod, from_integer
from .supernatural import Supernatural


class IntMatrix:
    """Dense integer matrix, row-major, immutable."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows_of_entries):
        entries = tuple(tuple(int(x) for x in row) for row in rows_of_entries)
        if not entries or not entries[0]:
            raise InputError("matrix dimensions must be positive")
        cols = len(entries[0])
        if any(len(row) != cols for row in entries):
            raise InputError("ragged rows")
        object.__setattr__(self, "rows", len(entries))
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    def __getitem__(self, index):
        i, j = index
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise InputError(f"cannot multiply {self.shape} by {other.shape}")
        return IntMatrix([
            [
                sum(self.entries[i][k] * other.entries[k][j] for k in range(self.cols))
                for j in range(other.cols)
            ]
            for i in range(self.rows)
        ])

    def mul_vec(self, vec):
        """Matrix times column vector; entries may be any ring elements that
        mix with integers (plain ints or pseudonumbers)."""
        vec = list(vec)
        if len(vec) != self.cols:
            raise InputError(f"vector length {len(vec)} does not match {self.shape}")
        out = []
        for row in self.entries:
            acc = row[0] * vec[0]
            for a, x in zip(row[1:], vec[1:]):
                acc = acc + a * x
            out.append(acc)
        return out

    @property
    def shape(self):
        return (self.rows, self.cols)

    def determinant(self) -> int:
        """Exact determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise InputError("determinant needs a square matrix")
        n = self.rows
        m = [list(row) for row in self.entries]
        sign, prev = 1, 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k]:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    def __str__(self):
        return ";".join(",".join(str(x) for x in row) for row in self.entries)

    def __repr__(self):
        return f"IntMatrix({str(self)!r})"


def parse_int_matrix(text: str) -> IntMatrix:
    """Parse ``2,4;6,8`` (rows separated by ;, entries by ,)."""
    try:
        rows = [
            [int(cell) for cell in row.split(",")]
            for row in text.strip().split(";")
        ]
    except ValueError as exc:
        raise InputError(f"bad matrix {text!r}: {exc}") from None
    return IntMatrix(rows)


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with g = gcd(a, b) >= 0 and s*a + t*b = g; (0,0) -> (0,0,0)."""
    if a == 0 and b == 0:
        return 0, 0, 0
    s, next_s = 1, 0
    t, next_t = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        s, next_s = next_s, s - q * next_s
        t, next_t = next_t, t - q * next_t
        g, next_g = next_g, g - q * next_g
    if g < 0:
        g, s, t = -g, -s, -t
    return g, s, t


@dataclass(frozen=True)
class SnfResult:
    """Diagonalization left @ source @ right = diag with unimodular witnesses,
    nonnegative diagonal and a divisibility chain."""

    left: IntMatrix
    diag: IntMatrix
    right: IntMatrix

    def diagonal(self) -> list[int]:
        return [
            self.diag.entries[i][i]
            for i in range(min(self.diag.rows, self.diag.cols))
        ]


def smith_normal_form(matrix: IntMatrix) -> SnfResult:
    s, t = matrix.rows, matrix.cols
    a = [list(row) for row in matrix.entries]
    left = [[int(i == j) for j in range(s)] for i in range(s)]
    right = [[int(i == j) for j in range(t)] for i in range(t)]

    def swap_rows(i, j):
        if i != j:
            a[i], a[j] = a[j], a[i]
            left[i], left[j] = left[j], left[i]

    def swap_cols(i, j):
        if i != j:
            for row in a:
                row[i], row[j] = row[j], row[i]
            for row in right:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        if q:
            for x in range(t):
                a[dst][x] += q * a[src][x]
            for x in range(s):
                left[dst][x] += q * left[src][x]

    def add_col(dst, src, q):
        if q:
            for row in a:
                row[dst] += q * row[src]
            for row in right:
                row[dst] += q * row[src]

    for k in range(min(s, t)):
        while True:
            pivot = None
            for i in range(k, s):
                for j in range(k, t):
                    if a[i][j] and (
                        pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])
                    ):
                        pivot = (i, j)
            if pivot is None:
                break
            swap_rows(k, pivot[0])
            swap_cols(k, pivot[1])
            p = a[k][k]
            dirty = False
            for i in range(k + 1, s):
                add_row(i, k, -(a[i][k] // p))
                dirty = dirty or bool(a[i][k])
            for j in range(k + 1, t):
                add_col(j, k, -(a[k][j] // p))
                dirty = dirty or bool(a[k][j])
            if dirty:
                continue
            offender = next(
                (
                    i
                    for i in range(k + 1, s)
                    for j in range(k + 1, t)
                    if a[i][j] % p
                ),
                None,
            )
            if offender is None:
                break
            add_row(k, offender, 1)
        if a[k][k] < 0:
            a[k] = [-x for x in a[k]]
            left[k] = [-x for x in left[k]]
    return SnfResult(IntMatrix(left), IntMatrix(a), IntMatrix(right))


def solve_congruences(matrix: IntMatrix, rhs, modulus: int):
    """A vector X with matrix @ X = rhs (mod modulus), components in
    [0, modulus), or None when the system has no solution.

    Diagonalizes the matrix, solves each scalar congruence by the gcd test,
    and maps the result back through the right witness.
    """
    rhs = [int(x) for x in rhs]
    if len(rhs) != matrix.rows:
        raise InputError(f"right side length {len(rhs)} does not match {matrix.shape}")
    if modulus < 1:
        raise InputError(f"modulus must be positive, got {modulus}")
    if modulus == 1:
        return [0] * matrix.cols
    snf = smith_normal_form(matrix)
    transformed = snf.left.mul_vec(rhs)
    rank_bound = min(matrix.rows, matrix.cols)
    y = [0] * matrix.cols
    for i in range(matrix.rows):
        d = snf.diag.entries[i][i] if i < rank_bound else 0
        r = transformed[i] % modulus
        g = gcd(d, modulus)
        if r % g:
            return None
        if d:
            reduced = modulus // g
            y[i] = (r // g) * pow(d // g, -1, reduced) % reduced if reduced > 1 else 0
    return [x % modulus for x in snf.right.mul_vec(y)]


def solvable_in_completion(pi: Supernatural, a: int, b) -> bool:
    """Whether a*x = b is solvable over the completion restricted by pi.

    For nonzero a this is the gcd criterion: b must vanish modulo
    gcd(|a|, pi).  For a = 0 it degenerates to b vanishing everywhere.
    """
    from .word_problem import is_zero

    b = b if isinstance(b, Pseudonumber) else from_integer(b)
    if a == 0:
        return bool(is_zero(pi, b))
    d = pi.gcd(abs(a))
    return eval_mod(b, d, pi) == 0
