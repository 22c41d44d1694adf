"""Exact linear algebra over Q.

Rank and kernels come from fraction-free (Bareiss) elimination on integer
rows.  Pivot choice is the first nonzero entry in a column-major scan, so
echelon forms and kernel bases are reproducible bit for bit.
"""
from __future__ import annotations

from functools import reduce
from math import gcd as igcd
from typing import Iterable, Sequence

from .rational import ONE, ZERO, Q, to_q


class RatMatrix:
    """Immutable rectangular matrix of rationals."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        rows = tuple(tuple(to_q(a) for a in r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("rows must all have the same length")
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, r: int, c: int) -> "RatMatrix":
        return cls([[0] * c for _ in range(r)], c)

    def transpose(self) -> "RatMatrix":
        return RatMatrix(zip(*self.rows), self.nrows) if self.nrows else RatMatrix([], 0)

    def column_permuted(self, perm: Sequence[int]) -> "RatMatrix":
        return RatMatrix([[r[j] for j in perm] for r in self.rows], self.ncols)

    def __matmul__(self, vec: Sequence) -> list:
        return [sum((a * to_q(v) for a, v in zip(r, vec)), ZERO) for r in self.rows]

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, RatMatrix) and self.rows == other.rows and self.ncols == other.ncols

    def __hash__(self) -> int:
        return hash((self.rows, self.ncols))

    def __repr__(self) -> str:
        return f"RatMatrix({self.nrows}x{self.ncols})"

    def is_symmetric(self) -> bool:
        n = self.nrows
        return n == self.ncols and all(self.rows[i][j] == self.rows[j][i]
                                       for i in range(n) for j in range(i))

    def is_zero(self) -> bool:
        return all(a == 0 for r in self.rows for a in r)


def _int_row(row: Sequence) -> list[int]:
    den = reduce(lambda acc, a: acc * int(a.denominator) // igcd(acc, int(a.denominator)), row, 1)
    return [int(a.numerator) * (den // int(a.denominator)) for a in row]


def _bareiss(rows: list[list[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form; returns (pivot rows, pivot columns)."""
    M = [r[:] for r in rows]
    nrows = len(M)
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if M[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            M[r], M[p] = M[p], M[r]
        pr = M[r]
        pv = pr[c]
        for i in range(r + 1, nrows):
            row = M[i]
            a = row[c]
            if a == 0:
                if prev != 1 or pv != 1:
                    for j in range(c + 1, ncols):
                        row[j] = row[j] * pv // prev
            else:
                for j in range(c + 1, ncols):
                    row[j] = (row[j] * pv - a * pr[j]) // prev
            row[c] = 0
        prev = pv
        pivots.append(c)
        r += 1
    return M[:r], pivots


def echelon(M: RatMatrix) -> tuple[list[list[int]], list[int]]:
    return _bareiss([_int_row(r) for r in M.rows], M.ncols)


def rank(M: RatMatrix) -> int:
    """Exact rank over Q."""
    if M.nrows == 0 or M.ncols == 0:
        return 0
    return len(echelon(M)[1])


def kernel_basis(M: RatMatrix) -> list[tuple]:
    """Right kernel {v : M v = 0}; each vector's first nonzero entry is 1."""
    ncols = M.ncols
    if M.nrows == 0:
        E, pivots = [], []
    else:
        E, pivots = echelon(M)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [ZERO] * ncols
        v[free] = ONE
        for r in range(len(pivots) - 1, -1, -1):
            pc = pivots[r]
            row = E[r]
            s = sum((row[j] * v[j] for j in range(pc + 1, ncols) if row[j] and v[j]), ZERO)
            v[pc] = -s / row[pc]
        lead = next(a for a in v if a != 0)
        basis.append(tuple(a / lead for a in v))
    return basis


def left_kernel_basis(M: RatMatrix) -> list[tuple]:
    """{c : c M = 0}, i.e. linear relations among the rows."""
    return kernel_basis(M.transpose()) if M.ncols else [
        tuple(ONE if i == j else ZERO for j in range(M.nrows)) for i in range(M.nrows)]


def solve(M: RatMatrix, b: Sequence) -> tuple | None:
    """One exact solution of M x = b, or None when inconsistent."""
    b = [to_q(v) for v in b]
    if len(b) != M.nrows:
        raise ValueError("right-hand side has the wrong length")
    aug = RatMatrix([list(r) + [bi] for r, bi in zip(M.rows, b)], M.ncols + 1)
    E, pivots = echelon(aug)
    if pivots and pivots[-1] == M.ncols:
        return None
    x = [ZERO] * M.ncols
    for r in range(len(pivots) - 1, -1, -1):
        pc = pivots[r]
        row = E[r]
        s = sum((row[j] * x[j] for j in range(pc + 1, M.ncols) if row[j] and x[j]), ZERO)
        x[pc] = (row[M.ncols] - s) / row[pc]
    return tuple(x)


def modular_rank(M: RatMatrix, p: int) -> int:
    """Rank of M reduced modulo the prime p.

    Raises ValueError when p divides a denominator of M.
    """
    rows = []
    for r in M.rows:
        out = []
        for a in r:
            den = int(a.denominator)
            if den % p == 0:
                raise ValueError(f"prime {p} divides a denominator")
            out.append(int(a.numerator) * pow(den, -1, p) % p)
        rows.append(out)
    rk = 0
    ncols = M.ncols
    for c in range(ncols):
        piv = next((i for i in range(rk, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        pr = rows[rk]
        inv = pow(pr[c], -1, p)
        for i in range(rk + 1, len(rows)):
            a = rows[i][c]
            if a:
                f = a * inv % p
                row = rows[i]
                for j in range(c, ncols):
                    row[j] = (row[j] - f * pr[j]) % p
        rk += 1
    return rk


__all__ = [
    "RatMatrix",
    "echelon",
    "kernel_basis",
    "left_kernel_basis",
    "modular_rank",
    "rank",
    "solve",
]
