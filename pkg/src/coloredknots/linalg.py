"""Exact integer and GF(p) matrix routines.

Matrices are plain lists of lists of Python ints, so entries never overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

Matrix = list[list[int]]


def as_matrix(m: Sequence[Sequence[int]]) -> Matrix:
    rows = [list(map(int, row)) for row in m]
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("matrix rows have different lengths")
    return rows


def shape(m: Sequence[Sequence[int]]) -> tuple[int, int]:
    return len(m), (len(m[0]) if m else 0)


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(m: Sequence[Sequence[int]]) -> Matrix:
    return [list(col) for col in zip(*m)]


def matvec(m: Sequence[Sequence[int]], v: Sequence[int]) -> list[int]:
    return [sum(a * b for a, b in zip(row, v)) for row in m]


def quadratic_form(m: Sequence[Sequence[int]], v: Sequence[int]) -> int:
    """Return the integer v^T m v."""
    return sum(a * b for a, b in zip(v, matvec(m, v)))


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def det_exact(m: Sequence[Sequence[int]]) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    a = as_matrix(m)
    n, cols = shape(a)
    if n != cols:
        raise ValueError(f"determinant needs a square matrix, got {n}x{cols}")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact division is guaranteed by Sylvester's identity
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rank_modp(m: Sequence[Sequence[int]], p: int) -> int:
    return shape(m)[1] - len(nullspace_modp(m, p))


def nullspace_modp(m: Sequence[Sequence[int]], p: int) -> list[list[int]]:
    """Basis of {v : m v = 0 mod p}.

    The basis is in reduced column-echelon form: each vector's first nonzero
    entry is a 1, every other basis vector vanishes at that position, and the
    vectors are sorted by that position.
    """
    if not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    rows, cols = shape(m)
    if cols == 0:
        return []
    # Eliminate on the column-reversed matrix so that free variables are the
    # leftmost coordinates; that is what puts the basis in column-echelon form.
    a = [[m[i][cols - 1 - j] % p for j in range(cols)] for i in range(rows)]
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        a[r] = [x * inv % p for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [0] * cols
        v[f] = 1
        for row, pc in enumerate(pivots):
            v[pc] = -a[row][f] % p
        basis.append(v[::-1])
    basis.sort(key=lambda v: next(i for i, x in enumerate(v) if x))
    return basis


@dataclass(frozen=True)
class SmithForm:
    """Invariant factors d_1 | d_2 | ... of an integer matrix (zeros last)."""

    diagonal: tuple[int, ...]
    rows: int
    cols: int

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)

    def torsion(self) -> tuple[int, ...]:
        """Nontrivial finite cyclic factors of the cokernel."""
        return tuple(d for d in self.diagonal if d > 1)

    def free_rank(self) -> int:
        return self.rows - self.rank


def smith_normal_form(m: Sequence[Sequence[int]]) -> SmithForm:
    a = as_matrix(m)
    rows, cols = shape(a)
    n = min(rows, cols)
    for t in range(n):
        nz = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
        if not nz:
            break
        while True:
            _, i, j = min(nz)
            a[t], a[i] = a[i], a[t]
            for row in a:
                row[t], row[j] = row[j], row[t]
            piv = a[t][t]
            done = True
            for i in range(t + 1, rows):
                q = a[i][t] // piv
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    done = False
            for j in range(t + 1, cols):
                q = a[t][j] // piv
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    done = False
            if done:
                # pivot must divide the rest of the block for the chain to hold
                bad = next(
                    (i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % piv),
                    None,
                )
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad])]
            nz = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
    diag = tuple(abs(a[i][i]) for i in range(n))
    nonzero = tuple(d for d in diag if d)
    return SmithForm(nonzero + (0,) * (n - len(nonzero)), rows, cols)
