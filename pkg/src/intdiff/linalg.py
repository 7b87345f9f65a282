"""Exact linear algebra over Q on sparse rows.

Rows and columns are dicts ``index -> Fraction`` with no stored zeros.
Everything is deterministic: pivots are chosen as the smallest available
column index, so reported kernels do not depend on input ordering beyond
the column order itself.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm


def _axpy(target: dict, coeff, source: dict) -> None:
    # target += coeff * source, in place, dropping zeros
    for k, v in source.items():
        nv = target.get(k, 0) + coeff * v
        if nv:
            target[k] = nv
        else:
            target.pop(k, None)


class Echelon:
    """Incremental row-echelon basis of a vector space.

    ``add`` reduces a vector against the current pivots and keeps it if
    something survives, so ``rank`` is the dimension of the span so far.
    """

    def __init__(self):
        self.pivots = {}  # pivot key -> normalized row (pivot entry 1)

    def reduce(self, vec: dict) -> dict:
        vec = {k: Fraction(v) for k, v in vec.items() if v}
        # pivots are eliminated in key order; a pivot row never contains an
        # earlier pivot key, so one pass in sorted order is enough
        for p in sorted(self.pivots):
            c = vec.get(p)
            if c:
                _axpy(vec, -c, self.pivots[p])
        return vec

    def add(self, vec: dict) -> bool:
        vec = self.reduce(vec)
        if not vec:
            return False
        p = min(vec)
        inv = 1 / vec[p]
        row = {k: v * inv for k, v in vec.items()}
        # keep rows fully reduced so later reductions need a single pass
        for q, other in self.pivots.items():
            c = other.get(p)
            if c:
                _axpy(other, -c, row)
        self.pivots[p] = row
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)


def rank(vectors) -> int:
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return ech.rank


def rref(rows: list, ncols: int):
    """Reduced row echelon form. Returns (rows, pivot_columns)."""
    work = [dict(r) for r in rows if r]
    pivots = []
    out = []
    for col in range(ncols):
        pick = None
        for idx, r in enumerate(work):
            if r.get(col):
                pick = idx
                break
        if pick is None:
            continue
        row = work.pop(pick)
        inv = 1 / row[col]
        row = {k: v * inv for k, v in row.items()}
        for r in work:
            c = r.get(col)
            if c:
                _axpy(r, -c, row)
        for r in out:
            c = r.get(col)
            if c:
                _axpy(r, -c, row)
        work = [r for r in work if r]
        out.append(row)
        pivots.append(col)
    return out, pivots


def nullspace_columns(columns: list) -> list:
    """Basis of {v : sum_j v_j * columns[j] = 0}.

    ``columns`` is a list of sparse column vectors (dicts keyed by row).
    Returns a list of dicts ``j -> coefficient``, one per free column,
    with the free coefficient normalized to 1.
    """
    ncols = len(columns)
    rows = {}
    for j, col in enumerate(columns):
        for i, v in col.items():
            if v:
                rows.setdefault(i, {})[j] = Fraction(v)
    reduced, pivots = rref([rows[i] for i in sorted(rows)], ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = {free: Fraction(1)}
        for row, p in zip(reduced, pivots):
            c = row.get(free)
            if c:
                vec[p] = -c
        basis.append(dict(sorted(vec.items())))
    return basis


def det_bareiss(matrix: list) -> Fraction:
    """Determinant of a square matrix of rationals, fraction-free.

    Rows are scaled to integers first; Bareiss elimination then keeps every
    intermediate an exact integer.
    """
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    m = []
    for row in matrix:
        row = [Fraction(v) for v in row]
        d = lcm(*(v.denominator for v in row))
        scale /= d
        m.append([int(v * d) for v in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1] * scale


def inverse(matrix: list):
    """Gauss-Jordan inverse of a square rational matrix, or None if singular."""
    n = len(matrix)
    aug = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                c = aug[r][col]
                aug[r] = [a - c * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]
