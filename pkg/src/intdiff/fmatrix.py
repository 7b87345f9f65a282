"""The ideal F of finite-support matrices in the matrix-unit basis e_ij.

Coordinates are kept in the e-basis, where e_ij sends x^[j] to x^[i].
The identity of 1+F is never stored; ``det_one_plus`` and
``inverse_one_plus`` work on the finite block touched by ``f``.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Mapping

from .base import ZERO, scalar, scalar_str
from .errors import NotAUnit
from . import linalg


class FMatrix:
    """Finite sum of lambda_ij * e_ij (immutable, no stored zeros)."""

    __slots__ = ("entries", "_hash")

    def __init__(self, entries: Mapping | None = None):
        clean = {}
        for (i, j), c in (entries or {}).items():
            if i < 0 or j < 0:
                raise ValueError("matrix-unit indices must be natural numbers")
            c = scalar(c)
            if c != 0:
                clean[(int(i), int(j))] = c
        self.entries = dict(sorted(clean.items()))
        self._hash = None

    @classmethod
    def unit(cls, i: int, j: int, c=1) -> FMatrix:
        return cls({(i, j): c})

    @classmethod
    def _raw(cls, entries: dict) -> FMatrix:
        # entries already clean: Fraction values, no zeros
        obj = cls.__new__(cls)
        obj.entries = dict(sorted(entries.items()))
        obj._hash = None
        return obj

    def __bool__(self):
        return bool(self.entries)

    def __eq__(self, other):
        if not isinstance(other, FMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self.entries.items()))
        return self._hash

    def __repr__(self):
        inner = ", ".join(f"e{i},{j}: {scalar_str(c)}" for (i, j), c in self.entries.items())
        return f"FMatrix({{{inner}}})"

    def __add__(self, other: FMatrix) -> FMatrix:
        out = dict(self.entries)
        for k, c in other.entries.items():
            v = out.get(k, ZERO) + c
            if v:
                out[k] = v
            else:
                del out[k]
        return FMatrix._raw(out)

    def __neg__(self) -> FMatrix:
        return FMatrix._raw({k: -c for k, c in self.entries.items()})

    def __sub__(self, other: FMatrix) -> FMatrix:
        return self + (-other)

    def scale(self, c) -> FMatrix:
        c = scalar(c)
        if c == 0:
            return FMatrix()
        return FMatrix._raw({k: v * c for k, v in self.entries.items()})

    def __mul__(self, other: FMatrix) -> FMatrix:
        return fmul(self, other)

    def get(self, i: int, j: int) -> Fraction:
        return self.entries.get((i, j), ZERO)


def fmul(a: FMatrix, b: FMatrix) -> FMatrix:
    """Product under e_ij e_kl = delta_jk e_il."""
    by_row = {}
    for (k, l), c in b.entries.items():
        by_row.setdefault(k, []).append((l, c))
    out = {}
    for (i, j), c in a.entries.items():
        for l, d in by_row.get(j, ()):
            out[(i, l)] = out.get((i, l), ZERO) + c * d
    return FMatrix._raw({k: v for k, v in out.items() if v})


def deg_F(a: FMatrix) -> int:
    if not a.entries:
        return -1
    return max(max(i, j) for i, j in a.entries)


def e_to_E(a: FMatrix) -> dict:
    """Coefficients in the usual matrix units: e_ij = (j!/i!) E_ij."""
    return {(i, j): c * Fraction(factorial(j), factorial(i)) for (i, j), c in a.entries.items()}


def E_to_e(coords: Mapping) -> FMatrix:
    return FMatrix({(i, j): scalar(c) * Fraction(factorial(i), factorial(j))
                    for (i, j), c in coords.items()})


def block(f: FMatrix, n: int | None = None, coords: str = "e") -> list:
    """Dense n x n matrix of 1 + f on indices 0..n-1."""
    if n is None:
        n = deg_F(f) + 1
    source = f.entries if coords == "e" else e_to_E(f)
    m = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for (i, j), c in source.items():
        m[i][j] += c
    return m


def det_one_plus(f: FMatrix) -> Fraction:
    # the E-coordinate block is conjugate to the e-coordinate one by
    # diag(i!), so either gives the same value; E matches the definition
    return linalg.det_bareiss(block(f, coords="E"))


def is_unit_one_plus(f: FMatrix) -> bool:
    return det_one_plus(f) != 0


def inverse_one_plus(f: FMatrix) -> FMatrix:
    """g with (1+f)(1+g) = (1+g)(1+f) = 1, supported on f's block."""
    n = deg_F(f) + 1
    inv = linalg.inverse(block(f, n))
    if inv is None:
        raise NotAUnit(f"det(1 + f) = 0 for f = {f!r}")
    return FMatrix({(i, j): inv[i][j] - int(i == j) for i in range(n) for j in range(n)})


def one_plus_product(f: FMatrix, g: FMatrix) -> FMatrix:
    """(1+f)(1+g) - 1 = f + g + fg."""
    return f + g + fmul(f, g)
