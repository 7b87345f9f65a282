"""Elements of I1 in canonical form.

An element is ``sum_i b_i(H) v_i + sum lambda_kl e_kl`` with left
coefficients b_i, where v_i is Int^i for i > 0, 1 for i = 0 and D^|i| for
i < 0.  Multiplication is closed-form; every product of two basis words
reduces in one step:

* v_i p(H) = p(H - i) v_i
* v_i v_j = v_(i+j) when i, j have the same sign or i <= 0 <= j, and
  Int^a D^b = v_(a-b) - sum_{k<m} e_(k+a-m, k+b-m) with m = min(a, b)
* v_i e_kl = e_(k+i, l),  e_kl v_i = e_(k, l-i)  (zero off the quadrant)
* p(H) e_kl = p(k+1) e_kl,  e_kl p(H) = p(l+1) e_kl
"""

from __future__ import annotations

from typing import Mapping

from .base import ZERO, HPoly, scalar
from .b1 import B1Elem
from .errors import NotAUnit
from .fmatrix import FMatrix, deg_F, fmul, inverse_one_plus, is_unit_one_plus
from . import linalg


class IOp:
    __slots__ = ("towers", "fpart", "_hash")

    def __init__(self, towers: Mapping[int, HPoly] | None = None, fpart: FMatrix | None = None):
        clean = {}
        for i, p in (towers or {}).items():
            if not isinstance(p, HPoly):
                p = HPoly(p)
            if p:
                clean[int(i)] = p
        self.towers = dict(sorted(clean.items()))
        self.fpart = fpart if fpart is not None else FMatrix()
        self._hash = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> IOp:
        return cls()

    @classmethod
    def const(cls, c) -> IOp:
        return cls({0: HPoly.const(c)})

    @classmethod
    def from_f(cls, f: FMatrix) -> IOp:
        return cls({}, f)

    @classmethod
    def one_plus(cls, f: FMatrix) -> IOp:
        return cls({0: HPoly.const(1)}, f)

    # -- protocol ----------------------------------------------------------

    def __bool__(self):
        return bool(self.towers) or bool(self.fpart)

    def __eq__(self, other):
        if not isinstance(other, IOp):
            return NotImplemented
        return self.towers == other.towers and self.fpart == other.fpart

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((tuple(self.towers.items()), self.fpart))
        return self._hash

    def __repr__(self):
        return f"IOp({self})"

    def __str__(self):
        from .parser import format_iop

        return format_iop(self)

    def __add__(self, other: IOp) -> IOp:
        return add(self, other)

    def __sub__(self, other: IOp) -> IOp:
        return add(self, neg(other))

    def __neg__(self) -> IOp:
        return neg(self)

    def __mul__(self, other) -> IOp:
        if isinstance(other, IOp):
            return mul(self, other)
        return scalar_mul(other, self)

    def __rmul__(self, other) -> IOp:
        return scalar_mul(other, self)

    def __pow__(self, n: int) -> IOp:
        return power(self, n)

    @property
    def bandwidth(self) -> int:
        """max(max |tower index|, deg_F) + 1; the action matrix is banded by it."""
        reach = max((abs(i) for i in self.towers), default=0)
        return max(reach, deg_F(self.fpart)) + 1


# -- generators ------------------------------------------------------------

def generator(name: str, i: int | None = None, j: int | None = None) -> IOp:
    if name == "one":
        return IOp.const(1)
    if name == "H":
        return IOp({0: HPoly.H()})
    if name == "der":
        return IOp({-1: HPoly.const(1)})
    if name == "int":
        return IOp({1: HPoly.const(1)})
    if name == "x":
        return mul(generator("int"), generator("H"))
    if name == "e":
        if i is None or j is None or i < 0 or j < 0:
            raise ValueError("e(i, j) needs natural-number indices")
        return IOp.from_f(FMatrix.unit(i, j))
    raise ValueError(f"unknown generator {name!r}")


ONE_OP = IOp.const(1)
H_OP = generator("H")
DER = generator("der")
INT = generator("int")


# -- linear structure ------------------------------------------------------

def add(a: IOp, b: IOp) -> IOp:
    towers = dict(a.towers)
    for i, p in b.towers.items():
        towers[i] = towers[i] + p if i in towers else p
    return IOp(towers, a.fpart + b.fpart)


def neg(a: IOp) -> IOp:
    return IOp({i: -p for i, p in a.towers.items()}, -a.fpart)


def scalar_mul(c, a: IOp) -> IOp:
    c = scalar(c)
    if c == 0:
        return IOp()
    return IOp({i: p.scale(c) for i, p in a.towers.items()}, a.fpart.scale(c))


# -- multiplication --------------------------------------------------------

def _acc_tower(towers: dict, i: int, p: HPoly) -> None:
    if p:
        towers[i] = towers[i] + p if i in towers else p


def _acc_f(f: dict, key, c) -> None:
    if c:
        f[key] = f.get(key, ZERO) + c


def mul(a: IOp, b: IOp) -> IOp:
    towers = {}
    f = {}

    for i, p in a.towers.items():
        # tower x tower
        for j, q in b.towers.items():
            coeff = p * q.shift(-i)
            if not coeff:
                continue
            _acc_tower(towers, i + j, coeff)
            if i > 0 and j < 0:
                ia, jb = i, -j
                m = min(ia, jb)
                for k in range(m):
                    r, c = k + ia - m, k + jb - m
                    _acc_f(f, (r, c), -coeff(r + 1))
        # tower x F: p(H) v_i e_kl = p(k+i+1) e_(k+i, l)
        for (k, l), c in b.fpart.entries.items():
            r = k + i
            if r >= 0:
                _acc_f(f, (r, l), p(r + 1) * c)

    for (k, l), c in a.fpart.entries.items():
        # F x tower: e_kl q(H) v_j = q(l+1) e_(k, l-j)
        for j, q in b.towers.items():
            col = l - j
            if col >= 0:
                _acc_f(f, (k, col), c * q(l + 1))

    for key, c in fmul(a.fpart, b.fpart).entries.items():
        _acc_f(f, key, c)

    return IOp(towers, FMatrix._raw({k: v for k, v in f.items() if v}))


def power(a: IOp, n: int) -> IOp:
    if n < 0:
        raise ValueError("negative powers are not defined in I1")
    result = ONE_OP
    base = a
    while n:
        if n & 1:
            result = mul(result, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return result


def commutator(a: IOp, b: IOp) -> IOp:
    return add(mul(a, b), neg(mul(b, a)))


# -- grading and projections -----------------------------------------------

def graded_component(a: IOp, i: int) -> IOp:
    """b_i v_i plus the e_kl with k - l = i (ad(H)-weight i)."""
    towers = {i: a.towers[i]} if i in a.towers else {}
    f = FMatrix._raw({(k, l): c for (k, l), c in a.fpart.entries.items() if k - l == i})
    return IOp(towers, f)


def weights(a: IOp) -> list:
    ws = set(a.towers)
    ws.update(k - l for k, l in a.fpart.entries)
    return sorted(ws)


def f_part(a: IOp) -> FMatrix:
    return a.fpart


def pi(a: IOp) -> B1Elem:
    """Image in B1: v_i goes to D^(-i)."""
    return B1Elem({-i: p for i, p in a.towers.items()})


def is_in_K_plus_F(a: IOp) -> bool:
    if not a.towers:
        return True
    return list(a.towers) == [0] and a.towers[0].is_constant()


def is_in_KH_plus_F(a: IOp) -> bool:
    return all(i == 0 for i in a.towers)


# -- units -----------------------------------------------------------------

def _unit_split(a: IOp):
    # a = lam * (1 + f); returns (lam, f) or None when a is not of that shape
    if list(a.towers) != [0] or not a.towers[0].is_constant():
        return None
    lam = a.towers[0].constant_term()
    return lam, a.fpart.scale(1 / lam)


def is_unit(a: IOp) -> bool:
    split = _unit_split(a)
    return split is not None and is_unit_one_plus(split[1])


def unit_inverse(a: IOp) -> IOp:
    split = _unit_split(a)
    if split is None:
        raise NotAUnit("units of I1 are lam*(1+f) with lam != 0 and f in F")
    lam, f = split
    g = inverse_one_plus(f)
    return scalar_mul(1 / lam, IOp.one_plus(g))


# -- centralizer probe -----------------------------------------------------

def centralizer_F_dim(a: IOp, N: int) -> int:
    """dim of {f in span(e_ij : i, j <= N) : [a, f] = 0}.

    [a, f] always lies in F, so the condition is a finite linear system in
    the (N+1)^2 unknowns, ordered lexicographically by (i, j).
    """
    columns = []
    for i in range(N + 1):
        for j in range(N + 1):
            c = commutator(a, IOp.from_f(FMatrix.unit(i, j)))
            assert not c.towers
            columns.append(c.fpart.entries)
    return (N + 1) ** 2 - linalg.rank(columns)
