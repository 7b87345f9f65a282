"""The quotient B1 = K[H][D, D^-1; tau], tau(H) = H + 1.

Elements are stored with left coefficients: a map from the D-exponent k to
the HPoly p_k, meaning sum p_k(H) D^k.  Products use D^k q = tau^k(q) D^k.

Weight convention: D^k has ad(H)-weight -k, because [H, D] = -D.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .base import HPoly
from .errors import InvalidComponent


class B1Elem:
    __slots__ = ("components", "_hash")

    def __init__(self, components: Mapping[int, HPoly] | None = None):
        clean = {}
        for k, p in (components or {}).items():
            if not isinstance(p, HPoly):
                p = HPoly(p)
            if p:
                clean[int(k)] = p
        self.components = dict(sorted(clean.items()))
        self._hash = None

    @classmethod
    def const(cls, c) -> B1Elem:
        return cls({0: HPoly.const(c)})

    @classmethod
    def H(cls) -> B1Elem:
        return cls({0: HPoly.H()})

    @classmethod
    def der(cls, k: int = 1) -> B1Elem:
        return cls({k: HPoly.const(1)})

    def __bool__(self):
        return bool(self.components)

    def __eq__(self, other):
        if not isinstance(other, B1Elem):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self.components.items()))
        return self._hash

    def __repr__(self):
        inner = ", ".join(f"{k}: {p}" for k, p in self.components.items())
        return f"B1Elem({{{inner}}})"

    def __add__(self, other: B1Elem) -> B1Elem:
        out = dict(self.components)
        for k, p in other.components.items():
            out[k] = out[k] + p if k in out else p
        return B1Elem(out)

    def __neg__(self) -> B1Elem:
        return B1Elem({k: -p for k, p in self.components.items()})

    def __sub__(self, other: B1Elem) -> B1Elem:
        return self + (-other)

    def scale(self, c) -> B1Elem:
        return B1Elem({k: p.scale(c) for k, p in self.components.items()})

    def __mul__(self, other: B1Elem) -> B1Elem:
        return b1_mul(self, other)


def b1_mul(a: B1Elem, b: B1Elem) -> B1Elem:
    out = {}
    for i, p in a.components.items():
        for j, q in b.components.items():
            term = p * q.shift(i)
            out[i + j] = out[i + j] + term if i + j in out else term
    return B1Elem(out)


def sigma_n_apply(n: int, a: B1Elem) -> B1Elem:
    """The monomorphism H -> H/n, D -> D^n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    inv = Fraction(1, n)
    return B1Elem({n * k: p.scale_argument(inv) for k, p in a.components.items()})


def sigma_n_preimage_search(n: int, target: B1Elem, D: int):
    """Preimage of ``target`` under sigma_n with exponents in [-D, D] and
    deg_H <= D, or None.

    sigma_n is graded (exponent k goes to n*k) and acts on each coefficient
    by the invertible substitution H -> H/n, so the search decouples into
    one exact solve per component.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    out = {}
    for k, q in target.components.items():
        if k % n:
            return None
        pre_k = k // n
        if abs(pre_k) > D:
            return None
        p = q.scale_argument(n)
        if p.degree > D:
            return None
        out[pre_k] = p
    pre = B1Elem(out)
    assert sigma_n_apply(n, pre) == target
    return pre


def ad_eigenvalue_on_component(a: HPoly, i: int):
    """Eigenvalue nu of ad(a) on the weight-i component K[H] D^(-i), or None.

    [a, beta D^(-i)] = (a - tau^(-i)(a)) beta D^(-i), so an eigenvalue
    exists iff that difference is a constant; zero is reported as None.
    """
    if i == 0:
        raise InvalidComponent("component index must be nonzero")
    diff = a - a.shift(-i)
    if not diff.is_constant():
        return None
    nu = diff.constant_term()
    return nu if nu != 0 else None

