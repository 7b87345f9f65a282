"""Exact scalars, polynomials in H, and polynomials in x.

Scalars are :class:`fractions.Fraction` throughout; there is no floating
point anywhere in the kernel.

``HPoly`` is a polynomial in H stored as a coefficient tuple (lowest degree
first, no trailing zeros, ``()`` for zero).  ``PolyX`` is a polynomial in x
stored in the divided-power basis ``x^[s] = x^s / s!``.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping

Scalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def scalar(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        num, _, den = text.partition("/")
        try:
            if den:
                return Fraction(int(num), int(den))
            return Fraction(int(num))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad scalar {value!r}") from exc
    raise TypeError(f"cannot interpret {value!r} as a scalar")


def scalar_str(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _strip(coeffs) -> tuple:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class HPoly:
    """Polynomial in H with rational coefficients (immutable)."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _strip(scalar(c) for c in coeffs)
        self._hash = None

    @classmethod
    def const(cls, c) -> HPoly:
        return cls((c,))

    @classmethod
    def H(cls) -> HPoly:
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_term(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else ZERO

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else ZERO

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, HPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _strip((other,))
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("HPoly", self.coeffs))
        return self._hash

    def __repr__(self):
        return f"HPoly({[scalar_str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("H" if k == 1 else f"H^{k}")
            if mono and c == 1:
                parts.append(mono)
            elif mono:
                parts.append(f"{scalar_str(c)}*{mono}")
            else:
                parts.append(scalar_str(c))
        return " + ".join(parts)

    def __add__(self, other: HPoly) -> HPoly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return HPoly(out)

    def __neg__(self) -> HPoly:
        return HPoly(-c for c in self.coeffs)

    def __sub__(self, other: HPoly) -> HPoly:
        return self + (-other)

    def __mul__(self, other) -> HPoly:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return HPoly()
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return HPoly(out)

    __rmul__ = __mul__

    def scale(self, c) -> HPoly:
        c = scalar(c)
        if c == 0:
            return HPoly()
        return HPoly(x * c for x in self.coeffs)

    def __call__(self, value):
        """Evaluate at a scalar by Horner's rule."""
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def shift(self, k: int) -> HPoly:
        """Return q with q(H) = p(H + k), i.e. tau^k applied to p."""
        if k == 0 or len(self.coeffs) <= 1:
            return self
        lin = HPoly((k, 1))
        acc = HPoly()
        for c in reversed(self.coeffs):
            acc = acc * lin + HPoly((c,))
        return acc

    def scale_argument(self, c) -> HPoly:
        """Return q with q(H) = p(c*H)."""
        c = scalar(c)
        return HPoly(x * c**k for k, x in enumerate(self.coeffs))


def hpoly_shift(p: HPoly, k: int) -> HPoly:
    return p.shift(k)


class PolyX:
    """Polynomial in x as a finite map ``s -> c_s`` meaning sum c_s x^[s]."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, object] | None = None):
        clean = {}
        for s, c in (terms or {}).items():
            c = scalar(c)
            if s < 0:
                raise ValueError("negative degree in PolyX")
            if c != 0:
                clean[int(s)] = c
        self.terms = dict(sorted(clean.items()))

    @classmethod
    def basis(cls, s: int) -> PolyX:
        return cls({s: 1})

    @property
    def degree(self) -> int:
        return max(self.terms) if self.terms else -1

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, PolyX):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __repr__(self):
        inner = ", ".join(f"{s}: {scalar_str(c)}" for s, c in self.terms.items())
        return f"PolyX({{{inner}}})"

    def __add__(self, other: PolyX) -> PolyX:
        out = dict(self.terms)
        for s, c in other.terms.items():
            out[s] = out.get(s, ZERO) + c
        return PolyX(out)

    def __neg__(self) -> PolyX:
        return PolyX({s: -c for s, c in self.terms.items()})

    def __sub__(self, other: PolyX) -> PolyX:
        return self + (-other)

    def scale(self, c) -> PolyX:
        c = scalar(c)
        return PolyX({s: c * v for s, v in self.terms.items()})

    def coefficient(self, s: int) -> Fraction:
        return self.terms.get(s, ZERO)


def polyx_monomial_to_divided(coeffs: Iterable) -> PolyX:
    """sum c_s x^s  ->  sum (s! c_s) x^[s]."""
    return PolyX({s: scalar(c) * factorial(s) for s, c in enumerate(coeffs)})


def polyx_divided_to_monomial(p: PolyX) -> list:
    if not p.terms:
        return []
    out = [ZERO] * (p.degree + 1)
    for s, c in p.terms.items():
        out[s] = c / factorial(s)
    return out
