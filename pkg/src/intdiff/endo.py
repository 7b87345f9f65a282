"""Endomorphisms of I1 given by generator images, and their decomposition.

An :class:`Endo` is fixed by (H', Int', D') = images of (H, Int, D).  The
constructor checks the defining relations, so every Endo in existence is a
genuine algebra endomorphism.  :func:`decompose` runs the argument that such
an endomorphism is t_nu composed with an inner automorphism by a unit
1 + u, u in F, and returns (nu, u) after checking the reconstruction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .base import HPoly, PolyX, scalar
from .errors import ReconstructionMismatch, RelationViolated, TheoremViolation, ZeroScalar, NotAUnit
from .fmatrix import FMatrix, deg_F, inverse_one_plus, is_unit_one_plus
from .iop import DER, H_OP, INT, ONE_OP, IOp, add, commutator, mul, pi, scalar_mul
from . import fredholm


def relation_residuals(h: IOp, i: IOp, d: IOp):
    """Yield (name, residual) for each defining relation; zero means it holds."""
    proj = ONE_OP - mul(i, d)
    yield "D*Int = 1", mul(d, i) - ONE_OP
    yield "[H,Int] = Int", commutator(h, i) - i
    yield "[H,D] = -D", commutator(h, d) + d
    yield "H*(1-Int*D) = 1-Int*D", mul(h, proj) - proj
    yield "(1-Int*D)*H = 1-Int*D", mul(proj, h) - proj


@dataclass(frozen=True, eq=False)
class Endo:
    h_img: IOp
    int_img: IOp
    der_img: IOp
    _powers: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        for name, residual in relation_residuals(self.h_img, self.int_img, self.der_img):
            if residual:
                raise RelationViolated(name, residual)

    def images(self):
        return self.h_img, self.int_img, self.der_img

    def __eq__(self, other):
        if not isinstance(other, Endo):
            return NotImplemented
        return self.images() == other.images()

    def __hash__(self):
        return hash(self.images())

    def v_image(self, i: int) -> IOp:
        """sigma(v_i): Int'^i, 1 or D'^|i|, cached per endomorphism."""
        cache = self._powers
        if i in cache:
            return cache[i]
        if i == 0:
            val = ONE_OP
        else:
            step = self.int_img if i > 0 else self.der_img
            prev = self.v_image(i - 1 if i > 0 else i + 1)
            val = mul(prev, step)
        cache[i] = val
        return val


def validate(h_img: IOp, int_img: IOp, der_img: IOp) -> Endo:
    return Endo(h_img, int_img, der_img)


IDENTITY = Endo(H_OP, INT, DER)


def _poly_at(p: HPoly, x: IOp) -> IOp:
    acc = IOp()
    for c in reversed(p.coeffs):
        acc = add(mul(acc, x), IOp.const(c))
    return acc


def apply_endo(s: Endo, a: IOp) -> IOp:
    """sigma(a) for a in canonical form; e_ij goes to Int'^i (1 - Int'D') D'^j."""
    out = IOp()
    for i, b in a.towers.items():
        out = add(out, mul(_poly_at(b, s.h_img), s.v_image(i)))
    if a.fpart:
        e00 = ONE_OP - mul(s.int_img, s.der_img)
        for (k, l), c in a.fpart.entries.items():
            term = mul(mul(s.v_image(k), e00), s.v_image(-l))
            out = add(out, scalar_mul(c, term))
    return out


def torus(lam) -> Endo:
    lam = scalar(lam)
    if lam == 0:
        raise ZeroScalar("the torus parameter must be nonzero")
    return Endo(H_OP, scalar_mul(lam, INT), scalar_mul(1 / lam, DER))


def inner(u: FMatrix) -> Endo:
    """Conjugation a -> (1+u) a (1+u)^-1."""
    if not is_unit_one_plus(u):
        raise NotAUnit("det(1 + u) = 0")
    unit = IOp.one_plus(u)
    inv = IOp.one_plus(inverse_one_plus(u))
    return Endo(*(mul(mul(unit, g), inv) for g in (H_OP, INT, DER)))


def compose(s1: Endo, s2: Endo) -> Endo:
    """s1 after s2."""
    return Endo(*(apply_endo(s1, g) for g in s2.images()))


@dataclass(frozen=True)
class Diagnostics:
    lam: Fraction
    mu: Fraction
    n: int
    s: int
    kernel_der_deg: int
    kernel_der: tuple
    index_der: int


@dataclass(frozen=True)
class AutDecomposition:
    nu: Fraction
    u: FMatrix
    diagnostics: Diagnostics


def _read_linear_H(h: IOp):
    # pi(H') must be lam*H + mu with lam != 0
    image = pi(h).components
    if list(image) != [0] or image[0].degree != 1:
        raise TheoremViolation("linear H", f"pi(H') = {pi(h)!r} is not lam*H + mu")
    p = image[0]
    return p.coeffs[1], p.constant_term()


def _read_monomial(a: IOp, exponent: int, name: str) -> Fraction:
    # pi(a) must be a nonzero scalar times D^exponent
    image = pi(a).components
    if list(image) != [exponent] or not image[exponent].is_constant():
        raise TheoremViolation("monomial image", f"pi({name}) = {pi(a)!r}, expected c*D^{exponent}")
    return image[exponent].constant_term()


def decompose(s: Endo, config: fredholm.StabilizationConfig | None = None) -> AutDecomposition:
    h_img, int_img, der_img = s.images()

    lam, mu = _read_linear_H(h_img)
    if lam < 0:
        raise TheoremViolation("orientation", f"lam = {lam} < 0 would reverse the grading, which cannot occur")
    n_frac = 1 / lam
    if n_frac.denominator != 1:
        raise TheoremViolation("linear H", f"lam = {lam} is not 1/n for an integer n")
    n = n_frac.numerator
    nu = _read_monomial(int_img, -n, "Int'")
    nu_inv = _read_monomial(der_img, n, "D'")
    if nu * nu_inv != 1:
        raise TheoremViolation("monomial image", f"pi(Int') and pi(D') scalars {nu}, {nu_inv} are not inverse")

    m = fredholm.index(der_img, config)
    if m != n:
        raise TheoremViolation("index", f"index(D') = {m} but n = {n}")
    if n != 1:
        raise TheoremViolation("degree", f"n = {n}, expected 1")
    if mu != 0:
        raise TheoremViolation("shift", f"mu = {mu}, expected 0")

    normal = compose(torus(1 / nu), s)
    h, f, g = (x.fpart for x in normal.images())
    der = normal.der_img

    kernel = fredholm.kernel_basis(der, config)
    if len(kernel) != 1:
        raise TheoremViolation("kernel", f"ker(D') has dimension {len(kernel)}, expected 1")
    d = max(p.degree for p in kernel)
    s_bound = 1 + max(1, d, deg_F(h), deg_F(f), deg_F(g))

    # x'^[i] = D'^(s+1-i) x^[s+1] for i <= s, and x'^[i] = x^[i] above
    columns = {}
    cur = PolyX.basis(s_bound + 1)
    for i in range(s_bound, -1, -1):
        cur = fredholm.apply(der, cur)
        columns[i] = cur - PolyX.basis(i)
    u = FMatrix({(k, i): c for i, col in columns.items() for k, c in col.terms.items()})

    if not is_unit_one_plus(u):
        raise ReconstructionMismatch(f"assembled 1 + u is singular, u = {u!r}")
    rebuilt = compose(torus(nu), inner(u))
    if rebuilt != s:
        raise ReconstructionMismatch("t_nu * omega_u differs from the input on a generator")

    diagnostics = Diagnostics(
        lam=lam, mu=mu, n=n, s=s_bound, kernel_der_deg=d,
        kernel_der=tuple(kernel), index_der=m,
    )
    return AutDecomposition(nu=nu, u=u, diagnostics=diagnostics)
