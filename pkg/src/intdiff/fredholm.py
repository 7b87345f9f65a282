"""Action of I1 on K[x] in the divided-power basis, kernels and indices.

In the basis x^[s] the generators act by unit shifts:
D x^[s] = x^[s-1], Int x^[s] = x^[s+1], H x^[s] = (s+1) x^[s], and
e_ij x^[s] = delta_js x^[i].  A tower b(H) v_i therefore sends x^[s] to
b(s+i+1) x^[s+i] (zero when s+i < 0).

Kernels and indices of the full (infinite) action are read off finite
truncations.  The action is banded, so a truncation is trusted only inside
a window that the band cannot reach from outside, and the window is grown
by doubling until two consecutive sizes report the same counts.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field

from .base import ZERO, PolyX, scalar
from .errors import ElementOfF, NotStabilized, ZeroOperator
from .iop import IOp, DER
from . import linalg


@dataclass(frozen=True)
class StabilizationConfig:
    """Doubling schedule for the truncation certificate (units of bandwidth)."""

    start_factor: int = 4
    cap_factor: int = 512

    @classmethod
    def from_env(cls) -> StabilizationConfig:
        cap = os.environ.get("INTDIFF_TRUNCATION_CAP")
        return cls(cap_factor=int(cap)) if cap else cls()


@dataclass(frozen=True)
class TruncatedAction:
    op: IOp
    in_degree: int
    matrix: list = field(repr=False)

    @property
    def shape(self):
        return len(self.matrix), (len(self.matrix[0]) if self.matrix else 0)


def apply_basis(a: IOp, s: int) -> dict:
    """Coefficients of a * x^[s] as a sparse dict."""
    out = {}
    for i, b in a.towers.items():
        t = s + i
        if t >= 0:
            c = b(t + 1)
            if c:
                out[t] = out.get(t, ZERO) + c
    for (k, l), c in a.fpart.entries.items():
        if l == s:
            out[k] = out.get(k, ZERO) + c
    return {k: v for k, v in out.items() if v}


def apply(a: IOp, p: PolyX) -> PolyX:
    out = {}
    for s, c in p.terms.items():
        for t, v in apply_basis(a, s).items():
            out[t] = out.get(t, ZERO) + c * v
    return PolyX(out)


def degree_raise(a: IOp) -> int:
    raise_ = max((i for i in a.towers if i > 0), default=0)
    return max([raise_] + [k - l for k, l in a.fpart.entries])


def _columns(a: IOp, N: int) -> list:
    return [apply_basis(a, s) for s in range(N + 1)]


def truncated_matrix(a: IOp, N: int) -> TruncatedAction:
    rows = N + degree_raise(a) + 1
    matrix = [[ZERO] * (N + 1) for _ in range(rows)]
    for s, col in enumerate(_columns(a, N)):
        for t, v in col.items():
            matrix[t][s] = v
    return TruncatedAction(a, N, matrix)


def _root_bound(a: IOp) -> int:
    """Upper bound on integer points where a tower coefficient vanishes.

    Past this degree every tower polynomial is nonzero on the band, which is
    where the truncated counts settle (Cauchy bound on roots).
    """
    bound = 0
    for p in a.towers.values():
        if p.degree < 1:
            continue
        lead = abs(p.leading())
        cauchy = 1 + max(abs(c) / lead for c in p.coeffs[:-1])
        bound = max(bound, math.ceil(cauchy))
    return bound


def _counts(a: IOp, N: int):
    """(kernel basis, coker dim) trusted on the window of degree <= N - bw."""
    bw = a.bandwidth
    window = N - bw
    cols = _columns(a, N)
    kernel = linalg.nullspace_columns(cols[: window + 1])
    # coker = dim V_w / (Im & V_w) with V_w = degrees <= window, and
    # dim(Im & V_w) = rank(C) - rank(C with rows <= window dropped).
    # Dropping rows instead of keeping them matters: a column straddling
    # the window edge must not count as hitting V_w.
    above = [{t: v for t, v in col.items() if t > window} for col in cols]
    coker = (window + 1) - linalg.rank(cols) + linalg.rank(above)
    return kernel, coker


def _check_operand(a: IOp) -> None:
    if not a:
        raise ZeroOperator("the zero operator has infinite-dimensional kernel")
    if not a.towers:
        raise ElementOfF("elements of F have infinite-dimensional kernel and cokernel")


def stable_counts(a: IOp, config: StabilizationConfig | None = None):
    """Kernel basis and cokernel dimension of the full action on K[x]."""
    _check_operand(a)
    config = config or StabilizationConfig.from_env()
    bw = a.bandwidth
    cap = config.cap_factor * bw
    N = max(config.start_factor * bw, 2 * (_root_bound(a) + bw))
    if N > cap:
        raise NotStabilized(f"tower roots push the start size {N} past the cap {cap}")
    prev = _counts(a, N)
    while True:
        N *= 2
        if N > cap:
            raise NotStabilized(f"counts still moving at truncation cap {cap}")
        cur = _counts(a, N)
        if len(cur[0]) == len(prev[0]) and cur[1] == prev[1]:
            return cur
        prev = cur


def kernel_basis(a: IOp, config: StabilizationConfig | None = None) -> list:
    kernel, _ = stable_counts(a, config)
    return [PolyX(v) for v in kernel]


def index(a: IOp, config: StabilizationConfig | None = None) -> int:
    kernel, coker = stable_counts(a, config)
    return len(kernel) - coker


def eigenspace(a: IOp, lam, N: int) -> list:
    """Basis of {p : deg p <= N, a p = lam p}; all output rows are checked."""
    lam = scalar(lam)
    cols = _columns(a, N)
    for s, col in enumerate(cols):
        v = col.get(s, ZERO) - lam
        if v:
            col[s] = v
        else:
            col.pop(s, None)
    return [PolyX(v) for v in linalg.nullspace_columns(cols)]


def der_orbit_dim(vectors: list) -> int:
    """dim of D K[D] * span(vectors), i.e. the span of D^k v for k >= 1."""
    ech = linalg.Echelon()
    for v in vectors:
        cur = apply(DER, v)
        while cur:
            ech.add(cur.terms)
            cur = apply(DER, cur)
    return ech.rank
