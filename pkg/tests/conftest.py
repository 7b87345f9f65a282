"""Shared strategies and an independent calculus oracle.

The oracle acts on plain monomial coefficient lists (index n = coefficient
of x^n) with ordinary calculus: D differentiates, Int integrates from 0,
H = D*x, and e(i,j) sends x^j to (j!/i!) x^i.  It shares no code with the
divided-power machinery in intdiff.fredholm.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import strategies as st

from intdiff.base import HPoly
from intdiff.fmatrix import FMatrix
from intdiff.iop import IOp
from intdiff.sampling import SampleConfig, rand_iop


# -- monomial oracle ---------------------------------------------------------

def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def mono_der(c):
    return _trim([n * c[n] for n in range(1, len(c))])


def mono_int(c):
    return _trim([Fraction(0)] + [c[n] / (n + 1) for n in range(len(c))])


def mono_H(c):
    # D(x p): x^n -> (n+1) x^n
    return _trim([(n + 1) * c[n] for n in range(len(c))])


def mono_add(a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([x + y for x, y in zip(a, b)])


def mono_scale(k, a):
    return _trim([k * x for x in a])


def mono_hpoly(p: HPoly, c):
    acc = []
    for coeff in reversed(p.coeffs):
        acc = mono_add(mono_H(acc), mono_scale(coeff, c))
    return acc


def mono_action(a: IOp, c):
    """a * p computed with ordinary calculus."""
    out = []
    for i, b in a.towers.items():
        v = list(c)
        for _ in range(abs(i)):
            v = mono_int(v) if i > 0 else mono_der(v)
        out = mono_add(out, mono_hpoly(b, v))
    for (i, j), lam in a.fpart.entries.items():
        if j < len(c) and c[j]:
            term = [Fraction(0)] * i + [lam * c[j] * Fraction(factorial(j), factorial(i))]
            out = mono_add(out, term)
    return _trim(out)


# -- hypothesis strategies ---------------------------------------------------

fractions_st = st.builds(Fraction, st.integers(-4, 4), st.sampled_from([1, 1, 2, 3]))
nonzero_fractions = fractions_st.filter(lambda c: c != 0)


@st.composite
def hpolys(draw, max_deg=3):
    return HPoly(draw(st.lists(fractions_st, max_size=max_deg + 1)))


@st.composite
def fmatrices(draw, block=4, max_terms=5):
    keys = draw(st.lists(st.tuples(st.integers(0, block - 1), st.integers(0, block - 1)),
                         max_size=max_terms))
    return FMatrix({k: draw(fractions_st) for k in keys})


@st.composite
def iops(draw, max_tower=3, max_deg=2, block=3):
    idx = draw(st.lists(st.integers(-max_tower, max_tower), max_size=3, unique=True))
    towers = {i: draw(hpolys(max_deg)) for i in idx}
    return IOp(towers, draw(fmatrices(block, 4)))


monomial_polys = st.lists(fractions_st, max_size=6)


@pytest.fixture
def rng():
    return random.Random(20240611)


def random_iops(seed, count, cfg=SampleConfig()):
    r = random.Random(seed)
    return [rand_iop(r, cfg) for _ in range(count)]
