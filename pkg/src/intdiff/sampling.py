"""Seeded random elements for fuzzing and experiments."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .b1 import B1Elem
from .base import HPoly
from .fmatrix import FMatrix, is_unit_one_plus
from .iop import IOp


@dataclass(frozen=True)
class SampleConfig:
    max_tower: int = 3      # tower indices in [-max_tower, max_tower]
    max_deg_h: int = 3      # degree in H of each tower coefficient
    f_block: int = 3        # F part supported on indices < f_block
    coeff_range: int = 3    # numerators in [-coeff_range, coeff_range]
    max_towers: int = 3
    max_f_terms: int = 4


def rand_scalar(rng: random.Random, bound: int = 3, fractions: bool = True) -> Fraction:
    num = rng.randint(-bound, bound)
    den = rng.choice((1, 1, 2, 3)) if fractions else 1
    return Fraction(num, den)


def rand_hpoly(rng: random.Random, max_deg: int, bound: int = 3) -> HPoly:
    deg = rng.randint(0, max_deg)
    return HPoly(rand_scalar(rng, bound) for _ in range(deg + 1))


def rand_fmatrix(rng: random.Random, block: int, terms: int, bound: int = 3) -> FMatrix:
    if block <= 0:
        return FMatrix()
    entries = {}
    for _ in range(rng.randint(0, terms)):
        entries[(rng.randrange(block), rng.randrange(block))] = rand_scalar(rng, bound)
    return FMatrix(entries)


def rand_iop(rng: random.Random, cfg: SampleConfig = SampleConfig()) -> IOp:
    towers = {}
    for _ in range(rng.randint(0, cfg.max_towers)):
        towers[rng.randint(-cfg.max_tower, cfg.max_tower)] = rand_hpoly(rng, cfg.max_deg_h, cfg.coeff_range)
    return IOp(towers, rand_fmatrix(rng, cfg.f_block, cfg.max_f_terms, cfg.coeff_range))


def rand_b1(rng: random.Random, max_exp: int = 3, max_deg: int = 3, terms: int = 3) -> B1Elem:
    comps = {}
    for _ in range(rng.randint(0, terms)):
        comps[rng.randint(-max_exp, max_exp)] = rand_hpoly(rng, max_deg)
    return B1Elem(comps)


def rand_unit_f(rng: random.Random, block: int = 4, terms: int = 6, bound: int = 3) -> FMatrix:
    """u in F with 1 + u invertible, supported on indices < block."""
    while True:
        u = rand_fmatrix(rng, block, terms, bound)
        if is_unit_one_plus(u):
            return u
