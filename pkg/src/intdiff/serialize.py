"""JSON wire formats.

Scalars are "p/q" strings ("p" when q = 1).  Dict key order is part of the
format: tower keys, B1 exponents and PolyX degrees ascend numerically and
FMatrix triples are sorted by (i, j), so equal values serialize to equal
bytes.
"""

from __future__ import annotations

import json

from .base import HPoly, PolyX, scalar, scalar_str
from .b1 import B1Elem
from .endo import AutDecomposition, Endo, validate
from .fmatrix import FMatrix
from .iop import IOp


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def hpoly_to_json(p: HPoly) -> list:
    return [scalar_str(c) for c in p.coeffs]


def hpoly_from_json(obj) -> HPoly:
    return HPoly(scalar(c) for c in obj)


def fmatrix_to_json(f: FMatrix) -> list:
    return [[i, j, scalar_str(c)] for (i, j), c in sorted(f.entries.items())]


def fmatrix_from_json(obj) -> FMatrix:
    entries = {}
    for item in obj:
        i, j, c = item
        if (i, j) in entries:
            raise ValueError(f"duplicate entry ({i}, {j})")
        entries[(int(i), int(j))] = scalar(c)
    return FMatrix(entries)


def iop_to_json(a: IOp) -> dict:
    return {
        "towers": {str(i): hpoly_to_json(p) for i, p in sorted(a.towers.items())},
        "f": fmatrix_to_json(a.fpart),
    }


def iop_from_json(obj) -> IOp:
    towers = {int(k): hpoly_from_json(v) for k, v in obj.get("towers", {}).items()}
    return IOp(towers, fmatrix_from_json(obj.get("f", [])))


def b1_to_json(b: B1Elem) -> dict:
    return {str(k): hpoly_to_json(p) for k, p in sorted(b.components.items())}


def b1_from_json(obj) -> B1Elem:
    return B1Elem({int(k): hpoly_from_json(v) for k, v in obj.items()})


def polyx_to_json(p: PolyX) -> dict:
    return {str(s): scalar_str(c) for s, c in sorted(p.terms.items())}


def polyx_from_json(obj) -> PolyX:
    return PolyX({int(k): scalar(v) for k, v in obj.items()})


def endo_to_json(s: Endo) -> dict:
    h, i, d = s.images()
    return {"H": iop_to_json(h), "int": iop_to_json(i), "der": iop_to_json(d)}


def endo_from_json(obj) -> Endo:
    """Parse and validate; raises RelationViolated for non-endomorphisms."""
    return validate(iop_from_json(obj["H"]), iop_from_json(obj["int"]), iop_from_json(obj["der"]))


def decomposition_to_json(r: AutDecomposition) -> dict:
    d = r.diagnostics
    return {
        "nu": scalar_str(r.nu),
        "u": fmatrix_to_json(r.u),
        "diagnostics": {
            "lambda": scalar_str(d.lam),
            "mu": scalar_str(d.mu),
            "n": d.n,
            "s": d.s,
            "kernel_der_deg": d.kernel_der_deg,
        },
    }
