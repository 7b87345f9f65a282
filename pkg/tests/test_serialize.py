import json

import pytest
from hypothesis import given

from intdiff.b1 import B1Elem
from intdiff.base import HPoly, PolyX
from intdiff.endo import compose, inner, torus
from intdiff.fmatrix import FMatrix
from intdiff.serialize import (
    b1_from_json, b1_to_json, dumps, endo_from_json, endo_to_json, fmatrix_from_json,
    fmatrix_to_json, iop_from_json, iop_to_json, polyx_from_json, polyx_to_json,
)

from conftest import fmatrices, iops


@given(iops())
def test_iop_round_trip_bit_exact(a):
    text = dumps(iop_to_json(a))
    assert iop_from_json(json.loads(text)) == a
    assert dumps(iop_to_json(iop_from_json(json.loads(text)))) == text


@given(fmatrices(6, 8))
def test_fmatrix_sorted_triples(f):
    obj = fmatrix_to_json(f)
    assert [t[:2] for t in obj] == sorted(t[:2] for t in obj)
    assert fmatrix_from_json(obj) == f


def test_fmatrix_rejects_duplicates():
    with pytest.raises(ValueError):
        fmatrix_from_json([[0, 0, "1"], [0, 0, "2"]])


def test_tower_keys_ascend_numerically():
    from intdiff.parser import evaluate
    obj = iop_to_json(evaluate("D^10 + D^2 + Int^3 + H"))
    assert list(obj["towers"]) == ["-10", "-2", "0", "3"]


def test_b1_and_polyx_round_trip():
    b = B1Elem({-3: HPoly([1, 2]), 4: HPoly.H()})
    assert b1_from_json(b1_to_json(b)) == b
    p = PolyX({0: 1, 12: "-2/3"})
    assert polyx_to_json(p) == {"0": "1", "12": "-2/3"}
    assert polyx_from_json(polyx_to_json(p)) == p


def test_endo_round_trip():
    s = compose(torus("3/2"), inner(FMatrix({(0, 2): 1, (1, 0): -1})))
    assert endo_from_json(json.loads(dumps(endo_to_json(s)))) == s
