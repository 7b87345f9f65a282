from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from intdiff.b1 import B1Elem, b1_mul
from intdiff.base import HPoly, polyx_divided_to_monomial, polyx_monomial_to_divided
from intdiff.errors import NotAUnit
from intdiff.fmatrix import FMatrix
from intdiff.fredholm import apply
from intdiff.iop import (
    DER, H_OP, INT, ONE_OP, IOp, centralizer_F_dim, commutator, f_part, generator,
    graded_component, is_in_K_plus_F, is_in_KH_plus_F, is_unit, mul, pi, power, unit_inverse,
    weights,
)

from conftest import iops, monomial_polys, mono_action

E = lambda i, j, c=1: IOp.from_f(FMatrix.unit(i, j, c))  # noqa: E731
Hp = HPoly.H()


def test_generators():
    assert generator("H").towers == {0: Hp}
    assert generator("x") == IOp({1: Hp - HPoly.const(1)})
    assert generator("e", 0, 0).fpart == FMatrix.unit(0, 0)
    with pytest.raises(ValueError):
        generator("e", -1, 0)


def test_product_examples():
    assert DER * INT == ONE_OP
    assert INT * DER == ONE_OP - E(0, 0)
    assert H_OP * E(0, 0) == E(0, 0)
    assert power(INT, 2) * power(DER, 2) == ONE_OP - E(0, 0) - E(1, 1)


@pytest.mark.parametrize("i", range(1, 9))
def test_int_power_der_power(i):
    want = ONE_OP
    for k in range(i):
        want = want - E(k, k)
    assert power(INT, i) * power(DER, i) == want


def test_commutation_rules():
    assert INT * H_OP == IOp({1: Hp - HPoly.const(1)})
    assert H_OP * DER == DER * IOp({0: Hp - HPoly.const(1)})
    assert INT * E(2, 3) == E(3, 3)
    assert E(2, 3) * INT == E(2, 2)
    assert E(2, 0) * INT == IOp()
    assert DER * E(0, 1) == IOp()
    assert DER * E(2, 1) == E(1, 1)
    assert E(2, 3) * DER == E(2, 4)
    assert E(3, 3) * H_OP == H_OP * E(3, 3) == scalar_times(4, E(3, 3))


def scalar_times(c, a):
    return IOp.const(c) * a


def test_linear_examples():
    assert H_OP + (-H_OP) == IOp()
    assert DER + DER == IOp({-1: HPoly.const(2)})
    assert IOp() + E(1, 1) == E(1, 1)


def test_commutator_examples():
    assert commutator(H_OP, INT) == INT
    assert commutator(H_OP, DER) == -DER
    a = H_OP + INT * DER
    assert commutator(a, a) == IOp()


def test_defining_relations():
    proj = ONE_OP - INT * DER
    assert DER * INT - ONE_OP == IOp()
    assert commutator(H_OP, INT) - INT == IOp()
    assert commutator(H_OP, DER) + DER == IOp()
    assert H_OP * proj == proj
    assert proj * H_OP == proj


def test_graded_component_examples():
    a = H_OP + INT + E(0, 1)
    assert graded_component(a, 1) == INT
    assert graded_component(a, -1) == E(0, 1)
    assert graded_component(H_OP, 0) == H_OP
    x = generator("x")
    assert graded_component(x, 1) == x


def test_pi_examples():
    assert pi(INT * DER) == B1Elem.const(1)
    assert pi(E(3, 4)) == B1Elem()
    assert pi(H_OP + E(0, 0)) == B1Elem.H()
    assert f_part(H_OP + E(0, 0)) == FMatrix.unit(0, 0)


def test_membership_examples():
    assert is_in_K_plus_F(IOp.const(3) + E(1, 2))
    assert not is_in_K_plus_F(H_OP)
    assert not is_in_K_plus_F(INT)
    assert is_in_KH_plus_F(H_OP * H_OP + E(2, 2))


def test_units():
    a = IOp.const(2) * (ONE_OP + E(0, 1))
    assert is_unit(a)
    assert unit_inverse(a) == IOp.const(Fraction(1, 2)) * (ONE_OP - E(0, 1))
    assert not is_unit(INT)
    assert not is_unit(ONE_OP - E(0, 0))
    with pytest.raises(NotAUnit):
        unit_inverse(INT)
    with pytest.raises(NotAUnit):
        unit_inverse(ONE_OP - E(0, 0))


def test_centralizer_examples():
    assert centralizer_F_dim(H_OP, 3) == 4
    assert centralizer_F_dim(E(0, 0), 1) == 2
    assert centralizer_F_dim(DER + INT, 0) == 0


# -- properties ------------------------------------------------------------

@settings(max_examples=80)
@given(iops(), iops(), monomial_polys)
def test_product_matches_calculus_oracle(a, b, c):
    # I1 acts faithfully on K[x], so matching ordinary calculus pins down mul
    p = polyx_monomial_to_divided(c)
    got = polyx_divided_to_monomial(apply(mul(a, b), p))
    assert got == mono_action(a, mono_action(b, c))


@settings(max_examples=80)
@given(iops(), monomial_polys)
def test_action_matches_calculus_oracle(a, c):
    got = polyx_divided_to_monomial(apply(a, polyx_monomial_to_divided(c)))
    assert got == mono_action(a, c)


@settings(max_examples=60)
@given(iops(), iops(), iops())
def test_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@settings(max_examples=60)
@given(iops(), iops(), iops())
def test_distributive(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c


@settings(max_examples=60)
@given(iops(), iops())
def test_grading(a, b):
    ab = a * b
    for k in set(weights(ab)) | {i + j for i in weights(a) for j in weights(b)}:
        want = IOp()
        for i in weights(a):
            want = want + graded_component(a, i) * graded_component(b, k - i)
        assert graded_component(ab, k) == want


@given(iops())
def test_components_sum_back(a):
    total = IOp()
    for i in weights(a):
        total = total + graded_component(a, i)
    assert total == a


@given(iops())
def test_ad_H_weights(a):
    for i in weights(a):
        ai = graded_component(a, i)
        assert commutator(H_OP, ai) == IOp.const(i) * ai


@settings(max_examples=60)
@given(iops(), iops())
def test_pi_homomorphism(a, b):
    assert pi(a * b) == b1_mul(pi(a), pi(b))


@given(iops(), st.integers(0, 4))
def test_power_is_repeated_product(a, n):
    want = ONE_OP
    for _ in range(n):
        want = want * a
    assert power(a, n) == want


@given(iops())
def test_unique_representation(a):
    b = IOp(dict(a.towers), FMatrix(dict(a.fpart.entries)))
    assert a == b and hash(a) == hash(b)
